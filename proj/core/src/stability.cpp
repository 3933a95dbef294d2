#include "flagphase/stability.hpp"

#include <algorithm>

#include "flagphase/errors.hpp"

namespace flagphase {

namespace {

// sum_beta <lambda, beta^vee> / <lambda_omega, beta^vee>
Rational contraction(const ParabolicGeometry& flag, const KahlerClass& omega, const WeightVector& lambda) {
  Rational sum = 0;
  for (std::size_t k = 0; k < flag.phi_I_plus().size(); ++k) {
    sum += flag.pairing(lambda, k) / flag.pairing(omega.weight(), k);
  }
  return sum;
}

}  // namespace

Rational slope(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle) {
  return degree(flag, omega, bundle) / Rational(static_cast<long>(bundle.rank()));
}

Rational mu_hat(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle) {
  require_kahler(flag, omega);
  return contraction(flag, omega, bundle.determinant_weight()) / Rational(static_cast<long>(bundle.rank()));
}

RestrictionReport restriction_semistable(const ParabolicGeometry& flag, const SplitBundle& bundle) {
  RestrictionReport report;
  report.semistable = true;
  for (int a : flag.generators()) {
    std::vector<Rational> degs;
    for (const auto& s : bundle.summands()) degs.push_back(s[a]);
    if (std::adjacent_find(degs.begin(), degs.end(), std::not_equal_to<>()) != degs.end()) report.semistable = false;
    report.degrees.push_back(std::move(degs));
  }
  return report;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Polystable: return "polystable";
    case Verdict::Semistable: return "semistable";
    case Verdict::Unstable: return "unstable";
  }
  return "unknown";
}

StabilityVerdict split_stability(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle) {
  require_kahler(flag, omega);
  const std::size_t r = bundle.rank();
  if (r > kMaxEnumeratedRank)
    fail(ErrorCode::TooManySummands, "rank " + std::to_string(r) + " exceeds sub-multiset enumeration cap");

  StabilityVerdict out;
  if (r == 1) return out;

  // Slopes are proportional to the per-summand contractions with a common positive
  // factor (n-1)! Vol, so all comparisons run on the contractions.
  std::vector<Rational> c;
  Rational total = 0;
  for (const auto& s : bundle.summands()) {
    c.push_back(contraction(flag, omega, s));
    total += c.back();
  }
  const Rational scale = factorial(static_cast<unsigned>(flag.dimension() - 1)) * volume(flag, omega);

  // Gray-code walk over all nonempty proper subsets: sum_S / |S| vs total / r.
  const std::size_t full = (std::size_t{1} << r) - 1;
  Rational sum = 0;
  std::size_t size = 0;
  std::size_t mask = 0;
  std::optional<std::size_t> best_mask;
  Rational best_avg;
  std::optional<std::size_t> equal_mask;
  for (std::size_t step = 1; step <= full; ++step) {
    const std::size_t flip = static_cast<std::size_t>(__builtin_ctzll(step));
    mask ^= std::size_t{1} << flip;
    if (mask & (std::size_t{1} << flip)) {
      sum += c[flip];
      ++size;
    } else {
      sum -= c[flip];
      --size;
    }
    if (mask == full) continue;
    // r * sum_S  vs |S| * total
    const int cmp = ::cmp(sum * static_cast<long>(r), total * static_cast<long>(size));
    if (cmp > 0) {
      Rational avg = sum / static_cast<long>(size);
      if (!best_mask || avg > best_avg) {
        best_mask = mask;
        best_avg = std::move(avg);
      }
    } else if (cmp == 0 && !equal_mask) {
      equal_mask = mask;
    }
  }

  auto members = [r](std::size_t m) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < r; ++j)
      if (m & (std::size_t{1} << j)) idx.push_back(j);
    return idx;
  };

  if (best_mask) {
    out.verdict = Verdict::Unstable;
    out.witness = members(*best_mask);
    out.witness_slope = best_avg * scale;
    return out;
  }
  const bool all_equal = std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
  out.verdict = all_equal ? Verdict::Polystable : Verdict::Semistable;
  if (equal_mask) {
    out.witness = members(*equal_mask);
    out.witness_slope = total / static_cast<long>(r) * scale;
  }
  return out;
}

bool arg_dominance(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& e,
                   const SplitBundle& f) {
  require_kahler(flag, omega);
  // Arg Z(E, P^1_beta) = pi/2 + arctan(<lambda_E, beta^vee> / (r_E <omega, beta^vee>)), monotone in
  // <lambda_E, beta^vee> / r_E since <omega, beta^vee> > 0.
  const WeightVector le = e.determinant_weight();
  const WeightVector lf = f.determinant_weight();
  const Rational re(static_cast<long>(e.rank()));
  const Rational rf(static_cast<long>(f.rank()));
  for (std::size_t k = 0; k < flag.phi_I_plus().size(); ++k) {
    if (!(flag.pairing(le, k) / re > flag.pairing(lf, k) / rf)) return false;
  }
  return true;
}

HymConstant hym_constant(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle) {
  require_kahler(flag, omega);
  HymConstant out;
  std::vector<Rational> lambdas;
  for (const auto& s : bundle.summands()) {
    lambdas.push_back(contraction(flag, omega, s));
    out.summand_constants_over_pi.push_back(2 * lambdas.back());
  }
  out.defined = std::adjacent_find(lambdas.begin(), lambdas.end(), std::not_equal_to<>()) == lambdas.end();
  if (out.defined) {
    out.lambda = lambdas.front();
    out.constant_over_pi = 2 * lambdas.front();
  }
  return out;
}

}  // namespace flagphase
