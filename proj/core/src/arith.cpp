#include "flagphase/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>

#include "flagphase/errors.hpp"
#include "flagphase/smith.hpp"

namespace flagphase {

namespace {

void require_integral(const ParabolicGeometry& flag, const KahlerClass& omega) {
  require_kahler(flag, omega);
  if (!omega.integral()) fail(ErrorCode::NotIntegral, "Kahler class " + to_string(omega.weight()) + " is not integral");
}

std::vector<Integer> integer_degrees(const ParabolicGeometry& flag, const KahlerClass& omega) {
  std::vector<Integer> out;
  for (const auto& d : generator_degrees(flag, omega)) {
    if (!is_integer(d)) fail(ErrorCode::Internal, "generator degree " + to_string(d) + " is not an integer");
    out.push_back(d.get_num());
  }
  return out;
}

std::size_t generator_slot(const ParabolicGeometry& flag, int gamma) {
  const auto gens = flag.generators();
  const auto it = std::find(gens.begin(), gens.end(), gamma);
  if (it == gens.end())
    fail(ErrorCode::IndexOutOfRange, "pivot " + std::to_string(gamma + 1) + " is not a generator of Delta \\ I");
  return static_cast<std::size_t>(it - gens.begin());
}

Integer gcd_of(const std::vector<Integer>& xs) {
  Integer g = 0;
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

WeightVector embed_integers(const ParabolicGeometry& flag, const std::vector<Integer>& coords) {
  std::vector<Rational> q(coords.begin(), coords.end());
  return flag.embed(q);
}

Rational line_degree(const ParabolicGeometry& flag, const KahlerClass& omega, const WeightVector& weight) {
  return degree(flag, omega, SplitBundle::line(flag, weight));
}

}  // namespace

HodgeRiemannMatrix hodge_riemann_matrix(const ParabolicGeometry& flag, const KahlerClass& omega) {
  require_kahler(flag, omega);
  const int n = flag.dimension();
  if (n < 2) fail(ErrorCode::DimensionTooSmall, "Hodge-Riemann form needs complex dimension >= 2, got " + std::to_string(n));

  const auto gens = flag.generators();
  const std::size_t rho = gens.size();
  const auto w = flag.pairings(omega.weight());

  std::vector<Rational> lambda(rho);
  std::vector<std::vector<Rational>> inner(rho, std::vector<Rational>(rho));
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (std::size_t a = 0; a < rho; ++a) {
      const int pa = flag.fundamental_pairing(gens[a], k);
      if (pa == 0) continue;
      lambda[a] += pa / w[k];
      for (std::size_t b = 0; b < rho; ++b) {
        const int pb = flag.fundamental_pairing(gens[b], k);
        if (pb != 0) inner[a][b] += Rational(pa * pb) / (w[k] * w[k]);
      }
    }
  }

  const Rational scale = factorial(static_cast<unsigned>(n - 2)) * volume(flag, omega);
  HodgeRiemannMatrix hr;
  hr.generators.assign(gens.begin(), gens.end());
  hr.entries.assign(rho, std::vector<Rational>(rho));
  hr.integral = true;
  for (std::size_t a = 0; a < rho; ++a) {
    for (std::size_t b = 0; b < rho; ++b) {
      hr.entries[a][b] = scale * (lambda[a] * lambda[b] - inner[a][b]);
      if (!is_integer(hr.entries[a][b])) hr.integral = false;
    }
  }
  return hr;
}

std::vector<Rational> generator_degrees(const ParabolicGeometry& flag, const KahlerClass& omega) {
  std::vector<Rational> out;
  for (int a : flag.generators()) out.push_back(degree(flag, omega, flag.schubert_divisor(a)));
  return out;
}

Integer tau(const ParabolicGeometry& flag, const KahlerClass& omega) {
  require_integral(flag, omega);
  return gcd_of(integer_degrees(flag, omega));
}

SlopeSolution solve_slope(const ParabolicGeometry& flag, const KahlerClass& omega, const Integer& m0) {
  require_integral(flag, omega);
  const auto degs = integer_degrees(flag, omega);

  // Running Bezout coefficients: sum coeffs[i] * degs[i] = g.
  std::vector<Integer> coeffs(degs.size());
  Integer g = 0;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    Integer next;
    Integer s;
    Integer t;
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), degs[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) coeffs[j] *= s;
    coeffs[i] = t;
    g = next;
  }

  SlopeSolution out;
  out.tau = g;
  if (m0 == 0) {
    out.solution = WeightVector(static_cast<std::size_t>(flag.rank()));
    return out;
  }
  if (g == 0 || m0 % g != 0) return out;
  const Integer factor = m0 / g;
  for (auto& c : coeffs) c *= factor;
  WeightVector weight = embed_integers(flag, coeffs);
  if (line_degree(flag, omega, weight) != Rational(m0))
    fail(ErrorCode::Internal, "slope solution " + to_string(weight) + " failed re-verification");
  out.solution = std::move(weight);
  return out;
}

std::vector<WeightVector> pic0_generators(const ParabolicGeometry& flag, const KahlerClass& omega, int gamma) {
  require_integral(flag, omega);
  const std::size_t g = generator_slot(flag, gamma);
  const auto degs = integer_degrees(flag, omega);
  const Integer t = gcd_of(degs);
  std::vector<Integer> q;
  for (const auto& d : degs) q.push_back(d / t);

  std::vector<WeightVector> out;
  for (std::size_t a = 0; a < degs.size(); ++a) {
    if (a == g) continue;
    std::vector<Integer> xi(degs.size());
    xi[g] = -q[a];
    xi[a] = q[g];
    out.push_back(embed_integers(flag, xi));
  }
  return out;
}

Integer pic0_index(const ParabolicGeometry& flag, const KahlerClass& omega, int gamma) {
  const auto basis = pic0_generators(flag, omega, gamma);
  if (basis.empty()) return 1;
  IntegerMatrix m;
  for (const auto& xi : basis) {
    std::vector<Integer> row;
    for (const auto& c : flag.restrict_to_generators(xi)) row.push_back(c.get_num());
    m.push_back(std::move(row));
  }
  // The slope-zero lattice is saturated, so its own maximal minors have gcd 1.
  return determinantal_divisor(m);
}

SlopeLattice slope_lattice(const ParabolicGeometry& flag, const KahlerClass& omega, const Integer& m0, int gamma) {
  SlopeLattice out;
  const auto sol = solve_slope(flag, omega, m0);
  out.tau = sol.tau;
  out.particular = sol.solution;
  out.pic0_basis = pic0_generators(flag, omega, gamma);
  out.gamma = gamma;
  out.index = pic0_index(flag, omega, gamma);
  return out;
}

DensityReport density(const ParabolicGeometry& flag, const KahlerClass& omega, const Integer& n) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "density needs a positive n, got " + to_string(n));
  const Integer t = tau(flag, omega);
  DensityReport out;
  out.count = n / t;
  out.limit = ratio(Integer(1), t);
  out.bound = ratio(t, n);
  const Rational gap = out.limit - ratio(out.count, n);
  out.bound_holds = gap >= 0 && gap < out.bound;
  return out;
}

NefSolution nef_solve(const ParabolicGeometry& flag, const KahlerClass& omega, const Integer& m0, int gamma) {
  require_integral(flag, omega);
  const std::size_t g = generator_slot(flag, gamma);
  const auto degs = integer_degrees(flag, omega);
  const Integer t = gcd_of(degs);

  NefSolution out;
  if (t == 1) {
    Integer others = 0;
    for (std::size_t a = 0; a < degs.size(); ++a)
      if (a != g) others += degs[a];
    out.guarantee_bound = (degs[g] - 1) * others;
    out.guaranteed = m0 >= *out.guarantee_bound;
  }

  // Search order: every generator except gamma, then gamma last as the remainder.
  std::vector<std::size_t> order;
  for (std::size_t a = 0; a < degs.size(); ++a)
    if (a != g) order.push_back(a);
  order.push_back(g);
  // suffix_gcd[k] = gcd of degs over order[k..].
  std::vector<Integer> suffix_gcd(order.size() + 1, 0);
  for (std::size_t k = order.size(); k-- > 0;) suffix_gcd[k] = gcd(suffix_gcd[k + 1], degs[order[k]]);

  std::vector<Integer> x(degs.size());
  std::function<bool(std::size_t, const Integer&)> search = [&](std::size_t k, const Integer& remaining) {
    if (remaining < 0) return false;
    if (k + 1 == order.size()) {
      const Integer& d = degs[order[k]];
      if (remaining % d != 0) return false;
      x[order[k]] = remaining / d;
      return true;
    }
    if (remaining % suffix_gcd[k] != 0) return false;
    const Integer& d = degs[order[k]];
    for (Integer c = 0; c * d <= remaining; ++c) {
      x[order[k]] = c;
      if (search(k + 1, remaining - c * d)) return true;
    }
    x[order[k]] = 0;
    return false;
  };

  if (m0 >= 0 && search(0, m0)) {
    WeightVector weight = embed_integers(flag, x);
    if (line_degree(flag, omega, weight) != Rational(m0))
      fail(ErrorCode::Internal, "nef solution " + to_string(weight) + " failed re-verification");
    out.solution = std::move(weight);
  } else if (out.guaranteed) {
    fail(ErrorCode::GuaranteeViolated,
         "no nonnegative solution for slope " + to_string(m0) + " above bound " + to_string(*out.guarantee_bound));
  }
  return out;
}

K0Report k0_report(const ParabolicGeometry& flag, const KahlerClass& omega, int gamma) {
  K0Report out;
  out.tau = tau(flag, omega);
  out.gamma = gamma;
  out.pic0_basis = pic0_generators(flag, omega, gamma);
  out.pic0_index = pic0_index(flag, omega, gamma);

  std::string pic0;
  if (out.pic0_basis.empty()) {
    pic0 = "0";
  } else {
    pic0 = "<";
    for (std::size_t j = 0; j < out.pic0_basis.size(); ++j) {
      if (j) pic0 += ", ";
      std::string term;
      for (int a : flag.generators()) {
        if (!term.empty()) term += "⊗";
        term += "O_" + std::to_string(a + 1) + "(" + to_string(out.pic0_basis[j][a]) + ")";
      }
      pic0 += term;
    }
    pic0 += ">";
  }
  const std::string taupart = out.tau == 1 ? "Z" : to_string(out.tau) + "Z";
  out.statement = "K0 = SK0 ⊕ " + pic0 + " ⊕ " + taupart;
  return out;
}

}  // namespace flagphase
