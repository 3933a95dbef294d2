#include "flagphase/flag.hpp"

#include <algorithm>

#include "flagphase/errors.hpp"

namespace flagphase {

namespace {

void check_length(const ParabolicGeometry& flag, const WeightVector& w) {
  if (static_cast<int>(w.size()) != flag.rank())
    fail(ErrorCode::DimensionMismatch,
         "weight has " + std::to_string(w.size()) + " coordinates, rank is " + std::to_string(flag.rank()));
}

}  // namespace

InvariantClass::InvariantClass(const ParabolicGeometry& flag, WeightVector weight) : weight_(std::move(weight)) {
  check_length(flag, weight_);
  for (int a : flag.parabolic()) {
    if (weight_[a] != 0)
      fail(ErrorCode::InvalidClass, "class has nonzero coordinate on parabolic index " + std::to_string(a + 1));
  }
}

KahlerClass::KahlerClass(const ParabolicGeometry& flag, WeightVector weight) : weight_(std::move(weight)) {
  check_length(flag, weight_);
  for (int a = 0; a < flag.rank(); ++a) {
    if (flag.in_parabolic(a)) {
      if (weight_[a] != 0) fail(ErrorCode::NotKahler, "Kahler class must vanish on I");
    } else if (weight_[a] <= 0) {
      fail(ErrorCode::NotKahler, "coordinate " + std::to_string(a + 1) + " is " + to_string(weight_[a]) + ", must be > 0");
    }
  }
  integral_ = weight_.is_integral();
}

void require_kahler(const ParabolicGeometry& flag, const KahlerClass& omega) {
  KahlerClass check(flag, omega.weight());
  (void)check;
}

SplitBundle::SplitBundle(const ParabolicGeometry& flag, std::vector<WeightVector> summands)
    : summands_(std::move(summands)) {
  if (summands_.empty()) fail(ErrorCode::InvalidRank, "split bundle needs at least one summand");
  for (const auto& s : summands_) {
    InvariantClass cls(flag, s);
    if (!cls.is_integral()) fail(ErrorCode::InvalidClass, "line bundle weights must be integral: " + to_string(s));
  }
}

SplitBundle SplitBundle::line(const ParabolicGeometry& flag, WeightVector weight) {
  return SplitBundle(flag, std::vector<WeightVector>{std::move(weight)});
}

WeightVector SplitBundle::determinant_weight() const {
  WeightVector sum(summands_.front().size());
  for (const auto& s : summands_) sum += s;
  return sum;
}

SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b) {
  if (a.summands_.front().size() != b.summands_.front().size())
    fail(ErrorCode::DimensionMismatch, "direct sum of bundles over different flags");
  SplitBundle out;
  out.summands_ = a.summands_;
  out.summands_.insert(out.summands_.end(), b.summands_.begin(), b.summands_.end());
  return out;
}

ParabolicGeometry::ParabolicGeometry(std::shared_ptr<const RootSystem> rootsystem, std::vector<int> parabolic)
    : rootsystem_(std::move(rootsystem)), parabolic_(std::move(parabolic)) {
  if (!rootsystem_) fail(ErrorCode::InvalidArgument, "null root system");
  const int r = rootsystem_->rank();
  std::sort(parabolic_.begin(), parabolic_.end());
  parabolic_.erase(std::unique(parabolic_.begin(), parabolic_.end()), parabolic_.end());
  in_parabolic_.assign(static_cast<std::size_t>(r), false);
  for (int a : parabolic_) {
    if (a < 0 || a >= r) fail(ErrorCode::IndexOutOfRange, "parabolic index " + std::to_string(a + 1) + " out of range");
    in_parabolic_[a] = true;
  }
  for (int a = 0; a < r; ++a)
    if (!in_parabolic_[a]) generators_.push_back(a);

  const auto roots = rootsystem_->positive_roots();
  delta_ = WeightVector(static_cast<std::size_t>(r));
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Root& beta = roots[k];
    bool outside = false;
    for (int a : generators_) {
      if (beta.coeffs[a] > 0) {
        outside = true;
        break;
      }
    }
    if (!outside) continue;
    std::vector<int> row(static_cast<std::size_t>(r));
    for (int a = 0; a < r; ++a) row[a] = rootsystem_->fundamental_pairing(a, k);
    pairing_.push_back(std::move(row));
    delta_ += rootsystem_->root_to_weight_coords(beta);
    phi_.push_back(beta);
  }
  rho_ = rootsystem_->rho_plus();
}

std::optional<std::size_t> ParabolicGeometry::root_position(const Root& root) const {
  auto it = std::find(phi_.begin(), phi_.end(), root);
  if (it == phi_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - phi_.begin());
}

Rational ParabolicGeometry::pairing(const WeightVector& lambda, std::size_t k) const {
  check_length(*this, lambda);
  const auto& row = pairing_.at(k);
  Rational sum = 0;
  for (int a = 0; a < rank(); ++a) {
    if (row[a] != 0 && lambda[a] != 0) sum += lambda[a] * row[a];
  }
  return sum;
}

std::vector<Rational> ParabolicGeometry::pairings(const WeightVector& lambda) const {
  std::vector<Rational> out;
  out.reserve(phi_.size());
  for (std::size_t k = 0; k < phi_.size(); ++k) out.push_back(pairing(lambda, k));
  return out;
}

WeightVector ParabolicGeometry::embed(std::span<const Rational> generator_coords) const {
  if (generator_coords.size() != generators_.size())
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(generators_.size()) + " coordinates over Delta\\I, got " +
                                           std::to_string(generator_coords.size()));
  WeightVector w(static_cast<std::size_t>(rank()));
  for (std::size_t i = 0; i < generators_.size(); ++i) w[generators_[i]] = generator_coords[i];
  return w;
}

std::vector<Rational> ParabolicGeometry::restrict_to_generators(const WeightVector& weight) const {
  check_length(*this, weight);
  std::vector<Rational> out;
  for (int a : generators_) out.push_back(weight[a]);
  return out;
}

InvariantClass ParabolicGeometry::schubert_divisor(int alpha) const {
  if (alpha < 0 || alpha >= rank()) fail(ErrorCode::IndexOutOfRange, "simple root index out of range");
  if (in_parabolic(alpha)) fail(ErrorCode::IndexOutOfRange, "O_alpha(1) is trivial for alpha in I");
  return InvariantClass(*this, WeightVector::unit(static_cast<std::size_t>(rank()), static_cast<std::size_t>(alpha)));
}

ParabolicGeometry build_flag(std::shared_ptr<const RootSystem> rootsystem, std::vector<int> parabolic) {
  return ParabolicGeometry(std::move(rootsystem), std::move(parabolic));
}

ParabolicGeometry build_flag(RootSystem rootsystem, std::vector<int> parabolic) {
  return ParabolicGeometry(std::make_shared<const RootSystem>(std::move(rootsystem)), std::move(parabolic));
}

Rational volume(const ParabolicGeometry& flag, const KahlerClass& omega) {
  require_kahler(flag, omega);
  Rational vol = 1;
  for (std::size_t k = 0; k < flag.phi_I_plus().size(); ++k) {
    vol *= flag.pairing(omega.weight(), k) / flag.pairing(flag.rho_plus(), k);
  }
  return vol;
}

namespace {

Rational degree_of_weight(const ParabolicGeometry& flag, const KahlerClass& omega, const WeightVector& lambda) {
  Rational sum = 0;
  for (std::size_t k = 0; k < flag.phi_I_plus().size(); ++k) {
    sum += flag.pairing(lambda, k) / flag.pairing(omega.weight(), k);
  }
  return factorial(static_cast<unsigned>(flag.dimension() - 1)) * sum * volume(flag, omega);
}

}  // namespace

Rational degree(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& cls) {
  return degree_of_weight(flag, omega, cls.weight());
}

Rational degree(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle) {
  return degree_of_weight(flag, omega, InvariantClass(flag, bundle.determinant_weight()).weight());
}

std::vector<Rational> eigenvalues(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi) {
  require_kahler(flag, omega);
  std::vector<Rational> q;
  q.reserve(flag.phi_I_plus().size());
  for (std::size_t k = 0; k < flag.phi_I_plus().size(); ++k) {
    q.push_back(flag.pairing(psi.weight(), k) / flag.pairing(omega.weight(), k));
  }
  return q;
}

WeightVector curve_class_decomposition(const ParabolicGeometry& flag, const Root& root) {
  auto k = flag.root_position(root);
  if (!k) fail(ErrorCode::RootNotInParabolicSet, "root " + to_string(root) + " is not in Phi_I^+");
  WeightVector out(static_cast<std::size_t>(flag.rank()));
  for (int a : flag.generators()) out[a] = flag.fundamental_pairing(a, *k);
  return out;
}

SplitBundle anticanonical(const ParabolicGeometry& flag) {
  WeightVector w(static_cast<std::size_t>(flag.rank()));
  for (int a : flag.generators()) w[a] = flag.delta_P()[a];
  return SplitBundle::line(flag, std::move(w));
}

}  // namespace flagphase
