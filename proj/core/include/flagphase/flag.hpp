#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "flagphase/rational.hpp"
#include "flagphase/rootsys.hpp"

namespace flagphase {

class ParabolicGeometry;

// An invariant (1,1)-class: arbitrary rationals on Delta \ I, zero on I.
class InvariantClass {
 public:
  InvariantClass(const ParabolicGeometry& flag, WeightVector weight);

  const WeightVector& weight() const noexcept { return weight_; }
  bool is_integral() const { return weight_.is_integral(); }

 private:
  WeightVector weight_;
};

// Invariant Kahler class: strictly positive on Delta \ I, zero on I.
class KahlerClass {
 public:
  KahlerClass(const ParabolicGeometry& flag, WeightVector weight);

  const WeightVector& weight() const noexcept { return weight_; }
  bool integral() const noexcept { return integral_; }

 private:
  WeightVector weight_;
  bool integral_ = false;
};

// Direct sum of line bundles; each summand is an integral class.
class SplitBundle {
 public:
  SplitBundle(const ParabolicGeometry& flag, std::vector<WeightVector> summands);

  static SplitBundle line(const ParabolicGeometry& flag, WeightVector weight);

  std::span<const WeightVector> summands() const noexcept { return summands_; }
  std::size_t rank() const noexcept { return summands_.size(); }

  // First Chern class of the determinant.
  WeightVector determinant_weight() const;

  friend SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b);

 private:
  SplitBundle() = default;
  std::vector<WeightVector> summands_;
};

// Flag variety G/P_I: the combinatorial data consumed by every invariant.
class ParabolicGeometry {
 public:
  ParabolicGeometry(std::shared_ptr<const RootSystem> rootsystem, std::vector<int> parabolic);

  const RootSystem& rootsystem() const noexcept { return *rootsystem_; }
  int rank() const noexcept { return rootsystem_->rank(); }

  std::span<const int> parabolic() const noexcept { return parabolic_; }
  bool in_parabolic(int alpha) const { return in_parabolic_.at(static_cast<std::size_t>(alpha)); }

  // Delta \ I in increasing order; its size is the Picard number.
  std::span<const int> generators() const noexcept { return generators_; }
  std::size_t picard_number() const noexcept { return generators_.size(); }

  // Positive roots not supported on I, in root-system order.
  std::span<const Root> phi_I_plus() const noexcept { return phi_; }
  int dimension() const noexcept { return static_cast<int>(phi_.size()); }

  // Sum of phi_I_plus in weight coordinates over all simple roots. Only the
  // coordinates on Delta \ I are used downstream.
  const WeightVector& delta_P() const noexcept { return delta_; }
  const WeightVector& rho_plus() const noexcept { return rho_; }

  std::optional<std::size_t> root_position(const Root& root) const;

  // <varpi_alpha, beta^vee> for the k-th root of phi_I_plus.
  int fundamental_pairing(int alpha, std::size_t k) const { return pairing_.at(k).at(static_cast<std::size_t>(alpha)); }

  // <lambda, beta_k^vee>.
  Rational pairing(const WeightVector& lambda, std::size_t k) const;
  std::vector<Rational> pairings(const WeightVector& lambda) const;

  // Expands coordinates given over Delta \ I to a full weight (zeros on I).
  WeightVector embed(std::span<const Rational> generator_coords) const;
  std::vector<Rational> restrict_to_generators(const WeightVector& weight) const;

  // Schubert divisor class D_alpha = c1(O_alpha(1)), alpha in Delta \ I.
  InvariantClass schubert_divisor(int alpha) const;

 private:
  std::shared_ptr<const RootSystem> rootsystem_;
  std::vector<int> parabolic_;
  std::vector<bool> in_parabolic_;
  std::vector<int> generators_;
  std::vector<Root> phi_;
  std::vector<std::vector<int>> pairing_;
  WeightVector delta_;
  WeightVector rho_;
};

ParabolicGeometry build_flag(std::shared_ptr<const RootSystem> rootsystem, std::vector<int> parabolic);
ParabolicGeometry build_flag(RootSystem rootsystem, std::vector<int> parabolic);

// Vol(X_P, omega) = prod <lambda_omega, beta^vee> / <rho, beta^vee>.
Rational volume(const ParabolicGeometry& flag, const KahlerClass& omega);

// int c1 ^ omega^{n-1} = (n-1)! [sum <lambda, beta^vee>/<lambda_omega, beta^vee>] Vol.
Rational degree(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& cls);
Rational degree(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle);

// Eigenvalues of omega^{-1} psi at the base point, one per root of phi_I_plus.
std::vector<Rational> eigenvalues(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi);

// [P^1_beta] = sum_alpha <varpi_alpha, beta^vee> [P^1_alpha]; zero on I.
WeightVector curve_class_decomposition(const ParabolicGeometry& flag, const Root& root);

// K^{-1} = tensor of O_alpha(<delta_P, alpha^vee>).
SplitBundle anticanonical(const ParabolicGeometry& flag);

// Re-validates omega against the flag (used by every operation taking a Kahler class).
void require_kahler(const ParabolicGeometry& flag, const KahlerClass& omega);

}  // namespace flagphase
