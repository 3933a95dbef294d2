#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "flagphase/flag.hpp"
#include "flagphase/rational.hpp"

namespace flagphase {

// mu(E) = deg(E) / rank(E).
Rational slope(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle);

// sum_beta <lambda(E), beta^vee> / (r <lambda_omega, beta^vee>); mu = (n-1)! mu_hat Vol.
Rational mu_hat(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle);

struct RestrictionReport {
  bool semistable = false;
  // degrees[g][j] = <lambda_j, alpha_g^vee> for the g-th generator alpha_g of Delta \ I.
  std::vector<std::vector<Rational>> degrees;
};

// Restriction of E to every generator curve P^1_alpha is a sum of O(<lambda_j, alpha^vee>).
RestrictionReport restriction_semistable(const ParabolicGeometry& flag, const SplitBundle& bundle);

enum class Verdict { Stable, Polystable, Semistable, Unstable };

std::string_view to_string(Verdict v);

// Verdicts are relative to split subbundles (sub-multisets of the summands).
struct StabilityVerdict {
  Verdict verdict = Verdict::Stable;
  // Unstable: the destabilizing sub-multiset of largest slope.
  // Polystable/Semistable: a proper sub-multiset attaining mu(E).
  std::vector<std::size_t> witness;
  std::optional<Rational> witness_slope;
};

inline constexpr std::size_t kMaxEnumeratedRank = 20;

// Throws TooManySummands beyond kMaxEnumeratedRank.
StabilityVerdict split_stability(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle);

// Arg Z(E, P^1_beta) > Arg Z(F, P^1_beta) for every beta in phi_I_plus.
bool arg_dominance(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& e,
                   const SplitBundle& f);

struct HymConstant {
  bool defined = false;
  // Lambda_omega of the common summand class and the Einstein constant 2 pi Lambda / pi.
  std::optional<Rational> lambda;
  std::optional<Rational> constant_over_pi;
  std::vector<Rational> summand_constants_over_pi;  // 2 Lambda_omega(c1(L_j)), one per summand
};

HymConstant hym_constant(const ParabolicGeometry& flag, const KahlerClass& omega, const SplitBundle& bundle);

}  // namespace flagphase
