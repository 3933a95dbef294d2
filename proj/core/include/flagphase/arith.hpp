#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagphase/flag.hpp"
#include "flagphase/rational.hpp"

namespace flagphase {

// Q(a, b) = int a ^ b ^ omega^{n-2} on the generators Omega_alpha, alpha in Delta \ I.
struct HodgeRiemannMatrix {
  std::vector<int> generators;
  std::vector<std::vector<Rational>> entries;
  bool integral = false;
};

HodgeRiemannMatrix hodge_riemann_matrix(const ParabolicGeometry& flag, const KahlerClass& omega);

// deg O_alpha(1) = Q(Omega_alpha, omega) for each generator, in generator order.
std::vector<Rational> generator_degrees(const ParabolicGeometry& flag, const KahlerClass& omega);

// gcd of the generator degrees. Requires an integral class.
Integer tau(const ParabolicGeometry& flag, const KahlerClass& omega);

struct SlopeSolution {
  std::optional<WeightVector> solution;  // empty when tau does not divide m0
  Integer tau;
};

SlopeSolution solve_slope(const ParabolicGeometry& flag, const KahlerClass& omega, const Integer& m0);

// xi_alpha = -q_alpha Omega_gamma + q_gamma Omega_alpha with q = Q(Omega, omega) / tau, alpha != gamma.
std::vector<WeightVector> pic0_generators(const ParabolicGeometry& flag, const KahlerClass& omega, int gamma);

// Index of the span of pic0_generators inside the full slope-zero lattice.
Integer pic0_index(const ParabolicGeometry& flag, const KahlerClass& omega, int gamma);

struct SlopeLattice {
  Integer tau;
  std::optional<WeightVector> particular;
  std::vector<WeightVector> pic0_basis;
  int gamma = 0;
  Integer index;
};

SlopeLattice slope_lattice(const ParabolicGeometry& flag, const KahlerClass& omega, const Integer& m0, int gamma);

struct DensityReport {
  Integer count;   // #{1 <= m <= n : tau | m}
  Rational limit;  // 1 / tau
  Rational bound;  // tau / n
  bool bound_holds = false;
};

DensityReport density(const ParabolicGeometry& flag, const KahlerClass& omega, const Integer& n);

struct NefSolution {
  std::optional<WeightVector> solution;  // all coordinates >= 0, slope m0
  std::optional<Integer> guarantee_bound;  // present when tau = 1
  bool guaranteed = false;                 // m0 at or above the bound
};

// Throws GuaranteeViolated if the search fails at or above the bound.
NefSolution nef_solve(const ParabolicGeometry& flag, const KahlerClass& omega, const Integer& m0, int gamma);

struct K0Report {
  Integer tau;
  int gamma = 0;
  std::vector<WeightVector> pic0_basis;
  Integer pic0_index;
  std::string statement;
};

K0Report k0_report(const ParabolicGeometry& flag, const KahlerClass& omega, int gamma);

}  // namespace flagphase
