#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "flagphase/flag.hpp"
#include "flagphase/gaussian.hpp"
#include "flagphase/rational.hpp"

namespace flagphase {

enum class Window { Hypercritical, Supercritical, Subcritical };

std::string_view to_string(Window w);

// Classification refuses to answer this close to a threshold.
inline constexpr double kBoundaryGuard = 1e-9;

struct PhaseReport {
  std::vector<Rational> eigenvalues;  // q_beta, phi_I_plus order
  Rational modulus_sq;                // prod (1 + q_beta^2)
  double theta_hat = 0.0;             // lifted angle in (-n pi/2, n pi/2)
  int n = 0;
  std::optional<Window> window;       // empty when within kBoundaryGuard of a threshold
  double boundary_distance = 0.0;
};

PhaseReport lifted_angle(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi);

// Hypercritical: theta > (n-1) pi/2; Supercritical: (n-2) pi/2 < theta <= (n-1) pi/2.
// Throws BoundaryAmbiguous within kBoundaryGuard of either threshold.
Window classify_window(double theta_hat, int n);
double boundary_distance(double theta_hat, int n);

struct WholeSpace {};
struct Curve {
  std::size_t root;  // position in phi_I_plus
};
struct Divisor {
  InvariantClass cls;  // lambda_Y
};
using Target = std::variant<WholeSpace, Curve, Divisor>;

// Throws RootNotInParabolicSet when the root is not in phi_I_plus.
Curve curve_target(const ParabolicGeometry& flag, const Root& root);
Divisor schubert_divisor_target(const ParabolicGeometry& flag, int alpha);

// c1 and rank of the object whose charge is taken; rank only enters curve charges.
struct ChargeSource {
  InvariantClass cls;
  int rank = 1;

  static ChargeSource from_bundle(const ParabolicGeometry& flag, const SplitBundle& bundle);
};

struct CentralCharge {
  GaussianRational value;
  double arg = 0.0;  // principal, (-pi, pi]
  Target target;
};

// WholeSpace: -(-i)^n prod (1 + i q_beta) Vol
// Curve:      -<lambda, beta^vee> + r i <lambda_omega, beta^vee>
// Divisor:    -sum_alpha b_alpha prod_{beta != alpha} (a_beta - i) Vol
CentralCharge central_charge(const ParabolicGeometry& flag, const KahlerClass& omega, const ChargeSource& source,
                             const Target& target);

struct CjyRatio {
  int sign = 0;           // exact sign of Im(Z_Y / Z_X)
  double im_ratio = 0.0;  // Im(Z_Y / Z_X) as a float, reporting only
  GaussianRational z_y;
  GaussianRational z_x;
};

CjyRatio cjy_ratio(const ParabolicGeometry& flag, const KahlerClass& omega, const ChargeSource& source,
                   const Target& subvariety);

// Theta_Y = Arg of the integral of (omega + i psi)^{dim Y} over Y, lifted consistently with
// theta_hat. Curves give arctan(q_beta); divisors are lifted into the window around
// theta_hat - pi/2 where every term of their expansion lies; WholeSpace gives theta_hat.
double subvariety_phase(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi,
                        const Target& subvariety);

// Theta_Y - (theta_hat - (n - dim Y) pi/2).
double phase_defect(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi,
                    const Target& subvariety);

// Arg(e^{-i pi/2} Z_{P^1_beta}(psi)), evaluated from the curve charge.
double curve_phase(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi,
                   std::size_t root);

}  // namespace flagphase
