#include "flagphase/dhym.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "flagphase/errors.hpp"

namespace flagphase {

double GaussianRational::arg() const {
  if (is_zero()) return 0.0;
  // Rescale first so that huge exact values do not overflow the conversion.
  Rational scale = abs(re) > abs(im) ? Rational(abs(re)) : Rational(abs(im));
  return std::atan2(to_double(im / scale), to_double(re / scale));
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  const Rational n = o.norm();
  if (n == 0) fail(ErrorCode::InvalidArgument, "division by zero in Q(i)");
  GaussianRational z = *this * o.conj();
  z.re /= n;
  z.im /= n;
  return z;
}

GaussianRational minus_i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

std::string to_string(const GaussianRational& z) {
  return to_string(z.re) + (z.im < 0 ? " - " : " + ") + to_string(Rational(abs(z.im))) + "i";
}

std::string_view to_string(Window w) {
  switch (w) {
    case Window::Hypercritical: return "hypercritical";
    case Window::Supercritical: return "supercritical";
    case Window::Subcritical: return "subcritical";
  }
  return "unknown";
}

double boundary_distance(double theta_hat, int n) {
  const double lower = (n - 2) * std::numbers::pi / 2;
  const double upper = (n - 1) * std::numbers::pi / 2;
  return std::min(std::abs(theta_hat - lower), std::abs(theta_hat - upper));
}

Window classify_window(double theta_hat, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  if (!(std::abs(theta_hat) <= n * std::numbers::pi / 2 + 1e-12))
    fail(ErrorCode::InvalidArgument, "lifted angle outside (-n pi/2, n pi/2)");
  if (boundary_distance(theta_hat, n) < kBoundaryGuard)
    fail(ErrorCode::BoundaryAmbiguous, "lifted angle within 1e-9 of a window threshold");
  const double lower = (n - 2) * std::numbers::pi / 2;
  const double upper = (n - 1) * std::numbers::pi / 2;
  if (theta_hat > upper) return Window::Hypercritical;
  if (theta_hat > lower) return Window::Supercritical;
  return Window::Subcritical;
}

PhaseReport lifted_angle(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi) {
  PhaseReport report;
  report.eigenvalues = eigenvalues(flag, omega, psi);
  report.n = flag.dimension();
  report.modulus_sq = 1;
  for (const auto& q : report.eigenvalues) {
    report.modulus_sq *= 1 + q * q;
    report.theta_hat += std::atan(to_double(q));
  }
  report.boundary_distance = boundary_distance(report.theta_hat, report.n);
  if (report.boundary_distance >= kBoundaryGuard) report.window = classify_window(report.theta_hat, report.n);
  return report;
}

Curve curve_target(const ParabolicGeometry& flag, const Root& root) {
  auto k = flag.root_position(root);
  if (!k) fail(ErrorCode::RootNotInParabolicSet, "root " + to_string(root) + " is not in Phi_I^+");
  return Curve{*k};
}

Divisor schubert_divisor_target(const ParabolicGeometry& flag, int alpha) {
  return Divisor{flag.schubert_divisor(alpha)};
}

ChargeSource ChargeSource::from_bundle(const ParabolicGeometry& flag, const SplitBundle& bundle) {
  return ChargeSource{InvariantClass(flag, bundle.determinant_weight()), static_cast<int>(bundle.rank())};
}

namespace {

void check_curve(const ParabolicGeometry& flag, const Curve& c) {
  if (c.root >= flag.phi_I_plus().size())
    fail(ErrorCode::RootNotInParabolicSet, "curve index " + std::to_string(c.root + 1) + " outside Phi_I^+");
}

// sum_alpha b_alpha prod_{beta != alpha} (1 + i a_beta): the integrand of omega_Y ^ (omega + i chi)^{n-1}
// divided by (n-1)! omega^n / n!.
GaussianRational divisor_expansion(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  // prefix/suffix products avoid the quadratic rebuild of each leave-one-out product
  std::vector<GaussianRational> prefix(n + 1, GaussianRational(1)), suffix(n + 1, GaussianRational(1));
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * GaussianRational(1, a[k]);
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * GaussianRational(1, a[k]);
  GaussianRational sum;
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k] == 0) continue;
    sum += prefix[k] * suffix[k + 1] * b[k];
  }
  return sum;
}

}  // namespace

CentralCharge central_charge(const ParabolicGeometry& flag, const KahlerClass& omega, const ChargeSource& source,
                             const Target& target) {
  require_kahler(flag, omega);
  if (source.rank < 0) fail(ErrorCode::InvalidRank, "rank must be nonnegative");
  CentralCharge out;
  out.target = target;
  const int n = flag.dimension();

  if (std::holds_alternative<WholeSpace>(target)) {
    GaussianRational prod(1);
    for (const auto& q : eigenvalues(flag, omega, source.cls)) prod *= GaussianRational(1, q);
    out.value = -(minus_i_power(n) * prod) * volume(flag, omega);
  } else if (const auto* c = std::get_if<Curve>(&target)) {
    check_curve(flag, *c);
    if (source.rank < 1) fail(ErrorCode::InvalidRank, "curve charges need rank >= 1");
    out.value = GaussianRational(-flag.pairing(source.cls.weight(), c->root),
                                 source.rank * flag.pairing(omega.weight(), c->root));
  } else {
    const auto& d = std::get<Divisor>(target);
    const auto a = eigenvalues(flag, omega, source.cls);
    const auto b = eigenvalues(flag, omega, d.cls);
    const std::size_t m = a.size();
    // -sum_alpha b_alpha prod_{beta != alpha} (a_beta - i) V0
    std::vector<GaussianRational> prefix(m + 1, GaussianRational(1)), suffix(m + 1, GaussianRational(1));
    for (std::size_t k = 0; k < m; ++k) prefix[k + 1] = prefix[k] * GaussianRational(a[k], -1);
    for (std::size_t k = m; k-- > 0;) suffix[k] = suffix[k + 1] * GaussianRational(a[k], -1);
    GaussianRational sum;
    for (std::size_t k = 0; k < m; ++k) {
      if (b[k] != 0) sum += prefix[k] * suffix[k + 1] * b[k];
    }
    out.value = -sum * volume(flag, omega);
  }
  out.arg = out.value.arg();
  return out;
}

CjyRatio cjy_ratio(const ParabolicGeometry& flag, const KahlerClass& omega, const ChargeSource& source,
                   const Target& subvariety) {
  if (std::holds_alternative<WholeSpace>(subvariety))
    fail(ErrorCode::InvalidArgument, "CJY ratio needs a proper subvariety (curve or divisor)");
  CjyRatio out;
  out.z_y = central_charge(flag, omega, source, subvariety).value;
  out.z_x = central_charge(flag, omega, source, WholeSpace{}).value;
  if (out.z_x.is_zero()) fail(ErrorCode::ZeroTotalCharge, "Z_X vanishes");
  const Rational im = (out.z_y * out.z_x.conj()).im;
  out.sign = sgn(im);
  out.im_ratio = to_double(im / out.z_x.norm());
  return out;
}

double curve_phase(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi,
                   std::size_t root) {
  const auto z = central_charge(flag, omega, ChargeSource{psi, 1}, Curve{root}).value;
  return (z * minus_i_power(1)).arg();
}

double subvariety_phase(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi,
                        const Target& subvariety) {
  require_kahler(flag, omega);
  if (std::holds_alternative<WholeSpace>(subvariety)) return lifted_angle(flag, omega, psi).theta_hat;
  if (const auto* c = std::get_if<Curve>(&subvariety)) {
    check_curve(flag, *c);
    // integral over P^1_beta of omega + i psi = <omega, beta^vee> + i <psi, beta^vee>, real part > 0
    const GaussianRational z(flag.pairing(omega.weight(), c->root), flag.pairing(psi.weight(), c->root));
    return z.arg();
  }
  const auto& d = std::get<Divisor>(subvariety);
  const auto a = eigenvalues(flag, omega, psi);
  const auto b = eigenvalues(flag, omega, d.cls);
  const GaussianRational z = divisor_expansion(a, b);
  if (z.is_zero()) fail(ErrorCode::InvalidArgument, "divisor integral vanishes; phase undefined");
  const double theta = lifted_angle(flag, omega, psi).theta_hat;
  const std::complex<double> rotated = std::polar(1.0, z.arg() - theta);
  // every term has argument theta - arctan(a_alpha) when b_alpha > 0
  return theta + std::arg(rotated);
}

double phase_defect(const ParabolicGeometry& flag, const KahlerClass& omega, const InvariantClass& psi,
                    const Target& subvariety) {
  const int n = flag.dimension();
  int dim_y = n;
  if (std::holds_alternative<Curve>(subvariety)) dim_y = 1;
  if (std::holds_alternative<Divisor>(subvariety)) dim_y = n - 1;
  const double theta_y = subvariety_phase(flag, omega, psi, subvariety);
  const double theta_x = lifted_angle(flag, omega, psi).theta_hat;
  return theta_y - (theta_x - (n - dim_y) * std::numbers::pi / 2);
}

}  // namespace flagphase
