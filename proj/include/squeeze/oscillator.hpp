#pragma once

#include <cmath>
#include <numbers>

#include "squeeze/errors.hpp"

namespace squeeze {

/// Two equal-mass oscillators with potential A x1^2 + A x2^2 + 2C x1 x2.
struct CoupledParams {
  double mass = 1.0;
  double stiffness = 1.0;  // A
  double coupling = 0.0;   // C
};

/// Quantities of the diagonalized system. The symmetric normal coordinate y1
/// oscillates at omega_minus = omega e^{-eta}, the antisymmetric one y2 at
/// omega_plus = omega e^{+eta}.
struct NormalModeData {
  double K = 1.0;
  double eta = 0.0;
  double omega = 1.0;
  double omega_plus = 1.0;
  double omega_minus = 1.0;
};

/// Coordinates of the two oscillators in the original basis.
struct OscCoords {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Normal coordinates, the original basis rotated by 45 degrees.
struct NormalCoords {
  double y1 = 0.0;
  double y2 = 0.0;
};

/// Canonical momenta conjugate to OscCoords.
struct OscMomenta {
  double p1 = 0.0;
  double p2 = 0.0;
};

inline NormalModeData normal_modes(const CoupledParams& params) {
  const auto [m, a, c] = params;
  if (!std::isfinite(m) || !std::isfinite(a) || !std::isfinite(c))
    throw domain_error("oscillator parameters must be finite");
  if (!(m > 0.0)) throw domain_error("mass must be positive");
  if (!(std::abs(c) < a))
    throw unstable_potential_error("coupling must satisfy |C| < A for a bound potential");

  NormalModeData out;
  out.K = std::sqrt(a * a - c * c);
  out.eta = 0.25 * std::log((a - c) / (a + c));
  out.omega = std::sqrt(out.K / m);
  out.omega_plus = out.omega * std::exp(out.eta);
  out.omega_minus = out.omega * std::exp(-out.eta);
  return out;
}

inline NormalCoords to_normal(OscCoords p) noexcept {
  using std::numbers::sqrt2;
  return {(p.x1 + p.x2) / sqrt2, (p.x1 - p.x2) / sqrt2};
}

inline OscCoords from_normal(NormalCoords p) noexcept {
  using std::numbers::sqrt2;
  return {(p.y1 + p.y2) / sqrt2, (p.y1 - p.y2) / sqrt2};
}

inline OscMomenta rotate_momenta(OscMomenta p) noexcept {
  using std::numbers::sqrt2;
  return {(p.p1 + p.p2) / sqrt2, (p.p1 - p.p2) / sqrt2};
}

/// Entangled ground state in the original coordinates, with y measured in
/// units of (mK)^{1/4}:
///   psi_eta(x1,x2) = pi^{-1/2} exp{-1/4 [e^{-eta}(x1+x2)^2 + e^{eta}(x1-x2)^2]}
inline double ground_state(OscCoords p, double eta) {
  const double s = p.x1 + p.x2;
  const double d = p.x1 - p.x2;
  return std::numbers::inv_sqrtpi *
         std::exp(-0.25 * (std::exp(-eta) * s * s + std::exp(eta) * d * d));
}

/// The same state written in normal coordinates, where it factorizes.
inline double ground_state(NormalCoords p, double eta) {
  return std::numbers::inv_sqrtpi *
         std::exp(-0.5 * (std::exp(-eta) * p.y1 * p.y1 + std::exp(eta) * p.y2 * p.y2));
}

inline double hamiltonian_energy(OscCoords x, OscMomenta p, const CoupledParams& params) {
  const auto [m, a, c] = params;
  return 0.5 * (p.p1 * p.p1 / m + p.p2 * p.p2 / m + a * x.x1 * x.x1 + a * x.x2 * x.x2 +
                2.0 * c * x.x1 * x.x2);
}

/// Diagonal form H = (p1^2 + p2^2)/2m + K/2 (e^{-2eta} y1^2 + e^{2eta} y2^2),
/// with momenta given in the rotated basis.
inline double hamiltonian_energy(NormalCoords y, OscMomenta p, const CoupledParams& params) {
  const NormalModeData modes = normal_modes(params);
  return (p.p1 * p.p1 + p.p2 * p.p2) / (2.0 * params.mass) +
         0.5 * modes.K *
             (std::exp(-2.0 * modes.eta) * y.y1 * y.y1 + std::exp(2.0 * modes.eta) * y.y2 * y.y2);
}

}  // namespace squeeze
