#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "squeeze/errors.hpp"
#include "squeeze/numerics/hermite.hpp"
#include "squeeze/numerics/quadrature.hpp"

namespace squeeze {

/// Longitudinal and time-like separation of the two constituents.
struct SpacetimePoint {
  double z = 0.0;
  double t = 0.0;

  /// u = (z + t)/sqrt2
  double u() const noexcept { return (z + t) / std::numbers::sqrt2; }
  /// v = (z - t)/sqrt2
  double v() const noexcept { return (z - t) / std::numbers::sqrt2; }

  static SpacetimePoint from_light_cone(double u, double v) noexcept {
    return {(u + v) / std::numbers::sqrt2, (u - v) / std::numbers::sqrt2};
  }
};

/// Longitudinal momentum and energy separation. The light-cone pairing is
/// reversed with respect to SpacetimePoint: q_u is conjugate to u.
struct MomentumPoint {
  double qz = 0.0;
  double q0 = 0.0;

  /// q_u = (q0 - qz)/sqrt2
  double qu() const noexcept { return (q0 - qz) / std::numbers::sqrt2; }
  /// q_v = (q0 + qz)/sqrt2
  double qv() const noexcept { return (q0 + qz) / std::numbers::sqrt2; }

  static MomentumPoint from_light_cone(double qu, double qv) noexcept {
    return {(qv - qu) / std::numbers::sqrt2, (qu + qv) / std::numbers::sqrt2};
  }
};

/// Boost along z acting on (z, t):
///   [[cosh(eta/2), sinh(eta/2)], [sinh(eta/2), cosh(eta/2)]]
class BoostMatrix {
 public:
  explicit BoostMatrix(double eta) : eta_(eta), ch_(std::cosh(eta / 2.0)), sh_(std::sinh(eta / 2.0)) {}

  double eta() const noexcept { return eta_; }
  std::array<std::array<double, 2>, 2> entries() const noexcept { return {{{ch_, sh_}, {sh_, ch_}}}; }
  double determinant() const noexcept { return ch_ * ch_ - sh_ * sh_; }

  SpacetimePoint apply(SpacetimePoint p) const noexcept {
    return {ch_ * p.z + sh_ * p.t, sh_ * p.z + ch_ * p.t};
  }

  /// Matrix product; equals BoostMatrix(a.eta() + b.eta()) up to rounding.
  friend std::array<std::array<double, 2>, 2> operator*(const BoostMatrix& a, const BoostMatrix& b) {
    const auto x = a.entries();
    const auto y = b.entries();
    std::array<std::array<double, 2>, 2> out{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return out;
  }

 private:
  double eta_;
  double ch_;
  double sh_;
};

inline SpacetimePoint boost_point(SpacetimePoint p, double eta) { return BoostMatrix(eta).apply(p); }

/// The same boost as a light-cone squeeze: u' = e^{eta/2} u, v' = e^{-eta/2} v.
inline SpacetimePoint boost_light_cone(SpacetimePoint p, double eta) {
  return SpacetimePoint::from_light_cone(std::exp(eta / 2.0) * p.u(), std::exp(-eta / 2.0) * p.v());
}

/// Rest-frame Gaussian pi^{-1/2} exp{-(z^2 + t^2)/2}, unit norm on the plane.
inline double dirac_gaussian(SpacetimePoint p) {
  return std::numbers::inv_sqrtpi * std::exp(-0.5 * (p.z * p.z + p.t * p.t));
}

/// psi_eta(z, t) = pi^{-1/2} exp{-1/2 (e^{-eta} u^2 + e^{eta} v^2)}
inline double boosted_wavefunction(SpacetimePoint p, double eta) {
  const double u = p.u();
  const double v = p.v();
  return std::numbers::inv_sqrtpi * std::exp(-0.5 * (std::exp(-eta) * u * u + std::exp(eta) * v * v));
}

/// phi_eta(qz, q0) = pi^{-1/2} exp{-1/2 (e^{eta} q_u^2 + e^{-eta} q_v^2)}
inline double momentum_wavefunction(MomentumPoint q, double eta) {
  const double qu = q.qu();
  const double qv = q.qv();
  return std::numbers::inv_sqrtpi * std::exp(-0.5 * (std::exp(eta) * qu * qu + std::exp(-eta) * qv * qv));
}

/// Standard deviation of psi_eta itself (not |psi|^2) along z or t.
inline double amplitude_axis_width(double eta) { return std::sqrt(std::cosh(eta)); }

/// Narrowest standard deviation of psi_eta, along the contracted light-cone axis.
inline double amplitude_minor_width(double eta) { return std::exp(-std::abs(eta) / 2.0); }

/// Probe points for fourier_consistency: a 13 x 13 lattice on [-3, 3]^2.
inline std::vector<MomentumPoint> default_momentum_probes() {
  std::vector<MomentumPoint> out;
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) out.push_back({0.5 * i, 0.5 * j});
  return out;
}

/// Fourier transform of the boosted space-time wave function by quadrature,
///   (1/2pi) int int psi_eta(z, t) exp{i(qz z - q0 t)} dz dt,
/// compared with phi_eta at each probe. Returns the largest absolute deviation.
///
/// The kernel phase equals q_v v - q_u u, so it pairs u with q_u and v with
/// q_v. psi_eta is even under (z, t) -> (-z, -t), hence only the cosine part
/// survives and the sine part is accumulated as a check on the imaginary part.
inline double fourier_consistency(double eta, const QuadratureGrid& grid,
                                  const std::vector<MomentumPoint>& probes = default_momentum_probes()) {
  detail::require_finite(eta, "eta");
  require_resolved(grid, amplitude_axis_width(eta), amplitude_minor_width(eta), "fourier_consistency");

  const std::size_t n = grid.size();
  std::vector<double> psi(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      psi[i * n + j] = grid.weight(i) * grid.weight(j) * boosted_wavefunction({grid.node(i), grid.node(j)}, eta);

  std::vector<double> cz(n), sz(n), ct(n), st(n);
  double worst = 0.0;
  for (const MomentumPoint& q : probes) {
    for (std::size_t i = 0; i < n; ++i) {
      cz[i] = std::cos(q.qz * grid.node(i));
      sz[i] = std::sin(q.qz * grid.node(i));
      ct[i] = std::cos(q.q0 * grid.node(i));
      st[i] = std::sin(q.q0 * grid.node(i));
    }
    // cos(a - b) = cos a cos b + sin a sin b, sin(a - b) = sin a cos b - cos a sin b
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double rc = 0.0;
      double rs = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        rc += psi[i * n + j] * ct[j];
        rs += psi[i * n + j] * st[j];
      }
      re += cz[i] * rc + sz[i] * rs;
      im += sz[i] * rc - cz[i] * rs;
    }
    re /= 2.0 * std::numbers::pi;
    im /= 2.0 * std::numbers::pi;
    worst = std::max({worst, std::abs(re - momentum_wavefunction(q, eta)), std::abs(im)});
  }
  return worst;
}

/// Lorentz four-vector in (t, x, y, z) order.
struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend FourVector operator+(FourVector a, FourVector b) { return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend FourVector operator-(FourVector a, FourVector b) { return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend FourVector operator*(double s, FourVector a) { return {s * a.t, s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const FourVector&, const FourVector&) = default;
};

/// Hadron position X and quark separation x.
struct HadronCoordinates {
  FourVector position;
  FourVector separation;
};

/// Hadron four-momentum P and momentum separation q.
struct HadronMomenta {
  FourVector total;
  FourVector separation;
};

/// X = (x_a + x_b)/2, x = (x_a - x_b)/(2 sqrt2)
inline HadronCoordinates hadron_variables(FourVector xa, FourVector xb) {
  return {0.5 * (xa + xb), (1.0 / (2.0 * std::numbers::sqrt2)) * (xa - xb)};
}

/// P = p_a + p_b, q = sqrt2 (p_a - p_b)
inline HadronMomenta hadron_momenta(FourVector pa, FourVector pb) {
  return {pa + pb, std::numbers::sqrt2 * (pa - pb)};
}

/// Eigenvalue lambda of the invariant oscillator equation
///   1/2 { x_mu x^mu - d^2/dx_mu dx^mu } psi = lambda psi
/// restricted to the (z, t) plane with signature (+, -) on (t, z), evaluated
/// at one point with central second differences of step h. The normalizable
/// Gaussian family gives lambda = 0 at every eta.
inline double oscillator_equation_eigenvalue(SpacetimePoint p, double eta, double h = 1e-3) {
  const auto f = [eta](double z, double t) { return boosted_wavefunction({z, t}, eta); };
  const double c = f(p.z, p.t);
  const double d2z = (f(p.z + h, p.t) - 2.0 * c + f(p.z - h, p.t)) / (h * h);
  const double d2t = (f(p.z, p.t + h) - 2.0 * c + f(p.z, p.t - h)) / (h * h);
  return 0.5 * ((p.t * p.t - p.z * p.z) * c - (d2t - d2z)) / c;
}

}  // namespace squeeze
