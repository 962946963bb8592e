#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "squeeze/errors.hpp"
#include "squeeze/numerics/hermite.hpp"
#include "squeeze/oscillator.hpp"

namespace squeeze {

inline constexpr std::size_t default_k_max = 64;

/// Truncated Schmidt expansion
///   psi_eta(x1, x2) = sum_k c_k phi_k(x1) phi_k(x2),
///   c_k = tanh^k(eta/2) / cosh(eta/2).
struct FockExpansion {
  double eta = 0.0;
  std::size_t k_max = 0;
  std::vector<double> coeffs;

  /// sum_{k > k_max} c_k^2, in closed form.
  double tail() const { return std::pow(std::tanh(eta / 2.0), 2.0 * static_cast<double>(k_max + 1)); }

  /// sum_{k <= k_max} c_k phi_k(x1) phi_k(x2)
  double reconstruct(OscCoords p) const {
    const std::vector<double> a = hermite_fn_table(k_max, p.x1);
    const std::vector<double> b = hermite_fn_table(k_max, p.x2);
    double sum = 0.0;
    for (std::size_t k = 0; k <= k_max; ++k) sum += coeffs[k] * a[k] * b[k];
    return sum;
  }
};

/// Diagonal reduced density matrix of one oscillator after the partner is
/// traced out. Entropy is in units of Boltzmann's constant.
struct ReducedState {
  double eta = 0.0;
  std::size_t k_max = 0;
  std::vector<double> eigenvalues;
  double purity = 1.0;
  double entropy = 0.0;
  double tail = 0.0;
};

/// Effective temperature of the traced oscillator, natural units hbar = k_B = 1.
/// `x` is hbar omega / k_B T. At eta = 0 the map degenerates to the
/// zero-temperature limit: x = +inf, T = 0 and `zero_temperature` is set.
struct ThermalMap {
  double omega = 1.0;
  double x = std::numeric_limits<double>::infinity();
  double T = 0.0;
  bool zero_temperature = true;
};

inline FockExpansion schmidt_coefficients(double eta, std::size_t k_max) {
  detail::require_finite(eta, "eta");
  FockExpansion out{eta, k_max, std::vector<double>(k_max + 1)};
  const double t = std::tanh(eta / 2.0);
  double c = 1.0 / std::cosh(eta / 2.0);
  for (std::size_t k = 0; k <= k_max; ++k) {
    out.coeffs[k] = c;
    c *= t;
  }
  return out;
}

/// p_k = tanh^{2k}(eta/2) / cosh^2(eta/2), k = 0..k_max
inline std::vector<double> reduced_eigenvalues(double eta, std::size_t k_max) {
  detail::require_finite(eta, "eta");
  std::vector<double> p(k_max + 1);
  const double t2 = std::tanh(eta / 2.0) * std::tanh(eta / 2.0);
  const double ch = std::cosh(eta / 2.0);
  double v = 1.0 / (ch * ch);
  for (std::size_t k = 0; k <= k_max; ++k) {
    p[k] = v;
    v *= t2;
  }
  return p;
}

/// Tr rho^2 = 1 / cosh(eta)
inline double purity(double eta) {
  detail::require_finite(eta, "eta");
  return 1.0 / std::cosh(eta);
}

/// Tr rho^2 from the truncated series cosh^{-4}(eta/2) sum_k tanh^{4k}(eta/2).
inline double purity_series(double eta, std::size_t k_max = default_k_max) {
  double sum = 0.0;
  for (double p : reduced_eigenvalues(eta, k_max)) sum += p * p;
  return sum;
}

/// S = 2 { cosh^2(eta/2) ln cosh(eta/2) - sinh^2(eta/2) ln sinh(eta/2) }
///
/// Even in eta; the sinh term is taken as its limit 0 at eta = 0.
inline double entropy(double eta) {
  detail::require_finite(eta, "eta");
  const double half = std::abs(eta) / 2.0;
  if (half == 0.0) return 0.0;
  const double ch = std::cosh(half);
  const double sh = std::sinh(half);
  return 2.0 * (ch * ch * std::log(ch) - sh * sh * std::log(sh));
}

/// -sum_k p_k ln p_k over the truncated spectrum; zero eigenvalues add nothing.
inline double entropy_series(double eta, std::size_t k_max = default_k_max) {
  double sum = 0.0;
  for (double p : reduced_eigenvalues(eta, k_max))
    if (p > 0.0) sum -= p * std::log(p);
  return sum;
}

inline ReducedState reduced_state(double eta, std::size_t k_max = default_k_max) {
  ReducedState out;
  out.eta = eta;
  out.k_max = k_max;
  out.eigenvalues = reduced_eigenvalues(eta, k_max);
  out.purity = purity(eta);
  out.entropy = entropy(eta);
  out.tail = std::pow(std::tanh(eta / 2.0), 2.0 * static_cast<double>(k_max + 1));
  return out;
}

/// Entropy of a single oscillator in thermal equilibrium, x = hbar omega / k_B T:
///   S = x / (e^x - 1) - ln(1 - e^{-x})
inline double thermal_entropy(double x) {
  if (std::isnan(x) || !(x > 0.0)) throw domain_error("thermal_entropy requires x > 0");
  if (std::isinf(x)) return 0.0;
  return x / std::expm1(x) - std::log1p(-std::exp(-x));
}

/// Maps the coupling onto a temperature through tanh^2(eta/2) = exp(-hbar omega / k_B T).
///
/// The squared form is the one for which the thermal entropy of the traced
/// oscillator equals its von Neumann entropy; the Boltzmann weights
/// e^{-k x} then coincide with the eigenvalue ratios p_k / p_0.
inline ThermalMap effective_temperature(double eta, double omega) {
  detail::require_finite(eta, "eta");
  if (!std::isfinite(omega) || !(omega > 0.0)) throw domain_error("omega must be positive");
  ThermalMap out;
  out.omega = omega;
  if (eta == 0.0) return out;
  // ln tanh(a) = log1p(-e^{-2a}) - log1p(e^{-2a}), accurate for large a
  const double e = std::exp(-std::abs(eta));
  out.x = -2.0 * (std::log1p(-e) - std::log1p(e));
  out.T = omega / out.x;
  out.zero_temperature = false;
  return out;
}

}  // namespace squeeze
