#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "squeeze/errors.hpp"

namespace squeeze {

namespace detail {

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw domain_error(std::string(what) + " must be finite");
}

// pi^(-1/4)
inline constexpr double hermite_norm = 0.75112554446494248285870300477623;

}  // namespace detail

/// Fills out[k] = phi_k(x) for k = 0..out.size()-1, where phi_k is the
/// orthonormal harmonic-oscillator eigenfunction
///   phi_k(x) = (2^k k! sqrt(pi))^(-1/2) H_k(x) exp(-x^2/2).
///
/// Uses the normalized three-term recurrence
///   phi_{k+1} = x sqrt(2/(k+1)) phi_k - sqrt(k/(k+1)) phi_{k-1},
/// which never forms H_k or k! and stays finite well past k = 128.
inline void hermite_fn_table(double x, std::span<double> out) {
  detail::require_finite(x, "hermite_fn argument");
  if (out.empty()) return;
  out[0] = detail::hermite_norm * std::exp(-0.5 * x * x);
  if (out.size() == 1) return;
  out[1] = std::numbers::sqrt2 * x * out[0];
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kd = static_cast<double>(k);
    out[k + 1] = x * std::sqrt(2.0 / (kd + 1.0)) * out[k] -
                 std::sqrt(kd / (kd + 1.0)) * out[k - 1];
  }
}

inline std::vector<double> hermite_fn_table(std::size_t k_max, double x) {
  std::vector<double> out(k_max + 1);
  hermite_fn_table(x, out);
  return out;
}

/// phi_k(x). Cost is O(k); prefer hermite_fn_table when several orders are
/// needed at the same point.
inline double hermite_fn(std::size_t k, double x) {
  detail::require_finite(x, "hermite_fn argument");
  double prev = 0.0;
  double cur = detail::hermite_norm * std::exp(-0.5 * x * x);
  for (std::size_t j = 0; j < k; ++j) {
    const double jd = static_cast<double>(j);
    const double next =
        x * std::sqrt(2.0 / (jd + 1.0)) * cur - std::sqrt(jd / (jd + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace squeeze
