#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "squeeze/errors.hpp"

namespace squeeze {

/// Nodes and weights of a one-dimensional quadrature rule on [-L, L].
///
/// The standard rule is the uniform trapezoid: N equally spaced nodes,
/// interior weights h and endpoint weights h/2 with h = 2L/(N-1). For the
/// Gaussians in this library the trapezoid sum converges spectrally, so a
/// modest grid already integrates exp(-x^2) to round-off.
///
/// Two-dimensional integrals use the tensor product of the same rule on both
/// axes. Instances are immutable after construction.
class QuadratureGrid {
 public:
  static constexpr std::size_t default_count = 401;
  static constexpr double default_half_width = 8.0;

  QuadratureGrid() = default;

  /// Uniform trapezoid rule with `count` nodes on [-half_width, half_width].
  QuadratureGrid(std::size_t count, double half_width) : half_width_(half_width) {
    if (count < 2) throw domain_error("quadrature grid needs at least 2 nodes");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
      throw domain_error("quadrature half-width must be positive and finite");
    nodes_.resize(count);
    weights_.assign(count, 0.0);
    const double h = 2.0 * half_width / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      nodes_[i] = -half_width + h * static_cast<double>(i);
      weights_[i] = h;
    }
    // exact symmetry about the origin
    for (std::size_t i = 0; i < count / 2; ++i) nodes_[count - 1 - i] = -nodes_[i];
    if (count % 2 == 1) nodes_[count / 2] = 0.0;
    weights_.front() = weights_.back() = 0.5 * h;
  }

  /// Arbitrary rule. Weights must be strictly positive; an empty rule is
  /// representable but cannot be integrated over.
  QuadratureGrid(std::vector<double> nodes, std::vector<double> weights)
      : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.size() != weights_.size())
      throw domain_error("quadrature nodes and weights differ in length");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!std::isfinite(nodes_[i])) throw domain_error("non-finite quadrature node");
      if (!(weights_[i] > 0.0)) throw domain_error("quadrature weights must be positive");
      half_width_ = std::max(half_width_, std::abs(nodes_[i]));
    }
  }

  static QuadratureGrid standard() { return {default_count, default_half_width}; }

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  double half_width() const noexcept { return half_width_; }

  /// Largest gap between neighbouring nodes.
  double spacing() const noexcept {
    double h = 0.0;
    for (std::size_t i = 1; i < nodes_.size(); ++i) h = std::max(h, nodes_[i] - nodes_[i - 1]);
    return h;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double half_width_ = 0.0;
};

/// sum_i w_i f(x_i)
template <std::invocable<double> F>
double integrate_1d(F&& f, const QuadratureGrid& grid) {
  if (grid.empty()) throw domain_error("cannot integrate over an empty grid");
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) sum += grid.weight(i) * f(grid.node(i));
  return sum;
}

/// sum_ij w_i w_j f(x_i, x_j) over the tensor-product grid.
template <std::invocable<double, double> F>
double integrate_2d(F&& f, const QuadratureGrid& grid) {
  if (grid.empty()) throw domain_error("cannot integrate over an empty grid");
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) row += grid.weight(j) * f(grid.node(i), grid.node(j));
    sum += grid.weight(i) * row;
  }
  return sum;
}

/// Rejects grids on which a centred Gaussian with the given marginal standard
/// deviations would be truncated (major width > L/4) or under-sampled (minor
/// width below the node spacing).
inline void require_resolved(const QuadratureGrid& grid, double major_sigma, double minor_sigma,
                             const std::string& what) {
  if (major_sigma > grid.half_width() / 4.0)
    throw grid_resolution_error(what + ": Gaussian width " + std::to_string(major_sigma) +
                                " exceeds grid extent/4 = " + std::to_string(grid.half_width() / 4.0));
  if (minor_sigma < grid.spacing())
    throw grid_resolution_error(what + ": Gaussian width " + std::to_string(minor_sigma) +
                                " is below the grid spacing " + std::to_string(grid.spacing()));
}

}  // namespace squeeze
