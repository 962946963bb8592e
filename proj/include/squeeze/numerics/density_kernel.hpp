#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <vector>

#include "squeeze/errors.hpp"
#include "squeeze/format.hpp"
#include "squeeze/numerics/hermite.hpp"
#include "squeeze/numerics/quadrature.hpp"
#include "squeeze/oscillator.hpp"

namespace squeeze {

/// A real symmetric kernel rho(x, x') tabulated on the nodes of a grid.
class DensityKernel {
 public:
  DensityKernel(QuadratureGrid grid, std::vector<double> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size() * grid_.size())
      throw domain_error("kernel table does not match grid size");
  }

  const QuadratureGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return grid_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * grid_.size() + j]; }

  /// int rho(x, x) dx
  double trace() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < size(); ++i) sum += grid_.weight(i) * (*this)(i, i);
    return sum;
  }

  /// Tr rho^2 = int int rho(x, x') rho(x', x) dx dx'
  double purity() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        sum += grid_.weight(i) * grid_.weight(j) * (*this)(i, j) * (*this)(j, i);
    return sum;
  }

  double max_asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
  }

  /// <phi_k | rho | phi_k>, the k-th diagonal element in the oscillator basis.
  double fock_projection(std::size_t k) const {
    std::vector<double> wphi(size());
    for (std::size_t i = 0; i < size(); ++i)
      wphi[i] = grid_.weight(i) * hermite_fn(k, grid_.node(i));
    double sum = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < size(); ++j) row += (*this)(i, j) * wphi[j];
      sum += wphi[i] * row;
    }
    return sum;
  }

  /// (x, x', value) triples, one per line, with a header row.
  void write_csv(std::ostream& out) const;

 private:
  QuadratureGrid grid_;
  std::vector<double> values_;
};

inline void DensityKernel::write_csv(std::ostream& out) const {
  out << "x,x_prime,value\n";
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) write_csv_row(out, {grid_.node(i), grid_.node(j), (*this)(i, j)});
}

inline constexpr double max_oracle_eta = 6.0;

/// Reduced density matrix of the first oscillator obtained by tracing out the
/// second one by direct quadrature,
///   rho(x1, x1') = int psi_eta(x1, x2) psi_eta(x1', x2) dx2,
/// with no use of the Fock-space series. The table is filled on and above the
/// diagonal and mirrored, so it is exactly symmetric.
inline DensityKernel oracle_reduced_density(double eta, const QuadratureGrid& grid) {
  if (!std::isfinite(eta) || std::abs(eta) > max_oracle_eta)
    throw grid_resolution_error("reduced-density oracle supports |eta| <= 6 only");
  if (grid.empty()) throw domain_error("cannot trace over an empty grid");

  const std::size_t n = grid.size();
  // psi[i * n + k] = sqrt(w_k) psi(x_i, x_k)
  std::vector<double> psi(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      psi[i * n + k] = std::sqrt(grid.weight(k)) * ground_state(OscCoords{grid.node(i), grid.node(k)}, eta);

  std::vector<double> rho(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* a = &psi[i * n];
    for (std::size_t j = i; j < n; ++j) {
      const double* b = &psi[j * n];
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += a[k] * b[k];
      rho[i * n + j] = sum;
      rho[j * n + i] = sum;
    }
  }
  return DensityKernel(grid, std::move(rho));
}

/// Pure-state density matrix of the two-oscillator system,
///   rho(a; b) = psi_eta(a) psi_eta(b).
inline double pure_state_density(OscCoords a, OscCoords b, double eta) {
  return ground_state(a, eta) * ground_state(b, eta);
}

/// |int rho(a; c) rho(c; b) dc - rho(a; b)| for a single point pair, with the
/// integral over c = (x1'', x2'') evaluated on the tensor-product grid.
inline double idempotency_deviation(OscCoords a, OscCoords b, double eta, const QuadratureGrid& grid) {
  const double composed = integrate_2d(
      [&](double c1, double c2) {
        const OscCoords c{c1, c2};
        return pure_state_density(a, c, eta) * pure_state_density(c, b, eta);
      },
      grid);
  return std::abs(composed - pure_state_density(a, b, eta));
}

}  // namespace squeeze
