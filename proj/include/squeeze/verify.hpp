#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "squeeze/covariant.hpp"
#include "squeeze/entanglement.hpp"
#include "squeeze/numerics/density_kernel.hpp"
#include "squeeze/numerics/hermite.hpp"
#include "squeeze/numerics/quadrature.hpp"
#include "squeeze/oscillator.hpp"
#include "squeeze/parton.hpp"

namespace squeeze {

struct CheckResult {
  std::string name;
  bool passed = false;
  double deviation = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace detail {

// deviation must be strictly below tolerance
inline CheckResult below(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation < tolerance, deviation, tolerance};
}

inline double orthonormality_defect(std::size_t k_max, const QuadratureGrid& grid) {
  std::vector<std::vector<double>> table;
  table.reserve(grid.size());
  for (double x : grid.nodes()) table.push_back(hermite_fn_table(k_max, x));
  double worst = 0.0;
  for (std::size_t j = 0; j <= k_max; ++j)
    for (std::size_t k = j; k <= k_max; ++k) {
      double g = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) g += grid.weight(i) * table[i][j] * table[i][k];
      worst = std::max(worst, std::abs(g - (j == k ? 1.0 : 0.0)));
    }
  return worst;
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

inline void numerics_checks(std::vector<CheckResult>& out) {
  const QuadratureGrid grid = QuadratureGrid::standard();

  out.push_back(below("numerics.gaussian_integral",
                      std::abs(integrate_1d([](double x) { return std::exp(-x * x); }, grid) - std::sqrt(std::numbers::pi)),
                      1e-10));
  out.push_back(below("numerics.orthonormality_default_grid_k16", orthonormality_defect(16, grid), 1e-8));
  // phi_40 turns at x = 9, beyond the default extent; same spacing, wider box
  out.push_back(below("numerics.orthonormality_k40_grid_601x12", orthonormality_defect(40, QuadratureGrid(601, 12.0)), 1e-8));

  out.push_back(below("numerics.oracle_kernel_symmetry", oracle_reduced_density(1.0, grid).max_asymmetry(), 1e-12));

  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (double eta : {0.0, 1.0}) {
    double worst = 0.0;
    for (int n = 0; n < 10; ++n) {
      const OscCoords a{coord(rng), coord(rng)};
      const OscCoords b{coord(rng), coord(rng)};
      worst = std::max(worst, idempotency_deviation(a, b, eta, grid));
    }
    out.push_back(below("numerics.pure_state_idempotency_eta" + format_number(eta), worst, 1e-6));
  }
}

inline void oscillator_checks(std::vector<CheckResult>& out) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> stiff(0.1, 10.0);
  std::uniform_real_distribution<double> frac(-0.99, 0.99);

  double worst_form = 0.0;
  double worst_sign = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double a = stiff(rng);
    const CoupledParams params{stiff(rng), a, frac(rng) * a};
    const OscCoords x{coord(rng), coord(rng)};
    const OscMomenta p{coord(rng), coord(rng)};
    const double direct = hamiltonian_energy(x, p, params);
    const double normal = hamiltonian_energy(to_normal(x), rotate_momenta(p), params);
    worst_form = std::max(worst_form, std::abs(direct - normal) / std::max(std::abs(direct), 1e-300));

    const NormalModeData m = normal_modes(params);
    const NormalModeData f = normal_modes({params.mass, params.stiffness, -params.coupling});
    worst_sign = std::max({worst_sign, std::abs(m.eta + f.eta), std::abs(m.omega_plus - f.omega_minus) / m.omega,
                           std::abs(m.omega_minus - f.omega_plus) / m.omega});
  }
  out.push_back(below("oscillator.hamiltonian_form_equivalence", worst_form, 1e-12));
  out.push_back(below("oscillator.eta_sign_symmetry", worst_sign, 1e-12));

  // positive, bounded by pi^{-1/2}, maximal at the origin
  double violation = 0.0;
  for (double eta : {-2.0, -0.5, 0.0, 1.0, 3.0})
    for (double x1 : linspace(-4.0, 4.0, 21))
      for (double x2 : linspace(-4.0, 4.0, 21)) {
        const double v = ground_state(OscCoords{x1, x2}, eta);
        if (!(v > 0.0)) violation = std::max(violation, 1.0);
        violation = std::max(violation, v - ground_state(OscCoords{0.0, 0.0}, eta));
        violation = std::max(violation, v - std::numbers::inv_sqrtpi);
      }
  out.push_back({"oscillator.ground_state_positive_bounded", violation <= 0.0, violation, 0.0});

  double worst_sep = 0.0;
  for (double x1 : linspace(-4.0, 4.0, 20))
    for (double x2 : linspace(-4.0, 4.0, 20))
      worst_sep = std::max(worst_sep, std::abs(ground_state(OscCoords{x1, x2}, 0.0) - hermite_fn(0, x1) * hermite_fn(0, x2)));
  out.push_back(below("oscillator.separability_eta0", worst_sep, 1e-12));
}

inline void entanglement_checks(std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (double eta : linspace(0.0, 3.0, 31)) worst = std::max(worst, std::abs(purity(eta) - purity_series(eta, 64)));
  out.push_back(below("entanglement.purity_series_equivalence", worst, 1e-10));

  worst = 0.0;
  for (double eta : {0.25, 0.5, 1.0, 2.0}) worst = std::max(worst, std::abs(entropy(eta) - entropy_series(eta, 128)));
  out.push_back(below("entanglement.entropy_eigenvalue_equivalence", worst, 1e-9));

  const QuadratureGrid grid = QuadratureGrid::standard();
  for (double eta : {0.5, 1.0}) {
    const DensityKernel rho = oracle_reduced_density(eta, grid);
    const std::vector<double> p = reduced_eigenvalues(eta, 10);
    double dev = 0.0;
    for (std::size_t k = 0; k <= 10; ++k) dev = std::max(dev, std::abs(rho.fock_projection(k) - p[k]));
    out.push_back(below("entanglement.oracle_fock_projection_eta" + format_number(eta), dev, 1e-6));
  }

  for (double eta : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const FockExpansion c = schmidt_coefficients(eta, 40);
    double dev = 0.0;
    for (double x1 : linspace(-3.0, 3.0, 15))
      for (double x2 : linspace(-3.0, 3.0, 15))
        dev = std::max(dev, std::abs(ground_state(OscCoords{x1, x2}, eta) - c.reconstruct({x1, x2})));
    out.push_back(below("entanglement.schmidt_reconstruction_k40_eta" + format_number(eta), dev, 1e-6));
  }

  bool monotone = true;
  const std::vector<double> etas = linspace(0.0, 4.0, 41);
  for (std::size_t i = 1; i < etas.size(); ++i) {
    monotone = monotone && entropy(etas[i]) > entropy(etas[i - 1]) && entropy(-etas[i]) > entropy(-etas[i - 1]);
    monotone = monotone && purity(etas[i]) < purity(etas[i - 1]) && purity(-etas[i]) < purity(-etas[i - 1]);
  }
  out.push_back({"entanglement.monotonicity", monotone, monotone ? 0.0 : 1.0, 0.0});

  worst = 0.0;
  for (double eta : {0.5, 1.0, 2.0})
    worst = std::max(worst, std::abs(thermal_entropy(effective_temperature(eta, 1.0).x) - entropy(eta)));
  out.push_back(below("entanglement.thermal_entropy_consistency", worst, 1e-9));
}

inline void covariant_checks(std::vector<CheckResult>& out) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> rapidity(-3.0, 3.0);

  double composition = 0.0;
  double invariance = 0.0;
  double det = 0.0;
  double covariance = 0.0;
  double reciprocity = 0.0;
  double routes = 0.0;
  for (int n = 0; n < 100; ++n) {
    const SpacetimePoint p{coord(rng), coord(rng)};
    const double e1 = rapidity(rng);
    const double e2 = rapidity(rng);
    const SpacetimePoint twice = boost_point(boost_point(p, e1), e2);
    const SpacetimePoint once = boost_point(p, e1 + e2);
    composition = std::max({composition, std::abs(twice.z - once.z), std::abs(twice.t - once.t)});
    const SpacetimePoint b = boost_point(p, e1);
    invariance = std::max(invariance, std::abs((b.z * b.z - b.t * b.t) - (p.z * p.z - p.t * p.t)));
    det = std::max(det, std::abs(BoostMatrix(e1).determinant() - 1.0));
    const SpacetimePoint lc = boost_light_cone(p, e1);
    routes = std::max({routes, std::abs(lc.z - b.z), std::abs(lc.t - b.t)});
    covariance = std::max(covariance, std::abs(boosted_wavefunction(p, e1) - boosted_wavefunction(boost_point(p, -e1), 0.0)));
    reciprocity = std::max(reciprocity, std::abs(boosted_wavefunction(p, e1) - boosted_wavefunction({p.z, -p.t}, -e1)));
  }
  out.push_back(below("covariant.boost_composition", composition, 1e-12));
  out.push_back(below("covariant.interval_invariance", invariance, 1e-12));
  out.push_back(below("covariant.boost_determinant", det, 1e-12));
  out.push_back(below("covariant.matrix_light_cone_agreement", routes, 1e-12));
  out.push_back(below("covariant.covariance_identity", covariance, 1e-12));
  out.push_back(below("covariant.squeeze_reciprocity", reciprocity, 1e-12));

  double bridge = 0.0;
  for (double z : linspace(-3.0, 3.0, 20))
    for (double t : linspace(-3.0, 3.0, 20))
      bridge = std::max(bridge, std::abs(boosted_wavefunction({z, t}, 1.0) - ground_state(OscCoords{z, t}, 1.0)));
  out.push_back(below("covariant.oscillator_identity", bridge, 1e-14));

  const QuadratureGrid grid = QuadratureGrid::standard();
  for (double eta : {0.0, 1.0, -1.0})
    out.push_back(below("covariant.fourier_consistency_eta" + format_number(eta), fourier_consistency(eta, grid), 1e-6));

  double lambda = 0.0;
  for (double eta : {0.0, 1.0, -2.0})
    for (double z : linspace(-1.5, 1.5, 7))
      for (double t : linspace(-1.5, 1.5, 7)) lambda = std::max(lambda, std::abs(oscillator_equation_eigenvalue({z, t}, eta)));
  out.push_back(below("covariant.oscillator_equation_eigenvalue_zero", lambda, 1e-4));
}

inline void parton_checks(std::vector<CheckResult>& out) {
  const QuadratureGrid grid = QuadratureGrid::standard();
  for (Longitudinal var : {Longitudinal::z, Longitudinal::qz}) {
    double worst = 0.0;
    for (double eta : {0.0, 0.5, 1.0, 2.0})
      worst = std::max(worst, std::abs(longitudinal_density(eta, var, grid).variance - std::cosh(eta) / 2.0));
    out.push_back(below(std::string("parton.variance_law_") + std::string(to_string(var)), worst, 1e-6));
  }

  const double fraction = light_cone_concentration(4.0, 0.25);
  out.push_back({"parton.light_cone_concentration_eta4", fraction > 0.95, fraction, 0.95});

  // width product tracks cosh(eta)/2 and is therefore not constant
  double worst = 0.0;
  for (double eta : {0.0, 1.0, 2.0}) {
    const double product = std::sqrt(longitudinal_density(eta, Longitudinal::z, grid).variance *
                                     longitudinal_density(eta, Longitudinal::qz, grid).variance);
    worst = std::max(worst, std::abs(product - std::cosh(eta) / 2.0));
  }
  out.push_back(below("parton.width_product_grows_as_cosh", worst, 1e-6));

  OverlaySeries series{"synthetic", {}, {}};
  for (int i = 0; i < 25; ++i) series.points.emplace_back(-3.0 + 0.25 * i, std::exp(-0.1 * i * i) / 3.0);
  std::ostringstream first;
  write_overlay(series, first);
  std::istringstream in(first.str());
  std::ostringstream second;
  write_overlay(parse_overlay(in), second);
  const bool same = first.str() == second.str();
  out.push_back({"parton.overlay_round_trip", same, same ? 0.0 : 1.0, 0.0});
}

}  // namespace detail

/// Runs every module invariant and returns one named result per check.
inline VerifyReport run_verify() {
  VerifyReport report;
  detail::numerics_checks(report.checks);
  detail::oscillator_checks(report.checks);
  detail::entanglement_checks(report.checks);
  detail::covariant_checks(report.checks);
  detail::parton_checks(report.checks);
  return report;
}

}  // namespace squeeze
