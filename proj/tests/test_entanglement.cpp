#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "squeeze/entanglement.hpp"
#include "squeeze/numerics/hermite.hpp"
#include "squeeze/numerics/quadrature.hpp"

namespace {

using squeeze::OscCoords;

// mpmath, 40 digits
constexpr double kEntropy[][2] = {
    {0.25, 0.081069199489250271801},
    {0.5, 0.24140753076275856286},
    {1.0, 0.65945295916803670172},
    {2.0, 1.6198220928977022644},
};

TEST(SchmidtCoefficients, Disentangled) {
  const auto c = squeeze::schmidt_coefficients(0.0, 5);
  ASSERT_EQ(c.coeffs.size(), 6u);
  EXPECT_EQ(c.coeffs[0], 1.0);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(c.coeffs[k], 0.0);
  EXPECT_EQ(c.tail(), 0.0);
}

TEST(SchmidtCoefficients, EtaOne) {
  const auto c = squeeze::schmidt_coefficients(1.0, 1);
  EXPECT_NEAR(c.coeffs[0], 0.88681888397007390866, 1e-15);
  EXPECT_NEAR(c.coeffs[1], 0.40981422166474499161, 1e-15);
}

TEST(SchmidtCoefficients, QuadratureProjectionOracle) {
  // c_k = int int psi_eta(x1, x2) phi_k(x1) phi_k(x2)
  const squeeze::QuadratureGrid g = squeeze::QuadratureGrid::standard();
  const auto c = squeeze::schmidt_coefficients(1.0, 4);
  for (std::size_t k = 0; k <= 4; ++k) {
    const double projected = squeeze::integrate_2d(
        [k](double a, double b) {
          return squeeze::ground_state(OscCoords{a, b}, 1.0) * squeeze::hermite_fn(k, a) * squeeze::hermite_fn(k, b);
        },
        g);
    EXPECT_NEAR(projected, c.coeffs[k], 1e-10) << k;
  }
}

TEST(SchmidtCoefficients, NegativeEtaAlternates) {
  const auto plus = squeeze::schmidt_coefficients(1.0, 8);
  const auto minus = squeeze::schmidt_coefficients(-1.0, 8);
  for (std::size_t k = 0; k <= 8; ++k)
    EXPECT_NEAR(minus.coeffs[k], (k % 2 == 0 ? 1.0 : -1.0) * plus.coeffs[k], 1e-16);
  EXPECT_NEAR(minus.coeffs[3], std::pow(-std::tanh(0.5), 3) / std::cosh(0.5), 1e-16);
}

TEST(SchmidtCoefficients, SquaresSumToOneMinusTail) {
  for (double eta : {0.3, 1.0, 2.5})
    for (std::size_t k_max : {0u, 5u, 40u}) {
      const auto c = squeeze::schmidt_coefficients(eta, k_max);
      double sum = 0.0;
      for (double v : c.coeffs) sum += v * v;
      EXPECT_NEAR(sum + c.tail(), 1.0, 1e-14);
    }
}

TEST(SchmidtCoefficients, ReconstructionWithinTailBelowEta2) {
  for (double eta : {0.5, 1.0, 1.5}) {
    const auto c = squeeze::schmidt_coefficients(eta, 40);
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j) {
        const OscCoords p{-3.0 + 6.0 * i / 14.0, -3.0 + 6.0 * j / 14.0};
        EXPECT_NEAR(c.reconstruct(p), squeeze::ground_state(p, eta), 1e-6);
      }
  }
}

TEST(SchmidtCoefficients, ReconstructionTailAtOriginForEta2) {
  // Only even orders contribute at the origin and every term is positive, so
  // the k_max = 40 error there equals the analytic tail 1.1148e-6 (mpmath).
  const auto c = squeeze::schmidt_coefficients(2.0, 40);
  const double error = squeeze::ground_state(OscCoords{0.0, 0.0}, 2.0) - c.reconstruct({0.0, 0.0});
  EXPECT_NEAR(error, 1.11480175214391949e-06, 1e-9);
  // raising the order brings it below 1e-6
  EXPECT_LT(squeeze::ground_state(OscCoords{0.0, 0.0}, 2.0) - squeeze::schmidt_coefficients(2.0, 44).reconstruct({0.0, 0.0}),
            1e-6);
}

TEST(ReducedState, Disentangled) {
  const auto r = squeeze::reduced_state(0.0, 10);
  EXPECT_EQ(r.eigenvalues[0], 1.0);
  for (std::size_t k = 1; k <= 10; ++k) EXPECT_EQ(r.eigenvalues[k], 0.0);
  EXPECT_EQ(r.purity, 1.0);
  EXPECT_EQ(r.entropy, 0.0);
}

TEST(ReducedState, EtaOneEigenvalues) {
  const auto r = squeeze::reduced_state(1.0, 64);
  EXPECT_NEAR(r.eigenvalues[0], 0.78644773296592741015, 1e-15);
  EXPECT_NEAR(r.eigenvalues[1], 0.16794769627868074324, 1e-15);
  EXPECT_EQ(r.eigenvalues.size(), 65u);
}

TEST(ReducedState, StrictlyDecreasing) {
  for (double eta : {-2.0, 0.1, 1.0, 3.0}) {
    const auto p = squeeze::reduced_eigenvalues(eta, 50);
    for (std::size_t k = 1; k < p.size(); ++k) EXPECT_LT(p[k], p[k - 1]);
  }
}

TEST(ReducedState, TruncatedSumAndTail) {
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    const auto r = squeeze::reduced_state(eta, 64);
    double sum = 0.0;
    for (double p : r.eigenvalues) sum += p;
    EXPECT_NEAR(sum, 1.0, 1e-12) << eta;
    EXPECT_NEAR(sum + r.tail, 1.0, 1e-14) << eta;
  }
}

TEST(Purity, ClosedForm) {
  EXPECT_EQ(squeeze::purity(0.0), 1.0);
  EXPECT_NEAR(squeeze::purity(1.0), 0.64805427366388539957, 1e-15);
  EXPECT_EQ(squeeze::purity(-1.0), squeeze::purity(1.0));
}

TEST(Purity, SeriesAgreesWithClosedForm) {
  for (int i = 0; i <= 30; ++i) {
    const double eta = 0.1 * i;
    EXPECT_NEAR(squeeze::purity_series(eta, 64), squeeze::purity(eta), 1e-10) << eta;
  }
}

TEST(Entropy, ClosedFormValues) {
  EXPECT_EQ(squeeze::entropy(0.0), 0.0);
  for (const auto& [eta, value] : kEntropy) {
    EXPECT_NEAR(squeeze::entropy(eta), value, 1e-13) << eta;
    EXPECT_NEAR(squeeze::entropy(-eta), value, 1e-13) << eta;
  }
  EXPECT_NEAR(squeeze::entropy(1.0), 0.65948, 1e-4);
}

TEST(Entropy, EigenvalueSumAgrees) {
  for (double eta : {0.25, 0.5, 1.0, 2.0})
    EXPECT_NEAR(squeeze::entropy_series(eta, 128), squeeze::entropy(eta), 1e-9) << eta;
  EXPECT_EQ(squeeze::entropy_series(0.0, 128), 0.0);
}

TEST(Entropy, MonotoneInMagnitude) {
  double prev_s = -1.0;
  double prev_p = 2.0;
  for (int i = 0; i <= 60; ++i) {
    const double eta = 0.1 * i;
    EXPECT_GT(squeeze::entropy(eta), prev_s);
    EXPECT_LT(squeeze::purity(eta), prev_p);
    EXPECT_EQ(squeeze::entropy(-eta), squeeze::entropy(eta));
    prev_s = squeeze::entropy(eta);
    prev_p = squeeze::purity(eta);
  }
}

TEST(EffectiveTemperature, EtaOne) {
  const auto t = squeeze::effective_temperature(1.0, 1.0);
  EXPECT_FALSE(t.zero_temperature);
  EXPECT_NEAR(t.x, 1.5438736658106094501, 1e-14);
  EXPECT_NEAR(t.T, 0.64772139207060761577, 1e-14);
  EXPECT_NEAR(t.x, 1.543882, 1e-4);
  EXPECT_NEAR(t.T, 0.64772, 1e-5);
}

TEST(EffectiveTemperature, BoltzmannWeightsMatchEigenvalueRatios) {
  for (double eta : {0.3, 1.0, 2.0}) {
    const auto t = squeeze::effective_temperature(eta, 1.0);
    const auto p = squeeze::reduced_eigenvalues(eta, 5);
    for (std::size_t k = 1; k <= 5; ++k) EXPECT_NEAR(p[k] / p[0], std::exp(-static_cast<double>(k) * t.x), 1e-13);
  }
}

TEST(EffectiveTemperature, ScalesWithOmega) {
  const auto a = squeeze::effective_temperature(0.8, 1.0);
  const auto b = squeeze::effective_temperature(0.8, 2.5);
  EXPECT_DOUBLE_EQ(a.x, b.x);
  EXPECT_NEAR(b.T, 2.5 * a.T, 1e-14);
}

TEST(EffectiveTemperature, ZeroCouplingIsZeroTemperature) {
  const auto t = squeeze::effective_temperature(0.0, 1.0);
  EXPECT_TRUE(t.zero_temperature);
  EXPECT_TRUE(std::isinf(t.x));
  EXPECT_EQ(t.T, 0.0);
  const auto tiny = squeeze::effective_temperature(1e-8, 1.0);
  EXPECT_GT(tiny.x, 30.0);
  EXPECT_LT(tiny.T, 0.03);
}

TEST(EffectiveTemperature, StrongCouplingIsHot) {
  const auto t = squeeze::effective_temperature(40.0, 1.0);
  EXPECT_GT(t.x, 0.0);
  EXPECT_LT(t.x, 1e-15);
  EXPECT_GT(t.T, 1e15);
}

TEST(EffectiveTemperature, Errors) {
  EXPECT_THROW(squeeze::effective_temperature(1.0, 0.0), squeeze::domain_error);
  EXPECT_THROW(squeeze::effective_temperature(1.0, -1.0), squeeze::domain_error);
  EXPECT_THROW(squeeze::effective_temperature(NAN, 1.0), squeeze::domain_error);
}

TEST(ThermalEntropy, Values) {
  EXPECT_NEAR(squeeze::thermal_entropy(1.0), 1.0406518522564083154, 1e-14);
  EXPECT_NEAR(squeeze::thermal_entropy(1.0), 1.04062, 1e-4);
  EXPECT_NEAR(squeeze::thermal_entropy(1.543882), 0.65944, 1e-4);
  EXPECT_LT(squeeze::thermal_entropy(60.0), 1e-24);
  EXPECT_EQ(squeeze::thermal_entropy(std::numeric_limits<double>::infinity()), 0.0);
}

TEST(ThermalEntropy, RejectsNonPositive) {
  EXPECT_THROW(squeeze::thermal_entropy(0.0), squeeze::domain_error);
  EXPECT_THROW(squeeze::thermal_entropy(-1.0), squeeze::domain_error);
  EXPECT_THROW(squeeze::thermal_entropy(NAN), squeeze::domain_error);
}

TEST(ThermalEntropy, EqualsVonNeumannEntropyUnderSquaredMap) {
  for (double eta : {0.5, 1.0, 2.0, -1.0})
    EXPECT_NEAR(squeeze::thermal_entropy(squeeze::effective_temperature(eta, 1.0).x), squeeze::entropy(eta), 1e-9);
}

TEST(ThermalEntropy, UnsquaredMapDoesNotReproduceEntropy) {
  // tanh(eta/2) = e^{-x} gives x twice as large and a visibly smaller entropy
  const double x_unsquared = -std::log(std::tanh(0.5));
  EXPECT_GT(std::abs(squeeze::thermal_entropy(x_unsquared) - squeeze::entropy(1.0)), 0.1);
}

}  // namespace
