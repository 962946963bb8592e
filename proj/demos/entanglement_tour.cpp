// Walks eta from 0 to 3 and prints how the reduced state of one oscillator
// degrades: purity, entropy, and the equivalent temperature.
#include <cstdio>

#include "squeeze/squeeze.hpp"

int main() {
  const squeeze::CoupledParams params{1.0, 5.0, -3.0};
  const auto modes = squeeze::normal_modes(params);
  std::printf("m=1 A=5 C=-3: eta=%.6f omega=%.6f\n\n", modes.eta, modes.omega);

  std::printf("%6s %10s %10s %10s %10s\n", "eta", "purity", "entropy", "x", "T");
  for (int i = 0; i <= 12; ++i) {
    const double eta = 0.25 * i;
    const auto r = squeeze::reduced_state(eta, 64);
    const auto t = squeeze::effective_temperature(eta, 1.0);
    if (t.zero_temperature)
      std::printf("%6.2f %10.6f %10.6f %10s %10.6f\n", eta, r.purity, r.entropy, "inf", t.T);
    else
      std::printf("%6.2f %10.6f %10.6f %10.6f %10.6f\n", eta, r.purity, r.entropy, t.x, t.T);
  }

  // leading Schmidt weights at eta = 1
  const auto c = squeeze::schmidt_coefficients(1.0, 5);
  std::printf("\nSchmidt coefficients at eta=1:");
  for (double v : c.coeffs) std::printf(" %.6f", v);
  std::printf("  (tail %.2e)\n", c.tail());
}
