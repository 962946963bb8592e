// As eta grows the longitudinal spread of z and q_z widen together, while
// the space-time density piles up near the light cone.
#include <cstdio>

#include "squeeze/squeeze.hpp"

int main() {
  const auto grid = squeeze::QuadratureGrid::standard();
  std::printf("%6s %10s %10s %10s %12s\n", "eta", "width", "var_z", "var_qz", "|v|<0.25");
  for (double eta : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0}) {
    double var_z = 0.0;
    double var_q = 0.0;
    try {
      var_z = squeeze::longitudinal_density(eta, squeeze::Longitudinal::z, grid).variance;
      var_q = squeeze::longitudinal_density(eta, squeeze::Longitudinal::qz, grid).variance;
    } catch (const squeeze::grid_resolution_error&) {
      std::printf("%6.2f %10.6f %10s %10s %12.6f\n", eta, squeeze::width(eta), "-", "-",
                  squeeze::light_cone_concentration(eta, 0.25));
      continue;
    }
    std::printf("%6.2f %10.6f %10.6f %10.6f %12.6f\n", eta, squeeze::width(eta), var_z, var_q,
                squeeze::light_cone_concentration(eta, 0.25));
  }

  std::printf("\nq_z density at eta=3:\n");
  for (const auto& s : squeeze::gaussian_pdf(3.0, 9)) std::printf("  %9.4f  %.6f\n", s.coordinate, s.density);
}
