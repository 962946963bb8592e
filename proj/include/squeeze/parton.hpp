#pragma once

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squeeze/covariant.hpp"
#include "squeeze/errors.hpp"
#include "squeeze/format.hpp"
#include "squeeze/numerics/quadrature.hpp"

namespace squeeze {

enum class Longitudinal { z, qz };

inline std::string_view to_string(Longitudinal v) { return v == Longitudinal::z ? "z" : "qz"; }

inline Longitudinal parse_longitudinal(std::string_view s) {
  if (s == "z") return Longitudinal::z;
  if (s == "qz") return Longitudinal::qz;
  throw domain_error("longitudinal variable must be 'z' or 'qz'");
}

struct MarginalSample {
  double coordinate = 0.0;
  double density = 0.0;
};

/// Probability density of the longitudinal variable with the conjugate axis
/// (t or q0) integrated out.
struct MarginalDistribution {
  Longitudinal variable = Longitudinal::z;
  double eta = 0.0;
  std::vector<MarginalSample> samples;
  std::vector<double> weights;  // quadrature weights of the sample abscissas
  double mean = 0.0;
  double variance = 0.0;

  double area() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) sum += weights[i] * samples[i].density;
    return sum;
  }
};

/// sqrt(cosh(eta)/2), the standard deviation of either longitudinal marginal.
/// Both grow with |eta|: the squeeze widens the position and the momentum
/// distributions together.
inline double width(double eta) {
  detail::require_finite(eta, "eta");
  return std::sqrt(std::cosh(eta) / 2.0);
}

/// Narrowest standard deviation of |psi_eta|^2, along the contracted light-cone axis.
inline double density_minor_width(double eta) { return std::exp(-std::abs(eta) / 2.0) / std::numbers::sqrt2; }

/// Integrates |psi_eta(z,t)|^2 over t (or |phi_eta(qz,q0)|^2 over q0) on the
/// tensor-product grid, normalizes to unit area and takes the moments of the
/// result. Nothing here uses the analytic variance.
inline MarginalDistribution longitudinal_density(double eta, Longitudinal variable, const QuadratureGrid& grid) {
  detail::require_finite(eta, "eta");
  require_resolved(grid, width(eta), density_minor_width(eta), "longitudinal_density");

  MarginalDistribution out;
  out.variable = variable;
  out.eta = eta;
  out.samples.reserve(grid.size());
  out.weights.assign(grid.weights().begin(), grid.weights().end());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = grid.node(i);
    const double d = integrate_1d(
        [&](double b) {
          const double amp =
              variable == Longitudinal::z ? boosted_wavefunction({a, b}, eta) : momentum_wavefunction({a, b}, eta);
          return amp * amp;
        },
        grid);
    out.samples.push_back({a, d});
  }

  const double total = out.area();
  for (auto& s : out.samples) s.density /= total;
  double m1 = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) m1 += out.weights[i] * out.samples[i].coordinate * out.samples[i].density;
  double m2 = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double dx = out.samples[i].coordinate - m1;
    m2 += out.weights[i] * dx * dx * out.samples[i].density;
  }
  out.mean = m1;
  out.variance = m2;
  return out;
}

/// Fraction of the |psi_eta|^2 probability lying in the band |v| < band
/// around the u light-cone axis.
///
/// Integrates directly in light-cone coordinates (dz dt = du dv) with
/// trapezoid grids sized to the squeezed widths: one spanning the band, one
/// for the full v range, and a shared one for u.
inline double light_cone_concentration(double eta, double band, std::size_t count = 2001) {
  detail::require_finite(eta, "eta");
  if (!(band > 0.0) || !std::isfinite(band)) throw domain_error("band half-width must be positive");
  const double su = std::exp(eta / 2.0) / std::numbers::sqrt2;
  const double sv = std::exp(-eta / 2.0) / std::numbers::sqrt2;
  const QuadratureGrid u_grid(count, 10.0 * su);
  const QuadratureGrid inside(count, band);
  const QuadratureGrid full(count, std::max(10.0 * sv, band));

  const auto mass = [&](const QuadratureGrid& v_grid) {
    return integrate_1d(
        [&](double u) {
          return integrate_1d(
              [&](double v) {
                const double amp = boosted_wavefunction(SpacetimePoint::from_light_cone(u, v), eta);
                return amp * amp;
              },
              v_grid);
        },
        u_grid);
  };
  return mass(inside) / mass(full);
}

/// Cosmetic affine map coordinate -> shift + scale * coordinate for lining
/// the model curve up with overlay data. Densities are divided by |scale| so
/// the curve keeps unit area. This is not a physical change of variables.
struct AffineRescale {
  double shift = 0.0;
  double scale = 1.0;
};

/// Longitudinal momentum marginal at n equally spaced points spanning six
/// standard deviations on each side. Each density is a q0 quadrature of
/// |phi_eta|^2 on a grid sized to the conditional width 1/sqrt(2 cosh eta),
/// so large eta stays resolved.
inline std::vector<MarginalSample> gaussian_pdf(double eta, std::size_t n, Longitudinal variable = Longitudinal::qz,
                                                std::optional<AffineRescale> rescale = std::nullopt) {
  detail::require_finite(eta, "eta");
  if (n < 2) throw domain_error("a parton distribution export needs n >= 2 points");
  if (rescale && (!(rescale->scale != 0.0) || !std::isfinite(rescale->scale) || !std::isfinite(rescale->shift)))
    throw domain_error("rescale needs a finite shift and a finite non-zero scale");

  const double sigma = width(eta);
  const double extent = 6.0 * sigma;
  const double conditional = 1.0 / std::sqrt(2.0 * std::cosh(eta));
  // the conditional peak sits at q0 = qz tanh(eta)
  const double q0_extent = extent * std::abs(std::tanh(eta)) + 12.0 * conditional;
  const auto q0_count = static_cast<std::size_t>(std::ceil(2.0 * q0_extent / (conditional / 4.0))) + 1;
  const QuadratureGrid q0_grid(q0_count, q0_extent);

  std::vector<MarginalSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double c = -extent + 2.0 * extent * static_cast<double>(i) / static_cast<double>(n - 1);
    if (2 * i + 1 == n) c = 0.0;
    const double d = integrate_1d(
        [&](double b) {
          const double amp =
              variable == Longitudinal::z ? boosted_wavefunction({c, b}, eta) : momentum_wavefunction({c, b}, eta);
          return amp * amp;
        },
        q0_grid);
    out.push_back({c, d});
  }
  if (rescale) {
    for (auto& s : out) {
      s.coordinate = rescale->shift + rescale->scale * s.coordinate;
      s.density /= std::abs(rescale->scale);
    }
  }
  return out;
}

/// Tabulated comparison data, e.g. a measured distribution.
struct OverlaySeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  std::filesystem::path provenance;

  /// Linear interpolation; empty outside the tabulated range.
  std::optional<double> value_at(double x) const {
    if (points.empty() || x < points.front().first || x > points.back().first) return std::nullopt;
    for (std::size_t i = 1; i < points.size(); ++i) {
      const auto [x1, y1] = points[i];
      if (x <= x1) {
        const auto [x0, y0] = points[i - 1];
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
      }
    }
    return points.back().second;
  }
};

namespace detail {

inline double parse_field(std::string_view field, std::size_t line, const char* column) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
    throw parse_error(line, std::string("malformed ") + column + " '" + std::string(field) + "'");
  if (!std::isfinite(value)) throw parse_error(line, std::string("non-finite ") + column);
  return value;
}

}  // namespace detail

/// Reads a CSV with header `x,value` and at least two rows of
/// strictly increasing x. Line numbers in errors count the header as line 1.
inline OverlaySeries parse_overlay(std::istream& in, std::filesystem::path provenance = {}) {
  OverlaySeries out;
  out.label = provenance.stem().string();
  out.provenance = std::move(provenance);

  std::string line;
  if (!std::getline(in, line) || line != "x,value") throw parse_error(1, "expected header 'x,value'");
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) throw parse_error(number, "empty row");
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw parse_error(number, "expected exactly two comma-separated fields");
    const std::string_view view(line);
    const double x = detail::parse_field(view.substr(0, comma), number, "x");
    const double value = detail::parse_field(view.substr(comma + 1), number, "value");
    if (!out.points.empty() && !(x > out.points.back().first))
      throw validation_error("overlay abscissas must be strictly increasing (line " + std::to_string(number) + ")");
    out.points.emplace_back(x, value);
  }
  if (out.points.size() < 2) throw validation_error("overlay needs at least 2 data rows");
  return out;
}

inline OverlaySeries ingest_overlay(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open overlay file " + path.string());
  return parse_overlay(in, path);
}

inline void write_overlay(const OverlaySeries& series, std::ostream& out) {
  out << "x,value\n";
  for (const auto& [x, v] : series.points) write_csv_row(out, {x, v});
}

inline void write_overlay(const OverlaySeries& series, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path.string());
  write_overlay(series, out);
  if (!out) throw io_error("failed writing " + path.string());
}

/// coordinate,model_density[,overlay_value]; the overlay column is empty
/// where the model abscissa falls outside the overlay range.
inline void write_parton_csv(std::ostream& out, const std::vector<MarginalSample>& model,
                             const OverlaySeries* overlay = nullptr) {
  out << (overlay ? "coordinate,model_density,overlay_value\n" : "coordinate,model_density\n");
  for (const auto& s : model) {
    out << format_number(s.coordinate) << ',' << format_number(s.density);
    if (overlay) {
      out << ',';
      if (const auto v = overlay->value_at(s.coordinate)) out << format_number(*v);
    }
    out << '\n';
  }
}

/// Writes the normalized Gaussian momentum marginal for plotting against
/// overlay data.
inline void export_gaussian_pdf(double eta, std::size_t n, const std::filesystem::path& path,
                                std::optional<AffineRescale> rescale = std::nullopt) {
  const auto model = gaussian_pdf(eta, n, Longitudinal::qz, rescale);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path.string());
  write_parton_csv(out, model);
  if (!out) throw io_error("failed writing " + path.string());
}

}  // namespace squeeze
