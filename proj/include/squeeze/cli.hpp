#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "squeeze/covariant.hpp"
#include "squeeze/entanglement.hpp"
#include "squeeze/errors.hpp"
#include "squeeze/format.hpp"
#include "squeeze/numerics/quadrature.hpp"
#include "squeeze/oscillator.hpp"
#include "squeeze/parton.hpp"
#include "squeeze/verify.hpp"

namespace squeeze::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Flag combination that no module could be asked to run.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Subcommand { modes, entangle, boost, parton, verify, sweep };
enum class OutputFormat { csv, json };

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 1;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::verify;
  std::optional<double> eta;
  CoupledParams params;
  std::size_t grid_count = QuadratureGrid::default_count;
  double extent = QuadratureGrid::default_half_width;
  std::size_t k_max = default_k_max;
  double omega = 1.0;
  std::optional<std::filesystem::path> out;
  OutputFormat format = OutputFormat::json;

  // entangle
  std::optional<std::filesystem::path> eigenvalue_csv;
  // parton
  Longitudinal variable = Longitudinal::qz;
  std::size_t samples = 101;
  std::optional<std::filesystem::path> overlay;
  std::optional<AffineRescale> rescale;
  // sweep
  SweepRange range;
  unsigned jobs = 1;
};

/// Parses "<shift>,<scale>".
inline AffineRescale parse_rescale(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw usage_error("--rescale expects <shift>,<scale>");
  try {
    std::size_t used = 0;
    AffineRescale r;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    r.shift = std::stod(a, &used);
    if (used != a.size()) throw usage_error("--rescale shift is not a number");
    r.scale = std::stod(b, &used);
    if (used != b.size()) throw usage_error("--rescale scale is not a number");
    if (r.scale == 0.0) throw usage_error("--rescale scale must be non-zero");
    return r;
  } catch (const std::logic_error&) {
    throw usage_error("--rescale expects <shift>,<scale>");
  }
}

namespace detail {

inline double json_number(double v) { return round_to_output_digits(v); }

inline nlohmann::json json_array(const std::vector<double>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (double v : values) out.push_back(json_number(v));
  return out;
}

/// Writes to `path`, or to stdout_ when no path was given.
inline void emit(const std::optional<std::filesystem::path>& path, const std::string& text, std::ostream& stdout_) {
  if (!path) {
    stdout_ << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path->string());
  out << text;
  if (!out) throw io_error("failed writing " + path->string());
}

inline double require_eta(const RunConfig& config) {
  if (!config.eta) throw usage_error("--eta is required");
  return *config.eta;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline nlohmann::json modes_json(const CoupledParams& params) {
  const NormalModeData m = normal_modes(params);
  using detail::json_number;
  return {{"m", json_number(params.mass)},        {"A", json_number(params.stiffness)},
          {"C", json_number(params.coupling)},    {"K", json_number(m.K)},
          {"eta", json_number(m.eta)},            {"omega", json_number(m.omega)},
          {"omega_plus", json_number(m.omega_plus)}, {"omega_minus", json_number(m.omega_minus)}};
}

inline nlohmann::json entangle_json(double eta, std::size_t k_max, double omega) {
  using detail::json_number;
  const FockExpansion c = schmidt_coefficients(eta, k_max);
  const ReducedState r = reduced_state(eta, k_max);
  const ThermalMap t = effective_temperature(eta, omega);
  nlohmann::json j = {{"eta", json_number(eta)},
                      {"k_max", k_max},
                      {"coeffs", detail::json_array(c.coeffs)},
                      {"eigenvalues", detail::json_array(r.eigenvalues)},
                      {"tail", json_number(r.tail)},
                      {"purity", json_number(r.purity)},
                      {"entropy", json_number(r.entropy)},
                      {"omega", json_number(omega)},
                      {"T", json_number(t.T)},
                      {"zero_temperature", t.zero_temperature}};
  j["x"] = t.zero_temperature ? nlohmann::json(nullptr) : nlohmann::json(json_number(t.x));
  return j;
}

inline std::string eigenvalue_csv(double eta, std::size_t k_max) {
  std::ostringstream out;
  out << "k,p_k\n";
  const std::vector<double> p = reduced_eigenvalues(eta, k_max);
  for (std::size_t k = 0; k < p.size(); ++k) out << k << ',' << format_number(p[k]) << '\n';
  return out.str();
}

/// psi_eta and phi_eta tabulated on the same node lattice, one row per node pair.
inline std::string boost_csv(double eta, const QuadratureGrid& grid) {
  std::ostringstream out;
  out << "z,t,psi,q_z,q_0,phi\n";
  for (double a : grid.nodes())
    for (double b : grid.nodes())
      write_csv_row(out, {a, b, boosted_wavefunction({a, b}, eta), a, b, momentum_wavefunction({a, b}, eta)});
  return out.str();
}

inline nlohmann::json verify_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"deviation", detail::json_number(c.deviation)},
                      {"tolerance", detail::json_number(c.tolerance)}});
  return {{"passed", report.passed()}, {"checks", checks}};
}

struct SweepRow {
  double eta = 0.0;
  double purity = 1.0;
  double entropy = 0.0;
  double T = 0.0;
  double width_z = 0.0;
  double width_qz = 0.0;
};

/// One row per eta, evenly spaced over [start, stop]. Points may be computed
/// on several threads; rows always come back in eta order and equal the
/// sequential result.
inline std::vector<SweepRow> sweep(const RunConfig& config) {
  const SweepRange& r = config.range;
  if (r.steps < 1) throw usage_error("sweep needs at least one step");
  if (!std::isfinite(r.start) || !std::isfinite(r.stop)) throw usage_error("sweep range must be finite");
  if (r.start > r.stop) throw usage_error("sweep range needs start <= stop");

  const QuadratureGrid grid(config.grid_count, config.extent);
  std::vector<SweepRow> rows(r.steps);
  const auto point = [&](std::size_t i) {
    const double eta =
        r.steps == 1 ? r.start : r.start + (r.stop - r.start) * static_cast<double>(i) / static_cast<double>(r.steps - 1);
    SweepRow row;
    row.eta = eta;
    row.purity = purity(eta);
    row.entropy = entropy(eta);
    row.T = effective_temperature(eta, config.omega).T;
    row.width_z = std::sqrt(longitudinal_density(eta, Longitudinal::z, grid).variance);
    row.width_qz = std::sqrt(longitudinal_density(eta, Longitudinal::qz, grid).variance);
    rows[i] = row;
  };

  const std::size_t workers = std::min<std::size_t>(std::max(1u, config.jobs), r.steps);
  if (workers == 1) {
    for (std::size_t i = 0; i < r.steps; ++i) point(i);
    return rows;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < r.steps; i += workers) point(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

inline std::string sweep_text(const std::vector<SweepRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const SweepRow& row : rows)
      j.push_back({{"eta", detail::json_number(row.eta)},
                   {"purity", detail::json_number(row.purity)},
                   {"entropy", detail::json_number(row.entropy)},
                   {"T", detail::json_number(row.T)},
                   {"width_z", detail::json_number(row.width_z)},
                   {"width_qz", detail::json_number(row.width_qz)}});
    return detail::dump(j);
  }
  std::ostringstream out;
  out << "eta,purity,entropy,T,width_z,width_qz\n";
  for (const SweepRow& row : rows) write_csv_row(out, {row.eta, row.purity, row.entropy, row.T, row.width_z, row.width_qz});
  return out.str();
}

/// Executes one subcommand. Module errors propagate as exceptions; see
/// run_guarded for the exit-code mapping.
inline int run(const RunConfig& config, std::ostream& stdout_ = std::cout, std::ostream& stderr_ = std::cerr) {
  switch (config.subcommand) {
    case Subcommand::modes:
      detail::emit(config.out, detail::dump(modes_json(config.params)), stdout_);
      return exit_ok;

    case Subcommand::entangle: {
      const double eta = detail::require_eta(config);
      detail::emit(config.out, detail::dump(entangle_json(eta, config.k_max, config.omega)), stdout_);
      if (config.eigenvalue_csv) detail::emit(config.eigenvalue_csv, eigenvalue_csv(eta, config.k_max), stdout_);
      return exit_ok;
    }

    case Subcommand::boost: {
      const double eta = detail::require_eta(config);
      detail::emit(config.out, boost_csv(eta, QuadratureGrid(config.grid_count, config.extent)), stdout_);
      return exit_ok;
    }

    case Subcommand::parton: {
      const double eta = detail::require_eta(config);
      const auto model = gaussian_pdf(eta, config.samples, config.variable, config.rescale);
      std::optional<OverlaySeries> overlay;
      if (config.overlay) overlay = ingest_overlay(*config.overlay);
      std::ostringstream out;
      write_parton_csv(out, model, overlay ? &*overlay : nullptr);
      detail::emit(config.out, out.str(), stdout_);
      return exit_ok;
    }

    case Subcommand::verify: {
      const VerifyReport report = run_verify();
      for (const CheckResult& c : report.checks)
        stderr_ << (c.passed ? "PASS " : "FAIL ") << c.name << "  deviation=" << format_number(c.deviation)
                << " tolerance=" << format_number(c.tolerance) << '\n';
      detail::emit(config.out, detail::dump(verify_json(report)), stdout_);
      return report.passed() ? exit_ok : exit_failure;
    }

    case Subcommand::sweep:
      detail::emit(config.out, sweep_text(sweep(config), config.format), stdout_);
      return exit_ok;
  }
  return exit_usage;
}

/// run() with errors mapped to exit codes: usage problems give 2, module
/// errors (domain, resolution, I/O, parse) give 1.
inline int run_guarded(const RunConfig& config, std::ostream& stdout_ = std::cout, std::ostream& stderr_ = std::cerr) {
  try {
    return run(config, stdout_, stderr_);
  } catch (const usage_error& e) {
    stderr_ << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    stderr_ << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace squeeze::cli
