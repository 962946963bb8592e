// Command-line front end: normal modes, entanglement scalars, boosted wave
// function surfaces, parton distributions, eta sweeps and the verification
// suite.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "squeeze/cli.hpp"

namespace {

using squeeze::cli::OutputFormat;
using squeeze::cli::RunConfig;
using squeeze::cli::Subcommand;

void add_out(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--out", config.out, "Output path (stdout when omitted)");
}

void add_grid(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--grid", config.grid_count, "Quadrature nodes per axis")->check(CLI::Range(2, 100000));
  cmd->add_option("--extent", config.extent, "Grid half-width L")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled oscillators, entanglement and the Lorentz squeeze"};
  app.require_subcommand(1);
  RunConfig config;

  auto* modes = app.add_subcommand("modes", "Normal-mode data of the coupled Hamiltonian (JSON)");
  modes->add_option("--m", config.params.mass, "Mass")->required();
  modes->add_option("--A", config.params.stiffness, "Diagonal stiffness")->required();
  modes->add_option("--C", config.params.coupling, "Coupling stiffness")->required();
  add_out(modes, config);

  auto* entangle = app.add_subcommand("entangle", "Schmidt coefficients, reduced state, entropy, temperature (JSON)");
  entangle->add_option("--eta", config.eta, "Squeeze parameter")->required();
  entangle->add_option("--kmax", config.k_max, "Fock truncation order");
  entangle->add_option("--omega", config.omega, "Mode frequency for the temperature map")->check(CLI::PositiveNumber);
  entangle->add_option("--csv", config.eigenvalue_csv, "Also write (k, p_k) as CSV");
  add_out(entangle, config);

  auto* boost = app.add_subcommand("boost", "Space-time and momentum-energy surfaces (CSV)");
  boost->add_option("--eta", config.eta, "Squeeze parameter")->required();
  add_grid(boost, config);
  add_out(boost, config);

  std::string variable = "qz";
  std::string rescale;
  auto* parton = app.add_subcommand("parton", "Longitudinal marginal distribution with optional overlay (CSV)");
  parton->add_option("--eta", config.eta, "Squeeze parameter")->required();
  parton->add_option("--var", variable, "Longitudinal variable")->check(CLI::IsMember({"z", "qz"}));
  parton->add_option("--n", config.samples, "Number of output points")->check(CLI::Range(2, 1000000));
  parton->add_option("--overlay", config.overlay, "CSV with header x,value");
  parton->add_option("--rescale", rescale, "Cosmetic affine map <shift>,<scale> of the model abscissa");
  add_out(parton, config);

  auto* verify = app.add_subcommand("verify", "Run every module invariant and write the report (JSON)");
  add_out(verify, config);

  std::string format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Purity, entropy, temperature and widths over an eta range");
  sweep->add_option("--start", config.range.start, "First eta")->required();
  sweep->add_option("--stop", config.range.stop, "Last eta")->required();
  sweep->add_option("--steps", config.range.steps, "Number of rows")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--omega", config.omega, "Mode frequency for the temperature map")->check(CLI::PositiveNumber);
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1, 256));
  add_grid(sweep, config);
  add_out(sweep, config);

  try {
    app.parse(argc, argv);
    if (*modes) config.subcommand = Subcommand::modes;
    if (*entangle) config.subcommand = Subcommand::entangle;
    if (*boost) config.subcommand = Subcommand::boost;
    if (*parton) config.subcommand = Subcommand::parton;
    if (*verify) config.subcommand = Subcommand::verify;
    if (*sweep) config.subcommand = Subcommand::sweep;
    config.variable = squeeze::parse_longitudinal(variable);
    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (!rescale.empty()) config.rescale = squeeze::cli::parse_rescale(rescale);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : squeeze::cli::exit_usage;
  } catch (const squeeze::cli::usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return squeeze::cli::exit_usage;
  }

  return squeeze::cli::run_guarded(config);
}
