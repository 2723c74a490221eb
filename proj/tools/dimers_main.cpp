#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "dimers/cli.hpp"

namespace {

using dimers::cli::Command;
using dimers::cli::OutputFormat;
using dimers::cli::RunConfig;

void add_output_flags(CLI::App* cmd, RunConfig& config, std::string& format) {
  cmd->add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  cmd->add_option("--out", config.out_path, "Output path (default: stdout)");
  cmd->add_option("--digits", config.precision_digits, "Working precision in decimal digits")
      ->check(CLI::Range(15, 1000));
}

int dispatch(const RunConfig& config) {
  dimers::cli::RunResult result = dimers::cli::run(config);
  if (!result.artifact.empty()) std::cout << result.artifact;
  if (!result.diagnostic.empty()) std::cerr << "error: " << result.diagnostic << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimers: exact strip dimer spectra, finite-size corrections, character identities"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";

  CLI::App* spectrum = app.add_subcommand("spectrum", "Transfer-matrix sector spectrum");
  spectrum->add_option("--n", config.n_grid, "Strip width(s)")->required();
  spectrum->add_option("--alpha", config.alpha, "Horizontal dimer weight (exact: 1, 1/2, 0.25)");
  spectrum->add_option("--v", config.sector, "Sector index filter (e.g. 0, 1, -1/2)");
  add_output_flags(spectrum, config, format);

  CLI::App* fsc = app.add_subcommand("fsc", "Finite-size expansion vs exact energy");
  fsc->add_option("--n", config.n_grid, "Strip width(s)")->required();
  fsc->add_option("--alpha", config.alpha, "Horizontal dimer weight");
  fsc->add_option("--lmax", config.l_max, "Expansion truncation order")->check(CLI::Range(0, 8));
  fsc->add_option("--eps", config.eps_modes, "Diagram eps column entries");
  fsc->add_option("--mu", config.mu_modes, "Diagram mu column entries");
  add_output_flags(fsc, config, format);

  CLI::App* fit = app.add_subcommand("fit", "Residual decay order fit over an N grid");
  fit->add_option("--grid", config.n_grid, "Same-parity strip widths (>= 5)")->required();
  fit->add_option("--alpha", config.alpha, "Horizontal dimer weight");
  fit->add_option("--lmax", config.l_max, "Expansion truncation order")->check(CLI::Range(0, 8));
  fit->add_option("--eps", config.eps_modes, "Diagram eps column entries");
  fit->add_option("--mu", config.mu_modes, "Diagram mu column entries");
  add_output_flags(fit, config, format);

  CLI::App* verify = app.add_subcommand("verify", "Oracle cross-check suites");
  verify->add_option("--n-max", config.n_max, "Largest strip width");
  verify->add_option("--m", config.m_values, "Cylinder circumferences for trace cross-checks");
  bool want_matching = false, want_algebra = false, want_traces = false, want_dims = false;
  verify->add_flag("--matching", want_matching, "Trace vs matching enumeration only");
  verify->add_flag("--algebra", want_algebra, "Operator algebra identities only");
  verify->add_flag("--traces", want_traces, "Spectrum trace sum rules only");
  verify->add_flag("--dims", want_dims, "Sector dimension counts only");
  add_output_flags(verify, config, format);

  CLI::App* characters = app.add_subcommand("characters", "Finitized character identities");
  characters->add_option("--l", config.height, "Maximal diagram height L");
  bool limit = false;
  characters->add_flag("--limit", limit, "Continuum-limit coefficient comparison");
  characters->add_option("--v", config.sector, "Sector index (for --limit)");
  characters->add_option("--order", config.order, "Number of compared coefficients (for --limit)");
  add_output_flags(characters, config, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dimers::cli::kExitUsage;
  }

  config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (spectrum->parsed()) {
    config.command = Command::spectrum;
    config.has_sector = spectrum->count("--v") > 0;
  } else if (fsc->parsed()) {
    config.command = Command::fsc;
  } else if (fit->parsed()) {
    config.command = Command::fit;
  } else if (verify->parsed()) {
    config.command = Command::verify;
    if (want_matching) config.suites.push_back("matching");
    if (want_algebra) config.suites.push_back("algebra");
    if (want_traces) config.suites.push_back("traces");
    if (want_dims) config.suites.push_back("dims");
  } else if (characters->parsed()) {
    config.command = Command::characters;
    config.limit_mode = limit;
    if (limit && config.sector.empty()) {
      std::cerr << "error: --limit requires --v\n";
      return dimers::cli::kExitUsage;
    }
  }
  return dispatch(config);
}
