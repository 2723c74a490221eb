#ifndef DIMERS_CLI_HPP
#define DIMERS_CLI_HPP

#include <string>
#include <vector>

#include "dimers/exact.hpp"

#include "json.hpp"

namespace dimers::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Command { spectrum, fsc, fit, verify, characters };

enum class OutputFormat { json, csv };

struct RunConfig {
  Command command = Command::spectrum;
  std::vector<int> n_grid;           // one or more strip widths
  std::string alpha = "1";           // parsed exactly
  int l_max = 0;
  bool has_sector = false;
  std::string sector;                // "0", "1", "-1/2", ...
  int precision_digits = 15;
  OutputFormat format = OutputFormat::json;
  std::string out_path;              // empty = stdout
  std::vector<int> eps_modes;
  std::vector<int> mu_modes;
  // verify options
  int n_max = 6;
  std::vector<int> m_values = {2, 4};
  std::vector<std::string> suites;   // empty = all
  // characters options
  int height = 4;                    // L
  bool limit_mode = false;
  int order = 10;
};

// exit codes: 0 success / all pass, 2 usage or config, 3 precision, 4 internal
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitInternal = 4;

struct RunResult {
  int exit_code = kExitOk;
  std::string artifact;     // rendered JSON or CSV
  std::string diagnostic;   // human message on failure paths
};

RunResult run(const RunConfig& config);

Json run_spectrum(const RunConfig& config);
Json run_fsc(const RunConfig& config);
Json run_fit(const RunConfig& config);
Json run_verify(const RunConfig& config, bool& all_passed);
Json run_characters(const RunConfig& config);

std::string render_csv(const Json& artifact);

}  // namespace dimers::cli

#endif
