#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "klr/cartan.hpp"

namespace klr::cli {

using nlohmann::json;

/// Thrown for malformed configuration; run/dims translate it to exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CaseSpec {
  RootVector beta;
  int i = -1;  // -1 when the case names no color
  std::vector<std::string> checks;
};

struct VerifyConfig {
  std::optional<CartanDatum> datum;
  std::optional<QMatrix> q;
  DominantWeight lambda;
  std::vector<CaseSpec> cases;
  int mackey_degree = 8;  // bounds.D
  int fil_cap = 3;        // bounds.cap
  int max_degree = 120;   // bounds.max_degree (graded truncation guard)
  json echo;              // raw config, echoed into reports
};

/// Names accepted in a case's "checks" array.
const std::vector<std::string>& known_checks();

VerifyConfig parse_config(const json& j);
VerifyConfig load_config(const std::string& path);

struct RunOptions {
  bool flip_eta_sign = false;
  int jobs = 1;
  long cap_seconds = -1;  // < 0: no cap
};

/// Executes every (case, check) unit and assembles the report; exit_code
/// receives 0 (all pass/skip), 1 (some failure) or 3 (resource-cap abort).
json run_cases(const VerifyConfig& cfg, const RunOptions& opts,
               int* exit_code);

/// Quotient and kernel dimensions per case; consults the directory named
/// by KLR_ENGINE_CACHE for memoized quotient summaries when set.
json dims_table(const VerifyConfig& cfg);

/// Full command-line entry point (subcommands run, dims, explain).
int cli_main(int argc, char** argv);

} // namespace klr::cli
