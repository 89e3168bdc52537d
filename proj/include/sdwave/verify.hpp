#pragma once

#include <string>
#include <vector>

#include "sdwave/asymptotics.hpp"

namespace sdwave {

struct CheckRecord {
  std::string check_id;  // "<suite>.<name>@<claim-anchor>"
  std::string regime;
  double sigma = 0.0;
  double nu = 0.0;
  int n = 0;
  double k = 0.0;
  int ell = 0;
  std::string t_or_window;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string verdict;  // PASS / FAIL / SKIP
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRecord> records;

  int passed() const;
  int failed() const;
  int skipped() const;
};

// Built-in default experiment configuration (JSON).
std::string default_config_json();

// Runs the suites selected by the config; empty string = defaults.
// Config parse problems raise ErrorCode::ConfigError.
std::vector<SuiteResult> run_suites(const std::string& config_json);

std::string to_csv(const SuiteResult& s);
std::string to_json(const SuiteResult& s);

// Writes <suite>.csv + <suite>.json per suite into out_dir; returns paths.
std::vector<std::string> write_outputs(const std::vector<SuiteResult>& suites,
                                       const std::string& out_dir);

}  // namespace sdwave
