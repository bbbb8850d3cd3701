#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "projsum/stats.hpp"

namespace projsum {

/// Configuration failure carrying the offending key path.
struct ConfigError : std::runtime_error {
  std::string key;
  ConfigError(std::string key_, const std::string& message)
      : std::runtime_error("config error at '" + key_ + "': " + message), key(std::move(key_)) {}
};

/// Optional pass/fail thresholds attached to an experiment run; violated
/// assertions make the CLI exit with status 3.
struct ExperimentAssertions {
  std::optional<double> ks_max;        // counting, soft-edge
  std::optional<double> se_multiple;   // hard-edge: |empirical - theory| <= m * SE
  std::optional<double> slope_min;     // variance-growth
  std::optional<double> slope_max;
};

struct ResolvedExperiment {
  ExperimentConfig config;
  ExperimentAssertions assertions;
};

struct AssertionResult {
  std::string name;
  bool pass;
  double observed;
  double limit;
};

/// Parses flat `key = value` text. Lines starting with '#' or ';' and
/// blank lines are ignored; duplicate keys are an error.
std::map<std::string, std::string> parse_key_values(std::istream& in);
std::map<std::string, std::string> parse_key_value_file(const std::string& path);

std::optional<ExperimentMode> parse_mode(std::string_view name);

/// Validates the parsed keys against the schema of `mode` and builds the
/// experiment description. Unknown keys, missing keys, and values of the
/// wrong type are reported as ConfigError naming the key.
ResolvedExperiment build_experiment_config(ExperimentMode mode,
                                           const std::map<std::string, std::string>& kv,
                                           std::optional<std::uint64_t> seed_override);

/// Applies the configured assertions to a finished report.
std::vector<AssertionResult> evaluate_assertions(const ExperimentReport& report,
                                                 const ExperimentAssertions& assertions);

}  // namespace projsum
