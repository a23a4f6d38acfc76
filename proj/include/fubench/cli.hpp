#pragma once

// `fubench` command line: run, compare, project, ping, factors.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fubench/model.hpp"
#include "fubench/runner.hpp"
#include "fubench/sampler.hpp"

namespace fubench {

inline constexpr const char* kConfigEnv = "FUBENCH_CONFIG";
inline constexpr const char* kDefaultConfigFile = "fubench.json";

struct ServiceConfig {
  std::filesystem::path scenario;
  std::filesystem::path selectors;
  std::optional<std::filesystem::path> pgp_scenario;
  std::map<std::string, std::string> params;
};

struct Config {
  std::filesystem::path source;  // empty when built-in defaults are used
  EmissionFactors factors;
  MachineDescription machine;
  std::vector<ProviderSpec> providers;
  std::map<std::string, ServiceConfig> services;
  std::map<std::string, ConditionSpec> conditions;
  std::filesystem::path store_path = "results";
  double flight_rt_tonnes = 1.32;
  WebDriverOptions webdriver;
  RunConfig run;

  /// Preset name from `conditions`, else a condition key.
  ConditionSpec resolve_condition(const std::string& name) const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative paths are resolved against the config file's directory.
Config load_config(const std::filesystem::path& path);
Config parse_config(const json& j, const std::filesystem::path& base_dir);

/// Explicit path, then $FUBENCH_CONFIG, then ./fubench.json when present.
std::optional<std::filesystem::path> config_path(const std::optional<std::string>& explicit_path);

/// Exit status 0 on success, 1 on a runtime error, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fubench
