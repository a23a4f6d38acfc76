#pragma once

// Scenario execution against a browser driver, condition setup and the
// campaign loop that repeats runs until every unit has enough valid samples.

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fubench/model.hpp"
#include "fubench/sampler.hpp"
#include "fubench/store.hpp"

namespace fubench {

// ---------------------------------------------------------------------------
// Scenario scripts

enum class StepAction { navigate, click, type_text, wait_for_selector, wait_page_complete, assert_present };

std::string step_action_name(StepAction a);
StepAction parse_step_action(const std::string& s);

inline constexpr int kDefaultStepTimeoutMs = 10000;

struct ScenarioStep {
  StepAction action = StepAction::navigate;
  std::string target;  // css selector or URL; empty for wait_page_complete
  std::optional<std::string> payload;
  int timeout_ms = kDefaultStepTimeoutMs;
  int line = 0;  // source line, for diagnostics

  bool operator==(const ScenarioStep&) const = default;
};

/// Steps [first_step, last_step] (inclusive) make up one unit.
struct UnitMark {
  FunctionalUnitKind unit;
  std::size_t first_step = 0;
  std::size_t last_step = 0;

  bool operator==(const UnitMark&) const = default;
};

struct ScenarioScript {
  std::string service;
  std::vector<ScenarioStep> steps;
  std::vector<UnitMark> unit_marks;

  /// Distinct marked units in order of first appearance.
  std::vector<FunctionalUnitKind> units() const;
};

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `name = css selector` lines; '#' starts a comment line.
std::map<std::string, std::string> parse_selector_map(std::string_view text);

/// Parses the declarative scenario format:
///
///   set base_url = http://localhost:8080      default for {base_url}
///   begin Session
///   begin Login
///   navigate {base_url}/login.html
///   type_text $username {user}
///   click $login_button timeout=5000
///   end Login
///   ...
///   end Session
///
/// `$name` is looked up in `selectors`; `{name}` in `params`, falling back to
/// `set` defaults. Steps outside any begin/end pair run but are not measured.
ScenarioScript parse_scenario(std::string_view text, const std::map<std::string, std::string>& selectors,
                              const std::map<std::string, std::string>& params, std::string service);

ScenarioScript load_scenario(const std::filesystem::path& scenario, const std::filesystem::path& selectors,
                             const std::map<std::string, std::string>& params, std::string service);

/// Throws ScenarioError when unit ranges overlap (other than Session spanning
/// its constituents), reference missing steps, or a timeout is not positive.
void validate_scenario(const ScenarioScript& s);

// ---------------------------------------------------------------------------
// Browser

/// Step timeout or failed assertion; fails the enclosing unit.
class StepFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lost connection to the browser or driver; aborts the run.
class BrowserCrash : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BrowserOptions {
  std::filesystem::path profile_dir;
  std::optional<std::string> dns_resolver;
};

class Browser {
 public:
  virtual ~Browser() = default;
  virtual void navigate(const std::string& url, int timeout_ms) = 0;
  /// Polls until an element matches or the timeout passes (StepFailure).
  virtual std::string find(const std::string& selector, int timeout_ms) = 0;
  /// Single attempt; nullopt when nothing matches.
  virtual std::optional<std::string> find_now(const std::string& selector) = 0;
  virtual void click(const std::string& element) = 0;
  virtual void send_keys(const std::string& element, const std::string& text) = 0;
  virtual std::string ready_state() = 0;
  virtual void quit() = 0;
};

class BrowserLauncher {
 public:
  virtual ~BrowserLauncher() = default;
  virtual std::unique_ptr<Browser> launch(const BrowserOptions& options) = 0;
};

struct WebDriverOptions {
  std::string endpoint = "http://127.0.0.1:4444";
  std::string browser_name = "firefox";
  bool headless = true;
  int poll_interval_ms = 50;
};

/// W3C WebDriver client over HTTP.
class WebDriverLauncher final : public BrowserLauncher {
 public:
  explicit WebDriverLauncher(WebDriverOptions options) : options_(std::move(options)) {}
  std::unique_ptr<Browser> launch(const BrowserOptions& options) override;
  const WebDriverOptions& options() const { return options_; }

 private:
  WebDriverOptions options_;
};

void run_step(Browser& b, const ScenarioStep& step);

// ---------------------------------------------------------------------------
// Conditions

class CommandRunner {
 public:
  virtual ~CommandRunner() = default;
  /// Runs argv without a shell; returns the exit status, output in `output`.
  virtual int run(const std::vector<std::string>& argv, std::string* output) = 0;
};

class SystemCommandRunner final : public CommandRunner {
 public:
  int run(const std::vector<std::string>& argv, std::string* output) override;
};

class ConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ConditionSpec condition;
  int iterations = static_cast<int>(kAcceptanceSampleCount);  // valid results required per unit
  int max_iterations = 0;                                      // 0: twice `iterations`
  std::string browser_profile = "default";
  std::filesystem::path profile_templates;  // <dir>/<permissive|restrictive>
  std::optional<std::string> dns_resolver;  // host[:port] of the ad-block resolver
  std::filesystem::path resolv_conf = "/etc/resolv.conf";
  std::string adblock_probe_domain = "doubleclick.net";
  std::string network_interface = "eth0";  // where latency is shaped
  std::filesystem::path attachment_path;
  std::chrono::milliseconds settle{2000};

  int iteration_cap() const { return max_iterations > 0 ? max_iterations : 2 * iterations; }
};

void to_json(json& j, const RunConfig& c);

/// Restores the environment on release.
class ConditionHandle {
 public:
  ConditionHandle() = default;
  ConditionHandle(ConditionHandle&&) noexcept;
  ConditionHandle& operator=(ConditionHandle&&) noexcept;
  ~ConditionHandle();

  void release();
  bool active() const { return active_; }
  /// Human-readable record of what was changed, stored with each run.
  const std::vector<std::string>& changes() const { return changes_; }

 private:
  friend ConditionHandle apply_condition(const RunConfig& cfg, CommandRunner& commands);
  bool active_ = false;
  CommandRunner* commands_ = nullptr;
  std::optional<std::string> saved_resolv_;
  std::filesystem::path resolv_path_;
  std::optional<std::string> shaped_interface_;
  std::vector<std::string> changes_;
};

/// Points the resolver at the blocker (verified with a probe query) and
/// shapes egress latency with netem. Throws ConditionError on any failure,
/// after undoing partial changes.
ConditionHandle apply_condition(const RunConfig& cfg, CommandRunner& commands);

/// Empty when resolver and shaping match the baseline; otherwise the problems.
std::vector<std::string> verify_baseline(const RunConfig& cfg, CommandRunner& commands,
                                         const std::optional<std::string>& expected_resolv);

std::string read_text_file(const std::filesystem::path& p);

struct DnsAnswer {
  int rcode = 0;
  std::vector<std::string> ipv4;
};

/// One A query over UDP. `server` is host[:port], port 53 by default.
DnsAnswer dns_query(const std::string& server, const std::string& name, int timeout_ms = 2000);

/// 0.0.0.0/8, 127.0.0.0/8 or NXDOMAIN.
bool is_blocked_answer(const DnsAnswer& a);

struct LatencyStats {
  double mean_ms = 0.0;
  double sd_ms = 0.0;
  int count = 0;
};

inline constexpr int kDefaultPingCount = 100;

/// TCP-connect round trips to host[:port] (port 443 by default). A refused
/// connection still measures one round trip.
LatencyStats measure_latency(const std::string& host, int count = kDefaultPingCount, int timeout_ms = 2000);

// ---------------------------------------------------------------------------
// Runs and campaigns

struct RunOutput {
  std::string run_id;
  std::vector<FunctionalUnitResult> results;
  std::vector<ChannelSeries> samples;
  bool aborted = false;
};

/// Executes every step once with the samplers running and maps each marked
/// unit window onto the sampled channels. A failed step marks every unit of
/// the run invalid, naming the failing step in its own unit.
RunOutput execute_run(const ScenarioScript& script, Browser& browser, SamplerGroup& samplers,
                      const std::string& run_id);

using SamplerFactory = std::function<std::unique_ptr<SamplerGroup>()>;

SamplerFactory sampler_factory(std::vector<ProviderSpec> specs, MachineDescription machine);

struct CampaignResult {
  std::map<FunctionalUnitKind, MeasurementSeries> series;
  int iterations = 0;
  bool below_quota = false;
  std::vector<std::string> run_ids;
  std::vector<std::string> warnings;
};

/// Repeats execute_run, each time with a fresh profile copy and browser, until
/// every unit has cfg.iterations valid results or the iteration cap is hit.
/// Results, samples and filtered series go to `store` when given.
CampaignResult campaign(const ScenarioScript& script, const RunConfig& cfg, BrowserLauncher& launcher,
                        const SamplerFactory& samplers, CommandRunner& commands, const ResultsStore* store);

}  // namespace fubench
