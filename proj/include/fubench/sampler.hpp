#pragma once

// Metric providers sampled concurrently with scenario execution.
//
// Every provider exposes one cumulative channel: joules for energy channels,
// bytes for network channels. Runs map their functional-unit windows onto
// these series with integrate().

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fubench/model.hpp"

namespace fubench {

/// Monotonic clock in nanoseconds; shared by samplers and unit boundaries.
std::int64_t now_ns();

struct Sample {
  std::int64_t timestamp_ns = 0;
  std::string channel;
  double value = 0.0;
  std::optional<std::string> annotation;  // e.g. "wrap" after counter wrap correction

  bool operator==(const Sample&) const = default;
};

struct ChannelSeries {
  std::string channel;
  std::vector<Sample> samples;

  bool operator==(const ChannelSeries&) const = default;
};

enum class ProviderKind { energy_counter, network_counter, machine_power_model };

struct ProviderSpec {
  ProviderKind kind = ProviderKind::energy_counter;
  /// energy_counter: powercap zone directory or energy_uj file.
  /// network_counter: iface:<name>[:rx|:tx], netns:<pid> or file:<path>.
  /// machine_power_model: /proc/stat style file (default /proc/stat).
  std::string source;
  std::string channel;
  int sample_period_ms = 100;
};

inline constexpr int kMinSamplePeriodMs = 10;

void validate_provider(const ProviderSpec& p);
std::string provider_kind_name(ProviderKind k);
ProviderKind parse_provider_kind(const std::string& s);
void to_json(json& j, const ProviderSpec& p);
void from_json(const json& j, ProviderSpec& p);
void to_json(json& j, const Sample& s);
void from_json(const json& j, Sample& s);

class ProviderUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MachineDescription {
  double idle_w = 10.0;
  double peak_w = 50.0;
  int cores = 1;
};

void to_json(json& j, const MachineDescription& m);
void from_json(const json& j, MachineDescription& m);

/// Counter increment between two raw readings of a counter that wraps to 0
/// after `max_value`. Both in native units.
std::uint64_t counter_delta(std::uint64_t previous, std::uint64_t current, std::uint64_t max_value);

/// Stateful powercap reader. Values are cumulative joules since the first
/// read, plus the first raw reading, with wraps folded in.
class EnergyCounter {
 public:
  explicit EnergyCounter(ProviderSpec spec);

  Sample read();
  const ProviderSpec& spec() const { return spec_; }
  /// Counter maximum in µJ (max_energy_range_uj when exposed, else 2^64 - 1).
  std::uint64_t max_value() const { return max_uj_; }

 private:
  ProviderSpec spec_;
  std::string energy_file_;
  std::uint64_t max_uj_;
  std::optional<std::uint64_t> last_raw_;
  std::uint64_t cumulative_uj_ = 0;
};

/// One stateless read of a powercap counter: raw µJ converted to joules.
Sample read_energy_counter(const ProviderSpec& p);

/// Cumulative rx+tx (or one direction) bytes of the scoped interface.
Sample read_network_counter(const ProviderSpec& p);

/// Affine idle/peak power model. Utilisation outside [0,1] is clamped and a
/// warning appended when `warnings` is given.
std::vector<double> machine_power_estimate(std::span<const double> cpu_util, const MachineDescription& m,
                                           std::vector<std::string>* warnings = nullptr);

struct Integral {
  std::int64_t micro_units = 0;  // µJ or µbytes
  bool extrapolated = false;

  double value() const { return static_cast<double>(micro_units) * 1e-6; }
};

/// Cumulative-counter difference over [t0, t1] with linear interpolation at
/// the edges. Windows reaching outside the sampled range use the nearest
/// sample and are flagged extrapolated. Throws std::invalid_argument for an
/// empty series or t1 < t0.
Integral integrate(const ChannelSeries& series, std::int64_t t0_ns, std::int64_t t1_ns);

class Provider {
 public:
  virtual ~Provider() = default;
  virtual Sample read() = 0;
  virtual const std::string& channel() const = 0;
  virtual int period_ms() const = 0;
};

/// Builds a provider; throws ProviderUnavailable if its source is unreadable.
std::unique_ptr<Provider> make_provider(const ProviderSpec& spec, const MachineDescription& machine);

/// Runs each provider on its own thread at its sample period. start() and
/// stop() each take one synchronous sample so a run window between them is
/// always covered. Series are handed out only by stop().
class SamplerGroup {
 public:
  explicit SamplerGroup(std::vector<std::unique_ptr<Provider>> providers);
  ~SamplerGroup();
  SamplerGroup(const SamplerGroup&) = delete;
  SamplerGroup& operator=(const SamplerGroup&) = delete;

  void start();
  std::vector<ChannelSeries> stop();
  bool running() const { return running_; }
  /// Thread CPU time spent by the sampling threads during the last start/stop.
  double cpu_seconds() const { return cpu_seconds_; }
  std::vector<std::string> channels() const;
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  struct Worker {
    Provider* provider = nullptr;
    ChannelSeries series;
    std::string error;
    double cpu_seconds = 0.0;
    std::thread thread;
  };
  void sample_into(Worker& w);
  void loop(Worker& w);

  std::vector<std::unique_ptr<Provider>> providers_;
  std::vector<std::unique_ptr<Worker>> workers_;
  std::mutex mu_;
  std::condition_variable cv_;
  bool stop_requested_ = false;
  bool running_ = false;
  double cpu_seconds_ = 0.0;
  std::vector<std::string> errors_;
};

}  // namespace fubench
