#include "fubench/sampler.hpp"

#include <time.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace fubench {

namespace fs = std::filesystem;

std::int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

namespace {

double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

std::optional<std::uint64_t> read_u64_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::uint64_t v = 0;
  if (!(in >> v)) return std::nullopt;
  return v;
}

std::uint64_t require_u64_file(const std::string& path) {
  auto v = read_u64_file(path);
  if (!v) throw ProviderUnavailable("cannot read counter " + path);
  return *v;
}

}  // namespace

std::string provider_kind_name(ProviderKind k) {
  switch (k) {
    case ProviderKind::energy_counter: return "energy_counter";
    case ProviderKind::network_counter: return "network_counter";
    case ProviderKind::machine_power_model: return "machine_power_model";
  }
  return "?";
}

ProviderKind parse_provider_kind(const std::string& s) {
  for (auto k : {ProviderKind::energy_counter, ProviderKind::network_counter, ProviderKind::machine_power_model})
    if (provider_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown provider kind: " + s);
}

void validate_provider(const ProviderSpec& p) {
  if (p.sample_period_ms < kMinSamplePeriodMs)
    throw std::invalid_argument("sample_period_ms must be >= " + std::to_string(kMinSamplePeriodMs) + ", got " +
                                std::to_string(p.sample_period_ms));
  if (p.channel.empty()) throw std::invalid_argument("provider channel must not be empty");
}

void to_json(json& j, const ProviderSpec& p) {
  j = json{{"kind", provider_kind_name(p.kind)},
           {"source", p.source},
           {"channel", p.channel},
           {"sample_period_ms", p.sample_period_ms}};
}

void from_json(const json& j, ProviderSpec& p) {
  p.kind = parse_provider_kind(j.at("kind").get<std::string>());
  p.source = j.value("source", std::string{});
  if (p.kind == ProviderKind::machine_power_model && p.source.empty()) p.source = "/proc/stat";
  std::string def_channel = p.kind == ProviderKind::network_counter ? channel::kNetwork
                            : p.kind == ProviderKind::machine_power_model ? channel::kMachine
                                                                          : std::string{};
  p.channel = j.value("channel", def_channel);
  p.sample_period_ms = j.value("sample_period_ms", 100);
  validate_provider(p);
}

void to_json(json& j, const Sample& s) {
  j = json{{"t", s.timestamp_ns}, {"channel", s.channel}, {"value", s.value}};
  if (s.annotation) j["annotation"] = *s.annotation;
}

void from_json(const json& j, Sample& s) {
  j.at("t").get_to(s.timestamp_ns);
  j.at("channel").get_to(s.channel);
  j.at("value").get_to(s.value);
  if (auto it = j.find("annotation"); it != j.end())
    s.annotation = it->get<std::string>();
  else
    s.annotation.reset();
}

void to_json(json& j, const MachineDescription& m) {
  j = json{{"idle_w", m.idle_w}, {"peak_w", m.peak_w}, {"cores", m.cores}};
}

void from_json(const json& j, MachineDescription& m) {
  m.idle_w = j.value("idle_w", m.idle_w);
  m.peak_w = j.value("peak_w", m.peak_w);
  m.cores = j.value("cores", m.cores);
  if (m.idle_w < 0 || m.peak_w < m.idle_w) throw std::invalid_argument("machine requires 0 <= idle_w <= peak_w");
  if (m.cores < 1) throw std::invalid_argument("machine cores must be >= 1");
}

// ---------------------------------------------------------------------------
// Energy counters

std::uint64_t counter_delta(std::uint64_t previous, std::uint64_t current, std::uint64_t max_value) {
  if (current >= previous) return current - previous;
  // wrapped: previous -> max_value, then max_value -> 0 (one step), then 0 -> current
  return (max_value - previous) + 1 + current;
}

namespace {

struct PowercapPaths {
  std::string energy;
  std::string max_range;
};

PowercapPaths powercap_paths(const std::string& source) {
  fs::path p(source);
  if (fs::is_directory(p)) return {(p / "energy_uj").string(), (p / "max_energy_range_uj").string()};
  return {p.string(), (p.parent_path() / "max_energy_range_uj").string()};
}

}  // namespace

EnergyCounter::EnergyCounter(ProviderSpec spec) : spec_(std::move(spec)) {
  auto paths = powercap_paths(spec_.source);
  energy_file_ = paths.energy;
  if (!read_u64_file(energy_file_))
    throw ProviderUnavailable("energy counter unavailable: " + energy_file_);
  max_uj_ = read_u64_file(paths.max_range).value_or(std::numeric_limits<std::uint64_t>::max());
}

Sample EnergyCounter::read() {
  const std::uint64_t raw = require_u64_file(energy_file_);
  Sample s;
  s.timestamp_ns = now_ns();
  s.channel = spec_.channel;
  if (!last_raw_) {
    cumulative_uj_ = raw;
  } else {
    if (raw < *last_raw_) s.annotation = "wrap";
    cumulative_uj_ += counter_delta(*last_raw_, raw, max_uj_);
  }
  last_raw_ = raw;
  s.value = static_cast<double>(cumulative_uj_) * 1e-6;
  return s;
}

Sample read_energy_counter(const ProviderSpec& p) {
  const auto paths = powercap_paths(p.source);
  auto raw = read_u64_file(paths.energy);
  if (!raw) throw ProviderUnavailable("energy counter unavailable: " + paths.energy);
  return Sample{now_ns(), p.channel, static_cast<double>(*raw) * 1e-6, std::nullopt};
}

// ---------------------------------------------------------------------------
// Network counters

namespace {

std::uint64_t netdev_total(const std::string& path, bool skip_loopback) {
  std::ifstream in(path);
  if (!in) throw ProviderUnavailable("network statistics unavailable: " + path);
  std::string line;
  std::uint64_t total = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    if (++lineno <= 2) continue;  // two header lines
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string name = line.substr(0, colon);
    name.erase(0, name.find_first_not_of(' '));
    if (skip_loopback && name == "lo") continue;
    std::istringstream fields(line.substr(colon + 1));
    std::uint64_t v[9] = {};
    for (auto& x : v) fields >> x;
    total += v[0] + v[8];  // rx_bytes, tx_bytes
  }
  return total;
}

}  // namespace

Sample read_network_counter(const ProviderSpec& p) {
  const std::string& src = p.source;
  std::uint64_t bytes = 0;
  if (src.rfind("iface:", 0) == 0) {
    std::string rest = src.substr(6);
    std::string direction;
    if (auto c = rest.find(':'); c != std::string::npos) {
      direction = rest.substr(c + 1);
      rest = rest.substr(0, c);
    }
    const fs::path stats = fs::path("/sys/class/net") / rest / "statistics";
    if (!fs::exists(stats)) throw ProviderUnavailable("network interface not found: " + rest);
    if (direction.empty() || direction == "rx") bytes += require_u64_file((stats / "rx_bytes").string());
    if (direction.empty() || direction == "tx") bytes += require_u64_file((stats / "tx_bytes").string());
    if (!direction.empty() && direction != "rx" && direction != "tx")
      throw std::invalid_argument("network direction must be rx or tx: " + src);
  } else if (src.rfind("netns:", 0) == 0) {
    bytes = netdev_total("/proc/" + src.substr(6) + "/net/dev", true);
  } else if (src.rfind("file:", 0) == 0) {
    bytes = require_u64_file(src.substr(5));
  } else {
    throw std::invalid_argument("unsupported network source: " + src);
  }
  return Sample{now_ns(), p.channel, static_cast<double>(bytes), std::nullopt};
}

// ---------------------------------------------------------------------------
// Power model

std::vector<double> machine_power_estimate(std::span<const double> cpu_util, const MachineDescription& m,
                                           std::vector<std::string>* warnings) {
  std::vector<double> out;
  out.reserve(cpu_util.size());
  for (std::size_t i = 0; i < cpu_util.size(); ++i) {
    double u = cpu_util[i];
    if (!(u >= 0.0 && u <= 1.0)) {
      const double clamped = std::isnan(u) ? 0.0 : std::clamp(u, 0.0, 1.0);
      if (warnings) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "utilisation %g at index %zu clamped to %g", u, i, clamped);
        warnings->emplace_back(buf);
      }
      u = clamped;
    }
    out.push_back(m.idle_w + u * (m.peak_w - m.idle_w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integration

namespace {

std::int64_t to_micro(double v) { return std::llround(v * 1e6); }

// Rounded integer interpolation so the value at a timestamp is identical no
// matter which window asks for it.
std::int64_t interpolate_micro(const Sample& a, const Sample& b, std::int64_t t) {
  const __int128 ua = to_micro(a.value);
  const __int128 ub = to_micro(b.value);
  const __int128 span = b.timestamp_ns - a.timestamp_ns;
  const __int128 num = (ub - ua) * (t - a.timestamp_ns);
  __int128 q = num / span;
  const __int128 r = num % span;
  if (2 * (r < 0 ? -r : r) >= span) q += (num < 0 ? -1 : 1);
  return static_cast<std::int64_t>(ua + q);
}

std::int64_t value_at(const std::vector<Sample>& s, std::int64_t t, bool& extrapolated) {
  if (t <= s.front().timestamp_ns) {
    if (t < s.front().timestamp_ns) extrapolated = true;
    return to_micro(s.front().value);
  }
  if (t >= s.back().timestamp_ns) {
    if (t > s.back().timestamp_ns) extrapolated = true;
    return to_micro(s.back().value);
  }
  auto it = std::upper_bound(s.begin(), s.end(), t,
                             [](std::int64_t x, const Sample& smp) { return x < smp.timestamp_ns; });
  const Sample& hi = *it;
  const Sample& lo = *(it - 1);
  if (lo.timestamp_ns == t) return to_micro(lo.value);
  return interpolate_micro(lo, hi, t);
}

}  // namespace

Integral integrate(const ChannelSeries& series, std::int64_t t0_ns, std::int64_t t1_ns) {
  if (series.samples.empty()) throw std::invalid_argument("integrate over empty series '" + series.channel + "'");
  if (t1_ns < t0_ns) throw std::invalid_argument("integrate window ends before it starts");
  Integral out;
  const std::int64_t a = value_at(series.samples, t0_ns, out.extrapolated);
  const std::int64_t b = value_at(series.samples, t1_ns, out.extrapolated);
  out.micro_units = b - a;
  return out;
}

// ---------------------------------------------------------------------------
// Providers

namespace {

class EnergyProvider final : public Provider {
 public:
  explicit EnergyProvider(const ProviderSpec& spec) : counter_(spec) {}
  Sample read() override { return counter_.read(); }
  const std::string& channel() const override { return counter_.spec().channel; }
  int period_ms() const override { return counter_.spec().sample_period_ms; }

 private:
  EnergyCounter counter_;
};

class NetworkProvider final : public Provider {
 public:
  explicit NetworkProvider(ProviderSpec spec) : spec_(std::move(spec)) { read_network_counter(spec_); }
  Sample read() override { return read_network_counter(spec_); }
  const std::string& channel() const override { return spec_.channel; }
  int period_ms() const override { return spec_.sample_period_ms; }

 private:
  ProviderSpec spec_;
};

// Integrates the affine power model over /proc/stat utilisation into a
// cumulative joule counter.
class PowerModelProvider final : public Provider {
 public:
  PowerModelProvider(ProviderSpec spec, MachineDescription machine)
      : spec_(std::move(spec)), machine_(machine) {
    read_stat();
  }

  Sample read() override {
    const auto [busy, total] = read_stat();
    const std::int64_t t = now_ns();
    if (last_t_) {
      const double dtotal = static_cast<double>(total - last_total_);
      if (dtotal > 0) util_ = static_cast<double>(busy - last_busy_) / dtotal;
      const double u = util_;
      const double watts = machine_power_estimate(std::span<const double>(&u, 1), machine_).front();
      energy_j_ += watts * static_cast<double>(t - *last_t_) * 1e-9;
    }
    last_t_ = t;
    last_busy_ = busy;
    last_total_ = total;
    return Sample{t, spec_.channel, energy_j_, std::nullopt};
  }
  const std::string& channel() const override { return spec_.channel; }
  int period_ms() const override { return spec_.sample_period_ms; }

 private:
  std::pair<std::uint64_t, std::uint64_t> read_stat() const {
    std::ifstream in(spec_.source);
    std::string label;
    std::uint64_t v[8] = {};
    if (!(in >> label) || label != "cpu") throw ProviderUnavailable("cpu statistics unavailable: " + spec_.source);
    for (auto& x : v) in >> x;
    if (!in) throw ProviderUnavailable("malformed cpu statistics: " + spec_.source);
    std::uint64_t total = 0;
    for (auto x : v) total += x;
    const std::uint64_t idle = v[3] + v[4];
    return {total - idle, total};
  }

  ProviderSpec spec_;
  MachineDescription machine_;
  std::optional<std::int64_t> last_t_;
  std::uint64_t last_busy_ = 0;
  std::uint64_t last_total_ = 0;
  double util_ = 0.0;
  double energy_j_ = 0.0;
};

}  // namespace

std::unique_ptr<Provider> make_provider(const ProviderSpec& spec, const MachineDescription& machine) {
  validate_provider(spec);
  switch (spec.kind) {
    case ProviderKind::energy_counter: return std::make_unique<EnergyProvider>(spec);
    case ProviderKind::network_counter: return std::make_unique<NetworkProvider>(spec);
    case ProviderKind::machine_power_model: return std::make_unique<PowerModelProvider>(spec, machine);
  }
  throw std::invalid_argument("unknown provider kind");
}

SamplerGroup::SamplerGroup(std::vector<std::unique_ptr<Provider>> providers) : providers_(std::move(providers)) {}

SamplerGroup::~SamplerGroup() {
  if (running_) stop();
}

std::vector<std::string> SamplerGroup::channels() const {
  std::vector<std::string> out;
  for (const auto& p : providers_) out.push_back(p->channel());
  return out;
}

void SamplerGroup::sample_into(Worker& w) {
  if (!w.error.empty()) return;
  try {
    Sample s = w.provider->read();
    if (!w.series.samples.empty() && s.timestamp_ns <= w.series.samples.back().timestamp_ns) return;
    w.series.samples.push_back(std::move(s));
  } catch (const std::exception& e) {
    w.error = w.provider->channel() + ": " + e.what();
  }
}

void SamplerGroup::loop(Worker& w) {
  const double cpu0 = thread_cpu_seconds();
  const auto period = std::chrono::milliseconds(w.provider->period_ms());
  auto next = std::chrono::steady_clock::now() + period;
  std::unique_lock lock(mu_);
  while (!cv_.wait_until(lock, next, [this] { return stop_requested_; })) {
    lock.unlock();
    sample_into(w);
    next += period;
    const auto now = std::chrono::steady_clock::now();
    if (next < now) next = now + period;
    lock.lock();
  }
  lock.unlock();
  w.cpu_seconds = thread_cpu_seconds() - cpu0;
}

void SamplerGroup::start() {
  if (running_) throw std::logic_error("sampler group already running");
  workers_.clear();
  errors_.clear();
  stop_requested_ = false;
  for (auto& p : providers_) {
    auto w = std::make_unique<Worker>();
    w->provider = p.get();
    w->series.channel = p->channel();
    sample_into(*w);
    workers_.push_back(std::move(w));
  }
  for (auto& w : workers_) w->thread = std::thread([this, wp = w.get()] { loop(*wp); });
  running_ = true;
}

std::vector<ChannelSeries> SamplerGroup::stop() {
  if (!running_) throw std::logic_error("sampler group not running");
  {
    std::lock_guard lock(mu_);
    stop_requested_ = true;
  }
  cv_.notify_all();
  std::vector<ChannelSeries> out;
  cpu_seconds_ = 0.0;
  for (auto& w : workers_) {
    w->thread.join();
    sample_into(*w);
    cpu_seconds_ += w->cpu_seconds;
    if (!w->error.empty()) errors_.push_back(w->error);
    out.push_back(std::move(w->series));
  }
  workers_.clear();
  running_ = false;
  return out;
}

}  // namespace fubench
