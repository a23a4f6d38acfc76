#include "fubench/model.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace fubench {

ValidationResult validate_factors(const EmissionFactors& f) {
  ValidationResult out;
  auto positive = [&](const char* name, double v) {
    if (!(v > 0.0)) out.violations.push_back(std::string(name) + ": positive required");
  };
  positive("grid_intensity", f.grid_intensity);
  positive("joule_to_kwh", f.joule_to_kwh);
  positive("transfer_intensity_base", f.transfer_intensity_base);
  positive("base_year", f.base_year);
  positive("halving_period_years", f.halving_period_years);
  positive("assessment_year", f.assessment_year);
  positive("device_embodied_total", f.device_embodied_total);
  positive("device_lifetime_seconds", f.device_lifetime_seconds);
  positive("embodied_to_use_ratio", f.embodied_to_use_ratio);
  if (!(f.resource_share > 0.0 && f.resource_share <= 1.0))
    out.violations.push_back("resource_share must be in (0,1]");
  return out;
}

bool FunctionalUnitKind::is_session() const { return name_ == "Session"; }

const std::vector<FunctionalUnitKind>& session_sequence() {
  static const std::vector<FunctionalUnitKind> seq = {
      FunctionalUnitKind::Login(),  FunctionalUnitKind::NoAttachment(),
      FunctionalUnitKind::Attachment(), FunctionalUnitKind::Read(),
      FunctionalUnitKind::Reply(),  FunctionalUnitKind::Read(),
      FunctionalUnitKind::Delete(), FunctionalUnitKind::Logout(),
  };
  return seq;
}

std::vector<std::pair<FunctionalUnitKind, int>> session_recipe() {
  std::vector<std::pair<FunctionalUnitKind, int>> out;
  for (const auto& k : session_sequence()) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == k; });
    if (it == out.end())
      out.emplace_back(k, 1);
    else
      ++it->second;
  }
  return out;
}

const std::vector<FunctionalUnitKind>& basic_units() {
  static const std::vector<FunctionalUnitKind> units = {
      FunctionalUnitKind::Login(),      FunctionalUnitKind::Logout(),
      FunctionalUnitKind::NoAttachment(), FunctionalUnitKind::Attachment(),
      FunctionalUnitKind::Read(),       FunctionalUnitKind::Reply(),
      FunctionalUnitKind::Delete(),
  };
  return units;
}

double FunctionalUnitResult::duration_s() const {
  return static_cast<double>(ended_at_ns - started_at_ns) * 1e-9;
}

double FunctionalUnitResult::mean_power(const std::string& ch) const {
  auto it = energy_j.find(ch);
  if (it == energy_j.end()) return 0.0;
  return it->second / duration_s();
}

std::string ConditionSpec::key() const {
  std::vector<std::string> parts;
  if (adblock) parts.emplace_back("adblock");
  if (tracking == TrackingProfile::restrictive) parts.emplace_back("restrictive");
  if (pgp) parts.emplace_back("pgp");
  if (injected_latency_ms > 0) parts.push_back("lat" + std::to_string(injected_latency_ms));
  if (parts.empty()) return "baseline";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
  return out;
}

ConditionSpec parse_condition_key(const std::string& key) {
  ConditionSpec c;
  if (key == "baseline") return c;
  std::set<std::string> seen;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    auto next = key.find('+', pos);
    if (next == std::string::npos) next = key.size();
    std::string part = key.substr(pos, next - pos);
    if (!seen.insert(part).second) throw std::invalid_argument("duplicate condition part: " + part);
    if (part == "adblock") {
      c.adblock = true;
    } else if (part == "restrictive") {
      c.tracking = TrackingProfile::restrictive;
    } else if (part == "pgp") {
      c.pgp = true;
    } else if (part.rfind("lat", 0) == 0 && part.size() > 3) {
      int ms = 0;
      auto [p, ec] = std::from_chars(part.data() + 3, part.data() + part.size(), ms);
      if (ec != std::errc() || p != part.data() + part.size() || ms <= 0)
        throw std::invalid_argument("bad latency in condition key: " + part);
      c.injected_latency_ms = ms;
    } else {
      throw std::invalid_argument("unknown condition part '" + part + "' in '" + key + "'");
    }
    pos = next + 1;
  }
  return c;
}

const std::vector<Metric>& all_metrics() {
  static const std::vector<Metric> ms = {Metric::duration,      Metric::energy_machine,
                                         Metric::energy_cpu,    Metric::energy_memory,
                                         Metric::mean_power_machine, Metric::network_bytes};
  return ms;
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::duration: return "duration";
    case Metric::energy_machine: return "energy.machine";
    case Metric::energy_cpu: return "energy.cpu";
    case Metric::energy_memory: return "energy.memory";
    case Metric::mean_power_machine: return "mean_power.machine";
    case Metric::network_bytes: return "network_bytes";
  }
  return "?";
}

Metric parse_metric(const std::string& name) {
  for (Metric m : all_metrics())
    if (metric_name(m) == name) return m;
  throw std::invalid_argument("unknown metric: " + name);
}

namespace {
double energy_of(const FunctionalUnitResult& r, const std::string& ch) {
  auto it = r.energy_j.find(ch);
  return it == r.energy_j.end() ? 0.0 : it->second;
}
}  // namespace

double metric_value(const FunctionalUnitResult& r, Metric m) {
  switch (m) {
    case Metric::duration: return r.duration_s();
    case Metric::energy_machine: return energy_of(r, channel::kMachine);
    case Metric::energy_cpu: return energy_of(r, channel::kCpu);
    case Metric::energy_memory: return energy_of(r, channel::kMemory);
    case Metric::mean_power_machine: return r.mean_power(channel::kMachine);
    case Metric::network_bytes: return r.network_bytes;
  }
  return 0.0;
}

std::vector<double> MeasurementSeries::values(Metric m) const {
  std::vector<double> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(metric_value(r, m));
  return out;
}

EmissionComponents EmissionComponents::from_parts(double use_user, double use_network,
                                                  double embodied_user, double embodied_network) {
  EmissionComponents c;
  c.use_user_g = use_user;
  c.use_network_g = use_network;
  c.embodied_user_g = embodied_user;
  c.embodied_network_g = embodied_network;
  c.total_g = use_user + use_network + embodied_user + embodied_network;
  return c;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end()) it->get_to(out);
}

const char* drop_reason_name(DropReason r) { return r == DropReason::error ? "error" : "iqr"; }

}  // namespace

void to_json(json& j, const EmissionFactors& f) {
  j = json{{"grid_intensity", f.grid_intensity},
           {"joule_to_kwh", f.joule_to_kwh},
           {"transfer_intensity_base", f.transfer_intensity_base},
           {"base_year", f.base_year},
           {"halving_period_years", f.halving_period_years},
           {"assessment_year", f.assessment_year},
           {"device_embodied_total", f.device_embodied_total},
           {"device_lifetime_seconds", f.device_lifetime_seconds},
           {"resource_share", f.resource_share},
           {"embodied_to_use_ratio", f.embodied_to_use_ratio}};
}

void from_json(const json& j, EmissionFactors& f) {
  if (!j.is_object()) throw std::invalid_argument("emission factors must be a JSON object");
  const json known = EmissionFactors{};
  for (const auto& [k, v] : j.items())
    if (!known.contains(k)) throw std::invalid_argument("unknown emission factor: " + k);
  read_opt(j, "grid_intensity", f.grid_intensity);
  read_opt(j, "joule_to_kwh", f.joule_to_kwh);
  read_opt(j, "transfer_intensity_base", f.transfer_intensity_base);
  read_opt(j, "base_year", f.base_year);
  read_opt(j, "halving_period_years", f.halving_period_years);
  read_opt(j, "assessment_year", f.assessment_year);
  read_opt(j, "device_embodied_total", f.device_embodied_total);
  read_opt(j, "device_lifetime_seconds", f.device_lifetime_seconds);
  read_opt(j, "resource_share", f.resource_share);
  read_opt(j, "embodied_to_use_ratio", f.embodied_to_use_ratio);
}

void to_json(json& j, const FunctionalUnitKind& k) { j = k.name(); }
void from_json(const json& j, FunctionalUnitKind& k) { k = FunctionalUnitKind(j.get<std::string>()); }

void to_json(json& j, const FunctionalUnitResult& r) {
  j = json{{"unit", r.unit},
           {"run_id", r.run_id},
           {"started_at_ns", r.started_at_ns},
           {"ended_at_ns", r.ended_at_ns},
           {"energy_j", r.energy_j},
           {"network_bytes", r.network_bytes}};
  if (r.error) j["error"] = *r.error;
}

void from_json(const json& j, FunctionalUnitResult& r) {
  j.at("unit").get_to(r.unit);
  j.at("run_id").get_to(r.run_id);
  j.at("started_at_ns").get_to(r.started_at_ns);
  j.at("ended_at_ns").get_to(r.ended_at_ns);
  j.at("energy_j").get_to(r.energy_j);
  j.at("network_bytes").get_to(r.network_bytes);
  if (auto it = j.find("error"); it != j.end() && !it->is_null())
    r.error = it->get<std::string>();
  else
    r.error.reset();
}

void to_json(json& j, const ConditionSpec& c) {
  j = json{{"adblock", c.adblock},
           {"tracking_profile", c.tracking == TrackingProfile::restrictive ? "restrictive" : "permissive"},
           {"pgp", c.pgp},
           {"injected_latency_ms", c.injected_latency_ms}};
}

void from_json(const json& j, ConditionSpec& c) {
  c = ConditionSpec{};
  read_opt(j, "adblock", c.adblock);
  read_opt(j, "pgp", c.pgp);
  read_opt(j, "injected_latency_ms", c.injected_latency_ms);
  if (c.injected_latency_ms < 0) throw std::invalid_argument("injected_latency_ms must be >= 0");
  std::string tp = "permissive";
  read_opt(j, "tracking_profile", tp);
  if (tp == "restrictive")
    c.tracking = TrackingProfile::restrictive;
  else if (tp == "permissive")
    c.tracking = TrackingProfile::permissive;
  else
    throw std::invalid_argument("tracking_profile must be permissive or restrictive");
}

void to_json(json& j, const FilterLogEntry& e) {
  j = json{{"run_id", e.run_id}, {"reason", drop_reason_name(e.reason)}, {"detail", e.detail}};
}

void from_json(const json& j, FilterLogEntry& e) {
  j.at("run_id").get_to(e.run_id);
  auto reason = j.at("reason").get<std::string>();
  if (reason == "error")
    e.reason = DropReason::error;
  else if (reason == "iqr")
    e.reason = DropReason::iqr;
  else
    throw std::invalid_argument("unknown drop reason: " + reason);
  read_opt(j, "detail", e.detail);
}

void to_json(json& j, const MeasurementSeries& s) {
  j = json{{"service", s.service},
           {"condition", s.condition},
           {"unit", s.unit},
           {"raw_count", s.raw_count},
           {"valid_count", s.valid_count},
           {"retained_count", s.retained_count},
           {"results", s.results},
           {"filter_log", s.filter_log},
           {"filter_metric", s.filter_metric},
           {"quantile_rule", s.quantile_rule},
           {"iqr_low", s.iqr_low},
           {"iqr_high", s.iqr_high}};
}

void from_json(const json& j, MeasurementSeries& s) {
  j.at("service").get_to(s.service);
  j.at("condition").get_to(s.condition);
  j.at("unit").get_to(s.unit);
  j.at("raw_count").get_to(s.raw_count);
  j.at("valid_count").get_to(s.valid_count);
  j.at("retained_count").get_to(s.retained_count);
  j.at("results").get_to(s.results);
  j.at("filter_log").get_to(s.filter_log);
  read_opt(j, "filter_metric", s.filter_metric);
  read_opt(j, "quantile_rule", s.quantile_rule);
  read_opt(j, "iqr_low", s.iqr_low);
  read_opt(j, "iqr_high", s.iqr_high);
}

void to_json(json& j, const TestVerdict& v) {
  j = json{{"statistic", v.statistic},
           {"p_value", v.p_value},
           {"alpha", v.alpha},
           {"significant", v.significant},
           {"degenerate", v.degenerate}};
}

void from_json(const json& j, TestVerdict& v) {
  j.at("statistic").get_to(v.statistic);
  j.at("p_value").get_to(v.p_value);
  j.at("alpha").get_to(v.alpha);
  j.at("significant").get_to(v.significant);
  read_opt(j, "degenerate", v.degenerate);
}

void to_json(json& j, const ComparisonDelta& d) {
  j = json{{"metric", metric_name(d.metric)},
           {"mean_a", d.mean_a},
           {"mean_b", d.mean_b},
           {"delta", d.delta},
           {"delta_pct", d.delta_pct},
           {"statistic", d.statistic},
           {"p_value", d.p_value},
           {"significant", d.significant}};
  j["normality_a"] = d.normality_a ? json(*d.normality_a) : json(nullptr);
  j["normality_b"] = d.normality_b ? json(*d.normality_b) : json(nullptr);
}

void from_json(const json& j, ComparisonDelta& d) {
  d.metric = parse_metric(j.at("metric").get<std::string>());
  j.at("mean_a").get_to(d.mean_a);
  j.at("mean_b").get_to(d.mean_b);
  j.at("delta").get_to(d.delta);
  j.at("delta_pct").get_to(d.delta_pct);
  j.at("statistic").get_to(d.statistic);
  j.at("p_value").get_to(d.p_value);
  j.at("significant").get_to(d.significant);
  d.normality_a.reset();
  d.normality_b.reset();
  if (auto it = j.find("normality_a"); it != j.end() && !it->is_null()) d.normality_a = it->get<TestVerdict>();
  if (auto it = j.find("normality_b"); it != j.end() && !it->is_null()) d.normality_b = it->get<TestVerdict>();
}

void to_json(json& j, const EmissionComponents& c) {
  j = json{{"use_user_g", c.use_user_g},
           {"use_network_g", c.use_network_g},
           {"embodied_user_g", c.embodied_user_g},
           {"embodied_network_g", c.embodied_network_g},
           {"total_g", c.total_g}};
}

void from_json(const json& j, EmissionComponents& c) {
  c = EmissionComponents::from_parts(j.at("use_user_g").get<double>(), j.at("use_network_g").get<double>(),
                                     j.at("embodied_user_g").get<double>(),
                                     j.at("embodied_network_g").get<double>());
}

void to_json(json& j, const ScaleProjection& p) {
  j = json{{"population", p.population},
           {"sessions_per_year", p.sessions_per_year},
           {"per_session_saving_g", p.per_session_saving_g},
           {"annual_saving_t", p.annual_saving_t},
           {"flight_equivalents", p.flight_equivalents}};
}

void from_json(const json& j, ScaleProjection& p) {
  j.at("population").get_to(p.population);
  j.at("sessions_per_year").get_to(p.sessions_per_year);
  j.at("per_session_saving_g").get_to(p.per_session_saving_g);
  j.at("annual_saving_t").get_to(p.annual_saving_t);
  j.at("flight_equivalents").get_to(p.flight_equivalents);
}

namespace {
template <typename V>
json unit_map_to_json(const std::map<FunctionalUnitKind, V>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k.name()] = v;
  return out;
}

template <typename V>
std::map<FunctionalUnitKind, V> unit_map_from_json(const json& j) {
  std::map<FunctionalUnitKind, V> out;
  for (const auto& [k, v] : j.items()) out.emplace(FunctionalUnitKind(k), v.template get<V>());
  return out;
}
}  // namespace

void to_json(json& j, const EmissionReport& r) {
  j = json{{"per_unit", unit_map_to_json(r.per_unit)},
           {"baseline_per_unit", unit_map_to_json(r.baseline_per_unit)},
           {"source", unit_map_to_json(r.source)},
           {"projections", r.projections},
           {"factors", r.factors}};
}

void from_json(const json& j, EmissionReport& r) {
  r.per_unit = unit_map_from_json<EmissionComponents>(j.at("per_unit"));
  r.baseline_per_unit = unit_map_from_json<EmissionComponents>(j.at("baseline_per_unit"));
  r.source = unit_map_from_json<std::string>(j.at("source"));
  j.at("projections").get_to(r.projections);
  j.at("factors").get_to(r.factors);
}

}  // namespace fubench
