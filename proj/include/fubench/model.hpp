#pragma once

// Domain types shared by every module: emission constants, functional-unit
// measurement records, cleaned series and comparison/report values.
//
// Canonical units: grams CO2e, joules, bytes, seconds. Conversions (kWh, MB,
// tonnes) happen only at report boundaries.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fubench {

using json = nlohmann::json;

inline constexpr double kBytesPerMegabyte = 1e6;
inline constexpr double kSecondsPerYear = 365.25 * 86400.0;

struct EmissionFactors {
  double grid_intensity = 445.0;          // gCO2e / kWh
  double joule_to_kwh = 2.7778e-7;        // kWh / J
  double transfer_intensity_base = 0.06;  // kWh / GB at base_year
  int base_year = 2015;
  double halving_period_years = 1.0;
  int assessment_year = 2024;
  double device_embodied_total = 200000.0;  // gCO2e
  double device_lifetime_seconds = 4.5 * kSecondsPerYear;
  double resource_share = 1.0;
  double embodied_to_use_ratio = 0.21;

  bool operator==(const EmissionFactors&) const = default;
};

struct ValidationResult {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationResult validate_factors(const EmissionFactors& f);

/// Label of a measured user interaction. The seven basic mail units and the
/// composite Session are predefined; any other label is a user-defined unit.
class FunctionalUnitKind {
 public:
  FunctionalUnitKind() = default;
  explicit FunctionalUnitKind(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  bool is_session() const;

  static FunctionalUnitKind Login() { return FunctionalUnitKind("Login"); }
  static FunctionalUnitKind Logout() { return FunctionalUnitKind("Logout"); }
  static FunctionalUnitKind NoAttachment() { return FunctionalUnitKind("NoAttachment"); }
  static FunctionalUnitKind Attachment() { return FunctionalUnitKind("Attachment"); }
  static FunctionalUnitKind Read() { return FunctionalUnitKind("Read"); }
  static FunctionalUnitKind Reply() { return FunctionalUnitKind("Reply"); }
  static FunctionalUnitKind Delete() { return FunctionalUnitKind("Delete"); }
  static FunctionalUnitKind Session() { return FunctionalUnitKind("Session"); }

  auto operator<=>(const FunctionalUnitKind&) const = default;

 private:
  std::string name_;
};

/// Basic units in the order a Session performs them:
/// Login, NoAttachment, Attachment, Read, Reply, Read, Delete, Logout.
const std::vector<FunctionalUnitKind>& session_sequence();

/// Distinct constituents of Session with their multiplicity (Read counts twice).
std::vector<std::pair<FunctionalUnitKind, int>> session_recipe();

/// The seven predefined basic kinds.
const std::vector<FunctionalUnitKind>& basic_units();

namespace channel {
inline const std::string kCpu = "cpu";
inline const std::string kMemory = "memory";
inline const std::string kMachine = "machine";
inline const std::string kNetwork = "network";
}  // namespace channel

/// One execution of one functional unit.
struct FunctionalUnitResult {
  FunctionalUnitKind unit;
  std::string run_id;
  std::int64_t started_at_ns = 0;
  std::int64_t ended_at_ns = 0;
  std::map<std::string, double> energy_j;
  double network_bytes = 0.0;
  std::optional<std::string> error;

  double duration_s() const;
  /// energy / duration for one channel; 0 when the channel is absent.
  double mean_power(const std::string& channel) const;
  bool valid() const { return !error.has_value(); }

  bool operator==(const FunctionalUnitResult&) const = default;
};

enum class TrackingProfile { permissive, restrictive };

struct ConditionSpec {
  bool adblock = false;
  TrackingProfile tracking = TrackingProfile::permissive;
  bool pgp = false;
  int injected_latency_ms = 0;

  /// Canonical directory-safe key: "baseline", or '+'-joined parts out of
  /// adblock, restrictive, pgp, lat<N>, in that order.
  std::string key() const;

  bool operator==(const ConditionSpec&) const = default;
};

/// Inverse of ConditionSpec::key(). Throws std::invalid_argument.
ConditionSpec parse_condition_key(const std::string& key);

enum class Metric {
  duration,
  energy_machine,
  energy_cpu,
  energy_memory,
  mean_power_machine,
  network_bytes,
};

const std::vector<Metric>& all_metrics();
std::string metric_name(Metric m);
Metric parse_metric(const std::string& name);
double metric_value(const FunctionalUnitResult& r, Metric m);

enum class DropReason { error, iqr };

struct FilterLogEntry {
  std::string run_id;
  DropReason reason = DropReason::error;
  std::string detail;

  bool operator==(const FilterLogEntry&) const = default;
};

inline constexpr std::size_t kAcceptanceSampleCount = 100;

struct MeasurementSeries {
  std::string service;
  ConditionSpec condition;
  FunctionalUnitKind unit;
  std::size_t raw_count = 0;
  std::size_t valid_count = 0;
  std::size_t retained_count = 0;
  std::vector<FunctionalUnitResult> results;
  std::vector<FilterLogEntry> filter_log;
  std::string filter_metric = "energy.machine";
  std::string quantile_rule = "type7, iterated to fixed point";
  double iqr_low = 0.0;
  double iqr_high = 0.0;

  bool acceptance_grade() const { return retained_count >= kAcceptanceSampleCount; }
  std::vector<double> values(Metric m) const;

  bool operator==(const MeasurementSeries&) const = default;
};

struct TestVerdict {
  double statistic = 0.0;
  double p_value = 1.0;
  double alpha = 0.05;
  bool significant = false;
  bool degenerate = false;

  bool operator==(const TestVerdict&) const = default;
};

struct ComparisonDelta {
  Metric metric = Metric::duration;
  double mean_a = 0.0;
  double mean_b = 0.0;
  double delta = 0.0;      // mean_a - mean_b; positive means B saves
  double delta_pct = 0.0;  // 100 * delta / mean_a
  double statistic = 0.0;
  double p_value = 1.0;
  std::optional<TestVerdict> normality_a;
  std::optional<TestVerdict> normality_b;
  bool significant = false;

  bool operator==(const ComparisonDelta&) const = default;
};

struct EmissionComponents {
  double use_user_g = 0.0;
  double use_network_g = 0.0;
  double embodied_user_g = 0.0;
  double embodied_network_g = 0.0;
  double total_g = 0.0;

  static EmissionComponents from_parts(double use_user, double use_network,
                                       double embodied_user, double embodied_network);

  bool operator==(const EmissionComponents&) const = default;
};

struct ScaleProjection {
  double population = 0.0;
  double sessions_per_year = 0.0;
  double per_session_saving_g = 0.0;
  double annual_saving_t = 0.0;
  double flight_equivalents = 0.0;

  bool operator==(const ScaleProjection&) const = default;
};

struct EmissionReport {
  std::map<FunctionalUnitKind, EmissionComponents> per_unit;
  /// Absolute emissions of the baseline condition, for percentage context.
  std::map<FunctionalUnitKind, EmissionComponents> baseline_per_unit;
  /// "measured" or "composed" per unit.
  std::map<FunctionalUnitKind, std::string> source;
  std::vector<ScaleProjection> projections;
  EmissionFactors factors;

  bool operator==(const EmissionReport&) const = default;
};

// JSON mapping. Field names follow the struct members.
void to_json(json& j, const EmissionFactors& f);
void from_json(const json& j, EmissionFactors& f);
void to_json(json& j, const FunctionalUnitKind& k);
void from_json(const json& j, FunctionalUnitKind& k);
void to_json(json& j, const FunctionalUnitResult& r);
void from_json(const json& j, FunctionalUnitResult& r);
void to_json(json& j, const ConditionSpec& c);
void from_json(const json& j, ConditionSpec& c);
void to_json(json& j, const FilterLogEntry& e);
void from_json(const json& j, FilterLogEntry& e);
void to_json(json& j, const MeasurementSeries& s);
void from_json(const json& j, MeasurementSeries& s);
void to_json(json& j, const TestVerdict& v);
void from_json(const json& j, TestVerdict& v);
void to_json(json& j, const ComparisonDelta& d);
void from_json(const json& j, ComparisonDelta& d);
void to_json(json& j, const EmissionComponents& c);
void from_json(const json& j, EmissionComponents& c);
void to_json(json& j, const ScaleProjection& p);
void from_json(const json& j, ScaleProjection& p);
void to_json(json& j, const EmissionReport& r);
void from_json(const json& j, EmissionReport& r);

}  // namespace fubench
