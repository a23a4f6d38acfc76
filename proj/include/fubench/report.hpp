#pragma once

// Comparison and emission tables between two (service, condition) series
// sets, population-scale projections and their rendered forms.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fubench/model.hpp"
#include "fubench/store.hpp"

namespace fubench {

/// Tonnes CO2e of one Paris - New York round trip, from 11.9 kt ~ 9,000 flights.
inline constexpr double kFlightRoundTripTonnes = 1.32;

struct Endpoint {
  std::string service;
  ConditionSpec condition;

  /// "service:condition-key"
  std::string label() const;
  bool operator==(const Endpoint&) const = default;
};

/// Parses "service" or "service:condition-key".
Endpoint parse_endpoint(const std::string& s);

struct ProjectionRequest {
  double population = 0.0;
  double sessions_per_year = 0.0;
};

struct ReportSpec {
  Endpoint baseline;
  Endpoint variant;
  std::vector<FunctionalUnitKind> units;  // empty: every unit both sides have
  EmissionFactors factors;
  std::vector<ProjectionRequest> projections;
  double flight_rt_tonnes = kFlightRoundTripTonnes;
};

class MissingSeries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeriesSource {
 public:
  virtual ~SeriesSource() = default;
  virtual std::optional<MeasurementSeries> series(const Endpoint& e, const FunctionalUnitKind& unit) const = 0;
  virtual std::vector<FunctionalUnitKind> units(const Endpoint& e) const = 0;
};

class StoreSeriesSource final : public SeriesSource {
 public:
  explicit StoreSeriesSource(const ResultsStore& store) : store_(store) {}
  std::optional<MeasurementSeries> series(const Endpoint& e, const FunctionalUnitKind& unit) const override;
  std::vector<FunctionalUnitKind> units(const Endpoint& e) const override;

 private:
  const ResultsStore& store_;
};

enum class Direction { saving, increase, neutral };

std::string direction_name(Direction d);

struct ComparisonRow {
  FunctionalUnitKind unit;
  ComparisonDelta delta;
  Direction direction = Direction::neutral;
  std::size_t n_baseline = 0;
  std::size_t n_variant = 0;
  bool below_quota = false;

  bool operator==(const ComparisonRow&) const = default;
};

/// One row per (unit, metric). Units without a measured series on either
/// side raise MissingSeries naming the gap.
std::vector<ComparisonRow> comparison_table(const ReportSpec& spec, const SeriesSource& source);

/// Per-unit CO2e breakdown of baseline minus variant. Session falls back to
/// the composition of its constituents when it was not measured directly.
EmissionReport emission_table(const ReportSpec& spec, const SeriesSource& source);

/// Throws std::invalid_argument unless every argument is positive.
ScaleProjection scale_projection(double per_session_g, double population, double sessions_per_year,
                                 double flight_rt_tonnes = kFlightRoundTripTonnes);

struct Report {
  ReportSpec spec;
  std::vector<ComparisonRow> comparison;
  EmissionReport emissions;
};

Report build_report(const ReportSpec& spec, const SeriesSource& source);

enum class Format { plain_table, csv, json, markdown };

Format parse_format(const std::string& s);
std::string render(const Report& report, Format format);

struct CsvRecord {
  std::string section;
  std::string unit;
  std::string key;
  std::string value;

  bool operator==(const CsvRecord&) const = default;
};

/// Reads the csv rendering back, header excluded.
std::vector<CsvRecord> parse_csv(const std::string& text);

}  // namespace fubench
