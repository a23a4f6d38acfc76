#pragma once

// Data cleaning and significance testing for measurement series.
//
// Quartiles use linear interpolation between order statistics ("type 7").
// IQR filtering is iterated to a fixed point.
// Two-sample comparisons use Welch's unequal-variance t-test; normality uses
// the D'Agostino-Pearson K^2 omnibus test and is reported as advisory only.

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fubench/model.hpp"

namespace fubench::stats {

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kDefaultAlpha = 0.05;
inline constexpr double kIqrFactor = 1.5;

/// Type-7 quantile of an already sorted, non-empty sequence.
double quantile_type7(std::span<const double> sorted, double p);

struct IqrResult {
  std::vector<double> retained;
  std::vector<double> dropped;
  std::vector<std::size_t> retained_index;
  std::vector<std::size_t> dropped_index;
  double low = 0.0;   // fences of the last pass
  double high = 0.0;
  int passes = 0;
};

/// Keeps values inside [Q1 - 1.5 IQR, Q3 + 1.5 IQR], preserving input order.
/// The rule is re-applied to the retained values until a pass drops nothing,
/// so filtering the output again is a no-op. Throws InsufficientData for
/// fewer than 4 values.
IqrResult iqr_filter(std::span<const double> values);

/// Two-sided Welch t-test. statistic > 0 when mean(a) > mean(b).
/// Both samples constant: p = 1 if the means agree, p = 0 otherwise; flagged
/// degenerate either way.
TestVerdict welch_t_test(std::span<const double> a, std::span<const double> b,
                         double alpha = kDefaultAlpha);

/// D'Agostino-Pearson omnibus test. significant == normality rejected.
/// Requires at least 8 values; a constant sequence yields a degenerate,
/// non-significant verdict.
TestVerdict normality_check(std::span<const double> values, double alpha = kDefaultAlpha);

struct Summary {
  double mean = 0.0;
  double sd = 0.0;
  std::size_t n = 0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  bool synthetic = false;
};

Summary summarize(std::span<const double> values);
Summary summarize(const MeasurementSeries& series, Metric metric);

/// Assembles a series from raw results of one unit: failed runs are dropped
/// first, then the IQR filter on machine energy drops whole runs.
MeasurementSeries build_series(std::string service, ConditionSpec condition, FunctionalUnitKind unit,
                               const std::vector<FunctionalUnitResult>& raw);

/// Throws std::domain_error when the two series describe different units.
ComparisonDelta compare_series(const MeasurementSeries& a, const MeasurementSeries& b, Metric metric,
                               double alpha = kDefaultAlpha);

class MissingConstituent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Synthetic Session summary from its constituents' summaries of one metric.
/// Means add with recipe multiplicity; per-session variance adds assuming
/// independent draws. Throws MissingConstituent naming every absent unit.
Summary compose_session(const std::map<FunctionalUnitKind, Summary>& units);

}  // namespace fubench::stats
