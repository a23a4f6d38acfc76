#include "fubench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

namespace fubench::stats {

namespace {

// Sum over sorted copies so results do not depend on input order.
struct Moments {
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations
  std::size_t n = 0;
};

Moments moments(std::span<const double> values) {
  std::vector<double> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  Moments m;
  m.n = s.size();
  if (s.empty()) return m;
  m.mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(m.n);
  std::vector<double> dev2(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) dev2[i] = (s[i] - m.mean) * (s[i] - m.mean);
  std::sort(dev2.begin(), dev2.end());
  m.m2 = std::accumulate(dev2.begin(), dev2.end(), 0.0);
  return m;
}

double sample_variance(const Moments& m) { return m.n > 1 ? m.m2 / static_cast<double>(m.n - 1) : 0.0; }


TestVerdict make_verdict(double statistic, double p, double alpha, bool degenerate = false) {
  TestVerdict v;
  v.statistic = statistic;
  v.p_value = std::clamp(p, 0.0, 1.0);
  v.alpha = alpha;
  v.significant = v.p_value < alpha;
  v.degenerate = degenerate;
  return v;
}

double skew_z(double b2, double n) {
  double y = b2 * std::sqrt(((n + 1) * (n + 3)) / (6.0 * (n - 2)));
  const double beta2 =
      3.0 * (n * n + 27 * n - 70) * (n + 1) * (n + 3) / ((n - 2.0) * (n + 5) * (n + 7) * (n + 9));
  const double w2 = -1 + std::sqrt(2 * (beta2 - 1));
  const double delta = 1 / std::sqrt(0.5 * std::log(w2));
  const double alpha = std::sqrt(2.0 / (w2 - 1));
  if (y == 0) y = 1;
  return delta * std::log(y / alpha + std::sqrt((y / alpha) * (y / alpha) + 1));
}

double kurtosis_z(double b2, double n) {
  const double e = 3.0 * (n - 1) / (n + 1);
  const double varb2 = 24.0 * n * (n - 2) * (n - 3) / ((n + 1) * (n + 1) * (n + 3) * (n + 5));
  const double x = (b2 - e) / std::sqrt(varb2);
  const double sqrtbeta1 = 6.0 * (n * n - 5 * n + 2) / ((n + 7) * (n + 9)) *
                           std::sqrt((6.0 * (n + 3) * (n + 5)) / (n * (n - 2) * (n - 3)));
  const double a = 6.0 + 8.0 / sqrtbeta1 * (2.0 / sqrtbeta1 + std::sqrt(1 + 4.0 / (sqrtbeta1 * sqrtbeta1)));
  const double term1 = 1 - 2 / (9.0 * a);
  const double denom = 1 + x * std::sqrt(2 / (a - 4.0));
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double term2 = std::copysign(std::cbrt((1 - 2.0 / a) / std::fabs(denom)), denom);
  return (term1 - term2) / std::sqrt(2 / (9.0 * a));
}

}  // namespace

double quantile_type7(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw InsufficientData("quantile of empty sequence");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

IqrResult iqr_filter(std::span<const double> values) {
  if (values.size() < 4)
    throw InsufficientData("IQR filter needs at least 4 values, got " + std::to_string(values.size()));
  // Indices into `values` still retained; re-filtered until a pass drops nothing.
  std::vector<std::size_t> keep(values.size());
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  IqrResult out;
  for (;;) {
    std::vector<double> sorted;
    sorted.reserve(keep.size());
    for (std::size_t i : keep) sorted.push_back(values[i]);
    std::sort(sorted.begin(), sorted.end());
    const double q1 = quantile_type7(sorted, 0.25);
    const double q3 = quantile_type7(sorted, 0.75);
    const double lo = q1 - kIqrFactor * (q3 - q1);
    const double hi = q3 + kIqrFactor * (q3 - q1);
    std::vector<std::size_t> next;
    for (std::size_t i : keep)
      if (values[i] >= lo && values[i] <= hi) next.push_back(i);
    if (next.size() < 4 && next.size() != keep.size()) break;
    out.low = lo;
    out.high = hi;
    ++out.passes;
    if (next.size() == keep.size()) break;
    keep = std::move(next);
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (k < keep.size() && keep[k] == i) {
      out.retained.push_back(values[i]);
      out.retained_index.push_back(i);
      ++k;
    } else {
      out.dropped.push_back(values[i]);
      out.dropped_index.push_back(i);
    }
  }
  return out;
}

TestVerdict welch_t_test(std::span<const double> a, std::span<const double> b, double alpha) {
  if (a.size() < 2 || b.size() < 2) throw InsufficientData("Welch t-test needs at least 2 values per sample");
  const Moments ma = moments(a);
  const Moments mb = moments(b);
  const double va = sample_variance(ma) / static_cast<double>(ma.n);
  const double vb = sample_variance(mb) / static_cast<double>(mb.n);
  const double diff = ma.mean - mb.mean;
  const double se2 = va + vb;
  if (se2 == 0.0) {
    if (diff == 0.0) return make_verdict(0.0, 1.0, alpha, true);
    return make_verdict(std::copysign(std::numeric_limits<double>::infinity(), diff), 0.0, alpha, true);
  }
  const double t = diff / std::sqrt(se2);
  const double df = se2 * se2 / (va * va / static_cast<double>(ma.n - 1) + vb * vb / static_cast<double>(mb.n - 1));
  boost::math::students_t dist(df);
  const double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
  return make_verdict(t, p, alpha);
}

TestVerdict normality_check(std::span<const double> values, double alpha) {
  if (values.size() < 8)
    throw InsufficientData("normality check needs at least 8 values, got " + std::to_string(values.size()));
  const Moments m = moments(values);
  const double n = static_cast<double>(m.n);
  const double var = m.m2 / n;
  if (var == 0.0) return make_verdict(0.0, 1.0, alpha, true);
  std::vector<double> d3, d4;
  d3.reserve(m.n);
  d4.reserve(m.n);
  for (double v : values) {
    const double d = v - m.mean;
    d3.push_back(d * d * d);
    d4.push_back(d * d * d * d);
  }
  std::sort(d3.begin(), d3.end());
  std::sort(d4.begin(), d4.end());
  const double m3 = std::accumulate(d3.begin(), d3.end(), 0.0) / n;
  const double m4 = std::accumulate(d4.begin(), d4.end(), 0.0) / n;
  const double zs = skew_z(m3 / std::pow(var, 1.5), n);
  const double zk = kurtosis_z(m4 / (var * var), n);
  const double k2 = zs * zs + zk * zk;
  if (std::isnan(k2)) return make_verdict(k2, 1.0, alpha, true);
  // chi-square with 2 degrees of freedom
  return make_verdict(k2, std::exp(-k2 / 2.0), alpha);
}

Summary summarize(std::span<const double> values) {
  if (values.size() < 2) throw InsufficientData("summary needs at least 2 values, got " + std::to_string(values.size()));
  const Moments m = moments(values);
  Summary s;
  s.mean = m.mean;
  s.sd = std::sqrt(sample_variance(m));
  s.n = m.n;
  const double half = 1.959963984540054 * s.sd / std::sqrt(static_cast<double>(s.n));
  s.ci95_low = s.mean - half;
  s.ci95_high = s.mean + half;
  return s;
}

Summary summarize(const MeasurementSeries& series, Metric metric) { return summarize(series.values(metric)); }

MeasurementSeries build_series(std::string service, ConditionSpec condition, FunctionalUnitKind unit,
                               const std::vector<FunctionalUnitResult>& raw) {
  MeasurementSeries s;
  s.service = std::move(service);
  s.condition = condition;
  s.unit = std::move(unit);
  std::vector<FunctionalUnitResult> valid;
  for (const auto& r : raw) {
    if (r.unit != s.unit) continue;
    ++s.raw_count;
    if (r.error) {
      s.filter_log.push_back({r.run_id, DropReason::error, *r.error});
      continue;
    }
    valid.push_back(r);
  }
  s.valid_count = valid.size();
  if (valid.size() < 4) {
    s.results = std::move(valid);
    s.retained_count = s.results.size();
    s.iqr_low = std::numeric_limits<double>::lowest();
    s.iqr_high = std::numeric_limits<double>::max();
    return s;
  }
  std::vector<double> energy;
  energy.reserve(valid.size());
  for (const auto& r : valid) energy.push_back(metric_value(r, Metric::energy_machine));
  const IqrResult f = iqr_filter(energy);
  s.iqr_low = f.low;
  s.iqr_high = f.high;
  for (std::size_t i : f.retained_index) s.results.push_back(valid[i]);
  for (std::size_t i : f.dropped_index) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "energy.machine %.6g outside IQR fence", energy[i]);
    s.filter_log.push_back({valid[i].run_id, DropReason::iqr, buf});
  }
  s.retained_count = s.results.size();
  return s;
}

ComparisonDelta compare_series(const MeasurementSeries& a, const MeasurementSeries& b, Metric metric,
                               double alpha) {
  if (a.unit != b.unit)
    throw std::domain_error("cannot compare unit " + a.unit.name() + " with " + b.unit.name());
  const auto va = a.values(metric);
  const auto vb = b.values(metric);
  ComparisonDelta d;
  d.metric = metric;
  d.mean_a = summarize(va).mean;
  d.mean_b = summarize(vb).mean;
  d.delta = d.mean_a - d.mean_b;
  d.delta_pct = d.delta == 0.0 ? 0.0 : 100.0 * d.delta / d.mean_a;
  const TestVerdict w = welch_t_test(va, vb, alpha);
  d.statistic = w.statistic;
  d.p_value = w.p_value;
  d.significant = w.significant;
  if (va.size() >= 8) d.normality_a = normality_check(va, alpha);
  if (vb.size() >= 8) d.normality_b = normality_check(vb, alpha);
  return d;
}

Summary compose_session(const std::map<FunctionalUnitKind, Summary>& units) {
  std::string missing;
  for (const auto& [kind, count] : session_recipe())
    if (!units.contains(kind)) missing += (missing.empty() ? "" : ", ") + kind.name();
  if (!missing.empty()) throw MissingConstituent("Session constituents missing: " + missing);

  Summary out;
  out.synthetic = true;
  out.n = std::numeric_limits<std::size_t>::max();
  double var = 0.0;
  double se2 = 0.0;
  for (const auto& [kind, count] : session_recipe()) {
    const Summary& s = units.at(kind);
    const double k = count;
    out.mean += k * s.mean;
    var += k * s.sd * s.sd;
    if (s.n > 0) se2 += k * k * s.sd * s.sd / static_cast<double>(s.n);
    out.n = std::min(out.n, s.n);
  }
  out.sd = std::sqrt(var);
  const double half = 1.959963984540054 * std::sqrt(se2);
  out.ci95_low = out.mean - half;
  out.ci95_high = out.mean + half;
  return out;
}

}  // namespace fubench::stats
