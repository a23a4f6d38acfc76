#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "fubench/stats.hpp"
#include "test_support.hpp"

using namespace fubench;
using namespace fubench::stats;

TEST_CASE("quantile_type7") {
  const std::vector<double> v = {1, 2, 3, 4, 100};
  CHECK(quantile_type7(v, 0.25) == 2.0);
  CHECK(quantile_type7(v, 0.75) == 4.0);
  CHECK(quantile_type7(v, 0.5) == 3.0);
  const std::vector<double> w = {1, 2, 3, 4};
  CHECK(quantile_type7(w, 0.25) == 1.75);
  CHECK(quantile_type7(w, 0.75) == 3.25);
}

TEST_CASE("iqr_filter examples") {
  const std::vector<double> flat = {5, 5, 5, 5, 5};
  auto r = iqr_filter(flat);
  CHECK(r.retained == flat);
  CHECK(r.dropped.empty());

  // Q1 = 2, Q3 = 4 -> fences [-1, 7]
  const std::vector<double> v = {1, 2, 3, 4, 100};
  r = iqr_filter(v);
  CHECK(r.dropped == std::vector<double>{100});
  CHECK(r.retained == std::vector<double>{1, 2, 3, 4});
  CHECK(r.dropped_index == std::vector<std::size_t>{4});

  auto again = iqr_filter(r.retained);
  CHECK(again.dropped.empty());
  CHECK(again.retained == r.retained);

  CHECK_THROWS_AS(iqr_filter(std::vector<double>{1, 2, 3}), InsufficientData);
}

TEST_CASE("iqr_filter keeps input order") {
  const std::vector<double> v = {9, -40, 3, 8, 2, 1, 7, 5, 500, 4};
  auto r = iqr_filter(v);
  CHECK(r.dropped == std::vector<double>{-40, 500});
  CHECK(r.retained == std::vector<double>{9, 3, 8, 2, 1, 7, 5, 4});
}

TEST_CASE("iqr_filter properties over generated samples") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = testsupport::random_sample(rng, trial);
    const auto r = iqr_filter(v);
    CHECK(r.retained.size() + r.dropped.size() == v.size());
    // idempotent
    const auto again = iqr_filter(r.retained);
    CHECK(again.dropped.empty());
    // every retained value lies inside the final fences
    for (double x : r.retained) {
      CHECK(x >= r.low);
      CHECK(x <= r.high);
    }
    // filtering never increases the variance
    CHECK(summarize(r.retained).sd <= summarize(v).sd * (1 + 1e-12));
  }
}

TEST_CASE("welch_t_test symmetry") {
  const std::vector<double> a = {1.0, 2.5, 3.1, 4.7, 2.2};
  const std::vector<double> b = {2.0, 3.5, 3.9, 5.1, 4.4, 3.3};
  auto same = welch_t_test(a, a);
  CHECK(same.p_value == 1.0);
  CHECK_FALSE(same.significant);

  auto ab = welch_t_test(a, b);
  auto ba = welch_t_test(b, a);
  CHECK(ab.statistic == -ba.statistic);
  CHECK(ab.p_value == ba.p_value);

  auto flat = welch_t_test(std::vector<double>{2, 2, 2}, std::vector<double>{2, 2});
  CHECK(flat.degenerate);
  CHECK(flat.p_value == 1.0);
  auto flat_apart = welch_t_test(std::vector<double>{2, 2, 2}, std::vector<double>{3, 3});
  CHECK(flat_apart.degenerate);
  CHECK(flat_apart.significant);

  CHECK_THROWS_AS(welch_t_test(std::vector<double>{1}, b), InsufficientData);
}

TEST_CASE("welch_t_test matches the SciPy reference") {
  const json ref = testsupport::load_json("stats_reference.json");
  int idx = 0;
  for (const auto& d : ref.at("welch")) {
    const auto a = d.at("a").get<std::vector<double>>();
    const auto b = d.at("b").get<std::vector<double>>();
    const auto v = welch_t_test(a, b);
    INFO("dataset " << idx++);
    CHECK(v.statistic == doctest::Approx(d.at("t").get<double>()).epsilon(1e-9));
    CHECK(std::fabs(v.p_value - d.at("p").get<double>()) < 1e-6);
    CHECK(v.p_value == doctest::Approx(d.at("p").get<double>()).epsilon(1e-7));
  }
  // first dataset: means 10 vs 12, sd 1, n = 100
  const auto& first = ref.at("welch").at(0);
  CHECK(welch_t_test(first.at("a").get<std::vector<double>>(), first.at("b").get<std::vector<double>>()).significant);
}

TEST_CASE("normality_check") {
  const json ref = testsupport::load_json("stats_reference.json");
  for (const auto& d : ref.at("normality")) {
    const auto xs = d.at("values").get<std::vector<double>>();
    const auto v = normality_check(xs);
    INFO(d.at("name").get<std::string>());
    CHECK(v.statistic == doctest::Approx(d.at("k2").get<double>()).epsilon(1e-9));
    CHECK(v.p_value == doctest::Approx(d.at("p").get<double>()).epsilon(1e-6));
    if (d.at("name") == "ramp500") CHECK(v.significant);
    if (d.at("name") == "gaussian500") CHECK_FALSE(v.significant);
  }

  std::vector<double> ramp(500);
  for (int i = 0; i < 500; ++i) ramp[i] = i + 1;
  CHECK(normality_check(ramp).significant);

  const auto flat = normality_check(std::vector<double>(20, 3.0));
  CHECK(flat.degenerate);
  CHECK_FALSE(flat.significant);
  CHECK_THROWS_AS(normality_check(std::vector<double>{1, 2, 3, 4, 5, 6, 7}), InsufficientData);
}

TEST_CASE("summarize") {
  auto s = summarize(std::vector<double>{2, 2, 2});
  CHECK(s.mean == 2);
  CHECK(s.sd == 0);
  s = summarize(std::vector<double>{1, 2, 3});
  CHECK(s.mean == 2);
  CHECK(s.sd == 1);
  CHECK(s.n == 3);
  CHECK(s.ci95_low == doctest::Approx(2 - 1.959964 / std::sqrt(3.0)));
  CHECK_THROWS_AS(summarize(std::vector<double>{1}), InsufficientData);
}

TEST_CASE("summarize is permutation invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = testsupport::random_sample(rng, trial);
    const auto s = summarize(v);
    std::shuffle(v.begin(), v.end(), rng);
    const auto t = summarize(v);
    CHECK(s.mean == t.mean);
    CHECK(s.sd == t.sd);
  }
}

namespace {

FunctionalUnitResult run(const std::string& id, double seconds, double machine_j, double bytes,
                         FunctionalUnitKind unit = FunctionalUnitKind::Session()) {
  FunctionalUnitResult r;
  r.unit = std::move(unit);
  r.run_id = id;
  r.started_at_ns = 0;
  r.ended_at_ns = static_cast<std::int64_t>(seconds * 1e9);
  r.energy_j = {{"machine", machine_j}, {"cpu", machine_j / 2}, {"memory", machine_j / 20}};
  r.network_bytes = bytes;
  return r;
}

}  // namespace

TEST_CASE("build_series drops failed runs then IQR outliers atomically") {
  std::vector<FunctionalUnitResult> raw;
  for (int i = 0; i < 20; ++i) raw.push_back(run("r" + std::to_string(i), 10 + i % 3, 100 + i % 5, 1000 + i));
  raw.push_back(run("outlier", 10, 1000, 5));
  auto failed = run("failed", 10, 100, 1000);
  failed.error = "timeout";
  raw.push_back(failed);
  raw.push_back(run("other-unit", 10, 100, 1000, FunctionalUnitKind::Login()));

  const auto s = build_series("svc", ConditionSpec{}, FunctionalUnitKind::Session(), raw);
  CHECK(s.raw_count == 22);
  CHECK(s.valid_count == 21);
  CHECK(s.retained_count == 20);
  CHECK(s.results.size() == 20);
  REQUIRE(s.filter_log.size() == 2);
  CHECK(s.filter_log[0].run_id == "failed");
  CHECK(s.filter_log[0].reason == DropReason::error);
  CHECK(s.filter_log[1].run_id == "outlier");
  CHECK(s.filter_log[1].reason == DropReason::iqr);
  for (const auto& r : s.results) {
    CHECK_FALSE(r.error);
    CHECK(metric_value(r, Metric::energy_machine) >= s.iqr_low);
    CHECK(metric_value(r, Metric::energy_machine) <= s.iqr_high);
  }
  CHECK_FALSE(s.acceptance_grade());
}

TEST_CASE("compare_series") {
  std::vector<FunctionalUnitResult> ra, rb;
  for (int i = 0; i < 30; ++i) {
    ra.push_back(run("a" + std::to_string(i), 100 + i % 7, 2400 + 10 * (i % 5), 15e6 + i));
    rb.push_back(run("b" + std::to_string(i), 96 + i % 6, 2300 + 12 * (i % 4), 13e6 + i));
  }
  const auto a = build_series("outlook", ConditionSpec{}, FunctionalUnitKind::Session(), ra);
  ConditionSpec ab;
  ab.adblock = true;
  const auto b = build_series("outlook", ab, FunctionalUnitKind::Session(), rb);

  const auto same = compare_series(a, a, Metric::duration);
  CHECK(same.delta == 0.0);
  CHECK(same.delta_pct == 0.0);
  CHECK_FALSE(same.significant);

  for (Metric m : all_metrics()) {
    const auto d1 = compare_series(a, b, m);
    const auto d2 = compare_series(b, a, m);
    CHECK(d1.delta == -d2.delta);
    CHECK(d1.delta == d1.mean_a - d1.mean_b);
    CHECK(d1.delta_pct == doctest::Approx(100 * d1.delta / d1.mean_a));
    CHECK(d1.significant == (d1.p_value < 0.05));
    CHECK(d1.normality_a.has_value());
  }
  CHECK(compare_series(a, b, Metric::network_bytes).significant);

  const auto login = build_series("outlook", ConditionSpec{}, FunctionalUnitKind::Login(),
                                  {run("x", 1, 1, 1, FunctionalUnitKind::Login()),
                                   run("y", 2, 2, 2, FunctionalUnitKind::Login())});
  CHECK_THROWS_AS(compare_series(a, login, Metric::duration), std::domain_error);
}

TEST_CASE("compose_session") {
  std::map<FunctionalUnitKind, Summary> units;
  for (const auto& [k, n] : session_recipe()) units[k] = Summary{0, 0, 10, 0, 0, false};
  auto zero = compose_session(units);
  CHECK(zero.mean == 0);
  CHECK(zero.synthetic);

  for (auto& [k, s] : units) s = Summary{1.0, 0.5, 100, 0, 0, false};
  const auto eight = compose_session(units);
  CHECK(eight.mean == 8.0);
  CHECK(eight.sd == doctest::Approx(std::sqrt(8 * 0.25)));
  CHECK(eight.n == 100);

  units.erase(FunctionalUnitKind::Delete());
  units.erase(FunctionalUnitKind::Reply());
  try {
    compose_session(units);
    FAIL("expected MissingConstituent");
  } catch (const MissingConstituent& e) {
    const std::string msg = e.what();
    CHECK(msg.find("Reply") != std::string::npos);
    CHECK(msg.find("Delete") != std::string::npos);
  }
}
