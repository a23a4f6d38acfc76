#include <doctest.h>

#include <random>

#include "fubench/model.hpp"

using namespace fubench;

TEST_CASE("validate_factors") {
  CHECK(validate_factors(EmissionFactors{}).ok());

  EmissionFactors f;
  f.resource_share = 0;
  auto v = validate_factors(f);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0] == "resource_share must be in (0,1]");

  f = EmissionFactors{};
  f.resource_share = 1.5;
  CHECK_FALSE(validate_factors(f).ok());

  f = EmissionFactors{};
  f.grid_intensity = -1;
  v = validate_factors(f);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].find("positive required") != std::string::npos);
  CHECK(v.violations[0].find("grid_intensity") == 0);
}

TEST_CASE("default factors reproduce the reference constants") {
  EmissionFactors f;
  CHECK(f.device_lifetime_seconds == doctest::Approx(4.5 * 365.25 * 86400));
  CHECK(f.embodied_to_use_ratio == 0.21);
  CHECK(f.grid_intensity * f.joule_to_kwh == doctest::Approx(1.24e-4).epsilon(0.005));
}

TEST_CASE("session composition") {
  const auto& seq = session_sequence();
  REQUIRE(seq.size() == 8);
  CHECK(seq.front() == FunctionalUnitKind::Login());
  CHECK(seq.back() == FunctionalUnitKind::Logout());
  int reads = 0;
  for (const auto& [k, n] : session_recipe()) {
    if (k == FunctionalUnitKind::Read()) reads = n;
    CHECK_FALSE(k.is_session());
  }
  CHECK(reads == 2);
  CHECK(session_recipe().size() == 7);
  CHECK(basic_units().size() == 7);
}

TEST_CASE("mean_power is energy over duration") {
  FunctionalUnitResult r;
  r.started_at_ns = 1'000'000'000;
  r.ended_at_ns = 4'500'000'000;
  r.energy_j = {{"machine", 80.5}, {"cpu", 30.0}, {"memory", 2.0}};
  CHECK(r.duration_s() == doctest::Approx(3.5));
  for (const auto& [ch, e] : r.energy_j) CHECK(r.mean_power(ch) == e / r.duration_s());
  CHECK(r.mean_power("gpu") == 0.0);
  CHECK(metric_value(r, Metric::mean_power_machine) == 80.5 / 3.5);
}

TEST_CASE("condition keys") {
  CHECK(ConditionSpec{}.key() == "baseline");
  ConditionSpec c;
  c.pgp = true;
  c.injected_latency_ms = 50;
  CHECK(c.key() == "pgp+lat50");
  c.adblock = true;
  c.tracking = TrackingProfile::restrictive;
  CHECK(c.key() == "adblock+restrictive+pgp+lat50");
  CHECK(parse_condition_key(c.key()) == c);
  CHECK(parse_condition_key("baseline") == ConditionSpec{});
  CHECK_THROWS_AS(parse_condition_key("pgp+wat"), std::invalid_argument);
  CHECK_THROWS_AS(parse_condition_key("lat-5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_condition_key("pgp+pgp"), std::invalid_argument);
}

TEST_CASE("metric names round-trip") {
  for (Metric m : all_metrics()) CHECK(parse_metric(metric_name(m)) == m);
  CHECK_THROWS(parse_metric("energy.gpu"));
}

namespace {

FunctionalUnitResult random_result(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> e(0, 1e4);
  std::uniform_int_distribution<std::int64_t> t(1, 400'000'000'000);
  const char* names[] = {"Login", "Read", "Session", "Checkout"};
  FunctionalUnitResult r;
  r.unit = FunctionalUnitKind(names[rng() % 4]);
  r.run_id = "run-" + std::to_string(rng() % 1000);
  r.started_at_ns = t(rng);
  r.ended_at_ns = r.started_at_ns + t(rng);
  r.energy_j = {{"cpu", e(rng)}, {"memory", e(rng)}, {"machine", e(rng)}};
  if (rng() % 3 == 0) r.energy_j["gpu"] = e(rng) / 3.0;
  r.network_bytes = std::floor(e(rng) * 1000);
  if (rng() % 5 == 0) r.error = "timeout waiting for #inbox";
  return r;
}

}  // namespace

TEST_CASE("serialization round-trips domain values") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto r = random_result(rng);
    CHECK(json::parse(json(r).dump()).get<FunctionalUnitResult>() == r);
  }

  MeasurementSeries s;
  s.service = "proton";
  s.condition.adblock = true;
  s.condition.injected_latency_ms = 50;
  s.unit = FunctionalUnitKind::Session();
  for (int i = 0; i < 10; ++i) s.results.push_back(random_result(rng));
  s.raw_count = 12;
  s.valid_count = 11;
  s.retained_count = 10;
  s.filter_log = {{"r1", DropReason::error, "crash"}, {"r2", DropReason::iqr, "outside"}};
  s.iqr_low = -3.25;
  s.iqr_high = 1e4 / 3;
  CHECK(json::parse(json(s).dump()).get<MeasurementSeries>() == s);

  EmissionFactors f;
  f.halving_period_years = 2;
  f.resource_share = 1.0 / 3.0;
  CHECK(json::parse(json(f).dump()).get<EmissionFactors>() == f);

  ComparisonDelta d;
  d.metric = Metric::network_bytes;
  d.mean_a = 1.0 / 7;
  d.delta = -2.5;
  d.normality_b = TestVerdict{1.5, 0.2, 0.05, false, false};
  CHECK(json::parse(json(d).dump()).get<ComparisonDelta>() == d);

  EmissionReport rep;
  rep.per_unit[FunctionalUnitKind::Session()] = EmissionComponents::from_parts(0.1, 1e-4, 0.03, 2.1e-5);
  rep.source[FunctionalUnitKind::Session()] = "measured";
  rep.projections.push_back({2e9, 12, 0.496, 11904, 9018.2});
  CHECK(json::parse(json(rep).dump()).get<EmissionReport>() == rep);
}

TEST_CASE("factors JSON rejects unknown keys and keeps defaults for missing ones") {
  auto f = json::parse(R"({"grid_intensity": 300})").get<EmissionFactors>();
  CHECK(f.grid_intensity == 300);
  CHECK(f.embodied_to_use_ratio == 0.21);
  CHECK_THROWS_AS(json::parse(R"({"grid_intensty": 300})").get<EmissionFactors>(), std::invalid_argument);
}

TEST_CASE("EmissionComponents total is the sum of its parts") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-1, 1);
  for (int i = 0; i < 100; ++i) {
    const double a = x(rng), b = x(rng), c = x(rng), d = x(rng);
    const auto e = EmissionComponents::from_parts(a, b, c, d);
    CHECK(e.total_g == a + b + c + d);
  }
}
