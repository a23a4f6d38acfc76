#include <doctest.h>

#include <random>

#include "fubench/emissions.hpp"
#include "fubench/report.hpp"
#include "fubench/stats.hpp"
#include "test_support.hpp"

using namespace fubench;

namespace {

class MemorySource final : public SeriesSource {
 public:
  std::map<std::string, std::map<FunctionalUnitKind, MeasurementSeries>> data;

  std::optional<MeasurementSeries> series(const Endpoint& e, const FunctionalUnitKind& u) const override {
    auto it = data.find(e.label());
    if (it == data.end()) return std::nullopt;
    auto jt = it->second.find(u);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  }
  std::vector<FunctionalUnitKind> units(const Endpoint& e) const override {
    std::vector<FunctionalUnitKind> out;
    auto it = data.find(e.label());
    if (it != data.end())
      for (const auto& [u, s] : it->second) out.push_back(u);
    return out;
  }

  void add(const Endpoint& e, const FunctionalUnitKind& u, double joules, double bytes, double seconds,
           unsigned seed, std::size_t n = 30) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(1.0, 0.02);
    std::vector<FunctionalUnitResult> raw;
    for (std::size_t i = 0; i < n; ++i) {
      FunctionalUnitResult r;
      r.unit = u;
      r.run_id = "r" + std::to_string(i);
      r.started_at_ns = 1'000'000'000;
      r.ended_at_ns = r.started_at_ns + static_cast<std::int64_t>(seconds * noise(rng) * 1e9);
      r.energy_j = {{"machine", joules * noise(rng)}};
      r.network_bytes = bytes * noise(rng);
      raw.push_back(r);
    }
    data[e.label()][u] = stats::build_series(e.service, e.condition, u, raw);
  }
};

Endpoint ep(const std::string& s) { return parse_endpoint(s); }

ReportSpec spec(const std::string& a, const std::string& b) {
  ReportSpec s;
  s.baseline = ep(a);
  s.variant = ep(b);
  return s;
}

void fill_session_parts(MemorySource& src, const Endpoint& e, double scale, unsigned seed) {
  unsigned k = seed;
  for (const auto& u : basic_units()) src.add(e, u, 100 * scale, 2e5 * scale, 5 * scale, k++);
}

}  // namespace

TEST_CASE("endpoints") {
  CHECK(ep("outlook").label() == "outlook:baseline");
  CHECK(ep("selfhosted:pgp+lat50").condition.injected_latency_ms == 50);
  CHECK(ep("selfhosted:pgp+lat50").condition.pgp);
  CHECK_THROWS_AS(ep(":adblock"), std::invalid_argument);
  CHECK_THROWS_AS(ep("x:turbo"), std::invalid_argument);
}

TEST_CASE("swapping baseline and variant negates every delta") {
  MemorySource src;
  src.add(ep("a"), FunctionalUnitKind::Session(), 6000, 15e6, 260, 1);
  src.add(ep("b"), FunctionalUnitKind::Session(), 5500, 7e6, 235, 2);
  const auto ab = build_report(spec("a", "b"), src);
  const auto ba = build_report(spec("b", "a"), src);
  REQUIRE(ab.comparison.size() == all_metrics().size());
  REQUIRE(ba.comparison.size() == ab.comparison.size());
  for (std::size_t i = 0; i < ab.comparison.size(); ++i) {
    const auto& x = ab.comparison[i];
    const auto& y = ba.comparison[i];
    CHECK(x.delta.delta == -y.delta.delta);
    CHECK(x.delta.statistic == doctest::Approx(-y.delta.statistic));
    CHECK(x.delta.p_value == doctest::Approx(y.delta.p_value));
    if (x.direction == Direction::saving) CHECK(y.direction == Direction::increase);
    if (x.direction == Direction::neutral) CHECK(y.direction == Direction::neutral);
  }
  const auto s = FunctionalUnitKind::Session();
  CHECK(ab.emissions.per_unit.at(s).total_g == doctest::Approx(-ba.emissions.per_unit.at(s).total_g));
  CHECK(ab.emissions.per_unit.at(s).total_g > 0);
}

TEST_CASE("identical data yields neutral rows and zero emissions") {
  MemorySource src;
  src.add(ep("a"), FunctionalUnitKind::Login(), 80, 1e6, 4, 7);
  src.data["a:adblock"] = src.data["a:baseline"];
  const auto r = build_report(spec("a", "a:adblock"), src);
  for (const auto& row : r.comparison) {
    CHECK(row.delta.delta == 0.0);
    CHECK(row.direction == Direction::neutral);
    CHECK_FALSE(row.delta.significant);
    CHECK(row.below_quota);
  }
  CHECK(r.emissions.per_unit.at(FunctionalUnitKind::Login()) == EmissionComponents{});
  CHECK_THROWS_AS(build_report(spec("a", "a"), src), std::invalid_argument);
}

TEST_CASE("emission table applies the breakdown to mean deltas") {
  MemorySource src;
  src.add(ep("a"), FunctionalUnitKind::Login(), 80, 1e6, 4, 7);
  src.add(ep("b"), FunctionalUnitKind::Login(), 60, 4e5, 3, 8);
  const auto s = spec("a", "b");
  const auto r = emission_table(s, src);
  const auto sa = *src.series(s.baseline, FunctionalUnitKind::Login());
  const auto sb = *src.series(s.variant, FunctionalUnitKind::Login());
  auto mean = [](const MeasurementSeries& x, Metric m) { return stats::summarize(x, m).mean; };
  const auto expect = emissions::emission_breakdown(
      {mean(sa, Metric::energy_machine) - mean(sb, Metric::energy_machine),
       (mean(sa, Metric::network_bytes) - mean(sb, Metric::network_bytes)) / kBytesPerMegabyte,
       mean(sa, Metric::duration) - mean(sb, Metric::duration)},
      s.factors);
  CHECK(r.per_unit.at(FunctionalUnitKind::Login()) == expect);
  CHECK(r.source.at(FunctionalUnitKind::Login()) == "measured");
  CHECK(r.baseline_per_unit.at(FunctionalUnitKind::Login()).total_g > expect.total_g);
}

TEST_CASE("unmeasured Session is composed from its parts") {
  MemorySource src;
  fill_session_parts(src, ep("a"), 1.0, 10);
  fill_session_parts(src, ep("b"), 0.8, 20);
  const auto r = emission_table(spec("a", "b"), src);
  const auto session = FunctionalUnitKind::Session();
  REQUIRE(r.per_unit.contains(session));
  CHECK(r.source.at(session) == "composed");
  double parts = 0;
  for (const auto& [u, count] : session_recipe()) parts += count * r.per_unit.at(u).use_user_g;
  CHECK(r.per_unit.at(session).use_user_g == doctest::Approx(parts).epsilon(1e-9));

  src.data["b:baseline"].erase(FunctionalUnitKind::Reply());
  auto s = spec("a", "b");
  s.units = {session};
  CHECK_THROWS_WITH_AS(emission_table(s, src), doctest::Contains("b:baseline"), MissingSeries);
}

TEST_CASE("missing series name the gap") {
  MemorySource src;
  src.add(ep("a"), FunctionalUnitKind::Login(), 80, 1e6, 4, 7);
  auto s = spec("a", "b");
  s.units = {FunctionalUnitKind::Login()};
  CHECK_THROWS_WITH_AS(build_report(s, src), doctest::Contains("no Login series for b:baseline"), MissingSeries);
  src.add(ep("b"), FunctionalUnitKind::Login(), 80, 1e6, 4, 7, 1);
  CHECK_THROWS_WITH_AS(build_report(s, src), doctest::Contains("need at least 2"), MissingSeries);
}

TEST_CASE("projections") {
  const auto p = scale_projection(0.106, 3.5e6, 32000);
  CHECK(p.annual_saving_t == doctest::Approx(0.106 * 3.5e6 * 32000 * 1e-6));
  CHECK(p.flight_equivalents == doctest::Approx(p.annual_saving_t / kFlightRoundTripTonnes));
  const auto doubled = scale_projection(0.212, 3.5e6, 32000);
  CHECK(doubled.annual_saving_t == doctest::Approx(2 * p.annual_saving_t));
  CHECK(scale_projection(0.106, 7e6, 32000).annual_saving_t == doctest::Approx(2 * p.annual_saving_t));
  CHECK(scale_projection(0.106, 3.5e6, 32000, 2.64).flight_equivalents ==
        doctest::Approx(p.flight_equivalents / 2));
  CHECK_THROWS_AS(scale_projection(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(scale_projection(1, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(scale_projection(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(scale_projection(1, 1, 1, 0), std::invalid_argument);

  MemorySource src;
  src.add(ep("a"), FunctionalUnitKind::Session(), 6000, 15e6, 260, 1);
  src.add(ep("b"), FunctionalUnitKind::Session(), 5500, 7e6, 235, 2);
  auto s = spec("a", "b");
  s.projections = {{1000, 100}, {2000, 100}};
  const auto r = emission_table(s, src);
  REQUIRE(r.projections.size() == 2);
  CHECK(r.projections[1].annual_saving_t == doctest::Approx(2 * r.projections[0].annual_saving_t));
  CHECK(r.projections[0].per_session_saving_g == r.per_unit.at(FunctionalUnitKind::Session()).total_g);

  MemorySource login_only;
  login_only.add(ep("a"), FunctionalUnitKind::Login(), 80, 1e6, 4, 7);
  login_only.add(ep("b"), FunctionalUnitKind::Login(), 60, 1e6, 4, 8);
  auto s2 = spec("a", "b");
  s2.projections = {{1000, 100}};
  CHECK_THROWS_AS(emission_table(s2, login_only), MissingSeries);
}

TEST_CASE("rendering") {
  MemorySource src;
  src.add(ep("a"), FunctionalUnitKind::Session(), 6000, 15e6, 260, 1);
  src.add(ep("b:pgp"), FunctionalUnitKind::Session(), 5500, 7e6, 235, 2);
  auto s = spec("a", "b:pgp");
  s.projections = {{3.5e6, 32000}};
  const auto r = build_report(s, src);

  for (const auto* f : {"table", "plain", "csv", "json", "markdown", "md"})
    CHECK(render(r, parse_format(f)) == render(build_report(s, src), parse_format(f)));
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);

  const auto text = render(r, Format::plain_table);
  CHECK(text.find("baseline a:baseline vs variant b:pgp") != std::string::npos);
  CHECK(text.find("Projections") != std::string::npos);
  CHECK(render(r, Format::markdown).find("| ") != std::string::npos);

  const auto j = json::parse(render(r, Format::json));
  CHECK(j["variant"] == "b:pgp");
  CHECK(j["comparison"].size() == all_metrics().size());
  CHECK(j["emissions"]["projections"].size() == 1);

  const auto rows = parse_csv(render(r, Format::csv));
  auto find = [&](const std::string& section, const std::string& unit, const std::string& key) {
    for (const auto& row : rows)
      if (row.section == section && row.unit == unit && row.key == key) return row.value;
    FAIL("missing csv row " << section << "," << unit << "," << key);
    return std::string();
  };
  CHECK(std::stod(find("emissions", "Session", "total_g")) ==
        r.emissions.per_unit.at(FunctionalUnitKind::Session()).total_g);
  CHECK(std::stod(find("comparison", "Session", "energy.machine.delta")) == r.comparison[1].delta.delta);
  CHECK(find("comparison", "Session", "duration.direction") == direction_name(r.comparison[0].direction));
  CHECK(std::stod(find("projection", "0", "annual_t")) == r.emissions.projections[0].annual_saving_t);
  CHECK(find("meta", "", "variant") == "b:pgp");
  CHECK(std::stod(find("factors", "", "grid_intensity")) == 445.0);
}

TEST_CASE("empty report renders headers only") {
  const Report empty;
  CHECK(render(empty, Format::csv) == "section,unit,key,value\n");
  CHECK(parse_csv(render(empty, Format::csv)).empty());
  CHECK(render(empty, Format::plain_table).find("empty report") != std::string::npos);
  CHECK_NOTHROW(json::parse(render(empty, Format::json)));
}

TEST_CASE("csv quoting round-trips") {
  const std::string text = "section,unit,key,value\nmeta,,note,\"a, \"\"b\"\"\"\r\nx,y,z,1\n";
  const auto rows = parse_csv(text);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].value == "a, \"b\"");
  CHECK(rows[1] == CsvRecord{"x", "y", "z", "1"});
  CHECK_THROWS_AS(parse_csv("h\na,b\n"), std::invalid_argument);
}
