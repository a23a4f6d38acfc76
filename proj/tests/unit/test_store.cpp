#include <doctest.h>

#include <fstream>

#include "fubench/store.hpp"
#include "test_support.hpp"

using namespace fubench;
using testsupport::TempDir;
using testsupport::write_file;

namespace {

FunctionalUnitResult result(const std::string& id, FunctionalUnitKind unit, double joules) {
  FunctionalUnitResult r;
  r.unit = std::move(unit);
  r.run_id = id;
  r.started_at_ns = 1'000'000;
  r.ended_at_ns = 2'000'000'123;
  r.energy_j = {{"machine", joules}, {"cpu", joules * 0.4}};
  r.network_bytes = 12345.678;
  return r;
}

}  // namespace

TEST_CASE("results round-trip through the store") {
  TempDir dir;
  ResultsStore store(dir.path());
  ConditionSpec c;
  c.adblock = true;
  CHECK_FALSE(store.has_results("outlook", c));
  CHECK(store.read_results("outlook", c).empty());
  CHECK(store.series_dir("outlook", c) == dir.path() / "outlook" / "adblock");

  std::vector<FunctionalUnitResult> first = {result("r1", FunctionalUnitKind::Login(), 0.1 + 0.2),
                                             result("r1", FunctionalUnitKind::Session(), 6072.123456789)};
  auto failed = result("r2", FunctionalUnitKind::Login(), 3);
  failed.error = "step 4: timeout";
  store.append_results("outlook", c, first);
  store.append_results("outlook", c, {failed});
  CHECK(store.has_results("outlook", c));

  const auto back = store.read_results("outlook", c);
  REQUIRE(back.size() == 3);
  CHECK(back[0] == first[0]);
  CHECK(back[1] == first[1]);
  CHECK(back[2] == failed);

  std::ifstream in(dir / "outlook/adblock/results.jsonl");
  std::string header;
  std::getline(in, header);
  const auto h = json::parse(header);
  CHECK(h.at("schema") == kResultsSchema);
  CHECK(h.at("version") == kStoreVersion);
  CHECK(h.at("service") == "outlook");

  CHECK_THROWS_AS(store.series_dir("../x", c), StoreError);
  CHECK_THROWS_AS(store.series_dir("", c), StoreError);
}

TEST_CASE("store rejects foreign or newer files") {
  TempDir dir;
  ResultsStore store(dir.path());
  write_file(dir / "svc/baseline/results.jsonl", R"({"schema":"fubench.results","version":2})" "\n");
  CHECK_THROWS_AS(store.read_results("svc", ConditionSpec{}), StoreError);
  write_file(dir / "svc/baseline/results.jsonl", R"({"unit":"Login"})" "\n");
  CHECK_THROWS_AS(store.read_results("svc", ConditionSpec{}), StoreError);
  write_file(dir / "svc/baseline/results.jsonl", "not json\n");
  CHECK_THROWS_AS(store.read_results("svc", ConditionSpec{}), StoreError);
}

TEST_CASE("samples and series") {
  TempDir dir;
  ResultsStore store(dir.path());
  ConditionSpec c;
  c.pgp = true;
  c.injected_latency_ms = 50;
  std::vector<ChannelSeries> samples = {
      {"machine", {{10, "machine", 1.5, std::nullopt}, {20, "machine", 2.25, "wrap"}}},
      {"network", {{11, "network", 100, std::nullopt}}},
  };
  store.write_samples("selfhosted", c, "run-7", samples);
  CHECK(store.read_samples("selfhosted", c, "run-7") == samples);
  CHECK_THROWS_AS(store.read_samples("selfhosted", c, "run-8"), StoreError);

  std::vector<FunctionalUnitResult> rs;
  for (int i = 0; i < 10; ++i) rs.push_back(result("r" + std::to_string(i), FunctionalUnitKind::Read(), 10 + i % 3));
  rs.push_back(result("big", FunctionalUnitKind::Read(), 500));
  store.append_results("selfhosted", c, rs);

  CHECK_FALSE(store.load_series("selfhosted", c, FunctionalUnitKind::Reply()));
  const auto s = store.load_series("selfhosted", c, FunctionalUnitKind::Read());
  REQUIRE(s);
  CHECK(s->retained_count == 10);
  CHECK(s->filter_log.size() == 1);
  store.write_series(*s);
  std::ifstream in(dir / "selfhosted/pgp+lat50/series/Read.json");
  REQUIRE(in);
  CHECK(json::parse(in).get<MeasurementSeries>() == *s);
}

TEST_CASE("factors files") {
  TempDir dir;
  EmissionFactors f;
  f.grid_intensity = 300;
  save_factors(dir / "f.json", f);
  CHECK(load_factors(dir / "f.json") == f);

  write_file(dir / "c.json", "{\n  // regional grid\n  \"grid_intensity\": 250\n}\n");
  CHECK(load_factors(dir / "c.json").grid_intensity == 250);
  CHECK(load_factors(dir / "c.json").base_year == 2015);

  write_file(dir / "bad.json", "{\"grid_intensty\": 1}");
  CHECK_THROWS(load_factors(dir / "bad.json"));
  CHECK_THROWS_AS(load_factors(dir / "missing.json"), StoreError);
}
