#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "fake_services.hpp"
#include "fubench/cli.hpp"
#include "fubench/report.hpp"
#include "fubench/store.hpp"
#include "test_support.hpp"

using namespace fubench;
using testsupport::TempDir;
using testsupport::write_file;

namespace {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fubench");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture_store() { return (testsupport::source_dir() / "fixtures" / "store").string(); }

/// Config for the bundled site driven through a fake WebDriver.
std::filesystem::path write_site_config(const TempDir& dir, const fakes::StaticSite& site,
                                        const fakes::FakeWebDriver& driver) {
  const auto scenarios = testsupport::source_dir() / "fixtures" / "scenarios";
  write_file(dir / "attachment.bin", std::string(64 * 1024, 'a'));
  json j = {
      {"providers",
       {{{"kind", "machine_power_model"}, {"channel", "machine"}, {"sample_period_ms", 20}},
        {{"kind", "network_counter"}, {"source", "iface:lo"}, {"channel", "network"}, {"sample_period_ms", 20}}}},
      {"services",
       {{"local",
         {{"scenario", (scenarios / "mail_session.scn").string()},
          {"selectors", (scenarios / "local_site.sel").string()},
          {"params", {{"base_url", site.base_url()}}}}},
        {"broken",
         {{"scenario", (scenarios / "blank_page.scn").string()},
          {"params", {{"base_url", "http://127.0.0.1:1"}}}}}}},
      {"store_path", "store"},
      {"webdriver", {{"endpoint", driver.endpoint()}}},
      {"run", {{"iterations", 3}, {"settle_ms", 0}, {"attachment_path", "attachment.bin"}}},
  };
  write_file(dir / "fubench.json", j.dump(2));
  return dir / "fubench.json";
}

}  // namespace

TEST_CASE("project") {
  const auto r = cli({"project", "--per-session-g", "0.106", "--population", "3.5e6", "--sessions-per-year", "32000"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("1.187e+04 tCO2e") != std::string::npos);
  CHECK(r.out.find("8994") != std::string::npos);

  const auto j = cli({"project", "--per-session-g", "0.106", "--population", "3.5e6", "--sessions-per-year",
                      "32000", "--format", "json"});
  REQUIRE(j.status == 0);
  const auto doc = json::parse(j.out);
  CHECK(doc["annual_saving_t"].get<double>() == doctest::Approx(11872).epsilon(1e-4));

  CHECK(cli({"project", "--per-session-g", "0.1", "--population", "0", "--sessions-per-year", "1"}).status == 2);
  CHECK(cli({"project", "--population", "1"}).status == 2);
  CHECK(cli({"bogus"}).status == 2);
}

TEST_CASE("factors") {
  const auto r = cli({"factors"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["factors"]["grid_intensity"] == 445.0);
}

TEST_CASE("compare the fixture store") {
  const auto r = cli({"--store", fixture_store(), "compare", "outlook", "proton", "--units", "Session"});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  CHECK(r.out.find("Session") != std::string::npos);

  const auto j = cli({"--store", fixture_store(), "compare", "outlook", "proton", "--format", "json",
                      "--population", "3.5e6", "--sessions-per-year", "32000"});
  REQUIRE_MESSAGE(j.status == 0, j.err);
  const auto doc = json::parse(j.out);
  const double g = doc["emissions"]["per_unit"]["Session"]["total_g"].get<double>();
  CHECK(g == doctest::Approx(0.106).epsilon(0.15));
  CHECK(doc["emissions"]["projections"].size() == 1);

  TempDir dir;
  const auto csv = cli({"--store", fixture_store(), "compare", "gmail", "selfhosted:pgp+lat50", "--format", "csv",
                        "-o", (dir / "r.csv").string()});
  REQUIRE_MESSAGE(csv.status == 0, csv.err);
  CHECK(std::filesystem::file_size(dir / "r.csv") > 100);
}

TEST_CASE("compare reports gaps and identical copies") {
  const auto missing = cli({"--store", fixture_store(), "compare", "outlook", "proton:adblock"});
  CHECK(missing.status != 0);
  CHECK(missing.err.find("proton:adblock") != std::string::npos);

  TempDir dir;
  std::filesystem::copy(fixture_store(), dir.path(), std::filesystem::copy_options::recursive);
  std::filesystem::create_directories(dir / "clone");
  std::filesystem::copy(dir / "outlook", dir / "clone", std::filesystem::copy_options::recursive);
  const auto same = cli({"--store", dir.path().string(), "compare", "outlook", "clone", "--format", "csv"});
  REQUIRE_MESSAGE(same.status == 0, same.err);
  for (const auto& row : parse_csv(same.out)) {
    if (row.section == "comparison" && row.key.ends_with(".delta")) CHECK(std::stod(row.value) == 0.0);
    if (row.section == "emissions" && row.key == "total_g") CHECK(std::stod(row.value) == 0.0);
  }
  CHECK(cli({"--store", fixture_store(), "compare", "outlook", "outlook"}).status == 2);
}

TEST_CASE("config resolution") {
  TempDir dir;
  write_file(dir / "a.json", R"({"store_path": "mine"})");
  write_file(dir / "bad.json", R"({"stor_path": "x"})");
  CHECK(load_config(dir / "a.json").store_path == dir / "mine");
  CHECK_THROWS_WITH_AS(load_config(dir / "bad.json"), doctest::Contains("stor_path"), ConfigError);
  CHECK(*config_path(std::string("x.json")) == "x.json");
  setenv(kConfigEnv, (dir / "a.json").c_str(), 1);
  CHECK(*config_path(std::nullopt) == dir / "a.json");
  CHECK(*config_path(std::string("x.json")) == "x.json");
  unsetenv(kConfigEnv);

  const auto example = load_config(testsupport::source_dir() / "fubench.example.json");
  CHECK(example.services.contains("local"));
  CHECK(example.resolve_condition("slow").injected_latency_ms == 50);
  CHECK(example.providers.size() == 3);

  const auto r = cli({"--config", (dir / "bad.json").string(), "factors"});
  CHECK(r.status == 1);
  CHECK(r.err.find("stor_path") != std::string::npos);
}

TEST_CASE("run with a missing scenario names the file") {
  TempDir dir;
  write_file(dir / "fubench.json", R"({"services": {"x": {"scenario": "nope.scn"}}})");
  const auto r = cli({"--config", (dir / "fubench.json").string(), "run", "x"});
  CHECK(r.status != 0);
  CHECK(r.err.find("nope.scn") != std::string::npos);

  write_file(dir / "empty.json", "{}");
  const auto u = cli({"--config", (dir / "empty.json").string(), "run", "y"});
  CHECK(u.status != 0);
  CHECK(u.err.find("unknown service 'y'") != std::string::npos);
}

TEST_CASE("run drives the bundled site end to end") {
  TempDir dir;
  fakes::StaticSite site(testsupport::source_dir() / "fixtures" / "site");
  fakes::FakeWebDriver driver;
  const auto config = write_site_config(dir, site, driver).string();

  const auto r = cli({"--config", config, "run", "local"});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  CHECK(r.out.find("local baseline: 3 iterations") != std::string::npos);
  CHECK(r.err.empty());
  ResultsStore store(dir / "store");
  const auto results = store.read_results("local", ConditionSpec{});
  std::map<std::string, int> per_unit;
  for (const auto& x : results) per_unit[x.unit.name()] += x.valid();
  CHECK(per_unit.size() == 8);
  for (const auto& [u, n] : per_unit) CHECK_MESSAGE(n == 3, u);

  const auto units = cli({"--config", config, "run", "local", "adblock+lat50", "--units", "Login"});
  CHECK(units.status != 0);  // adblock needs a resolver, refused before any browser starts
  CHECK(units.err.find("dns") != std::string::npos);
}

TEST_CASE("run below quota still exits 0 with a warning") {
  TempDir dir;
  fakes::StaticSite site(testsupport::source_dir() / "fixtures" / "site");
  fakes::FakeWebDriver driver;
  const auto config = write_site_config(dir, site, driver).string();
  const auto r = cli({"--config", config, "run", "broken", "--iterations", "2", "--max-iterations", "2"});
  CHECK_MESSAGE(r.status == 0, r.err);
  CHECK(r.err.find("warning:") != std::string::npos);
  CHECK(r.err.find("below quota") != std::string::npos);
}
