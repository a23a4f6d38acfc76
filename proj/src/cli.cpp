#include "fubench/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fubench/emissions.hpp"
#include "fubench/report.hpp"
#include "fubench/stats.hpp"
#include "fubench/store.hpp"

namespace fubench {

namespace fs = std::filesystem;

ConditionSpec Config::resolve_condition(const std::string& name) const {
  if (auto it = conditions.find(name); it != conditions.end()) return it->second;
  try {
    return parse_condition_key(name);
  } catch (const std::invalid_argument&) {
    throw ConfigError("unknown condition '" + name + "' (not a preset and not a condition key)");
  }
}

namespace {

fs::path resolve_path(const fs::path& base, const std::string& p) {
  if (p.empty()) return {};
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

void require_file(const fs::path& p, const std::string& what) {
  if (!fs::exists(p)) throw ConfigError(what + " not found: " + p.string());
}

}  // namespace

Config parse_config(const json& j, const fs::path& base) {
  Config c;
  const std::set<std::string> known = {"factors",   "machine",          "providers", "services", "conditions",
                                       "store_path", "flight_rt_tonnes", "webdriver", "run"};
  for (const auto& [k, v] : j.items())
    if (!known.contains(k)) throw ConfigError("unknown config key '" + k + "'");
  try {
    if (j.contains("factors")) c.factors = j["factors"].get<EmissionFactors>();
    if (j.contains("machine")) c.machine = j["machine"].get<MachineDescription>();
    if (j.contains("providers")) c.providers = j["providers"].get<std::vector<ProviderSpec>>();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  const auto valid = validate_factors(c.factors);
  if (!valid.ok()) throw ConfigError("factors: " + valid.violations.front());
  for (auto& p : c.providers) {
    if (p.kind == ProviderKind::energy_counter || p.kind == ProviderKind::machine_power_model)
      p.source = resolve_path(base, p.source).string();
    else if (p.source.rfind("file:", 0) == 0)
      p.source = "file:" + resolve_path(base, p.source.substr(5)).string();
  }

  const json services = j.value("services", json::object());
  for (const auto& [name, s] : services.items()) {
    ServiceConfig sc;
    sc.scenario = resolve_path(base, s.at("scenario").get<std::string>());
    require_file(sc.scenario, "scenario file for service " + name);
    sc.selectors = resolve_path(base, s.value("selectors", std::string{}));
    if (!sc.selectors.empty()) require_file(sc.selectors, "selector map for service " + name);
    if (s.contains("pgp_scenario")) {
      sc.pgp_scenario = resolve_path(base, s["pgp_scenario"].get<std::string>());
      require_file(*sc.pgp_scenario, "pgp scenario for service " + name);
    }
    sc.params = s.value("params", std::map<std::string, std::string>{});
    c.services[name] = std::move(sc);
  }
  const json conditions = j.value("conditions", json::object());
  for (const auto& [name, v] : conditions.items()) {
    try {
      c.conditions[name] = v.is_string() ? parse_condition_key(v.get<std::string>()) : v.get<ConditionSpec>();
    } catch (const std::exception& e) {
      throw ConfigError("condition preset " + name + ": " + e.what());
    }
  }
  if (j.contains("store_path")) c.store_path = resolve_path(base, j["store_path"].get<std::string>());
  else c.store_path = resolve_path(base, "results");
  c.flight_rt_tonnes = j.value("flight_rt_tonnes", c.flight_rt_tonnes);
  if (!(c.flight_rt_tonnes > 0)) throw ConfigError("flight_rt_tonnes must be positive");

  if (j.contains("webdriver")) {
    const auto& w = j["webdriver"];
    c.webdriver.endpoint = w.value("endpoint", c.webdriver.endpoint);
    c.webdriver.browser_name = w.value("browser", c.webdriver.browser_name);
    c.webdriver.headless = w.value("headless", c.webdriver.headless);
  }
  if (j.contains("run")) {
    const auto& r = j["run"];
    c.run.iterations = r.value("iterations", c.run.iterations);
    c.run.max_iterations = r.value("max_iterations", c.run.max_iterations);
    c.run.settle = std::chrono::milliseconds(r.value("settle_ms", c.run.settle.count()));
    c.run.browser_profile = r.value("browser_profile", c.run.browser_profile);
    c.run.profile_templates = resolve_path(base, r.value("profile_templates", std::string{}));
    if (r.contains("dns_resolver")) c.run.dns_resolver = r["dns_resolver"].get<std::string>();
    c.run.resolv_conf = resolve_path(base, r.value("resolv_conf", c.run.resolv_conf.string()));
    c.run.adblock_probe_domain = r.value("adblock_probe_domain", c.run.adblock_probe_domain);
    c.run.network_interface = r.value("network_interface", c.run.network_interface);
    c.run.attachment_path = resolve_path(base, r.value("attachment_path", std::string{}));
    if (!c.run.attachment_path.empty()) require_file(c.run.attachment_path, "attachment");
  }
  if (c.run.iterations < 1) throw ConfigError("run.iterations must be >= 1");
  return c;
}

Config load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  try {
    Config c = parse_config(j, fs::absolute(path).parent_path());
    c.source = path;
    return c;
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::optional<fs::path> config_path(const std::optional<std::string>& explicit_path) {
  if (explicit_path && !explicit_path->empty()) return fs::path(*explicit_path);
  if (const char* env = std::getenv(kConfigEnv); env && *env) return fs::path(env);
  if (fs::exists(kDefaultConfigFile)) return fs::path(kDefaultConfigFile);
  return std::nullopt;
}

namespace {

struct Options {
  std::optional<std::string> config;
  std::optional<std::string> store;

  // run
  std::string service;
  std::string condition = "baseline";
  std::optional<int> iterations;
  std::optional<int> max_iterations;
  std::optional<int> settle_ms;
  std::optional<std::string> endpoint;
  std::vector<std::string> units;

  // compare
  std::string baseline;
  std::string variant;
  std::string format = "table";
  std::optional<std::string> output;
  std::vector<double> populations;
  std::vector<double> sessions;

  // project
  double per_session_g = 0;
  double population = 0;
  double sessions_per_year = 0;
  std::optional<double> flight_rt_tonnes;

  // ping
  std::string host;
  int count = kDefaultPingCount;
  int timeout_ms = 2000;
};

char buf_fmt[64];
std::string g4(double v) {
  std::snprintf(buf_fmt, sizeof buf_fmt, "%.4g", v);
  return buf_fmt;
}

Config effective_config(const Options& o) {
  Config c;
  if (auto p = config_path(o.config)) c = load_config(*p);
  if (o.store) c.store_path = *o.store;
  if (o.flight_rt_tonnes) c.flight_rt_tonnes = *o.flight_rt_tonnes;
  return c;
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  Config c = effective_config(o);
  auto it = c.services.find(o.service);
  if (it == c.services.end()) {
    std::string names;
    for (const auto& [n, s] : c.services) names += (names.empty() ? "" : ", ") + n;
    throw ConfigError("unknown service '" + o.service + "'" + (names.empty() ? "" : " (configured: " + names + ")"));
  }
  const ServiceConfig& svc = it->second;
  RunConfig cfg = c.run;
  cfg.condition = c.resolve_condition(o.condition);
  if (o.iterations) cfg.iterations = *o.iterations;
  if (o.max_iterations) cfg.max_iterations = *o.max_iterations;
  if (o.settle_ms) cfg.settle = std::chrono::milliseconds(*o.settle_ms);
  WebDriverOptions wd = c.webdriver;
  if (o.endpoint) wd.endpoint = *o.endpoint;

  fs::path scenario = svc.scenario;
  if (cfg.condition.pgp) {
    if (!svc.pgp_scenario) throw ConfigError("service " + o.service + " has no pgp_scenario for the pgp condition");
    scenario = *svc.pgp_scenario;
  }
  std::map<std::string, std::string> params = svc.params;
  if (!cfg.attachment_path.empty()) params.emplace("attachment", fs::absolute(cfg.attachment_path).string());
  ScenarioScript script = load_scenario(scenario, svc.selectors, params, o.service);
  if (!o.units.empty()) {
    std::erase_if(script.unit_marks, [&](const UnitMark& m) {
      return std::find(o.units.begin(), o.units.end(), m.unit.name()) == o.units.end();
    });
    if (script.unit_marks.empty()) throw ConfigError("--units matches no unit marked in " + scenario.string());
  }
  if (c.providers.empty()) throw ConfigError("no providers configured");

  ResultsStore store(c.store_path);
  WebDriverLauncher launcher(wd);
  SystemCommandRunner commands;
  const CampaignResult r = campaign(script, cfg, launcher, sampler_factory(c.providers, c.machine), commands, &store);

  out << o.service << " " << cfg.condition.key() << ": " << r.iterations << " iterations\n";
  for (const auto& [unit, s] : r.series) {
    out << "  " << unit.name() << ": " << s.valid_count << " valid, " << s.retained_count << " retained";
    if (s.results.size() >= 2) {
      out << ", energy " << g4(stats::summarize(s, Metric::energy_machine).mean) << " J, duration "
          << g4(stats::summarize(s, Metric::duration).mean) << " s, network "
          << g4(stats::summarize(s, Metric::network_bytes).mean / kBytesPerMegabyte) << " MB";
    }
    out << "\n";
  }
  out << "store: " << store.series_dir(o.service, cfg.condition).string() << "\n";
  int status = 0;
  for (const auto& w : r.warnings) {
    const bool restore = w.rfind("condition not restored", 0) == 0;
    err << (restore ? "error: " : "warning: ") << w << "\n";
    if (restore) status = 1;
  }
  return status;
}

int cmd_compare(const Options& o, std::ostream& out) {
  Config c = effective_config(o);
  ReportSpec spec;
  auto endpoint = [&](const std::string& s) {
    Endpoint e;
    const auto colon = s.find(':');
    e.service = s.substr(0, colon);
    if (e.service.empty()) throw ConfigError("missing service in '" + s + "'");
    if (colon != std::string::npos) e.condition = c.resolve_condition(s.substr(colon + 1));
    return e;
  };
  spec.baseline = endpoint(o.baseline);
  spec.variant = endpoint(o.variant);
  for (const auto& u : o.units) spec.units.emplace_back(u);
  spec.factors = c.factors;
  spec.flight_rt_tonnes = c.flight_rt_tonnes;
  if (o.populations.size() != o.sessions.size())
    throw std::invalid_argument("--population and --sessions-per-year must be given the same number of times");
  for (std::size_t i = 0; i < o.populations.size(); ++i) spec.projections.push_back({o.populations[i], o.sessions[i]});
  const Format format = parse_format(o.format);

  ResultsStore store(c.store_path);
  if (!fs::is_directory(c.store_path)) throw MissingSeries("store directory " + c.store_path.string() + " does not exist");
  for (const auto* e : {&spec.baseline, &spec.variant})
    if (!store.has_results(e->service, e->condition))
      throw MissingSeries("no results for " + e->label() + " in " + c.store_path.string());
  StoreSeriesSource source(store);
  const std::string doc = render(build_report(spec, source), format);
  if (o.output) {
    std::ofstream f(*o.output, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + *o.output);
    f << doc;
  } else {
    out << doc;
  }
  return 0;
}

int cmd_project(const Options& o, std::ostream& out) {
  Config c = effective_config(o);
  const ScaleProjection p = scale_projection(o.per_session_g, o.population, o.sessions_per_year, c.flight_rt_tonnes);
  const Format f = parse_format(o.format);
  if (f == Format::json) {
    json j = p;
    j["flight_rt_tonnes"] = c.flight_rt_tonnes;
    out << j.dump(2) << "\n";
  } else if (f == Format::csv) {
    out << "per_session_g,population,sessions_per_year,annual_t,flight_equivalents\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p.per_session_saving_g, p.population,
                  p.sessions_per_year, p.annual_saving_t, p.flight_equivalents);
    out << buf;
  } else {
    out << "per-session saving: " << g4(p.per_session_saving_g) << " gCO2e\n"
        << "population:         " << g4(p.population) << "\n"
        << "sessions per year:  " << g4(p.sessions_per_year) << "\n"
        << "annual saving:      " << g4(p.annual_saving_t) << " tCO2e\n"
        << "flight equivalents: " << g4(p.flight_equivalents) << " (at " << g4(c.flight_rt_tonnes)
        << " t per round trip)\n";
  }
  return 0;
}

int cmd_ping(const Options& o, std::ostream& out) {
  const LatencyStats s = measure_latency(o.host, o.count, o.timeout_ms);
  out << o.host << ": " << s.count << " probes, mean " << g4(s.mean_ms) << " ms, sd " << g4(s.sd_ms) << " ms\n";
  return 0;
}

int cmd_factors(const Options& o, std::ostream& out) {
  Config c = effective_config(o);
  json j = {{"factors", c.factors},
            {"derived",
             {{"c_elec_g_per_j", emissions::c_elec(c.factors)},
              {"transfer_intensity_ug_per_mb", emissions::transfer_intensity(c.factors)}}},
            {"flight_rt_tonnes", c.flight_rt_tonnes},
            {"config", c.source.empty() ? json() : json(c.source.string())}};
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Energy, traffic and CO2e benchmarking of scripted browser functional units", "fubench"};
  app.require_subcommand(1);
  app.add_option("--config", o.config, std::string("Config file (default: $") + kConfigEnv + ", then ./" +
                                           kDefaultConfigFile + ")");
  app.add_option("--store", o.store, "Results store directory (overrides store_path)");

  auto* run = app.add_subcommand("run", "Run a measurement campaign for one service and condition");
  run->add_option("service", o.service, "Service label from the config")->required();
  run->add_option("condition", o.condition, "Condition preset or key such as adblock+lat50")->capture_default_str();
  run->add_option("--iterations", o.iterations, "Valid results required per unit")->check(CLI::PositiveNumber);
  run->add_option("--max-iterations", o.max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
  run->add_option("--settle-ms", o.settle_ms, "Pause between iterations")->check(CLI::NonNegativeNumber);
  run->add_option("--endpoint", o.endpoint, "WebDriver endpoint URL");
  run->add_option("--units", o.units, "Only measure these units")->delimiter(',');

  auto* compare = app.add_subcommand("compare", "Compare two stored series sets and report CO2e savings");
  compare->add_option("baseline", o.baseline, "service[:condition]")->required();
  compare->add_option("variant", o.variant, "service[:condition]")->required();
  compare->add_option("--format", o.format, "table, markdown, csv or json")->capture_default_str();
  compare->add_option("--units", o.units, "Units to include")->delimiter(',');
  compare->add_option("--population", o.populations, "Project the Session saving to this many users")
      ->check(CLI::PositiveNumber);
  compare->add_option("--sessions-per-year", o.sessions, "Sessions per user and year for each --population")
      ->check(CLI::PositiveNumber);
  compare->add_option("--output,-o", o.output, "Write the report to a file");

  auto* project = app.add_subcommand("project", "Scale a per-session saving to a population");
  project->add_option("--per-session-g", o.per_session_g, "gCO2e saved per session")
      ->required()
      ->check(CLI::PositiveNumber);
  project->add_option("--population", o.population, "Users")->required()->check(CLI::PositiveNumber);
  project->add_option("--sessions-per-year", o.sessions_per_year, "Sessions per user and year")
      ->required()
      ->check(CLI::PositiveNumber);
  project->add_option("--flight-rt-tonnes", o.flight_rt_tonnes, "tCO2e per flight round trip")
      ->check(CLI::PositiveNumber);
  project->add_option("--format", o.format, "table, csv or json")->capture_default_str();

  auto* ping = app.add_subcommand("ping", "TCP-connect round-trip times to host[:port]");
  ping->add_option("host", o.host, "Host name or address, optional :port (default 443)")->required();
  ping->add_option("--count", o.count, "Number of probes")->capture_default_str()->check(CLI::PositiveNumber);
  ping->add_option("--timeout-ms", o.timeout_ms, "Per-probe timeout")->capture_default_str()->check(
      CLI::PositiveNumber);

  app.add_subcommand("factors", "Print the effective emission factors and derived constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(o, out, err);
    if (compare->parsed()) return cmd_compare(o, out);
    if (project->parsed()) return cmd_project(o, out);
    if (ping->parsed()) return cmd_ping(o, out);
    return cmd_factors(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fubench
