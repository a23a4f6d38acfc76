#include <stdlib.h>

#include <algorithm>
#include <ctime>
#include <random>
#include <thread>

#include "fubench/runner.hpp"
#include "fubench/stats.hpp"

namespace fubench {

namespace fs = std::filesystem;

namespace {

std::string step_label(const ScenarioScript& s, std::size_t i) {
  const auto& st = s.steps[i];
  return "step " + std::to_string(i + 1) + " (line " + std::to_string(st.line) + ", " + step_action_name(st.action) +
         (st.target.empty() ? std::string{} : " " + st.target) + ")";
}

}  // namespace

RunOutput execute_run(const ScenarioScript& script, Browser& browser, SamplerGroup& samplers,
                      const std::string& run_id) {
  RunOutput out;
  out.run_id = run_id;
  const std::size_t n = script.steps.size();
  std::vector<std::int64_t> before(n, 0), after(n, 0);
  std::optional<std::size_t> failed_step;
  std::string failure;

  samplers.start();
  for (std::size_t i = 0; i < n; ++i) {
    before[i] = now_ns();
    try {
      run_step(browser, script.steps[i]);
    } catch (const StepFailure& e) {
      failed_step = i;
      failure = e.what();
    } catch (const BrowserCrash& e) {
      failed_step = i;
      failure = std::string("browser crashed: ") + e.what();
      out.aborted = true;
    }
    after[i] = now_ns();
    if (failed_step) break;
  }
  out.samples = samplers.stop();

  std::string sampler_error;
  for (const auto& e : samplers.errors()) sampler_error += (sampler_error.empty() ? "" : "; ") + e;

  for (const auto& mark : script.unit_marks) {
    FunctionalUnitResult r;
    r.unit = mark.unit;
    r.run_id = run_id;
    const bool reached = !failed_step || mark.first_step <= *failed_step;
    const bool completed = !failed_step || mark.last_step < *failed_step;
    if (reached) {
      r.started_at_ns = before[mark.first_step];
      r.ended_at_ns = completed ? after[mark.last_step] : after[*failed_step];
    }
    if (failed_step) {
      const std::string where = step_label(script, *failed_step);
      if (reached && !completed)
        r.error = where + ": " + failure;
      else
        r.error = "run invalid: " + where + " failed";
    } else if (!sampler_error.empty()) {
      r.error = "sampler: " + sampler_error;
    }
    if (reached) {
      for (const auto& series : out.samples) {
        if (series.samples.empty()) continue;
        const Integral v = integrate(series, r.started_at_ns, r.ended_at_ns);
        if (v.extrapolated && !r.error) r.error = "window outside sampled range of " + series.channel;
        if (series.channel == channel::kNetwork)
          r.network_bytes = v.value();
        else
          r.energy_j[series.channel] = v.value();
      }
    }
    out.results.push_back(std::move(r));
  }
  return out;
}

SamplerFactory sampler_factory(std::vector<ProviderSpec> specs, MachineDescription machine) {
  for (const auto& s : specs) validate_provider(s);
  return [specs = std::move(specs), machine] {
    std::vector<std::unique_ptr<Provider>> providers;
    for (const auto& s : specs) providers.push_back(make_provider(s, machine));
    return std::make_unique<SamplerGroup>(std::move(providers));
  };
}

namespace {

std::string make_run_id(int iteration) {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);
  std::mt19937 rng(std::random_device{}());
  char suffix[8];
  std::snprintf(suffix, sizeof suffix, "%04x", static_cast<unsigned>(rng() & 0xffff));
  char it[16];
  std::snprintf(it, sizeof it, "%04d", iteration);
  return std::string(stamp) + "-" + it + "-" + suffix;
}

class ProfileCopy {
 public:
  explicit ProfileCopy(const std::optional<fs::path>& templ) {
    std::string pattern = (fs::temp_directory_path() / "fubench-profile-XXXXXX").string();
    if (!mkdtemp(pattern.data())) throw std::runtime_error("cannot create profile directory");
    path_ = pattern;
    if (templ) fs::copy(*templ, path_, fs::copy_options::recursive);
  }
  ~ProfileCopy() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::optional<fs::path> profile_template(const RunConfig& cfg) {
  const bool restrictive = cfg.condition.tracking == TrackingProfile::restrictive;
  if (cfg.profile_templates.empty()) {
    if (restrictive) throw ConditionError("restrictive tracking needs profile_templates/restrictive");
    return std::nullopt;
  }
  const fs::path p = cfg.profile_templates / (restrictive ? "restrictive" : "permissive");
  if (!fs::is_directory(p)) {
    if (restrictive) throw ConditionError("missing browser profile template " + p.string());
    return std::nullopt;
  }
  return p;
}

}  // namespace

CampaignResult campaign(const ScenarioScript& script, const RunConfig& cfg, BrowserLauncher& launcher,
                        const SamplerFactory& samplers, CommandRunner& commands, const ResultsStore* store) {
  if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (script.unit_marks.empty()) throw ScenarioError("scenario marks no functional units");
  const auto templ = profile_template(cfg);
  const auto units = script.units();

  std::optional<std::string> resolv_before;
  if (cfg.condition.adblock && fs::exists(cfg.resolv_conf)) resolv_before = read_text_file(cfg.resolv_conf);
  if (cfg.condition.adblock && !resolv_before) resolv_before = std::string{};

  CampaignResult out;
  std::vector<FunctionalUnitResult> all;
  std::map<FunctionalUnitKind, int> valid;
  auto quota_met = [&] {
    return std::all_of(units.begin(), units.end(), [&](const auto& u) { return valid[u] >= cfg.iterations; });
  };

  {
    ConditionHandle env = apply_condition(cfg, commands);
    json run_config = cfg;
    BrowserOptions opts;
    if (cfg.condition.adblock) opts.dns_resolver = cfg.dns_resolver;

    while (!quota_met() && out.iterations < cfg.iteration_cap()) {
      const std::string run_id = make_run_id(out.iterations);
      ++out.iterations;
      ProfileCopy profile(templ);
      opts.profile_dir = profile.path();
      auto browser = launcher.launch(opts);
      auto group = samplers();
      RunOutput run = execute_run(script, *browser, *group, run_id);
      if (!run.aborted) {
        try {
          browser->quit();
        } catch (const std::exception& e) {
          out.warnings.push_back(run_id + ": closing browser: " + e.what());
        }
      }
      browser.reset();

      for (const auto& r : run.results) {
        if (r.valid()) ++valid[r.unit];
        all.push_back(r);
      }
      out.run_ids.push_back(run_id);
      if (store) {
        store->append_results(script.service, cfg.condition, run.results);
        store->write_samples(script.service, cfg.condition, run_id, run.samples);
        json meta = {{"run_id", run_id},
                     {"iteration", out.iterations},
                     {"aborted", run.aborted},
                     {"valid", std::all_of(run.results.begin(), run.results.end(),
                                           [](const auto& r) { return r.valid(); })},
                     {"environment", env.changes()},
                     {"config", run_config},
                     {"sampler_cpu_s", group->cpu_seconds()}};
        store->append_run_metadata(script.service, cfg.condition, meta);
      }
      if (!quota_met() && out.iterations < cfg.iteration_cap()) std::this_thread::sleep_for(cfg.settle);
    }
    env.release();
  }

  for (const auto& p : verify_baseline(cfg, commands, resolv_before))
    out.warnings.push_back("condition not restored: " + p);

  for (const auto& u : units) {
    out.series[u] = stats::build_series(script.service, cfg.condition, u, all);
    if (store) {
      if (auto full = store->load_series(script.service, cfg.condition, u)) store->write_series(*full);
    }
    if (valid[u] < cfg.iterations) {
      out.below_quota = true;
      out.warnings.push_back("below quota: " + u.name() + " has " + std::to_string(valid[u]) + " valid of " +
                             std::to_string(cfg.iterations) + " required after " +
                             std::to_string(out.iterations) + " iterations");
    }
  }
  return out;
}

}  // namespace fubench
