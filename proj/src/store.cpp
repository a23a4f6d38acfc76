#include "fubench/store.hpp"

#include <fstream>

#include "fubench/stats.hpp"

namespace fubench {

namespace fs = std::filesystem;

namespace {

json make_header(const char* schema, const std::string& service, const ConditionSpec& c) {
  return json{{"schema", schema}, {"version", kStoreVersion}, {"service", service}, {"condition", c}};
}

void check_header(const json& h, const char* schema, const fs::path& path) {
  if (!h.is_object() || h.value("schema", "") != schema)
    throw StoreError(path.string() + ": missing or wrong schema header (expected " + schema + ")");
  if (h.value("version", 0) != kStoreVersion)
    throw StoreError(path.string() + ": unsupported schema version " + h.value("version", json(0)).dump());
}

template <typename F>
void for_each_record(const fs::path& path, const char* schema, F&& f) {
  std::ifstream in(path);
  if (!in) throw StoreError("cannot open " + path.string());
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw StoreError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!header_seen) {
      check_header(j, schema, path);
      header_seen = true;
      continue;
    }
    f(j);
  }
  if (!header_seen) throw StoreError(path.string() + ": empty file");
}

}  // namespace

ResultsStore::ResultsStore(fs::path root) : root_(std::move(root)) {}

fs::path ResultsStore::series_dir(const std::string& service, const ConditionSpec& c) const {
  if (service.empty() || service.find('/') != std::string::npos || service == "." || service == "..")
    throw StoreError("invalid service label: '" + service + "'");
  return root_ / service / c.key();
}

void ResultsStore::append_results(const std::string& service, const ConditionSpec& c,
                                  const std::vector<FunctionalUnitResult>& results) const {
  const fs::path dir = series_dir(service, c);
  fs::create_directories(dir);
  const fs::path file = dir / "results.jsonl";
  const bool fresh = !fs::exists(file) || fs::file_size(file) == 0;
  std::ofstream out(file, std::ios::app);
  if (!out) throw StoreError("cannot write " + file.string());
  if (fresh) out << make_header(kResultsSchema, service, c).dump() << '\n';
  for (const auto& r : results) out << json(r).dump() << '\n';
}

std::vector<FunctionalUnitResult> ResultsStore::read_results(const std::string& service,
                                                             const ConditionSpec& c) const {
  const fs::path file = series_dir(service, c) / "results.jsonl";
  std::vector<FunctionalUnitResult> out;
  if (!fs::exists(file)) return out;
  for_each_record(file, kResultsSchema, [&](const json& j) { out.push_back(j.get<FunctionalUnitResult>()); });
  return out;
}

bool ResultsStore::has_results(const std::string& service, const ConditionSpec& c) const {
  return fs::exists(series_dir(service, c) / "results.jsonl");
}

void ResultsStore::write_samples(const std::string& service, const ConditionSpec& c, const std::string& run_id,
                                 const std::vector<ChannelSeries>& samples) const {
  const fs::path dir = series_dir(service, c) / "samples";
  fs::create_directories(dir);
  const fs::path file = dir / (run_id + ".jsonl");
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw StoreError("cannot write " + file.string());
  json header = make_header(kSamplesSchema, service, c);
  header["run_id"] = run_id;
  out << header.dump() << '\n';
  for (const auto& series : samples)
    for (const auto& s : series.samples) out << json(s).dump() << '\n';
}

std::vector<ChannelSeries> ResultsStore::read_samples(const std::string& service, const ConditionSpec& c,
                                                      const std::string& run_id) const {
  const fs::path file = series_dir(service, c) / "samples" / (run_id + ".jsonl");
  std::vector<ChannelSeries> out;
  for_each_record(file, kSamplesSchema, [&](const json& j) {
    Sample s = j.get<Sample>();
    auto it = std::find_if(out.begin(), out.end(), [&](const ChannelSeries& cs) { return cs.channel == s.channel; });
    if (it == out.end()) {
      out.push_back(ChannelSeries{s.channel, {}});
      it = out.end() - 1;
    }
    it->samples.push_back(std::move(s));
  });
  return out;
}

void ResultsStore::write_series(const MeasurementSeries& s) const {
  const fs::path dir = series_dir(s.service, s.condition) / "series";
  fs::create_directories(dir);
  const fs::path file = dir / (s.unit.name() + ".json");
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw StoreError("cannot write " + file.string());
  out << json(s).dump(1) << '\n';
}

void ResultsStore::append_run_metadata(const std::string& service, const ConditionSpec& c,
                                       const json& record) const {
  const fs::path dir = series_dir(service, c);
  fs::create_directories(dir);
  const fs::path file = dir / "runs.jsonl";
  const bool fresh = !fs::exists(file) || fs::file_size(file) == 0;
  std::ofstream out(file, std::ios::app);
  if (!out) throw StoreError("cannot write " + file.string());
  if (fresh) out << make_header(kRunsSchema, service, c).dump() << '\n';
  out << record.dump() << '\n';
}

std::vector<json> ResultsStore::read_run_metadata(const std::string& service, const ConditionSpec& c) const {
  const fs::path file = series_dir(service, c) / "runs.jsonl";
  std::vector<json> out;
  if (!fs::exists(file)) return out;
  for_each_record(file, kRunsSchema, [&](const json& j) { out.push_back(j); });
  return out;
}

std::optional<MeasurementSeries> ResultsStore::load_series(const std::string& service, const ConditionSpec& c,
                                                           const FunctionalUnitKind& unit) const {
  const auto raw = read_results(service, c);
  const bool any = std::any_of(raw.begin(), raw.end(), [&](const auto& r) { return r.unit == unit; });
  if (!any) return std::nullopt;
  return stats::build_series(service, c, unit, raw);
}

EmissionFactors load_factors(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw StoreError("cannot open factors file " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw StoreError(path.string() + ": " + e.what());
  }
  return j.get<EmissionFactors>();
}

void save_factors(const fs::path& path, const EmissionFactors& f) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw StoreError("cannot write " + path.string());
  out << json(f).dump(2) << '\n';
}

}  // namespace fubench
