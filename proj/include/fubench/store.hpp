#pragma once

// On-disk results store.
//
// Layout under the store root:
//   <service>/<condition-key>/results.jsonl       header + one FunctionalUnitResult per line
//   <service>/<condition-key>/samples/<run>.jsonl  raw sampler readings of one run
//   <service>/<condition-key>/series/<unit>.json   filtered series with filter log
//   <service>/<condition-key>/runs.jsonl           header + per-run metadata (condition changes, profile)
//
// The first line of every .jsonl file is a header object carrying "schema"
// and "version"; readers reject files whose schema or version differ.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fubench/model.hpp"
#include "fubench/sampler.hpp"

namespace fubench {

inline constexpr const char* kResultsSchema = "fubench.results";
inline constexpr const char* kSamplesSchema = "fubench.samples";
inline constexpr const char* kRunsSchema = "fubench.runs";
inline constexpr int kStoreVersion = 1;

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResultsStore {
 public:
  explicit ResultsStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path series_dir(const std::string& service, const ConditionSpec& c) const;

  void append_results(const std::string& service, const ConditionSpec& c,
                      const std::vector<FunctionalUnitResult>& results) const;
  /// Empty when nothing has been recorded for the pair.
  std::vector<FunctionalUnitResult> read_results(const std::string& service, const ConditionSpec& c) const;
  bool has_results(const std::string& service, const ConditionSpec& c) const;

  void write_samples(const std::string& service, const ConditionSpec& c, const std::string& run_id,
                     const std::vector<ChannelSeries>& samples) const;
  std::vector<ChannelSeries> read_samples(const std::string& service, const ConditionSpec& c,
                                          const std::string& run_id) const;

  void write_series(const MeasurementSeries& s) const;

  void append_run_metadata(const std::string& service, const ConditionSpec& c, const json& record) const;
  std::vector<json> read_run_metadata(const std::string& service, const ConditionSpec& c) const;

  /// Rebuilds the filtered series for one unit from the raw results.
  std::optional<MeasurementSeries> load_series(const std::string& service, const ConditionSpec& c,
                                               const FunctionalUnitKind& unit) const;

 private:
  std::filesystem::path root_;
};

EmissionFactors load_factors(const std::filesystem::path& path);
void save_factors(const std::filesystem::path& path, const EmissionFactors& f);

}  // namespace fubench
