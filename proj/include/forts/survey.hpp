#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "forts/graph.hpp"

namespace forts {

/// Orders above this need RunConfig::allow_long.
inline constexpr int kDefaultSurveyCeiling = 16;

struct RunConfig {
  int n_min = 4;
  int n_max = kDefaultSurveyCeiling;
  unsigned workers = 1;
  /// Fraction of trees re-checked against the brute-force oracle.
  double oracle_sample = 0;
  bool allow_long = false;
  /// graph6 file of trees to survey instead of generating them.
  std::optional<std::string> input_path;
  std::uint64_t seed = 0;

  /// Throws Error{InvalidParameters} or Error{CapacityExceeded}.
  void validate() const;
};

/// Worker count from FORTS_WORKERS, else the hardware concurrency (at least 1).
unsigned default_worker_count();

struct SurveyRow {
  int n = 0;
  std::uint64_t tree_count = 0;
  std::uint64_t max_forts = 0;
  /// Canonical graph6 codes of every tree attaining max_forts, sorted.
  std::vector<std::string> argmax_codes;
  /// Exact sum of per-tree counts; the mean is forts_sum / tree_count.
  std::uint64_t forts_sum = 0;
  std::uint64_t oracle_checked = 0;
  double total_ms = 0;
  double mean_ms = 0;

  /// forts_sum / tree_count rounded half-up to `decimals` places.
  [[nodiscard]] std::string mean_text(int decimals = 6) const;

  /// Equality on every column except the timings.
  [[nodiscard]] bool same_counts(const SurveyRow& other) const;
};

using ProgressFn = std::function<void(const SurveyRow&)>;

/// Surveys every order in [n_min, n_max] (or the trees of input_path grouped
/// by order). Per-tree results are merged in generation order, so the rows do
/// not depend on the worker count. Throws Error{OracleMismatch} if a sampled
/// tree disagrees with the oracle.
std::vector<SurveyRow> run_survey(const RunConfig& config, const ProgressFn& progress = {});

/// Surveys an explicit list of trees of one order.
SurveyRow survey_trees(int n, const std::vector<Graph>& trees, const RunConfig& config);

/// n,tree_count,max_forts,argmax_count,argmax_g6,forts_sum,mean_forts,total_ms,mean_ms
/// Timing fields are left empty when `with_timing` is false.
void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows, bool with_timing = true);

/// Throws Error{ParseError}.
std::vector<SurveyRow> read_survey_csv(std::istream& in);
std::vector<SurveyRow> read_survey_csv_file(const std::string& path);

/// Row for order n, if present.
const SurveyRow* find_row(const std::vector<SurveyRow>& rows, int n);

}  // namespace forts
