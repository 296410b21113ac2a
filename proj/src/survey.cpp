#include "forts/survey.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "forts/error.hpp"
#include "forts/fort_enum.hpp"
#include "forts/oracle.hpp"
#include "forts/treegen.hpp"

namespace forts {

void RunConfig::validate() const {
  if (workers < 1) throw Error(ErrorKind::InvalidParameters, "worker count must be at least 1");
  if (!(oracle_sample >= 0 && oracle_sample <= 1)) {
    throw Error(ErrorKind::InvalidParameters, "oracle sample rate must lie in [0, 1]");
  }
  if (input_path) return;
  if (n_min < 1 || n_min > n_max) throw Error(ErrorKind::InvalidParameters, "need 1 <= n-min <= n-max");
  if (n_max > static_cast<int>(kMaxGeneratedOrder)) {
    throw Error(ErrorKind::CapacityExceeded,
                "tree generation is limited to " + std::to_string(kMaxGeneratedOrder) + " vertices");
  }
  if (n_max > kDefaultSurveyCeiling && !allow_long) {
    throw Error(ErrorKind::InvalidParameters, "orders above " + std::to_string(kDefaultSurveyCeiling) +
                                                  " take a long time; pass --allow-long to run them");
  }
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("FORTS_WORKERS")) {
    unsigned value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value >= 1) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string SurveyRow::mean_text(int decimals) const {
  if (tree_count == 0) return "";
  unsigned __int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const unsigned __int128 count = tree_count;
  const unsigned __int128 scaled = (static_cast<unsigned __int128>(forts_sum) * scale * 2 + count) / (2 * count);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  std::string frac = std::to_string(static_cast<std::uint64_t>(scaled % scale));
  if (decimals == 0) return std::to_string(whole);
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  return std::to_string(whole) + "." + frac;
}

bool SurveyRow::same_counts(const SurveyRow& other) const {
  return n == other.n && tree_count == other.tree_count && max_forts == other.max_forts &&
         argmax_codes == other.argmax_codes && forts_sum == other.forts_sum;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic per-tree coin flip, independent of scheduling.
bool sampled(const RunConfig& config, int n, std::size_t index) {
  if (config.oracle_sample <= 0) return false;
  if (config.oracle_sample >= 1) return true;
  const std::uint64_t h = splitmix64(config.seed ^ splitmix64((static_cast<std::uint64_t>(n) << 40) ^ index));
  return static_cast<double>(h >> 11) * 0x1.0p-53 < config.oracle_sample;
}

struct TreeSource {
  std::size_t count;
  std::function<Graph(std::size_t, std::vector<int>&)> build;
};

SurveyRow survey_source(int n, const TreeSource& source, const RunConfig& config) {
  constexpr std::size_t kChunk = 512;
  std::vector<std::uint32_t> counts(source.count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> oracle_checked{0};
  std::atomic<std::int64_t> busy_ns{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  auto work = [&] {
    FortEnumerator engine;
    std::vector<int> buffer;
    std::uint64_t checked = 0;
    const auto begin = std::chrono::steady_clock::now();
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t start = next.fetch_add(kChunk);
        if (start >= source.count) break;
        const std::size_t stop = std::min(source.count, start + kChunk);
        for (std::size_t i = start; i < stop; ++i) {
          const Graph t = source.build(i, buffer);
          counts[i] = static_cast<std::uint32_t>(engine.count(t));
          if (sampled(config, n, i)) {
            ++checked;
            if (enumerate_minimal_forts(t) != brute_force_minimal_forts(t)) {
              throw Error(ErrorKind::OracleMismatch,
                          "enumerator and oracle disagree on " + encode_graph6(t) + " (tree " + std::to_string(i) +
                              " of order " + std::to_string(n) + ")");
            }
          }
        }
      }
    } catch (...) {
      failed = true;
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
    oracle_checked += checked;
    busy_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - begin).count();
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(config.workers, (source.count + kChunk - 1) / kChunk));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  SurveyRow row;
  row.n = n;
  row.tree_count = source.count;
  row.oracle_checked = oracle_checked;
  std::vector<std::size_t> argmax;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    row.forts_sum += counts[i];
    if (counts[i] > row.max_forts) {
      row.max_forts = counts[i];
      argmax.clear();
    }
    if (counts[i] == row.max_forts) argmax.push_back(i);
  }
  std::vector<int> buffer;
  for (std::size_t i : argmax) row.argmax_codes.push_back(canonical_tree_code(source.build(i, buffer)).graph6);
  std::sort(row.argmax_codes.begin(), row.argmax_codes.end());
  row.argmax_codes.erase(std::unique(row.argmax_codes.begin(), row.argmax_codes.end()), row.argmax_codes.end());
  row.total_ms = static_cast<double>(busy_ns.load()) / 1e6;
  row.mean_ms = row.tree_count ? row.total_ms / static_cast<double>(row.tree_count) : 0;
  return row;
}

SurveyRow survey_generated(int n, const RunConfig& config) {
  // Level sequences are stored flat, one byte per vertex.
  std::vector<std::uint8_t> levels;
  FreeTreeGenerator gen(static_cast<std::size_t>(n));
  std::size_t count = 0;
  while (const LevelSequence* seq = gen.next_levels()) {
    for (int depth : *seq) levels.push_back(static_cast<std::uint8_t>(depth));
    ++count;
  }
  const auto width = static_cast<std::size_t>(n);
  TreeSource source{count, [&](std::size_t i, std::vector<int>& buffer) {
                      buffer.assign(levels.begin() + static_cast<std::ptrdiff_t>(i * width),
                                    levels.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
                      return tree_from_level_sequence(buffer);
                    }};
  return survey_source(n, source, config);
}

}  // namespace

SurveyRow survey_trees(int n, const std::vector<Graph>& trees, const RunConfig& config) {
  for (const Graph& t : trees) {
    if (static_cast<int>(t.order()) != n) {
      throw Error(ErrorKind::InvalidParameters, "survey batch mixes orders " + std::to_string(n) + " and " +
                                                    std::to_string(t.order()));
    }
    if (!is_tree(t)) throw Error(ErrorKind::NotATree, "survey input " + encode_graph6(t) + " is not a tree");
  }
  TreeSource source{trees.size(), [&](std::size_t i, std::vector<int>&) { return trees[i]; }};
  return survey_source(n, source, config);
}

std::vector<SurveyRow> run_survey(const RunConfig& config, const ProgressFn& progress) {
  config.validate();
  std::vector<SurveyRow> rows;
  if (config.input_path) {
    std::ifstream in(*config.input_path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + *config.input_path);
    std::map<int, std::vector<Graph>> by_order;
    for (Graph& g : read_graph6_file(in)) by_order[static_cast<int>(g.order())].push_back(std::move(g));
    for (const auto& [n, trees] : by_order) {
      rows.push_back(survey_trees(n, trees, config));
      if (progress) progress(rows.back());
    }
    return rows;
  }
  for (int n = config.n_min; n <= config.n_max; ++n) {
    rows.push_back(survey_generated(n, config));
    if (progress) progress(rows.back());
  }
  return rows;
}

namespace {

constexpr std::string_view kSurveyHeader =
    "n,tree_count,max_forts,argmax_count,argmax_g6,forts_sum,mean_forts,total_ms,mean_ms";

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no, std::string_view column) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad " + std::string(column) +
                                           " value '" + text + "'");
  }
  return value;
}

}  // namespace

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows, bool with_timing) {
  out << kSurveyHeader << '\n';
  for (const SurveyRow& r : rows) {
    std::string codes;
    for (const std::string& c : r.argmax_codes) {
      if (!codes.empty()) codes += ';';
      codes += c;
    }
    out << r.n << ',' << r.tree_count << ',' << r.max_forts << ',' << r.argmax_codes.size() << ',' << codes << ','
        << r.forts_sum << ',' << r.mean_text() << ',';
    if (with_timing) out << format_double(r.total_ms) << ',' << format_double(r.mean_ms);
    else out << ',';
    out << '\n';
  }
}

std::vector<SurveyRow> read_survey_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::ParseError, "empty survey file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSurveyHeader) throw Error(ErrorKind::ParseError, "unexpected survey header '" + line + "'");

  std::vector<SurveyRow> rows;
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 9) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected 9 fields, got " + std::to_string(f.size()));
    }
    SurveyRow r;
    r.n = parse_number<int>(f[0], line_no, "n");
    r.tree_count = parse_number<std::uint64_t>(f[1], line_no, "tree_count");
    r.max_forts = parse_number<std::uint64_t>(f[2], line_no, "max_forts");
    const auto argmax_count = parse_number<std::size_t>(f[3], line_no, "argmax_count");
    if (!f[4].empty()) r.argmax_codes = split(f[4], ';');
    if (r.argmax_codes.size() != argmax_count) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": argmax_count does not match codes");
    }
    r.forts_sum = parse_number<std::uint64_t>(f[5], line_no, "forts_sum");
    if (f[6] != r.mean_text()) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": mean_forts disagrees with forts_sum");
    }
    if (!f[7].empty()) r.total_ms = parse_number<double>(f[7], line_no, "total_ms");
    if (!f[8].empty()) r.mean_ms = parse_number<double>(f[8], line_no, "mean_ms");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SurveyRow> read_survey_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MissingSurveyData, "cannot open survey file " + path);
  return read_survey_csv(in);
}

const SurveyRow* find_row(const std::vector<SurveyRow>& rows, int n) {
  for (const SurveyRow& r : rows) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

}  // namespace forts
