#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "forts/error.hpp"
#include "forts/fort_enum.hpp"
#include "forts/oracle.hpp"
#include "forts/reports.hpp"
#include "forts/survey.hpp"
#include "forts/treegen.hpp"

using namespace forts;

namespace {

// Destination stream for --out; "-" or empty means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::ParseError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct EnumerateOptions {
  std::string edges_path;
  std::string graph6;
  bool json = false;
};

int cmd_enumerate(const EnumerateOptions& opt) {
  Graph g;
  if (!opt.graph6.empty()) {
    g = decode_graph6(opt.graph6);
  } else if (opt.edges_path == "-") {
    g = read_edge_list(std::cin);
  } else {
    std::ifstream in(opt.edges_path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + opt.edges_path);
    g = read_edge_list(in);
  }

  FortCollection forts;
  std::string method;
  if (g.order() > 0 && is_tree(g)) {
    forts = enumerate_minimal_forts(g);
    method = "tree";
  } else if (is_forest(g)) {
    forts = enumerate_minimal_forts_forest(g);
    method = "forest";
  } else {
    forts = brute_force_minimal_forts(g);
    method = "oracle";
  }

  if (opt.json) {
    nlohmann::json doc;
    doc["n"] = g.order();
    doc["edges"] = g.edge_count();
    doc["method"] = method;
    doc["count"] = forts.size();
    doc["forts"] = nlohmann::json::array();
    for (VertexSet f : forts) doc["forts"].push_back(f.to_vector());
    std::cout << doc.dump(2) << '\n';
  } else {
    for (VertexSet f : forts) std::cout << format_vertex_list(f) << '\n';
    std::cout << "count: " << forts.size() << '\n';
  }
  return 0;
}

struct SurveyOptions {
  RunConfig config;
  std::string out;
  std::string input;
  bool no_timing = false;
  bool quiet = false;
};

int cmd_survey(SurveyOptions opt) {
  if (!opt.input.empty()) opt.config.input_path = opt.input;
  auto progress = [&](const SurveyRow& r) {
    if (opt.quiet) return;
    std::cerr << "n=" << r.n << " trees=" << r.tree_count << " max=" << r.max_forts << " mean=" << r.mean_text(4)
              << " time=" << r.total_ms << "ms";
    if (r.oracle_checked > 0) std::cerr << " oracle-checked=" << r.oracle_checked;
    std::cerr << '\n';
  };
  const std::vector<SurveyRow> rows = run_survey(opt.config, progress);
  Output out(opt.out);
  write_survey_csv(out.stream(), rows, !opt.no_timing);
  return 0;
}

struct DataOptions {
  std::string survey_path;
  bool live = false;
  bool allow_long = false;
  unsigned workers = 1;
};

// Survey rows from a CSV file or, with --live, a fresh survey of 1..n_max.
std::vector<SurveyRow> load_rows(const DataOptions& opt, int n_max) {
  if (!opt.survey_path.empty()) return read_survey_csv_file(opt.survey_path);
  if (!opt.live) return {};
  RunConfig config;
  config.n_min = 1;
  config.n_max = n_max;
  config.workers = opt.workers;
  config.allow_long = opt.allow_long;
  return run_survey(config);
}

int highest_covered(const std::vector<SurveyRow>& rows) {
  int n = 0;
  while (find_row(rows, n + 1) != nullptr) ++n;
  return n;
}

struct TablesOptions {
  int table = 1;
  std::optional<int> n_max;
  std::string out;
  DataOptions data;
};

int cmd_tables(const TablesOptions& opt) {
  const int live_n = opt.n_max.value_or(opt.table == 2 ? 20 : kDefaultSurveyCeiling);
  const std::vector<SurveyRow> rows = load_rows(opt.data, live_n);
  if (opt.table != 2 && rows.empty()) {
    throw Error(ErrorKind::MissingSurveyData, "table " + std::to_string(opt.table) +
                                                  " needs survey data; pass --survey FILE or --live");
  }
  Output out(opt.out);
  switch (opt.table) {
    case 1: write_table1(out.stream(), build_table1(rows, opt.n_max.value_or(highest_covered(rows)))); break;
    case 2: write_table2(out.stream(), build_table2(rows, opt.n_max.value_or(20))); break;
    default: {
      std::vector<SurveyRow> selected;
      for (const SurveyRow& r : rows) {
        if (!opt.n_max || r.n <= *opt.n_max) selected.push_back(r);
      }
      write_table3(out.stream(), selected);
    }
  }
  return 0;
}

struct VerifyOptions {
  std::string target;
  std::optional<int> n_max;
  DataOptions data;
};

int cmd_verify(const VerifyOptions& opt) {
  VerifyReport report;
  if (opt.target == "lemmas") {
    report = verify_lemmas();
  } else if (opt.target == "crossover") {
    report = verify_crossover(opt.n_max.value_or(73));
  } else {
    const std::vector<SurveyRow> rows = load_rows(opt.data, opt.n_max.value_or(kDefaultSurveyCeiling));
    if (rows.empty()) {
      throw Error(ErrorKind::MissingSurveyData, opt.target + " needs survey data; pass --survey FILE or --live");
    }
    const int n_max = opt.n_max.value_or(highest_covered(rows));
    report = opt.target == "recursion" ? verify_recursion(rows, n_max) : verify_theorem1(rows, n_max);
  }
  report.print(std::cout);
  std::cout << (report.passed() ? "all checks passed" : "some checks failed") << '\n';
  return report.passed() ? 0 : 1;
}

int cmd_gen_trees(int n, const std::string& out_path) {
  Output out(out_path);
  FreeTreeGenerator gen(static_cast<std::size_t>(n));
  while (const LevelSequence* levels = gen.next_levels()) {
    out.stream() << encode_graph6(tree_from_level_sequence(*levels)) << '\n';
  }
  return 0;
}

void add_data_options(CLI::App* cmd, DataOptions& data) {
  cmd->add_option("--survey", data.survey_path, "Survey CSV produced by `forts survey`");
  cmd->add_flag("--live", data.live, "Run the survey in-process instead of reading a CSV");
  cmd->add_flag("--allow-long", data.allow_long, "Allow live surveys above order 16");
  cmd->add_option("--workers", data.workers, "Worker threads for a live survey")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal fort enumeration and tree surveys"};
  app.require_subcommand(1);

  EnumerateOptions enum_opt;
  auto* enumerate = app.add_subcommand("enumerate", "List the minimal forts of one graph");
  auto* edges = enumerate->add_option("--edges", enum_opt.edges_path, "Edge list file (\"n m\" then m pairs; - for stdin)");
  auto* g6 = enumerate->add_option("--g6", enum_opt.graph6, "graph6 string");
  edges->excludes(g6);
  enumerate->add_flag("--json", enum_opt.json, "Structured output");

  SurveyOptions survey_opt;
  survey_opt.config.workers = default_worker_count();
  auto* survey = app.add_subcommand("survey", "Count minimal forts over all trees of each order");
  survey->add_option("--n-min", survey_opt.config.n_min, "Smallest order")->capture_default_str();
  survey->add_option("--n-max", survey_opt.config.n_max, "Largest order")->capture_default_str();
  survey->add_option("--workers", survey_opt.config.workers, "Worker threads (default: FORTS_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  survey->add_option("--oracle-sample", survey_opt.config.oracle_sample,
                     "Fraction of trees re-checked by brute force")
      ->check(CLI::Range(0.0, 1.0));
  survey->add_option("--seed", survey_opt.config.seed, "Seed for oracle sampling");
  survey->add_flag("--allow-long", survey_opt.config.allow_long, "Permit orders above 16");
  survey->add_option("--input", survey_opt.input, "Survey the trees in a graph6 file instead");
  survey->add_option("--out", survey_opt.out, "CSV destination (default stdout)");
  survey->add_flag("--no-timing", survey_opt.no_timing, "Leave the timing columns empty");
  survey->add_flag("--quiet", survey_opt.quiet, "No progress lines on stderr");

  TablesOptions tables_opt;
  auto* tables = app.add_subcommand("tables", "Emit the summary tables as CSV");
  tables->add_option("--table", tables_opt.table, "1: maxima, 2: bound check, 3: means")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  tables->add_option("--n-max", tables_opt.n_max, "Largest order");
  tables->add_option("--out", tables_opt.out, "CSV destination (default stdout)");
  add_data_options(tables, tables_opt.data);

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Run a verification target; exit code 0 iff every check passes");
  verify->add_option("--target", verify_opt.target, "What to verify")
      ->required()
      ->check(CLI::IsMember({"lemmas", "crossover", "recursion", "theorem1"}));
  verify->add_option("--n-max", verify_opt.n_max, "Largest order");
  add_data_options(verify, verify_opt.data);

  int gen_n = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-trees", "Write every tree of one order as graph6");
  gen->add_option("--n", gen_n, "Order")->required();
  gen->add_option("--out", gen_out, "Destination (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) {
      if (enum_opt.edges_path.empty() && enum_opt.graph6.empty()) {
        std::cerr << "enumerate needs --edges FILE or --g6 STRING\n";
        return 2;
      }
      return cmd_enumerate(enum_opt);
    }
    if (*survey) return cmd_survey(survey_opt);
    if (*tables) return cmd_tables(tables_opt);
    if (*verify) return cmd_verify(verify_opt);
    if (*gen) return cmd_gen_trees(gen_n, gen_out);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
