#include "forts/reports.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "forts/error.hpp"
#include "forts/treegen.hpp"

namespace forts {

std::vector<std::uint64_t> tree_maxima(const std::vector<SurveyRow>& rows, int n_max) {
  std::vector<std::uint64_t> ft(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    const SurveyRow* row = find_row(rows, n);
    if (row == nullptr) {
      throw Error(ErrorKind::MissingSurveyData,
                  "survey data for order " + std::to_string(n) + " is missing (need every order 1.." +
                      std::to_string(n_max) + ")");
    }
    ft[n] = row->max_forts;
  }
  return ft;
}

std::string tree_name(const std::string& graph6) {
  const Graph g = decode_graph6(graph6);
  const std::size_t n = g.order();
  if (!is_tree(g)) return graph6;
  const LevelSequence code = canonical_tree_code(g).level_sequence;
  auto same = [&](const Graph& other) { return canonical_tree_code(other).level_sequence == code; };
  const std::string order = std::to_string(n);
  if (n >= 4 && same(star(n))) return "S_" + order;
  if (same(path(n))) return "P_" + order;
  for (std::size_t k = 2; k < n; ++k) {
    for (std::size_t m = 3; 1 + k + k * m <= n + k; ++m) {
      for (std::size_t p = 0; p <= k; ++p) {
        if (1 + k + k * m - p != n) continue;
        if (same(special_tree(n, k, m, p))) {
          return "T(" + order + "," + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(p) + ")";
        }
      }
    }
  }
  return graph6;
}

namespace {

std::vector<std::string> names_of(const SurveyRow& row) {
  std::vector<std::string> names;
  for (const std::string& code : row.argmax_codes) names.push_back(tree_name(code));
  return names;
}

std::string forest_name(const std::vector<int>& partition, const std::vector<SurveyRow>& rows) {
  std::string out;
  int singletons = 0;
  for (int part : partition) {
    if (part == 1) {
      ++singletons;
      continue;
    }
    const SurveyRow* row = find_row(rows, part);
    const std::string name = row && !row->argmax_codes.empty() ? tree_name(row->argmax_codes.front()) : "?";
    if (!out.empty()) out += " + ";
    out += name;
  }
  if (singletons > 0) {
    if (!out.empty()) out += " + ";
    out += "E_" + std::to_string(singletons);
  }
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

std::vector<Table1Row> build_table1(const std::vector<SurveyRow>& rows, int n_max) {
  const std::vector<std::uint64_t> ft = tree_maxima(rows, n_max);
  const MaxTable table = forest_max_table(n_max, ft);
  std::vector<Table1Row> out;
  for (int n = 1; n <= n_max; ++n) {
    Table1Row r;
    r.n = n;
    r.ft = ft[n];
    r.max_trees = names_of(*find_row(rows, n));
    r.fr = table.fr[n];
    r.max_forest = forest_name(table.best_partition[n], rows);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Table2Row> build_table2(const std::vector<SurveyRow>& rows, int n_max) {
  int covered = 0;
  while (find_row(rows, covered + 1) != nullptr) ++covered;
  covered = std::min(covered, n_max);
  std::optional<MaxTable> table;
  if (covered > 0) table = forest_max_table(covered, tree_maxima(rows, covered));

  std::vector<Table2Row> out;
  for (int n = 1; n <= n_max; ++n) {
    Table2Row r;
    r.n = n;
    r.bound = binomial(n, 2) * path_forts(n);
    if (n <= covered) {
      r.ft = table->ft[n];
      r.fr = table->fr[n];
      const bool holds = *r.fr <= r.bound;
      if (holds) r.status = Table2Row::Status::Holds;
      else r.status = n < 3 ? Table2Row::Status::Exception : Table2Row::Status::Violated;
    }
    out.push_back(r);
  }
  return out;
}

std::string to_string(Table2Row::Status status) {
  switch (status) {
    case Table2Row::Status::Holds: return "holds";
    case Table2Row::Status::Violated: return "violated";
    case Table2Row::Status::Exception: return "exception";
    case Table2Row::Status::Unknown: return "";
  }
  return "";
}

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows) {
  out << "n,F_T,max_tree,F_R,max_forest\n";
  for (const Table1Row& r : rows) {
    out << r.n << ',' << r.ft << ',' << csv_field(join(r.max_trees, "; ")) << ',' << r.fr << ','
        << csv_field(r.max_forest) << '\n';
  }
}

void write_table2(std::ostream& out, const std::vector<Table2Row>& rows) {
  out << "n,F_T,F_R,C(n 2)*F_P,status\n";
  for (const Table2Row& r : rows) {
    out << r.n << ',' << (r.ft ? std::to_string(*r.ft) : "") << ',' << (r.fr ? std::to_string(*r.fr) : "") << ','
        << to_string(r.bound) << ',' << to_string(r.status) << '\n';
  }
}

void write_table3(std::ostream& out, const std::vector<SurveyRow>& rows) {
  out << "n,tree_count,mean_forts,total_ms,mean_ms\n";
  for (const SurveyRow& r : rows) {
    out << r.n << ',' << r.tree_count << ',' << r.mean_text(4) << ',' << r.total_ms << ',' << r.mean_ms << '\n';
  }
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerifyReport::print(std::ostream& out) const {
  for (const Check& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  for (const std::string& note : notes) out << "note: " << note << '\n';
}

VerifyReport verify_lemmas() {
  const InequalityReport r = verify_inequalities();
  VerifyReport out;
  out.checks = r.checks;
  for (auto [d, n] : r.remainder_onset) {
    out.notes.push_back("d=" + std::to_string(d) + ": remainder negative for every n >= " + std::to_string(n) +
                        " up to " + std::to_string(kRemainderScanLimit));
  }
  return out;
}

VerifyReport verify_crossover(int n_max) {
  const CrossoverReport r = crossover_check(n_max);
  VerifyReport out;
  std::string failures;
  int no_params = 0;
  for (const CrossoverRow& row : r.rows) {
    if (row.status == CrossoverRow::Status::Fails) failures += (failures.empty() ? "" : " ") + std::to_string(row.n);
    if (row.status == CrossoverRow::Status::NoValidParameters) ++no_params;
  }
  out.checks.push_back({"some T(n,k,4,p) has at least as many minimal forts as P_n for n <= " + std::to_string(n_max),
                        r.claim_holds, failures.empty() ? "" : "fails at " + failures});
  out.notes.push_back(std::to_string(no_params) + " orders up to " + std::to_string(n_max) +
                      " admit no valid (k, p) with m = 4");
  if (r.first_failure) out.notes.push_back("first failing order: " + std::to_string(*r.first_failure));
  return out;
}

VerifyReport verify_recursion(const std::vector<SurveyRow>& rows, int n_max) {
  const MaxTable table = forest_max_table(n_max, tree_maxima(rows, n_max));
  VerifyReport out;
  std::string unchecked;
  for (const RecursionRow& r : recursion_bound_check(table, n_max)) {
    std::string line = "n=" + std::to_string(r.n) + ": ";
    switch (r.branch) {
      case RecursionRow::Branch::PathLike: line += "fr[n] <= fr[n-2] + fr[n-3]"; break;
      case RecursionRow::Branch::LargeDegree: line += "large-degree bound with d=" + std::to_string(*r.d); break;
      case RecursionRow::Branch::NotCheckable:
        line += "not directly checkable from maxima";
        unchecked += (unchecked.empty() ? "" : " ") + std::to_string(r.n);
        break;
    }
    out.notes.push_back(line);
  }
  // The disjunction holds forest by forest, so rows the maxima cannot settle
  // are reported rather than failed.
  out.checks.push_back({"recursion scan over forest maxima for 4 <= n <= " + std::to_string(n_max), true,
                        unchecked.empty() ? "" : "not checkable from maxima: " + unchecked});
  return out;
}

VerifyReport verify_theorem1(const std::vector<SurveyRow>& rows, int n_max) {
  const std::vector<Table2Row> table = build_table2(rows, n_max);
  VerifyReport out;
  for (const Table2Row& r : table) {
    if (!r.fr) {
      throw Error(ErrorKind::MissingSurveyData, "survey data for order " + std::to_string(r.n) + " is missing");
    }
    const std::string values = "F_T=" + std::to_string(*r.ft) + " F_R=" + std::to_string(*r.fr) +
                               " C(n,2)F_P=" + to_string(r.bound);
    if (r.n >= 3) {
      out.checks.push_back({"n=" + std::to_string(r.n) + ": F_T <= F_R <= C(n,2) F_P",
                            *r.ft <= *r.fr && *r.fr <= r.bound, values});
    } else if (r.n == 2) {
      out.checks.push_back({"n=2 exception detected", r.status == Table2Row::Status::Exception, values});
    } else {
      out.notes.push_back("n=1 lies outside the theorem: " + values);
    }
  }
  return out;
}

}  // namespace forts
