#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "forts/formulas.hpp"
#include "forts/survey.hpp"

namespace forts {

/// Per-order tree maxima ft[0..n_max] from survey rows (ft[0] = 0).
/// Throws Error{MissingSurveyData} if any order 1..n_max is absent.
std::vector<std::uint64_t> tree_maxima(const std::vector<SurveyRow>& rows, int n_max);

/// "P_n", "S_n", "T(n,k,m,p)" for the named families, else the graph6 code.
std::string tree_name(const std::string& graph6);

struct Table1Row {
  int n = 0;
  std::uint64_t ft = 0;
  std::vector<std::string> max_trees;
  std::uint64_t fr = 0;
  std::string max_forest;
};

/// Needs survey rows for every order 1..n_max.
std::vector<Table1Row> build_table1(const std::vector<SurveyRow>& rows, int n_max);

struct Table2Row {
  enum class Status { Holds, Violated, Exception, Unknown };
  int n = 0;
  std::optional<std::uint64_t> ft;
  std::optional<std::uint64_t> fr;
  BigCount bound = 0;  // C(n,2) a(n)
  Status status = Status::Unknown;
};

/// Bound column from formulas alone; tree and forest columns are filled where
/// the survey covers every order up to n. Orders below 3 lie outside the
/// theorem, so a violation there is reported as an exception.
std::vector<Table2Row> build_table2(const std::vector<SurveyRow>& rows, int n_max);

std::string to_string(Table2Row::Status status);

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows);
void write_table2(std::ostream& out, const std::vector<Table2Row>& rows);
/// n,tree_count,mean_forts,total_ms,mean_ms with the mean at four decimals.
void write_table3(std::ostream& out, const std::vector<SurveyRow>& rows);

struct VerifyReport {
  std::vector<Check> checks;
  /// Informational lines that do not affect the outcome.
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const;
  void print(std::ostream& out) const;
};

VerifyReport verify_lemmas();
VerifyReport verify_crossover(int n_max = 73);
VerifyReport verify_recursion(const std::vector<SurveyRow>& rows, int n_max);
/// ft[n] <= fr[n] <= C(n,2) a(n) for 3 <= n <= n_max, plus detection of the
/// known failure at n = 2.
VerifyReport verify_theorem1(const std::vector<SurveyRow>& rows, int n_max);

}  // namespace forts
