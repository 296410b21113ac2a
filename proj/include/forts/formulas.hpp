#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace forts {

/// Exact counts. Every operation that could exceed 128 bits throws.
using BigCount = unsigned __int128;

std::string to_string(BigCount value);

BigCount binomial(std::uint64_t n, std::uint64_t k);

/// Minimal forts of the path on n >= 1 vertices: a1 = a2 = a3 = 1,
/// a(n) = a(n-2) + a(n-3). a(0) = 0 extends the recurrence backwards.
BigCount path_forts(int n);

/// Minimal forts of the star on n >= 3 vertices: C(n-1, 2).
BigCount star_forts(int n);

/// Minimal forts of T(n,k,m,p):
///   m^(k-p) (m-1)^p + (k-p) C(m,2) + p C(m-1,2).
/// Throws Error{InvalidParameters} unless k >= 2, m >= 3, 0 <= p <= k and n = 1 + k + km - p.
BigCount special_tree_forts(int n, int k, int m, int p);

/// Roots of z^3 - z - 1 and the coefficients of
///   a(n) = k1 psi^n + k2 omega2^n + k3 omega3^n.
struct ClosedFormConstants {
  double psi = 0;
  std::complex<double> omega2, omega3;
  double k1 = 0;
  std::complex<double> k2, k3;

  /// Oscillating remainder k2 omega2^n + k3 omega3^n (real up to rounding).
  [[nodiscard]] double epsilon(int n) const;
};

/// Computed once by Newton refinement from the seed 1.3.
const ClosedFormConstants& closed_form_constants();

/// (k1 psi^n - 1, k1 psi^n + 1); brackets path_forts(n) strictly.
std::pair<double, double> closed_form_bounds(int n);

/// Maximum minimal-fort counts over trees (ft) and forests (fr) per order.
struct MaxTable {
  std::vector<std::uint64_t> ft;  // index = order; ft[0] unused
  std::vector<std::uint64_t> fr;  // fr[0] = 0
  /// A partition of n achieving fr[n]: largest part first, ties resolved
  /// toward fewer parts.
  std::vector<std::vector<int>> best_partition;
  /// Optional per-order argmax tree codes (graph6), filled by survey callers.
  std::vector<std::vector<std::string>> argmax_codes;
};

/// fr[n] = max over part sizes s <= n of ft[s] + fr[n - s], fr[0] = 0.
/// `ft_values[k]` must be present for 1 <= k <= n_max (index 0 ignored).
MaxTable forest_max_table(int n_max, std::span<const std::uint64_t> ft_values);

/// A named pass/fail line in a verification report.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CrossoverRow {
  enum class Status { Holds, Fails, NoValidParameters };
  int n = 0;
  BigCount path = 0;
  /// (p, k, count) for each p in 0..4 giving valid parameters with m = 4.
  struct Candidate {
    int p = 0;
    int k = 0;
    BigCount count = 0;
  };
  std::vector<Candidate> candidates;
  Status status = Status::NoValidParameters;
};

struct CrossoverReport {
  std::vector<CrossoverRow> rows;  // n = 2..n_max
  /// Every n <= n_max with valid parameters has a candidate >= path_forts(n).
  bool claim_holds = false;
  /// Smallest n with valid parameters where every candidate falls below the
  /// path count, found by scanning past n_max.
  std::optional<int> first_failure;
  /// Smallest n where at least one valid candidate falls below the path.
  std::optional<int> first_candidate_below_path;
};

/// Compares T(n, (n-1+p)/5, 4, p) against the path for 2 <= n <= n_max.
CrossoverReport crossover_check(int n_max = 73);

struct InequalityReport {
  /// For d = 3, 4, 5: smallest n such that 4|k2||omega2|^(n-d) - a(n)/100 < 0
  /// for every n' in [n, scan_limit].
  std::vector<std::pair<int, int>> remainder_onset;
  /// Sign of the same quantity checked from the thresholds 16, 18, 19.
  bool remainder_negative_from_claimed = false;
  /// Maximum of (d-1)/psi^d over real d >= 1 located numerically.
  double ratio_argmax = 0;
  double ratio_max = 0;
  /// 1 / (e psi ln psi) and 1 + 1/ln psi.
  double ratio_max_closed_form = 0;
  double ratio_argmax_closed_form = 0;
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const;
};

inline constexpr int kRemainderScanLimit = 200;

/// Numeric confirmation of the inequalities the induction step relies on.
InequalityReport verify_inequalities();

struct RecursionRow {
  enum class Branch { PathLike, LargeDegree, NotCheckable };
  int n = 0;
  Branch branch = Branch::NotCheckable;
  /// Smallest d satisfying the large-degree inequality when used.
  std::optional<int> d;
};

/// For 4 <= n <= n_max, which recursion inequality fr[n] satisfies:
///   fr[n] <= fr[n-2] + fr[n-3], or
///   fr[n] <= C(d-1,2) + (d-1) fr[n-d] for some 3 <= d <= n-1.
/// The inequality holds per forest, not for the maxima, so NotCheckable rows
/// are informational.
std::vector<RecursionRow> recursion_bound_check(const MaxTable& table, int n_max);

}  // namespace forts
