#include "forts/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "forts/error.hpp"

namespace forts {

namespace {

constexpr BigCount kBigMax = ~BigCount{0};

BigCount checked_mul(BigCount a, BigCount b) {
  if (a != 0 && b > kBigMax / a) throw Error(ErrorKind::InvalidParameters, "count overflows 128 bits");
  return a * b;
}

BigCount checked_add(BigCount a, BigCount b) {
  if (b > kBigMax - a) throw Error(ErrorKind::InvalidParameters, "count overflows 128 bits");
  return a + b;
}

BigCount checked_pow(BigCount base, int exp) {
  BigCount out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

std::string to_string(BigCount value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) is divisible by i at every step.
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

BigCount path_forts(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameters, "path order must be non-negative");
  if (n == 0) return 0;
  if (n <= 3) return 1;
  BigCount a = 1, b = 1, c = 1;  // a(i-3), a(i-2), a(i-1)
  for (int i = 4; i <= n; ++i) {
    const BigCount next = checked_add(b, a);
    a = b;
    b = c;
    c = next;
  }
  return c;
}

BigCount star_forts(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameters, "star formula needs n >= 3");
  return binomial(static_cast<std::uint64_t>(n - 1), 2);
}

BigCount special_tree_forts(int n, int k, int m, int p) {
  if (k < 2 || m < 3 || p < 0 || p > k || n != 1 + k + k * m - p) {
    throw Error(ErrorKind::InvalidParameters, "T(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                                  std::to_string(m) + "," + std::to_string(p) +
                                                  ") needs k >= 2, m >= 3, 0 <= p <= k and n = 1 + k + km - p");
  }
  const BigCount with_root = checked_mul(checked_pow(static_cast<BigCount>(m), k - p),
                                         checked_pow(static_cast<BigCount>(m - 1), p));
  const BigCount leaf_pairs = checked_add(checked_mul(static_cast<BigCount>(k - p), binomial(m, 2)),
                                          checked_mul(static_cast<BigCount>(p), binomial(m - 1, 2)));
  return checked_add(with_root, leaf_pairs);
}

double ClosedFormConstants::epsilon(int n) const {
  return (k2 * std::pow(omega2, n) + k3 * std::pow(omega3, n)).real();
}

const ClosedFormConstants& closed_form_constants() {
  static const ClosedFormConstants constants = [] {
    ClosedFormConstants c;
    double psi = 1.3;
    for (int i = 0; i < 100; ++i) {
      const double step = (psi * psi * psi - psi - 1) / (3 * psi * psi - 1);
      psi -= step;
      if (std::abs(step) < 1e-17) break;
    }
    c.psi = psi;

    // Deflating by (z - psi) leaves z^2 + psi z + psi^2 - 1.
    const double imag = std::sqrt(3 * psi * psi - 4) / 2;
    std::complex<double> w(-psi / 2, -imag);
    for (int i = 0; i < 20; ++i) w -= (w * w * w - w - 1.0) / (3.0 * w * w - 1.0);
    c.omega2 = w;
    c.omega3 = std::conj(w);

    c.k1 = std::pow(psi, 4) / (2 * psi + 3);
    const double s = std::sqrt((3 - psi) / psi);
    // This coefficient multiplies the root with negative imaginary part.
    c.k2 = {(2 - 7 * psi - 3 * psi * psi) / 46, -(7 - 3 * psi) / 46 * s};
    c.k3 = std::conj(c.k2);
    return c;
  }();
  return constants;
}

std::pair<double, double> closed_form_bounds(int n) {
  const auto& c = closed_form_constants();
  const double main = c.k1 * std::pow(c.psi, n);
  return {main - 1, main + 1};
}

MaxTable forest_max_table(int n_max, std::span<const std::uint64_t> ft_values) {
  if (n_max < 0 || ft_values.size() <= static_cast<std::size_t>(n_max)) {
    throw Error(ErrorKind::MissingSurveyData, "tree maxima are needed for every order up to " + std::to_string(n_max));
  }
  MaxTable table;
  table.ft.assign(ft_values.begin(), ft_values.begin() + n_max + 1);
  table.fr.assign(n_max + 1, 0);
  table.best_partition.assign(n_max + 1, {});
  table.argmax_codes.assign(n_max + 1, {});

  std::vector<int> choice(n_max + 1, 0);
  std::vector<std::size_t> parts(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t best = 0;
    std::size_t best_parts = 0;
    int best_s = 0;
    for (int s = n; s >= 1; --s) {
      const std::uint64_t value = table.ft[s] + table.fr[n - s];
      const std::size_t count = 1 + parts[n - s];
      if (best_s == 0 || value > best || (value == best && count < best_parts)) {
        best = value;
        best_parts = count;
        best_s = s;
      }
    }
    table.fr[n] = best;
    parts[n] = best_parts;
    choice[n] = best_s;
  }
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int>& partition = table.best_partition[n];
    for (int rest = n; rest > 0; rest -= choice[rest]) partition.push_back(choice[rest]);
    std::sort(partition.begin(), partition.end(), std::greater<>());
  }
  return table;
}

CrossoverReport crossover_check(int n_max) {
  auto evaluate = [](int n) {
    CrossoverRow row;
    row.n = n;
    row.path = path_forts(n);
    bool any_holds = false;
    for (int p = 0; p <= 4; ++p) {
      if ((n - 1 + p) % 5 != 0) continue;
      const int k = (n - 1 + p) / 5;
      if (k < 2 || p > k) continue;
      const BigCount count = special_tree_forts(n, k, 4, p);
      row.candidates.push_back({p, k, count});
      any_holds = any_holds || count >= row.path;
    }
    if (row.candidates.empty()) {
      row.status = CrossoverRow::Status::NoValidParameters;
    } else {
      row.status = any_holds ? CrossoverRow::Status::Holds : CrossoverRow::Status::Fails;
    }
    return row;
  };
  auto some_below = [](const CrossoverRow& row) {
    return std::any_of(row.candidates.begin(), row.candidates.end(),
                       [&](const CrossoverRow::Candidate& c) { return c.count < row.path; });
  };

  CrossoverReport report;
  report.claim_holds = true;
  for (int n = 2; n <= n_max; ++n) {
    CrossoverRow row = evaluate(n);
    if (row.status == CrossoverRow::Status::Fails) report.claim_holds = false;
    if (!report.first_candidate_below_path && some_below(row)) report.first_candidate_below_path = n;
    report.rows.push_back(std::move(row));
  }
  // Keep scanning for the first failure; both sides fit in 128 bits far
  // beyond where the path overtakes.
  for (int n = 2; n <= 400; ++n) {
    const CrossoverRow row = n <= n_max ? report.rows[n - 2] : evaluate(n);
    if (!report.first_candidate_below_path && some_below(row)) report.first_candidate_below_path = n;
    if (row.status == CrossoverRow::Status::Fails) {
      report.first_failure = n;
      break;
    }
  }
  return report;
}

bool InequalityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

double remainder_quantity(int n, int d) {
  const auto& c = closed_form_constants();
  return 4 * std::abs(c.k2) * std::pow(std::abs(c.omega2), n - d) - static_cast<double>(path_forts(n)) / 100;
}

}  // namespace

InequalityReport verify_inequalities() {
  const auto& c = closed_form_constants();
  InequalityReport report;

  // Remainder sign for d = 3, 4, 5.
  const std::pair<int, int> claimed[] = {{3, 16}, {4, 18}, {5, 19}};
  report.remainder_negative_from_claimed = true;
  for (auto [d, from] : claimed) {
    int onset = kRemainderScanLimit + 1;
    for (int n = kRemainderScanLimit; n >= d && remainder_quantity(n, d) < 0; --n) onset = n;
    report.remainder_onset.emplace_back(d, onset);
    bool negative = true;
    for (int n = from; n <= kRemainderScanLimit; ++n) negative = negative && remainder_quantity(n, d) < 0;
    report.remainder_negative_from_claimed = report.remainder_negative_from_claimed && negative;
    report.checks.push_back({"remainder d=" + std::to_string(d) + " negative for " + std::to_string(from) +
                                 " <= n <= " + std::to_string(kRemainderScanLimit),
                             negative, "sign first turns negative for good at n=" + std::to_string(onset)});
  }

  // The shifted path bound these remainders feed: a(n-d) <= 1.01 a(n) / psi^d.
  {
    bool ok = true;
    for (int d = 3; d <= 5; ++d) {
      for (int n = 19; n <= kRemainderScanLimit; ++n) {
        ok = ok && static_cast<double>(path_forts(n - d)) <=
                       1.01 * static_cast<double>(path_forts(n)) / std::pow(c.psi, d);
      }
    }
    report.checks.push_back({"a(n-d) <= (101/100) a(n)/psi^d for d in 3..5, 19 <= n <= 200", ok, ""});
  }

  // (d-1)/psi^d is unimodal on d >= 1; golden-section search for its peak.
  {
    auto f = [&](double d) { return (d - 1) / std::pow(c.psi, d); };
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double lo = 1;
    double hi = 20;
    for (int i = 0; i < 200; ++i) {
      const double x1 = hi - inv_phi * (hi - lo);
      const double x2 = lo + inv_phi * (hi - lo);
      if (f(x1) < f(x2)) {
        lo = x1;
      } else {
        hi = x2;
      }
    }
    report.ratio_argmax = (lo + hi) / 2;
    report.ratio_max = f(report.ratio_argmax);
    report.ratio_argmax_closed_form = 1 + 1 / std::log(c.psi);
    report.ratio_max_closed_form = 1 / (std::numbers::e * c.psi * std::log(c.psi));
    const bool located = std::abs(report.ratio_argmax - 4.56) <= 0.01 && std::abs(report.ratio_max - 0.9876) <= 1e-3;
    const bool agrees = std::abs(report.ratio_argmax - report.ratio_argmax_closed_form) < 1e-6 &&
                        std::abs(report.ratio_max - report.ratio_max_closed_form) < 1e-12;
    report.checks.push_back({"max of (d-1)/psi^d is 0.9876 at d=4.56", located && agrees,
                             "max " + std::to_string(report.ratio_max) + " at d=" +
                                 std::to_string(report.ratio_argmax)});
    report.checks.push_back({"max of (d-1)/psi^d < 100/101", report.ratio_max < 100.0 / 101.0, ""});
  }

  // (d-1) C(n-d,2) / psi^d < (100/101) C(n-1,2) for n >= d >= 3.
  {
    bool ok = true;
    for (int n = 3; n <= 100; ++n) {
      for (int d = 3; d <= n; ++d) {
        const double lhs = (d - 1) * static_cast<double>(binomial(n - d, 2)) / std::pow(c.psi, d);
        ok = ok && lhs < 100.0 / 101.0 * static_cast<double>(binomial(n - 1, 2));
      }
    }
    report.checks.push_back({"(d-1) C(n-d,2)/psi^d < (100/101) C(n-1,2) for 3 <= d <= n <= 100", ok, ""});
  }

  // 5/3 (a(n) - 1) - C(n-6, 2) > 0, compared exactly as 5 (a(n) - 1) > 3 C(n-6, 2).
  {
    bool ok = true;
    int worst = 0;
    for (int n = 8; n <= 200; ++n) {
      const BigCount lhs = checked_mul(5, path_forts(n) - 1);
      const BigCount rhs = checked_mul(3, binomial(n - 6, 2));
      if (!(lhs > rhs)) {
        ok = false;
        worst = n;
      }
    }
    report.checks.push_back({"5/3 (a(n) - 1) - C(n-6,2) > 0 for 8 <= n <= 200", ok,
                             ok ? "" : "fails at n=" + std::to_string(worst)});
  }

  // g(d) = (d-1)(d-2)/(2d): g(6) = 5/3 and g(d+1) >= g(d), in integers.
  {
    const bool at_six = 3 * 5 * 4 == 5 * 2 * 6;
    bool monotone = true;
    for (long d = 6; d < 100; ++d) {
      // g(d+1) >= g(d)  <=>  d * d * (d - 1) >= (d - 1) * (d - 2) * (d + 1)
      monotone = monotone && d * d * (d - 1) >= (d - 1) * (d - 2) * (d + 1);
    }
    report.checks.push_back({"(d-1)(d-2)/(2d) equals 5/3 at d=6", at_six, ""});
    report.checks.push_back({"(d-1)(d-2)/(2d) non-decreasing for 6 <= d <= 100", monotone, ""});
  }

  // C(d-1,2) + d C(n-d,2) <= C(d-1,2) a(n) and the final large-degree bound.
  {
    bool chain = true;
    bool final_bound = true;
    for (int n = 8; n <= 100; ++n) {
      for (int d = 6; d <= n; ++d) {
        const BigCount choose = binomial(d - 1, 2);
        const BigCount rest = binomial(n - d, 2);
        chain = chain && checked_add(choose, checked_mul(d, rest)) <= checked_mul(choose, path_forts(n));
        const BigCount lhs = checked_add(choose, checked_mul(checked_mul(d - 1, rest), path_forts(n - d)));
        final_bound = final_bound && lhs <= checked_mul(binomial(n, 2), path_forts(n));
      }
    }
    report.checks.push_back({"C(d-1,2) + d C(n-d,2) <= C(d-1,2) a(n) for 8 <= n <= 100, 6 <= d <= n", chain, ""});
    report.checks.push_back(
        {"C(d-1,2) + (d-1) C(n-d,2) a(n-d) <= C(n,2) a(n) for 8 <= n <= 100, 6 <= d <= n", final_bound, ""});
  }
  return report;
}

std::vector<RecursionRow> recursion_bound_check(const MaxTable& table, int n_max) {
  if (table.fr.size() <= static_cast<std::size_t>(n_max)) {
    throw Error(ErrorKind::MissingSurveyData, "forest maxima are needed up to " + std::to_string(n_max));
  }
  std::vector<RecursionRow> rows;
  for (int n = 4; n <= n_max; ++n) {
    RecursionRow row;
    row.n = n;
    const std::uint64_t fr = table.fr[n];
    for (int d = 3; d <= n - 1 && !row.d; ++d) {
      const BigCount bound = binomial(d - 1, 2) + static_cast<BigCount>(d - 1) * table.fr[n - d];
      if (fr <= bound) row.d = d;
    }
    if (fr <= table.fr[n - 2] + table.fr[n - 3]) {
      row.branch = RecursionRow::Branch::PathLike;
    } else if (row.d) {
      row.branch = RecursionRow::Branch::LargeDegree;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace forts
