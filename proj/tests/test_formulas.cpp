#include <doctest.h>

#include <cmath>
#include <functional>

#include "forts/error.hpp"
#include "forts/formulas.hpp"
#include "forts/fort_enum.hpp"
#include "forts/treegen.hpp"
#include "support.hpp"

using namespace forts;
using forts::testing::thrown_kind;

namespace {

// Tree maxima for orders 1..20 from the full survey.
const std::vector<std::uint64_t> kTreeMaxima{0,  1,  1,  1,  3,  6,   10,  15,  21,  28, 36,
                                             45, 55, 66, 78, 91, 105, 120, 136, 162, 213};

// Forest maximum by listing every integer partition.
std::uint64_t partition_max(int n, int largest, const std::vector<std::uint64_t>& ft) {
  if (n == 0) return 0;
  std::uint64_t best = 0;
  for (int s = std::min(n, largest); s >= 1; --s) best = std::max(best, ft[s] + partition_max(n - s, s, ft));
  return best;
}

std::uint64_t u64(BigCount v) { return static_cast<std::uint64_t>(v); }

}  // namespace

TEST_CASE("big count helpers") {
  CHECK(to_string(BigCount{0}) == "0");
  CHECK(to_string(BigCount{28690}) == "28690");
  CHECK(to_string(~BigCount{0}) == "340282366920938463463374607431768211455");
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == BigCount{118264581564861424ULL});
  CHECK(thrown_kind([] { path_forts(1000); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("path counts") {
  const std::uint64_t expected[] = {0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65, 86, 114, 151, 200};
  for (int n = 0; n <= 21; ++n) CHECK(u64(path_forts(n)) == expected[n]);
  CHECK(u64(binomial(7, 2) * path_forts(7)) == 84);
  CHECK(u64(binomial(19, 2) * path_forts(19)) == 19494);
  CHECK(u64(binomial(20, 2) * path_forts(20)) == 28690);
  CHECK(thrown_kind([] { path_forts(-1); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("path counts match the enumerator") {
  for (int n = 1; n <= 20; ++n) CHECK(enumerate_minimal_forts(path(n)).size() == u64(path_forts(n)));
}

TEST_CASE("star counts") {
  CHECK(u64(star_forts(3)) == 1);
  CHECK(u64(star_forts(4)) == 3);
  CHECK(u64(star_forts(18)) == 136);
  for (int n = 3; n <= 16; ++n) CHECK(enumerate_minimal_forts(star(n)).size() == u64(star_forts(n)));
  CHECK(thrown_kind([] { star_forts(2); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("special tree counts") {
  CHECK(u64(special_tree_forts(19, 4, 4, 2)) == 162);
  CHECK(u64(special_tree_forts(20, 4, 4, 1)) == 213);
  CHECK(thrown_kind([] { special_tree_forts(19, 4, 4, 1); }) == ErrorKind::InvalidParameters);
  CHECK(thrown_kind([] { special_tree_forts(9, 2, 3, 3); }) == ErrorKind::InvalidParameters);
  CHECK(thrown_kind([] { special_tree_forts(7, 1, 5, 0); }) == ErrorKind::InvalidParameters);
  // Large parameters stay exact in 128 bits.
  CHECK(special_tree_forts(1 + 40 + 40 * 9, 40, 9, 0) ==
        [] {
          BigCount v = 1;
          for (int i = 0; i < 40; ++i) v *= 9;
          return v + 40 * 36;
        }());
  SUBCASE("matches the enumerator for every valid parameter set up to 20 vertices") {
    int checked = 0;
    for (int k = 2; k <= 9; ++k) {
      for (int m = 3; m <= 9; ++m) {
        for (int p = 0; p <= k; ++p) {
          const int n = 1 + k + k * m - p;
          if (n > 20) continue;
          ++checked;
          CHECK(enumerate_minimal_forts(special_tree(n, k, m, p)).size() == u64(special_tree_forts(n, k, m, p)));
        }
      }
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("closed form constants") {
  const ClosedFormConstants& c = closed_form_constants();
  auto cubic = [](std::complex<double> z) { return z * z * z - z - 1.0; };
  CHECK(std::abs(cubic(c.psi)) < 1e-12);
  CHECK(std::abs(cubic(c.omega2)) < 1e-12);
  CHECK(std::abs(cubic(c.omega3)) < 1e-12);
  CHECK(c.psi == doctest::Approx(1.324718).epsilon(1e-6));
  CHECK(c.k1 == doctest::Approx(0.545116).epsilon(1e-5));
  CHECK(c.omega2 == std::conj(c.omega3));
  CHECK(c.k2 == std::conj(c.k3));
  CHECK(std::abs(c.omega2) < 1);
  CHECK(std::abs(c.k2) < 1);
  CHECK(std::abs(c.k2) == doctest::Approx(0.2824176).epsilon(1e-6));
  CHECK(std::abs(c.omega2) == doctest::Approx(0.8688370).epsilon(1e-6));
  SUBCASE("the three terms reproduce the path counts") {
    for (int n = 0; n <= 60; ++n) {
      const double closed = c.k1 * std::pow(c.psi, n) + c.epsilon(n);
      const double exact = static_cast<double>(path_forts(n));
      CHECK(std::abs(closed - exact) < 1e-9 * std::max(1.0, exact));
      if (n >= 1) CHECK(std::abs(c.epsilon(n)) < 1);
    }
  }
}

TEST_CASE("closed form bounds bracket the path counts strictly") {
  for (int n = 0; n <= 60; ++n) {
    const auto [lo, hi] = closed_form_bounds(n);
    const double a = static_cast<double>(path_forts(n));
    CAPTURE(n);
    CHECK(lo < a);
    CHECK(a < hi);
  }
  const auto [lo, hi] = closed_form_bounds(19);
  CHECK(lo < 114);
  CHECK(114 < hi);
  CHECK(hi - lo == doctest::Approx(2));
}

TEST_CASE("forest maxima") {
  const MaxTable t = forest_max_table(20, kTreeMaxima);
  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(t.fr[n] == partition_max(n, n, kTreeMaxima));
    CHECK(t.fr[n] >= t.ft[n]);
    std::uint64_t sum = 0;
    for (int part : t.best_partition[n]) sum += kTreeMaxima[part];
    CHECK(sum == t.fr[n]);
    CHECK(std::is_sorted(t.best_partition[n].rbegin(), t.best_partition[n].rend()));
    if (n < 20) CHECK(t.fr[n + 1] >= t.fr[n] + 1);
  }
  CHECK(t.fr[0] == 0);
  CHECK(t.fr[2] == 2);
  CHECK(t.fr[4] == 4);
  CHECK(t.best_partition[4] == std::vector<int>{1, 1, 1, 1});
  CHECK(t.fr[19] == 162);
  CHECK(t.best_partition[19] == std::vector<int>{19});
  CHECK(t.fr[20] == 213);
  for (int n = 5; n <= 18; ++n) CHECK(t.fr[n] == u64(binomial(n - 1, 2)));
  CHECK(thrown_kind([] { forest_max_table(5, std::vector<std::uint64_t>{0, 1, 1}); }) ==
        ErrorKind::MissingSurveyData);
}

TEST_CASE("forest maxima prefer fewer parts on ties") {
  // ft[3] = 3 ties 1 + 1 + 1.
  const std::vector<std::uint64_t> ft{0, 1, 1, 3};
  const MaxTable t = forest_max_table(3, ft);
  CHECK(t.fr[3] == 3);
  CHECK(t.best_partition[3] == std::vector<int>{3});
}

TEST_CASE("crossover scan") {
  const CrossoverReport r = crossover_check();
  CHECK(r.claim_holds);
  REQUIRE(r.rows.size() == 72);
  const CrossoverRow& n21 = r.rows[21 - 2];
  CHECK(n21.n == 21);
  CHECK(u64(n21.path) == 200);
  REQUIRE(n21.candidates.size() == 1);
  CHECK(n21.candidates[0].p == 0);
  CHECK(n21.candidates[0].k == 4);
  CHECK(u64(n21.candidates[0].count) == 280);
  CHECK(r.rows[73 - 2].status == CrossoverRow::Status::Holds);
  for (int n : {2, 3, 4, 5, 6, 7, 8, 12}) CHECK(r.rows[n - 2].status == CrossoverRow::Status::NoValidParameters);

  // Independent scan in 64-bit arithmetic for the first failing order.
  auto path64 = [](int n) {
    std::vector<std::uint64_t> a{0, 1, 1, 1};
    for (int i = 4; i <= n; ++i) a.push_back(a[i - 2] + a[i - 3]);
    return a[n];
  };
  int first_failure = 0;
  for (int n = 9; first_failure == 0; ++n) {
    bool any_valid = false;
    bool any_holds = false;
    for (int p = 0; p <= 4; ++p) {
      if ((n - 1 + p) % 5 != 0) continue;
      const int k = (n - 1 + p) / 5;
      if (k < 2 || p > k) continue;
      any_valid = true;
      std::uint64_t count = 1;
      for (int i = 0; i < k - p; ++i) count *= 4;
      for (int i = 0; i < p; ++i) count *= 3;
      count += (k - p) * 6 + p * 3;
      any_holds = any_holds || count >= path64(n);
    }
    if (any_valid && !any_holds) first_failure = n;
  }
  CHECK(first_failure == 77);
  CHECK(r.first_failure == 77);
  CHECK(crossover_check(80).claim_holds == false);
}

TEST_CASE("inequality verifiers") {
  const InequalityReport r = verify_inequalities();
  for (const Check& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  CHECK(r.passed());
  CHECK(r.remainder_negative_from_claimed);
  CHECK(r.remainder_onset == std::vector<std::pair<int, int>>{{3, 14}, {4, 14}, {5, 15}});
  CHECK(r.ratio_max == doctest::Approx(0.9876).epsilon(1e-3));
  CHECK(std::abs(r.ratio_argmax - 4.56) <= 0.01);
  CHECK(r.ratio_max < 100.0 / 101.0);
  CHECK(r.ratio_max == doctest::Approx(r.ratio_max_closed_form).epsilon(1e-12));
  CHECK(r.ratio_argmax == doctest::Approx(r.ratio_argmax_closed_form).epsilon(1e-6));
}

TEST_CASE("recursion scan over the forest maxima") {
  const MaxTable t = forest_max_table(20, kTreeMaxima);
  const auto rows = recursion_bound_check(t, 20);
  REQUIRE(rows.size() == 17);
  auto row = [&](int n) { return rows[n - 4]; };
  CHECK(row(4).branch == RecursionRow::Branch::NotCheckable);
  CHECK_FALSE(row(4).d);
  CHECK(row(6).branch == RecursionRow::Branch::LargeDegree);
  CHECK(row(6).d == 5);
  CHECK(row(19).branch == RecursionRow::Branch::PathLike);
  // The large-degree side also holds at 19 with d = 5: 6 + 4 * 78 >= 162.
  CHECK(u64(binomial(4, 2)) + 4 * t.fr[14] == 318);
  for (int n = 5; n <= 20; ++n) CHECK(row(n).branch != RecursionRow::Branch::NotCheckable);
  CHECK(thrown_kind([&] { recursion_bound_check(t, 25); }) == ErrorKind::MissingSurveyData);
}
