#include <doctest.h>

#include <random>

#include "forts/error.hpp"
#include "forts/oracle.hpp"
#include "forts/treegen.hpp"
#include "support.hpp"

using namespace forts;
using forts::testing::thrown_kind;

namespace {

Graph empty(std::size_t n) { return Graph::from_edge_list({}, n); }

// Fort test straight from the definition, one vertex at a time.
bool naive_is_fort(const Graph& g, VertexSet f) {
  if (f.empty()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.contains(v)) continue;
    std::size_t seen = 0;
    for (Vertex w : g.neighbors(v)) seen += f.contains(w) ? 1 : 0;
    if (seen == 1) return false;
  }
  return true;
}

// Minimal forts by inclusion: forts with no proper subset that is a fort.
FortCollection naive_minimal_forts(const Graph& g) {
  const std::uint64_t full = g.vertices().bits();
  std::vector<VertexSet> forts;
  for (std::uint64_t bits = 1; bits <= full; ++bits) {
    if (naive_is_fort(g, VertexSet(bits))) forts.emplace_back(bits);
  }
  FortCollection out;
  for (VertexSet f : forts) {
    bool minimal = true;
    for (VertexSet h : forts) {
      if (h != f && h.is_subset_of(f)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(f);
  }
  canonicalize(out);
  return out;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure(path(3), VertexSet{0}) == VertexSet{0, 1, 2});
  CHECK(closure(star(4), VertexSet{0}) == VertexSet{0});
  CHECK(closure(path(5), VertexSet{2}) == VertexSet{2});
  CHECK(closure(path(5), VertexSet{}) == VertexSet{});
  CHECK(closure(star(4), VertexSet{1, 2}) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("closure is monotone and idempotent") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 12;
    const Graph g = forts::testing::random_graph(n, 0.25, rng);
    const std::uint64_t full = g.vertices().bits();
    const VertexSet a(rng() & full);
    const VertexSet b = a | VertexSet(rng() & full);
    const VertexSet ca = closure(g, a);
    CHECK(a.is_subset_of(ca));
    CHECK(ca.is_subset_of(closure(g, b)));
    CHECK(closure(g, ca) == ca);
  }
}

TEST_CASE("is_fort examples") {
  CHECK(is_fort(path(3), VertexSet{0, 2}));
  CHECK_FALSE(is_fort(path(3), VertexSet{0}));
  CHECK(is_fort(empty(4), VertexSet{0}));
  CHECK_FALSE(is_fort(path(3), VertexSet{}));
}

TEST_CASE("a set is a fort iff its complement is closed") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& t : generate_free_trees(n)) {
      const std::uint64_t full = t.vertices().bits();
      for (std::uint64_t bits = 1; bits <= full; ++bits) {
        const VertexSet f(bits);
        const VertexSet rest = t.vertices() - f;
        CHECK(is_fort(t, f) == (closure(t, rest) == rest));
        CHECK(is_fort(t, f) == naive_is_fort(t, f));
      }
    }
  }
}

TEST_CASE("is_minimal_fort examples") {
  CHECK(is_minimal_fort(path(3), VertexSet{0, 2}));
  CHECK_FALSE(is_minimal_fort(path(3), VertexSet{0, 1, 2}));
  CHECK(is_minimal_fort(star(4), VertexSet{1, 2}));
  CHECK_FALSE(is_minimal_fort(star(4), VertexSet{1}));
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_minimal_forts(path(3)) == FortCollection{VertexSet{0, 2}});
  CHECK(brute_force_minimal_forts(star(4)) == FortCollection{VertexSet{1, 2}, VertexSet{1, 3}, VertexSet{2, 3}});
  CHECK(brute_force_minimal_forts(path(2)) == FortCollection{VertexSet{0, 1}});
  CHECK(brute_force_minimal_forts(empty(2)) == FortCollection{VertexSet{0}, VertexSet{1}});
  CHECK(brute_force_minimal_forts(empty(0)).empty());
  CHECK(thrown_kind([] { brute_force_minimal_forts(path(25)); }) == ErrorKind::TooLargeForOracle);
}

TEST_CASE("brute force agrees with the inclusion-minimal definition") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + i % 9;
    const Graph g = forts::testing::random_graph(n, i % 3 == 0 ? 0.15 : 0.4, rng);
    CHECK(brute_force_minimal_forts(g) == naive_minimal_forts(g));
  }
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Graph& t : generate_free_trees(n)) CHECK(brute_force_minimal_forts(t) == naive_minimal_forts(t));
  }
}

TEST_CASE("brute force family: minimal, antichain, complete") {
  auto check_family = [](const Graph& g) {
    const FortCollection family = brute_force_minimal_forts(g);
    for (VertexSet f : family) CHECK(is_minimal_fort(g, f));
    for (VertexSet f : family) {
      for (VertexSet h : family) {
        if (f != h) CHECK_FALSE(f.is_subset_of(h));
      }
    }
    const std::uint64_t full = g.vertices().bits();
    for (std::uint64_t bits = 1; bits <= full; ++bits) {
      const VertexSet s(bits);
      if (!is_fort(g, s)) continue;
      bool covered = false;
      for (VertexSet f : family) covered = covered || f.is_subset_of(s);
      CHECK(covered);
    }
  };
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Graph& t : generate_free_trees(n)) check_family(t);
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) check_family(forts::testing::random_graph(2 + i % 9, 0.3, rng));
}

TEST_CASE("structural checks") {
  SUBCASE("P_5 alternate vertices") {
    const StructureReport r = check_fort_structure(path(5), VertexSet{0, 2, 4});
    CHECK(r.ok());
    CHECK(r.edge_conditions == true);
  }
  SUBCASE("S_4 leaf pair") { CHECK(check_fort_structure(star(4), VertexSet{1, 3}).ok()); }
  SUBCASE("three in a row on a unicyclic graph") {
    const Graph g = unicyclic_pendant_example();
    bool found = false;
    for (VertexSet f : brute_force_minimal_forts(g)) {
      const StructureReport r = check_fort_structure(g, f);
      CHECK_FALSE(r.edge_conditions.has_value());
      if (!r.no_three_in_a_row) {
        found = true;
        CHECK_FALSE(r.ok());
        CHECK_FALSE(r.violations.empty());
      }
    }
    CHECK(found);
  }
  SUBCASE("a non-fort is flagged") {
    const StructureReport r = check_fort_structure(path(5), VertexSet{1, 2, 3});
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.contains_leaf);
    CHECK_FALSE(r.no_three_in_a_row);
  }
  SUBCASE("every minimal fort of every tree on 3..10 vertices passes") {
    for (std::size_t n = 3; n <= 10; ++n) {
      for (const Graph& t : generate_free_trees(n)) {
        for (VertexSet f : brute_force_minimal_forts(t)) {
          const StructureReport r = check_fort_structure(t, f);
          CHECK(r.ok());
          CHECK(r.edge_conditions.has_value());
        }
      }
    }
  }
}

TEST_CASE("characterization matches minimal forts exactly on trees with 3..9 vertices") {
  for (std::size_t n = 3; n <= 9; ++n) {
    for (const Graph& t : generate_free_trees(n)) {
      const std::uint64_t full = t.vertices().bits();
      for (std::uint64_t bits = 1; bits <= full; ++bits) {
        const VertexSet s(bits);
        CHECK(satisfies_tree_characterization(t, s) == is_minimal_fort(t, s));
      }
    }
  }
}

TEST_CASE("unicyclic examples") {
  SUBCASE("left: a minimal fort with three consecutive vertices") {
    const Graph g = unicyclic_pendant_example();
    bool found = false;
    for (VertexSet f : brute_force_minimal_forts(g)) {
      for (Vertex b = 0; b < g.order() && !found; ++b) {
        if (f.contains(b) && (g.neighbor_set(b) & f).size() >= 2) found = true;
      }
    }
    CHECK(found);
  }
  SUBCASE("right: an outside vertex adjacent to three fort vertices") {
    const Graph g = chorded_cycle_example();
    bool found = false;
    for (VertexSet f : brute_force_minimal_forts(g)) {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!f.contains(v) && (g.neighbor_set(v) & f).size() >= 3) found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("minimal fort counts add over components") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Graph a = forts::testing::random_tree(1 + i % 8, rng);
    const Graph b = forts::testing::random_tree(1 + (i / 8) % 8, rng);
    std::vector<Edge> edges = a.edges();
    const auto shift = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    const Graph forest = Graph::from_edge_list(edges, a.order() + b.order());
    CHECK(brute_force_minimal_forts(forest).size() ==
          brute_force_minimal_forts(a).size() + brute_force_minimal_forts(b).size());
  }
}
