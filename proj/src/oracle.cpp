#include "forts/oracle.hpp"

#include <string>

#include "forts/error.hpp"

namespace forts {

VertexSet closure(const Graph& g, VertexSet initial) {
  VertexSet colored = initial;
  // Forces are applied in simultaneous rounds; the rule is confluent, so only
  // the fixed point is observable.
  while (true) {
    VertexSet forced;
    for (Vertex v : colored) {
      const VertexSet uncolored = g.neighbor_set(v) - colored;
      if (uncolored.size() == 1) forced |= uncolored;
    }
    if (forced.empty()) return colored;
    colored |= forced;
  }
}

bool is_fort(const Graph& g, VertexSet f) {
  if (f.empty()) return false;
  std::uint64_t once = 0;
  std::uint64_t twice = 0;
  for (Vertex u : f) {
    const std::uint64_t around = g.neighbor_set(u).bits();
    twice |= once & around;
    once |= around;
  }
  return (once & ~twice & ~f.bits()) == 0;
}

bool is_minimal_fort(const Graph& g, VertexSet f) {
  if (!is_fort(g, f)) return false;
  const VertexSet all = g.vertices();
  const VertexSet outside = all - f;
  for (Vertex v : f) {
    if (closure(g, outside.with(v)) != all) return false;
  }
  return true;
}

FortCollection brute_force_minimal_forts(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kOracleMaxVertices) {
    throw Error(ErrorKind::TooLargeForOracle,
                "brute-force oracle is limited to " + std::to_string(kOracleMaxVertices) + " vertices, got " +
                    std::to_string(n));
  }
  FortCollection out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const VertexSet s(bits);
    if (is_fort(g, s) && is_minimal_fort(g, s)) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

namespace {

// First violated edge condition when orienting the tree away from `leaf`.
std::optional<std::string> edge_condition_violation(const Graph& t, VertexSet s, Vertex leaf) {
  std::vector<Vertex> order{leaf};
  std::vector<Vertex> parent(t.order(), leaf);
  VertexSet seen = VertexSet::singleton(leaf);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex a = order[i];
    for (Vertex b : t.neighbor_set(a) - seen) {
      seen.insert(b);
      parent[b] = a;
      order.push_back(b);
    }
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vertex b = order[i];
    const Vertex a = parent[b];
    const VertexSet others = (t.neighbor_set(b) & s).without(a);
    const bool a_in = s.contains(a);
    const bool b_in = s.contains(b);
    const char* broken = nullptr;
    if (!a_in && !b_in && !others.empty()) broken = "(i)";
    if (!a_in && b_in && others.size() > 1) broken = "(ii)";
    if (a_in && !b_in && others.size() != 1) broken = "(iii)";
    if (a_in && b_in && !others.empty()) broken = "(iv)";
    if (broken != nullptr) {
      return std::string("edge condition ") + broken + " fails on edge {" + std::to_string(a) + ", " +
             std::to_string(b) + "} oriented from leaf " + std::to_string(leaf);
    }
  }
  return std::nullopt;
}

}  // namespace

StructureReport check_fort_structure(const Graph& g, VertexSet f) {
  StructureReport report;
  const VertexSet leafs = leaves(g);
  if (!f.intersects(leafs)) {
    report.contains_leaf = false;
    report.violations.push_back("set contains no leaf");
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    const std::size_t closed = (g.neighbor_set(u).with(u) & f).size();
    if (closed > 2 || (!f.contains(u) && closed == 1)) {
      report.closed_neighborhoods = false;
      report.violations.push_back("closed neighborhood of " + std::to_string(u) + " meets the set in " +
                                  std::to_string(closed) + " vertices");
    }
  }
  for (Vertex b : f) {
    const VertexSet inside = g.neighbor_set(b) & f;
    if (inside.size() >= 2) {
      report.no_three_in_a_row = false;
      auto it = inside.begin();
      const Vertex a = *it++;
      const Vertex c = *it;
      report.violations.push_back("path " + std::to_string(a) + " ~ " + std::to_string(b) + " ~ " +
                                  std::to_string(c) + " lies in the set");
    }
  }
  if (is_tree(g)) {
    report.edge_conditions = true;
    for (Vertex leaf : f & leafs) {
      if (auto why = edge_condition_violation(g, f, leaf)) {
        report.edge_conditions = false;
        report.violations.push_back(*why);
      }
    }
  }
  return report;
}

bool satisfies_tree_characterization(const Graph& t, VertexSet s) {
  const VertexSet leafs_in_s = leaves(t) & s;
  if (leafs_in_s.empty()) return false;
  for (Vertex leaf : leafs_in_s) {
    if (edge_condition_violation(t, s, leaf)) return false;
  }
  return true;
}

}  // namespace forts
