#pragma once

// Test-side helpers that do not go through the library's own generators.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "forts/error.hpp"
#include "forts/graph.hpp"
#include "forts/oracle.hpp"
#include "forts/treegen.hpp"

namespace forts::testing {

template <typename Fn>
std::optional<ErrorKind> thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// Labeled tree from a Prüfer sequence over 0..n-1 (n = seq.size() + 2).
inline Graph tree_from_pruefer(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<int> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex w = u + 1;
  while (degree[w] != 1) ++w;
  edges.emplace_back(u, w);
  return Graph::from_edge_list(edges, n);
}

inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return Graph::from_edge_list({}, 1);
  if (n == 2) return path(2);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (Vertex& v : seq) v = pick(rng);
  return tree_from_pruefer(seq);
}

// Number of unlabeled trees on n >= 3 vertices: every Prüfer sequence,
// deduplicated by canonical code.
inline std::size_t pruefer_tree_count(std::size_t n) {
  std::set<LevelSequence> seen;
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    seen.insert(canonical_tree_code(tree_from_pruefer(seq)).level_sequence);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return seen.size();
}

// Erdős–Rényi style graph with edge probability p.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(edges, n);
}

}  // namespace forts::testing
