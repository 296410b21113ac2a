#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "forts/vertex_set.hpp"

namespace forts {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Immutable after construction. Neighbor lists are sorted ascending and are
/// mirrored by one VertexSet per vertex so set-valued queries are single word
/// operations.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse to one.
  /// Throws Error{SelfLoop | VertexOutOfRange | CapacityExceeded}.
  static Graph from_edge_list(std::span<const Edge> edges, std::size_t n);

  [[nodiscard]] std::size_t order() const { return masks_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return neighbors_.size() / 2; }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::first_n(order()); }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] VertexSet neighbor_set(Vertex v) const { return masks_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return masks_[u].contains(v); }

  /// Edges (u, v) with u < v, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Subgraph induced on `keep`, relabeled densely in ascending order.
  /// The second member maps new labels back to this graph's labels.
  [[nodiscard]] std::pair<Graph, std::vector<Vertex>> induced(VertexSet keep) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> masks_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

/// Vertices of degree exactly one.
VertexSet leaves(const Graph& g);

/// The maximal connected set of degree <= 2 vertices containing a leaf.
struct PathBranch {
  VertexSet vertices;
  Vertex leaf = 0;
  /// The unique outside vertex adjacent to the branch; absent iff the tree is a path.
  std::optional<Vertex> neighbor;
};

/// Throws Error{NotALeaf | NotATree}.
PathBranch path_branch_of(const Graph& tree, Vertex leaf);

/// Path branch of `leaf` inside the subgraph induced on `alive`, with degrees
/// measured in that subgraph. No validation; used by the enumerator.
PathBranch path_branch_within(const Graph& g, VertexSet alive, Vertex leaf);

struct Component {
  Graph graph;
  /// to_parent[i] is the parent-graph label of component vertex i.
  std::vector<Vertex> to_parent;
};

/// Connected components, ordered by their smallest vertex.
std::vector<Component> components(const Graph& g);

/// Vertex set of the component containing `start`, restricted to `within`.
VertexSet reachable(const Graph& g, Vertex start, VertexSet within);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_forest(const Graph& g);

/// Edge-list text: first line `n m`, then m lines `u v`. `#` starts a comment.
/// Throws Error{ParseError} plus the from_edge_list errors.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace forts
