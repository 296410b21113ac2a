#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "forts/fort_collection.hpp"
#include "forts/graph.hpp"

namespace forts {

/// Extends one partial fort across the unvisited neighbors of `curr` during
/// the breadth-first sweep, appending every admissible extension to `out`.
///
/// "In the fort" is the only vocabulary used here; a vertex outside `fort`
/// is one that will be colored. `prev` is the already visited neighbor that
/// enqueued `curr` and is absent only for the starting leaf. `neighbors` is
/// the full (alive) adjacency of `curr`; `leaf_neighbors` holds the unvisited
/// neighbors of degree one. No vertex of `forbidden` is ever added.
///
///  start leaf          -> {curr}, and {curr, neighbors[0]} unless forbidden
///  curr ∉ F, prev ∉ F  -> F unchanged
///  curr ∉ F, prev ∈ F  -> F + n for each eligible n != prev
///  curr ∈ F, prev ∉ F  -> >1 leaf: none; 1 leaf: F + leaf;
///                         else F and F + n for each eligible n != prev
///  curr ∈ F, prev ∈ F  -> none if an unvisited leaf neighbor exists, else F
void decide_neighbors(VertexSet fort, Vertex curr, std::optional<Vertex> prev, std::span<const Vertex> neighbors,
                      std::span<const Vertex> leaf_neighbors, VertexSet forbidden, std::vector<VertexSet>& out);

std::vector<VertexSet> decide_neighbors(VertexSet fort, Vertex curr, std::optional<Vertex> prev,
                                        std::span<const Vertex> neighbors, std::span<const Vertex> leaf_neighbors,
                                        VertexSet forbidden);

/// Reusable enumeration engine. Keeps its scratch buffers between calls, so
/// one instance per worker thread avoids per-tree allocation.
class FortEnumerator {
 public:
  /// Appends the minimal forts of tree `t` that avoid `forbidden` to `out`,
  /// in discovery order. The caller guarantees `t` is a tree (or empty).
  void enumerate(const Graph& t, VertexSet forbidden, std::vector<VertexSet>& out);

  /// Number of minimal forts of tree `t`.
  std::uint64_t count(const Graph& t);

 private:
  struct QueueEntry {
    Vertex vertex;
    std::optional<Vertex> prev;
  };

  // Forts containing `start` among the vertices in `alive`.
  void sweep_from(const Graph& t, VertexSet alive, VertexSet forbidden, Vertex start, std::vector<VertexSet>& out);

  std::vector<VertexSet> forts_;
  std::vector<VertexSet> next_forts_;
  std::vector<QueueEntry> queue_;
  std::vector<VertexSet> scratch_;
};

/// Minimal forts of tree `t` avoiding `forbidden`, in canonical order.
/// Throws Error{NotATree}.
FortCollection enumerate_minimal_forts(const Graph& t, VertexSet forbidden = {});

/// Minimal forts of a forest, labeled in the forest's own vertex ids and in
/// canonical order. Each component is enumerated separately.
/// Throws Error{NotAForest}.
FortCollection enumerate_minimal_forts_forest(const Graph& g);

/// Sum of the per-component minimal fort counts. Throws Error{NotAForest}.
std::uint64_t count_minimal_forts_forest(const Graph& g);

}  // namespace forts
