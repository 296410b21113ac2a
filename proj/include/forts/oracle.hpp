#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forts/fort_collection.hpp"
#include "forts/graph.hpp"

namespace forts {

/// Largest graph the subset-scanning oracle accepts.
inline constexpr std::size_t kOracleMaxVertices = 24;

/// Least fixed point of the color-change rule that contains `initial`: a
/// colored vertex with exactly one uncolored neighbor colors it.
VertexSet closure(const Graph& g, VertexSet initial);

/// True iff `f` is nonempty and every vertex outside `f` has 0 or >= 2 neighbors in `f`.
bool is_fort(const Graph& g, VertexSet f);

/// A fort is minimal iff coloring its complement plus any single fort vertex
/// colors the whole graph.
bool is_minimal_fort(const Graph& g, VertexSet f);

/// Every minimal fort of `g`, by scanning all 2^n - 1 nonempty subsets.
/// Throws Error{TooLargeForOracle} for n > 24.
FortCollection brute_force_minimal_forts(const Graph& g);

/// Outcome of the local structure checks that every minimal fort of a tree obeys.
struct StructureReport {
  bool contains_leaf = true;
  /// |N[u] ∩ f| <= 2 for every u, and |N(u) ∩ f| ∈ {0, 2} for u outside f.
  bool closed_neighborhoods = true;
  /// No path a ~ b ~ c lies wholly in f.
  bool no_three_in_a_row = true;
  /// Edge conditions oriented from every leaf in f. Evaluated on trees only.
  std::optional<bool> edge_conditions;
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const {
    return contains_leaf && closed_neighborhoods && no_three_in_a_row && edge_conditions.value_or(true);
  }
};

/// Runs the structural checks on `f`. The edge-orientation conditions need a
/// tree; on other graphs they are skipped and `edge_conditions` stays empty.
StructureReport check_fort_structure(const Graph& g, VertexSet f);

/// Direct test of the tree characterization: `s` contains a leaf and, for
/// every leaf in `s` and every edge {a, b} with a nearer that leaf,
///   a,b ∉ s  ->  N(b) ∩ s = ∅
///   a ∉ s, b ∈ s  ->  |N(b) ∩ s| <= 1
///   a ∈ s, b ∉ s  ->  |N(b) ∩ s \ {a}| = 1
///   a,b ∈ s  ->  N(b) ∩ s \ {a} = ∅
/// `t` must be a tree on at least three vertices.
bool satisfies_tree_characterization(const Graph& t, VertexSet s);

}  // namespace forts
