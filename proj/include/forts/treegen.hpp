#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forts/graph.hpp"

namespace forts {

/// Largest order accepted by the free tree generator.
inline constexpr std::size_t kMaxGeneratedOrder = 24;

/// Depths of the vertices of a rooted tree in preorder; the root has depth 0.
using LevelSequence = std::vector<int>;

/// Tree whose vertex i is the i-th entry of a preorder level sequence.
Graph tree_from_level_sequence(std::span<const int> levels);

/// Every unlabeled tree on n vertices exactly once.
///
/// Walks canonical level sequences with the Wright-Richmond-Odlyzko-McKay
/// successor rule: each tree appears rooted at its center, and sequences that
/// are not the canonical representative are skipped in one jump.
class FreeTreeGenerator {
 public:
  /// Throws Error{CapacityExceeded} for n > 24, Error{InvalidParameters} for n < 1.
  explicit FreeTreeGenerator(std::size_t n);

  /// Level sequence of the next tree, or nullptr when exhausted. The pointer
  /// stays valid until the next call.
  const LevelSequence* next_levels();

  std::optional<Graph> next();

 private:
  void advance_rooted(std::size_t p);
  bool valid_free() const;
  std::size_t left_subtree_end() const;

  std::size_t n_;
  LevelSequence layout_;
  bool first_ = true;
  bool done_ = false;
};

/// All unlabeled trees on n vertices, in generation order.
std::vector<Graph> generate_free_trees(std::size_t n);

/// Canonical code of an unlabeled tree.
///
/// The tree is rooted at its center (for two centers, whichever rooting
/// gives the larger sequence) and children are ordered by decreasing
/// subtree sequence. Two trees are isomorphic iff their codes are equal.
struct TreeCode {
  LevelSequence level_sequence;
  /// graph6 of the tree relabeled in canonical preorder.
  std::string graph6;

  bool operator==(const TreeCode&) const = default;
};

/// Throws Error{NotATree}.
TreeCode canonical_tree_code(const Graph& t);
bool isomorphic_trees(const Graph& a, const Graph& b);

Graph path(std::size_t n);
/// Center 0 joined to leaves 1..n-1.
Graph star(std::size_t n);
/// Height-2 tree: root 0 with k children; the first k-p children carry m
/// leaves each and the last p carry m-1. Requires k >= 2, m >= 3,
/// 0 <= p <= k and n = 1 + k + km - p, else Error{InvalidParameters}.
Graph special_tree(std::size_t n, std::size_t k, std::size_t m, std::size_t p);

/// 10-cycle 0..9 with leaf 10 on vertex 0 and leaf 11 on the opposite vertex 5.
Graph unicyclic_pendant_example();
/// 8-cycle 0..7 with the chord 0-4.
Graph chorded_cycle_example();

/// Standard graph6: n+63 (or '~' and 18 bits for n >= 63), then the upper
/// triangle column by column, six bits per byte, each byte + 63.
std::string encode_graph6(const Graph& g);
/// Throws Error{MalformedGraph6} (and CapacityExceeded for n > 64).
Graph decode_graph6(std::string_view s);

/// One graph per non-empty line; an optional `>>graph6<<` header is skipped.
std::vector<Graph> read_graph6_file(std::istream& in);

}  // namespace forts
