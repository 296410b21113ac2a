#include "forts/fort_enum.hpp"

#include <array>
#include <cassert>

#include "forts/error.hpp"

#ifndef NDEBUG
#include <unordered_set>
#endif

namespace forts {

void decide_neighbors(VertexSet fort, Vertex curr, std::optional<Vertex> prev, std::span<const Vertex> neighbors,
                      std::span<const Vertex> leaf_neighbors, VertexSet forbidden, std::vector<VertexSet>& out) {
  if (!prev) {
    // Starting leaf: its only neighbor may or may not join it.
    out.push_back(VertexSet::singleton(curr));
    if (!neighbors.empty() && !forbidden.contains(neighbors.front())) {
      out.push_back(VertexSet{curr, neighbors.front()});
    }
    return;
  }
  const Vertex p = *prev;
  const bool curr_in = fort.contains(curr);
  const bool prev_in = fort.contains(p);

  if (!curr_in && !prev_in) {
    // No further neighbor of curr may enter the fort.
    out.push_back(fort);
    return;
  }
  if (!curr_in) {
    // curr sees prev in the fort and needs exactly one more.
    for (Vertex n : neighbors) {
      if (n != p && !forbidden.contains(n)) out.push_back(fort.with(n));
    }
    return;
  }
  if (!prev_in) {
    // At most one more neighbor joins; an uncovered leaf would see only curr.
    if (leaf_neighbors.size() > 1) return;
    if (leaf_neighbors.size() == 1) {
      const Vertex leaf = leaf_neighbors.front();
      if (!forbidden.contains(leaf)) out.push_back(fort.with(leaf));
      return;
    }
    out.push_back(fort);
    for (Vertex n : neighbors) {
      if (n != p && !forbidden.contains(n)) out.push_back(fort.with(n));
    }
    return;
  }
  // curr and prev both in the fort: nothing else may join, so a leaf
  // neighbor left outside would be forced.
  if (!leaf_neighbors.empty()) return;
  out.push_back(fort);
}

std::vector<VertexSet> decide_neighbors(VertexSet fort, Vertex curr, std::optional<Vertex> prev,
                                        std::span<const Vertex> neighbors, std::span<const Vertex> leaf_neighbors,
                                        VertexSet forbidden) {
  std::vector<VertexSet> out;
  decide_neighbors(fort, curr, prev, neighbors, leaf_neighbors, forbidden, out);
  return out;
}

void FortEnumerator::sweep_from(const Graph& t, VertexSet alive, VertexSet forbidden, Vertex start,
                                std::vector<VertexSet>& out) {
  forts_.clear();
  forts_.push_back(VertexSet::singleton(start));
  queue_.clear();
  queue_.push_back({start, std::nullopt});
  VertexSet visited = VertexSet::singleton(start);

  std::array<Vertex, kMaxVertices> neighbors{};
  std::array<Vertex, kMaxVertices> leaf_neighbors{};

  for (std::size_t head = 0; head < queue_.size() && !forts_.empty(); ++head) {
    const auto [curr, prev] = queue_[head];
    const VertexSet around = t.neighbor_set(curr) & alive;
    const VertexSet unvisited = around - visited;

    std::size_t n_count = 0;
    for (Vertex v : around) neighbors[n_count++] = v;
    std::size_t l_count = 0;
    for (Vertex v : unvisited) {
      if ((t.neighbor_set(v) & alive).size() == 1) leaf_neighbors[l_count++] = v;
    }

    next_forts_.clear();
    for (VertexSet fort : forts_) {
      decide_neighbors(fort, curr, prev, {neighbors.data(), n_count}, {leaf_neighbors.data(), l_count}, forbidden,
                       next_forts_);
    }
    forts_.swap(next_forts_);

    for (Vertex v : unvisited) {
      visited.insert(v);
      queue_.push_back({v, curr});
    }
  }

#ifndef NDEBUG
  std::unordered_set<std::uint64_t> unique;
  for (VertexSet f : forts_) {
    assert(f.contains(start));
    assert(!f.intersects(forbidden));
    assert(f.is_subset_of(alive));
    assert(unique.insert(f.bits()).second && "duplicate fort within one sweep");
  }
#endif
  out.insert(out.end(), forts_.begin(), forts_.end());
}

void FortEnumerator::enumerate(const Graph& t, VertexSet forbidden, std::vector<VertexSet>& out) {
  VertexSet alive = t.vertices();
  while (true) {
    if (alive.empty()) return;
    const VertexSet reached = reachable(t, alive.lowest(), alive);
    if (reached != alive) {
      // Removing a path branch keeps a tree connected, so this is unreachable
      // for valid input; fall back to one pass per piece.
      assert(false && "pruned tree became disconnected");
      for (VertexSet rest = alive; !rest.empty();) {
        const VertexSet piece = reachable(t, rest.lowest(), rest);
        auto [sub, map] = t.induced(piece);
        VertexSet sub_forbidden;
        for (std::size_t i = 0; i < map.size(); ++i) {
          if (forbidden.contains(map[i])) sub_forbidden.insert(static_cast<Vertex>(i));
        }
        std::vector<VertexSet> local;
        enumerate(sub, sub_forbidden, local);
        for (VertexSet f : local) {
          VertexSet lifted;
          for (Vertex v : f) lifted.insert(map[v]);
          out.push_back(lifted);
        }
        rest -= piece;
      }
      return;
    }

    // One or two vertices: the only candidate fort is the whole piece.
    if (alive.size() <= 2) {
      if (!alive.intersects(forbidden)) out.push_back(alive);
      return;
    }

    VertexSet eligible;
    for (Vertex v : alive - forbidden) {
      if ((t.neighbor_set(v) & alive).size() == 1) eligible.insert(v);
    }
    // Every minimal fort of a tree on >= 3 vertices holds a leaf.
    if (eligible.empty()) return;
    const Vertex start = eligible.lowest();

    sweep_from(t, alive, forbidden, start, out);

    // Forts avoiding `start` avoid its whole branch and the branch's neighbor.
    const PathBranch branch = path_branch_within(t, alive, start);
    if (!branch.neighbor) return;
    alive -= branch.vertices;
    forbidden.insert(*branch.neighbor);
  }
}

std::uint64_t FortEnumerator::count(const Graph& t) {
  scratch_.clear();
  enumerate(t, {}, scratch_);
  return scratch_.size();
}

FortCollection enumerate_minimal_forts(const Graph& t, VertexSet forbidden) {
  if (t.order() > 0 && !is_tree(t)) throw Error(ErrorKind::NotATree, "enumerator input is not a tree");
  FortEnumerator engine;
  FortCollection out;
  engine.enumerate(t, forbidden & t.vertices(), out);
  canonicalize(out);
  return out;
}

FortCollection enumerate_minimal_forts_forest(const Graph& g) {
  if (!is_forest(g)) throw Error(ErrorKind::NotAForest, "input graph contains a cycle");
  FortEnumerator engine;
  FortCollection out;
  std::vector<VertexSet> local;
  for (const Component& c : components(g)) {
    local.clear();
    engine.enumerate(c.graph, {}, local);
    for (VertexSet f : local) {
      VertexSet lifted;
      for (Vertex v : f) lifted.insert(c.to_parent[v]);
      out.push_back(lifted);
    }
  }
  canonicalize(out);
  return out;
}

std::uint64_t count_minimal_forts_forest(const Graph& g) {
  if (!is_forest(g)) throw Error(ErrorKind::NotAForest, "input graph contains a cycle");
  FortEnumerator engine;
  std::uint64_t total = 0;
  for (const Component& c : components(g)) total += engine.count(c.graph);
  return total;
}

}  // namespace forts
