#include "forts/treegen.hpp"

#include <algorithm>
#include <istream>
#include <string>

#include "forts/error.hpp"

namespace forts {

Graph tree_from_level_sequence(std::span<const int> levels) {
  std::vector<Edge> edges;
  edges.reserve(levels.empty() ? 0 : levels.size() - 1);
  // stack[d] is the most recent vertex at depth d.
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto depth = static_cast<std::size_t>(levels[i]);
    stack.resize(depth);
    if (depth > 0) edges.emplace_back(stack[depth - 1], static_cast<Vertex>(i));
    stack.push_back(static_cast<Vertex>(i));
  }
  return Graph::from_edge_list(edges, levels.size());
}

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "tree order must be at least 1");
  if (n > kMaxGeneratedOrder) {
    throw Error(ErrorKind::CapacityExceeded,
                "tree generation is limited to " + std::to_string(kMaxGeneratedOrder) + " vertices");
  }
  // The path rooted at its center.
  for (std::size_t i = 0; i <= n / 2; ++i) layout_.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout_.push_back(static_cast<int>(i));
}

// Beyer-Hedetniemi successor of the rooted level sequence, regenerating from
// position p onward. Marks the generator done when p reaches the root.
void FreeTreeGenerator::advance_rooted(std::size_t p) {
  if (p == 0) {
    done_ = true;
    return;
  }
  std::size_t q = p - 1;
  while (layout_[q] != layout_[p] - 1) --q;
  for (std::size_t i = p; i < layout_.size(); ++i) layout_[i] = layout_[i - p + q];
}

// Index of the second depth-1 vertex, i.e. one past the root's first subtree.
std::size_t FreeTreeGenerator::left_subtree_end() const {
  bool seen_one = false;
  for (std::size_t i = 1; i < layout_.size(); ++i) {
    if (layout_[i] == 1) {
      if (seen_one) return i;
      seen_one = true;
    }
  }
  return layout_.size();
}

// A center-rooted sequence is the canonical free-tree representative iff the
// first subtree is no taller than the rest of the tree, and on equal height
// is no larger and not lexicographically later.
bool FreeTreeGenerator::valid_free() const {
  const std::size_t m = left_subtree_end();
  std::vector<int> left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout_[i] - 1);
  std::vector<int> rest{0};
  for (std::size_t i = m; i < layout_.size(); ++i) rest.push_back(layout_[i]);

  const int left_height = left.empty() ? 0 : *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  if (rest_height < left_height) return false;
  if (rest_height == left_height) {
    if (left.size() > rest.size()) return false;
    if (left.size() == rest.size() && left > rest) return false;
  }
  return true;
}

const LevelSequence* FreeTreeGenerator::next_levels() {
  if (done_) return nullptr;
  if (first_) {
    first_ = false;
  } else {
    std::size_t p = layout_.size() - 1;
    while (layout_[p] == 1) --p;
    advance_rooted(p);
    if (done_) return nullptr;
  }
  if (!valid_free()) {
    const std::size_t p = left_subtree_end() - 1;
    const int old_at_p = layout_[p];
    advance_rooted(p);
    if (old_at_p > 2) {
      // Reset the tail so the rest of the tree is just tall enough to be a
      // valid representative.
      const std::size_t m = left_subtree_end();
      int left_height = 0;
      for (std::size_t i = 1; i < m; ++i) left_height = std::max(left_height, layout_[i] - 1);
      const auto len = static_cast<std::size_t>(left_height + 1);
      for (std::size_t i = 0; i < len; ++i) layout_[layout_.size() - len + i] = static_cast<int>(i + 1);
    }
  }
  return &layout_;
}

std::optional<Graph> FreeTreeGenerator::next() {
  const LevelSequence* levels = next_levels();
  if (levels == nullptr) return std::nullopt;
  return tree_from_level_sequence(*levels);
}

std::vector<Graph> generate_free_trees(std::size_t n) {
  std::vector<Graph> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

namespace {

LevelSequence rooted_code(const Graph& t, Vertex v, std::optional<Vertex> parent, int depth) {
  std::vector<LevelSequence> children;
  for (Vertex w : t.neighbors(v)) {
    if (parent && w == *parent) continue;
    children.push_back(rooted_code(t, w, v, depth + 1));
  }
  std::sort(children.begin(), children.end(), std::greater<>());
  LevelSequence out{depth};
  for (const auto& c : children) out.insert(out.end(), c.begin(), c.end());
  return out;
}

// One or two central vertices, found by peeling leaves.
std::vector<Vertex> centers(const Graph& t) {
  VertexSet alive = t.vertices();
  while (alive.size() > 2) {
    VertexSet outer;
    for (Vertex v : alive) {
      if ((t.neighbor_set(v) & alive).size() <= 1) outer.insert(v);
    }
    alive -= outer;
  }
  return alive.to_vector();
}

}  // namespace

TreeCode canonical_tree_code(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, "canonical codes are defined for trees only");
  LevelSequence best;
  for (Vertex c : centers(t)) best = std::max(best, rooted_code(t, c, std::nullopt, 0));
  TreeCode code;
  code.graph6 = encode_graph6(tree_from_level_sequence(best));
  code.level_sequence = std::move(best);
  return code;
}

bool isomorphic_trees(const Graph& a, const Graph& b) {
  return a.order() == b.order() && canonical_tree_code(a).level_sequence == canonical_tree_code(b).level_sequence;
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return Graph::from_edge_list(edges, n);
}

Graph star(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edge_list(edges, n);
}

Graph special_tree(std::size_t n, std::size_t k, std::size_t m, std::size_t p) {
  if (k < 2 || m < 3 || p > k || n != 1 + k + k * m - p) {
    throw Error(ErrorKind::InvalidParameters, "T(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                                  std::to_string(m) + "," + std::to_string(p) +
                                                  ") needs k >= 2, m >= 3, p <= k and n = 1 + k + km - p");
  }
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const auto child = static_cast<Vertex>(i + 1);
    edges.emplace_back(0, child);
    const std::size_t grandchildren = i < k - p ? m : m - 1;
    for (std::size_t j = 0; j < grandchildren; ++j) edges.emplace_back(child, next++);
  }
  return Graph::from_edge_list(edges, n);
}

Graph unicyclic_pendant_example() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 10; ++i) edges.emplace_back(i, (i + 1) % 10);
  edges.emplace_back(0, 10);
  edges.emplace_back(5, 11);
  return Graph::from_edge_list(edges, 12);
}

Graph chorded_cycle_example() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  edges.emplace_back(0, 4);
  return Graph::from_edge_list(edges, 8);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view s) {
  auto malformed = [&](const std::string& why) {
    return Error(ErrorKind::MalformedGraph6, "malformed graph6 '" + std::string(s) + "': " + why);
  };
  for (char c : s) {
    if (c < 63 || c > 126) throw malformed("byte outside 63..126");
  }
  if (s.empty()) throw malformed("empty string");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (s[0] != '~') {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~') {
      throw Error(ErrorKind::CapacityExceeded, "graph6 order exceeds 64 vertices");
    }
    if (s.size() < 4) throw malformed("truncated size header");
    n = (static_cast<std::size_t>(s[1] - 63) << 12) | (static_cast<std::size_t>(s[2] - 63) << 6) |
        static_cast<std::size_t>(s[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw Error(ErrorKind::CapacityExceeded, "graph6 order exceeds 64 vertices");

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (s.size() - pos != byte_count) {
    throw malformed("expected " + std::to_string(byte_count) + " adjacency bytes, got " +
                    std::to_string(s.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int last = s.back() - 63;
    if ((last & ((1 << (6 - bit_count % 6)) - 1)) != 0) throw malformed("nonzero padding bits");
  }
  return Graph::from_edge_list(edges, n);
}

std::vector<Graph> read_graph6_file(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.erase(0, header.size());
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace forts
