#include "forts/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "forts/error.hpp"

namespace forts {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingSurveyData: return "MissingSurveyData";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(std::span<const Edge> edges, std::size_t n) {
  if (n > kMaxVertices) {
    throw Error(ErrorKind::CapacityExceeded,
                "graph has " + std::to_string(n) + " vertices; at most 64 are supported");
  }
  std::vector<VertexSet> masks(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                   ") has an endpoint >= " + std::to_string(n));
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    masks[u].insert(v);
    masks[v].insert(u);
  }

  Graph g;
  g.masks_ = std::move(masks);
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.masks_[v].size();
  g.neighbors_.reserve(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : g.masks_[v]) g.neighbors_.push_back(w);
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::pair<Graph, std::vector<Vertex>> Graph::induced(VertexSet keep) const {
  std::vector<Vertex> to_parent = keep.to_vector();
  std::vector<Vertex> to_child(order(), 0);
  for (std::size_t i = 0; i < to_parent.size(); ++i) to_child[to_parent[i]] = static_cast<Vertex>(i);

  std::vector<Edge> sub;
  for (Vertex u : keep) {
    for (Vertex v : masks_[u] & keep) {
      if (u < v) sub.emplace_back(to_child[u], to_child[v]);
    }
  }
  return {from_edge_list(sub, to_parent.size()), std::move(to_parent)};
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

PathBranch path_branch_within(const Graph& g, VertexSet alive, Vertex leaf) {
  PathBranch branch;
  branch.leaf = leaf;
  branch.vertices.insert(leaf);
  Vertex prev = leaf;
  VertexSet next = g.neighbor_set(leaf) & alive;
  // Walk away from the leaf while the vertices have degree <= 2.
  while (!next.empty()) {
    const Vertex curr = next.lowest();
    const VertexSet around = g.neighbor_set(curr) & alive;
    if (around.size() > 2) {
      branch.neighbor = curr;
      break;
    }
    branch.vertices.insert(curr);
    next = around.without(prev);
    prev = curr;
  }
  return branch;
}

PathBranch path_branch_of(const Graph& tree, Vertex leaf) {
  if (!is_tree(tree)) throw Error(ErrorKind::NotATree, "path branches are defined for trees only");
  if (leaf >= tree.order() || tree.degree(leaf) != 1) {
    throw Error(ErrorKind::NotALeaf, "vertex " + std::to_string(leaf) + " is not a leaf");
  }
  return path_branch_within(tree, tree.vertices(), leaf);
}

VertexSet reachable(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::singleton(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet grown;
    for (Vertex v : frontier) grown |= g.neighbor_set(v);
    frontier = (grown & within) - seen;
    seen |= frontier;
  }
  return seen;
}

std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    const VertexSet part = reachable(g, rest.lowest(), g.vertices());
    auto [sub, map] = g.induced(part);
    out.push_back({std::move(sub), std::move(map)});
    rest -= part;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable(g, 0, g.vertices()) == g.vertices();
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.edge_count() + 1 == g.order() && is_connected(g);
}

bool is_forest(const Graph& g) {
  // A graph is acyclic iff edges = vertices - components.
  return g.edge_count() + components(g).size() == g.order();
}

namespace {

// Next whitespace-separated token, skipping `#` comments to end of line.
bool next_token(std::istream& in, std::string& token) {
  token.clear();
  char c = 0;
  while (in.get(c)) {
    if (c == '#') {
      std::string discard;
      std::getline(in, discard);
      if (!token.empty()) return true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) return true;
      continue;
    }
    token.push_back(c);
  }
  return !token.empty();
}

std::size_t parse_count(std::istream& in, const char* what) {
  std::string token;
  if (!next_token(in, token)) throw Error(ErrorKind::ParseError, std::string("missing ") + what);
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.front() == '-') {
    throw Error(ErrorKind::ParseError, std::string("expected non-negative integer for ") + what + ", got '" +
                                           token + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  const std::size_t n = parse_count(in, "vertex count");
  const std::size_t m = parse_count(in, "edge count");
  if (n > kMaxVertices) {
    throw Error(ErrorKind::CapacityExceeded,
                "graph has " + std::to_string(n) + " vertices; at most 64 are supported");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = parse_count(in, "edge endpoint");
    const auto v = parse_count(in, "edge endpoint");
    if (u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                   ") has an endpoint >= " + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (next_token(in, extra)) throw Error(ErrorKind::ParseError, "trailing token '" + extra + "'");
  return Graph::from_edge_list(edges, n);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace forts
