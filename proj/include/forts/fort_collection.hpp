#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "forts/vertex_set.hpp"

namespace forts {

/// Minimal forts of one graph. Canonical form: duplicate-free and sorted by lex_less.
using FortCollection = std::vector<VertexSet>;

inline void canonicalize(FortCollection& forts) {
  std::sort(forts.begin(), forts.end(), lex_less);
  forts.erase(std::unique(forts.begin(), forts.end()), forts.end());
}

/// "[0, 2, 5]"
inline std::string format_vertex_list(VertexSet s) {
  std::string out = "[";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  out += ']';
  return out;
}

}  // namespace forts
