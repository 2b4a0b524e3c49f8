#pragma once

#include <vector>

#include "rbx/hypergraph.hpp"

namespace fx {

using rbx::Edge;
using rbx::Hypergraph;

inline Hypergraph K(int n) { return rbx::complete_hypergraph(n, 2); }

inline Hypergraph C(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Hypergraph(n, 2, e);
}

/// path with k edges
inline Hypergraph P(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, i + 1});
  return Hypergraph(k + 1, 2, e);
}

/// two triangles sharing vertex 2
inline Hypergraph bowtie() { return Hypergraph(5, 2, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

inline Hypergraph K33() {
  std::vector<Edge> e;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) e.push_back({a, b});
  return Hypergraph(6, 2, e);
}

}  // namespace fx
