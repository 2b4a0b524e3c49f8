#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rbx/hypergraph.hpp"

namespace rbx {

/// Exact chromatic number of a 2-graph (at most 64 vertices): 0 for the
/// empty vertex set, 1 for a nonempty edgeless graph.
int chromatic_number(const Hypergraph& f);

/// A proper coloring with at most k colors (vertex -> color), if one exists.
std::optional<std::vector<int>> k_coloring(const Hypergraph& f, int k);

struct EdgeCriticality {
  bool critical = false;
  /// Lexicographically first edge whose removal lowers the chromatic number.
  std::optional<Edge> edge;
};

EdgeCriticality is_edge_critical(const Hypergraph& f);

struct CriticalityReport {
  int chi = 0;
  int p = 0;
  bool is_doubly_p_critical = false;
  /// First pair (in edge order) with chi(F - e1 - e2) = p - 1.
  std::optional<std::pair<Edge, Edge>> witness_pair;
  /// First edge with chi(F - e) < p.
  std::optional<Edge> failing_edge;
};

/// Literal doubly edge-p-critical test: chi(F - e) >= p for every edge and
/// chi(F - e1 - e2) = p - 1 for some pair of distinct edges. The pair search
/// is skipped once a failing edge is known.
CriticalityReport doubly_critical_report(const Hypergraph& f, int p);

}  // namespace rbx
