#pragma once

#include <cstdint>
#include <vector>

#include "rbx/hypergraph.hpp"
#include "rbx/partition.hpp"

namespace rbx {

/// F^(r): every skeleton edge receives r-2 private new vertices.
struct ExpansionResult {
  Hypergraph hypergraph;
  std::vector<Vertex> skeleton_vertices;
  /// edge_provenance[i] = index of the skeleton edge behind hypergraph.edge(i)
  std::vector<std::size_t> edge_provenance;
};

/// New vertices are numbered after the skeleton, r-2 per skeleton edge, in
/// skeleton edge order. r = 2 returns F unchanged.
ExpansionResult expansion(const Hypergraph& f, int r);

/// Vertex count of F^(r), i.e. v(F) + (r-2)|F|.
int expansion_order(const Hypergraph& f, int r);

/// Sizes of a balanced partition of n into `blocks` parts, smaller parts first.
std::vector<int> balanced_block_sizes(int n, int blocks);

/// Balanced partition with contiguous blocks in balanced_block_sizes order.
VertexPartition balanced_partition(int n, int blocks);

struct TuranResult {
  Hypergraph hypergraph;
  VertexPartition partition;
  std::uint64_t count = 0;
};

/// T_p(n, r): all r-sets meeting every block of the balanced (p-1)-partition
/// at most once.
TuranResult turan_hypergraph(int n, int p, int r);

/// t_p(n, r) from block sizes alone (elementary symmetric sum).
std::uint64_t turan_count(int n, int p, int r);

/// True when e meets every block of `p` in at most one vertex.
bool is_crossing(std::span<const Vertex> e, const VertexPartition& p);

/// K_n^r with `extremal` rainbow and every other edge in one extra color.
/// `f` is the 2-graph whose expansion the extremal graph is meant to avoid;
/// avoiding it is the caller's responsibility.
EdgeColoring trivial_lower_bound_coloring(int n, int r, const Hypergraph& f, const Hypergraph& extremal);

/// Coloring of K_n^3 with t_p(n,3) + l - 1 colors: Turán edges rainbow, the
/// edges meeting block i (i < l-2) in at least two vertices form class i,
/// everything else one final class.
EdgeColoring lower_bound_coloring_r3(int n, int p, int l);

/// Coloring of K_n^r with t_p(n,r) + 1 colors: Turán edges rainbow, every
/// other edge in one color.
EdgeColoring lower_bound_coloring_general(int n, int p, int r);

}  // namespace rbx
