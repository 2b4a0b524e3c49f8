#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rbx/hypergraph.hpp"
#include "rbx/partition.hpp"

namespace rbx {

struct OracleOptions {
  std::uint64_t node_budget = 1'000'000'000ULL;
};

struct TuranOracleResult {
  std::uint64_t value = 0;
  Hypergraph witness;
  bool certified = true;
  std::uint64_t nodes = 0;
};

/// Every copy of `pattern` in K_n^r as a bitmask over the edge indices of
/// complete_hypergraph(n, r); distinct edge sets only, sorted ascending.
/// Requires C(n, r) <= 64.
std::vector<std::uint64_t> copies_in_complete(int n, int r, const Hypergraph& pattern);

/// Exact ex(n, r, family) by branch-and-bound over the edges of K_n^r in
/// lexicographic order, seeded with a greedy lower bound.
TuranOracleResult ex_bruteforce(int n, int r, std::span<const Hypergraph> family, const OracleOptions& opts = {});

struct AntiRamseyResult {
  /// ar = 1 + max_rainbow_free_colors
  std::uint64_t value = 0;
  int max_rainbow_free_colors = 0;
  /// an optimal rainbow-free coloring (absent when no coloring avoids a rainbow copy)
  std::optional<EdgeColoring> witness;
  bool certified = true;
  std::uint64_t nodes = 0;
};

/// Exact ar(n, r, F^(r)) (F itself for r = 2). Colorings are enumerated as
/// set partitions of the edges of K_n^r in restricted-growth order; a branch
/// dies as soon as a fully colored copy is rainbow. When the pattern does not
/// fit in K_n^r the value is C(n, r) + 1.
AntiRamseyResult ar_bruteforce(int n, int r, const Hypergraph& f, const OracleOptions& opts = {});

struct CrossingSplit {
  VertexPartition partition;
  std::vector<Edge> crossing;
  std::vector<Edge> non_crossing;
  /// within-block vertex pairs of each non-crossing edge, aligned with non_crossing
  std::vector<std::vector<VertexPair>> non_crossing_parts;
};

CrossingSplit crossing_split(const Hypergraph& g, const VertexPartition& p);

/// Vertices u such that {u, v} is a non-crossing part of some non-crossing edge.
std::vector<Vertex> non_crossing_part_neighbors(const CrossingSplit& split, Vertex v);

/// Sum over edges of the number of blocks the edge meets.
std::uint64_t f_potential(const Hypergraph& g, const VertexPartition& p);

/// Effect on f_potential of moving v into block `to`. e_prime counts edges
/// with e ∩ V_from = {v} that already meet V_to (they lose a block);
/// e_double_prime counts edges through v with |e ∩ V_from| >= 2 that miss
/// V_to (they gain one). delta = e_double_prime - e_prime.
struct MoveGain {
  std::uint64_t e_prime = 0;
  std::uint64_t e_double_prime = 0;
  std::int64_t delta = 0;
};

MoveGain vertex_move_gain(const Hypergraph& g, const VertexPartition& p, Vertex v, std::size_t to);

enum class SearchMode { automatic, exact, hillclimb };

struct PotentialResult {
  VertexPartition partition;
  std::uint64_t value = 0;
  bool certified = false;
  std::uint64_t nodes = 0;
  int moves = 0;
};

/// Maximizes f_potential over partitions into k blocks. Exact mode returns
/// the first maximizer in restricted-growth order. Hill-climbing applies the
/// best strictly improving single-vertex move until none exists, starting
/// from `start` or from a seeded random assignment.
PotentialResult f_maximize(const Hypergraph& g, int k, SearchMode mode, std::uint64_t seed = 0,
                           const std::optional<VertexPartition>& start = std::nullopt, const OracleOptions& opts = {});

struct ClosenessResult {
  std::uint64_t distance = 0;
  VertexPartition witness;
  bool certified = false;
  std::uint64_t nodes = 0;
};

/// Minimum over balanced (p-1)-partitions P of |G Δ T_P|, T_P being all
/// r-sets crossing P. Automatic mode is exact up to `exact_vertex_limit`
/// vertices and hill-climbs on vertex swaps beyond (certified = false).
ClosenessResult closeness_to_turan(const Hypergraph& g, int p, SearchMode mode = SearchMode::automatic,
                                   const OracleOptions& opts = {}, int exact_vertex_limit = 10);

/// |G Δ T_P| for one balanced partition P.
std::uint64_t distance_to_partition_turan(const Hypergraph& g, const VertexPartition& p);

}  // namespace rbx
