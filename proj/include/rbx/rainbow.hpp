#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rbx/hypergraph.hpp"

namespace rbx {

struct SearchOptions {
  std::uint64_t node_budget = 4'000'000'000ULL;
  int threads = 1;
};

/// Copy of a pattern whose matched host edges carry pairwise distinct colors.
/// colors[i] is the color of embedding.matched_edges[i].
struct RainbowCopy {
  EmbeddingMap embedding;
  std::vector<int> colors;

  bool operator==(const RainbowCopy&) const = default;
};

struct RainbowSearchResult {
  std::optional<RainbowCopy> copy;
  std::uint64_t nodes = 0;
};

/// Exhaustive search for a rainbow copy of `pattern` (a labeled r-graph) in
/// the colored host. Pattern vertices are matched in a static order that
/// follows edge connectivity; candidates are tried in increasing host vertex
/// order, so the witness is the first one in that order regardless of thread
/// count. A pattern with more vertices than the host has no copy.
RainbowSearchResult find_rainbow_copy(const EdgeColoring& coloring, const Hypergraph& pattern,
                                      const SearchOptions& opts = {});

/// Same search on a host given as an edge list with arbitrary color ids
/// (colors[i] belongs to host.edge(i)); used for sub-hosts of a coloring.
RainbowSearchResult find_rainbow_copy(const Hypergraph& host, std::span<const int> colors, const Hypergraph& pattern,
                                      const SearchOptions& opts = {});

/// Re-checks a copy: valid embedding into the host, matched colors as stated
/// and pairwise distinct.
bool is_rainbow_copy(const RainbowCopy& copy, const Hypergraph& host, std::span<const int> colors,
                     const Hypergraph& pattern);

/// Codegree threshold tau * C(n, r-3) + |F| separating big from small pairs,
/// with tau the vertex count of F^(r).
std::uint64_t big_pair_threshold(int n, int r, const Hypergraph& skeleton);

struct PairClassification {
  std::uint64_t threshold = 0;
  std::vector<VertexPair> big_pairs;
  std::vector<VertexPair> small_pairs;
  /// small_degree[v] = number of small pairs containing v
  std::vector<int> small_degree;
  /// codegree of every pair, row-major n x n (symmetric, zero diagonal)
  std::vector<std::uint64_t> codegrees;
};

PairClassification classify_pairs(const Hypergraph& g, const Hypergraph& skeleton);

/// Vertices v with small_degree[v] >= min_small_degree.
std::vector<Vertex> high_small_degree_vertices(const PairClassification& pc, int min_small_degree);

struct SkeletonExtension {
  std::optional<RainbowCopy> copy;
  /// host pair of the first skeleton edge with no fresh extension
  std::optional<VertexPair> failed_pair;
};

/// Greedily grows an embedded skeleton into a rainbow copy of F^(r) using
/// edges of the rainbow host only: skeleton edges in order, each taking the
/// lexicographically least host edge through its pair whose other vertices
/// are unused. With `require_big_pairs` every skeleton pair must be big
/// (PreconditionFailed otherwise); a non-rainbow host is always an error.
SkeletonExtension extend_skeleton(const EdgeColoring& rainbow_host, const Hypergraph& skeleton,
                                  std::span<const Vertex> skeleton_map, bool require_big_pairs = true);

/// Endpoints of every edge e of F with F - e = H (same vertex set, labeled).
/// Throws InvalidParameters when H is not of that form.
std::vector<VertexPair> terminal_pairs(const Hypergraph& h, const Hypergraph& f);

/// Host pair that completes an embedded copy of H^(r) to F^(r): the image of
/// a terminal pair under the copy's vertex map.
VertexPair terminal_pair_in_host(const RainbowCopy& copy, VertexPair terminal);

struct RainbowCollection {
  std::vector<RainbowCopy> copies;
  /// edge indices (into the coloring's host) of the rainbow subgraph used
  std::vector<std::size_t> rainbow_subgraph;
  std::uint64_t nodes = 0;
};

/// Takes the lexicographically least edge of each color class as a rainbow
/// subgraph and repeatedly removes a rainbow copy of `pattern` from it until
/// none is left. Copies are edge-disjoint, hence color-disjoint.
RainbowCollection maximal_disjoint_rainbow_collection(const EdgeColoring& coloring, const Hypergraph& pattern,
                                                      const SearchOptions& opts = {});

}  // namespace rbx
