#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rbx {

using Vertex = int;
/// An edge is a sorted list of distinct vertices.
using Edge = std::vector<Vertex>;
using VertexPair = std::pair<Vertex, Vertex>;

/// Labeled r-uniform hypergraph on vertices 0..n-1. Edges are kept sorted
/// internally and the edge list is kept in lexicographic order, so iteration
/// and serialization are deterministic. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Sorts each edge and the edge list. Throws InvalidParameters if an edge
  /// has the wrong size, repeats a vertex, leaves [0, n), or is duplicated.
  Hypergraph(int n, int r, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  /// Position of `e` (any vertex order) in edges(), if present.
  std::optional<std::size_t> index_of(std::span<const Vertex> e) const;
  bool contains(std::span<const Vertex> e) const { return index_of(e).has_value(); }

  /// Number of edges containing each vertex.
  std::vector<int> degrees() const;

  /// Same edges on a vertex set relabeled by `perm` (old vertex -> new vertex).
  Hypergraph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  int r_ = 2;
  std::vector<Edge> edges_;
};

/// K_n^r: all r-subsets of [0, n) in lexicographic order.
Hypergraph complete_hypergraph(int n, int r);

/// Number of edges of `g` containing every vertex of `u`.
std::size_t codegree(const Hypergraph& g, std::span<const Vertex> u);

/// `g` with the listed edges deleted; throws NotPresent for a missing edge.
Hypergraph remove_edges(const Hypergraph& g, std::span<const Edge> removed);

/// `g` with the listed edges added (edges already present are an error).
Hypergraph add_edges(const Hypergraph& g, std::span<const Edge> added);

/// Total edge coloring. Color ids are renumbered on construction to the
/// contiguous range [0, color_count()) preserving their relative order.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  /// `colors[i]` is the color of host.edge(i). Throws InvalidParameters on a
  /// length mismatch or a negative id.
  EdgeColoring(Hypergraph host, std::vector<int> colors);

  const Hypergraph& host() const noexcept { return host_; }
  std::span<const int> colors() const noexcept { return colors_; }
  int color(std::size_t edge_index) const { return colors_[edge_index]; }
  std::optional<int> color_of(std::span<const Vertex> e) const;
  int color_count() const noexcept { return color_count_; }

  /// Lexicographically least edge index of each color class, indexed by color.
  std::vector<std::size_t> class_representatives() const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  Hypergraph host_;
  std::vector<int> colors_;
  int color_count_ = 0;
};

/// Injective vertex map of a pattern into a host together with the host edge
/// matched to each pattern edge (in pattern edge order).
struct EmbeddingMap {
  std::vector<Vertex> pattern_to_host;
  std::vector<Edge> matched_edges;

  bool operator==(const EmbeddingMap&) const = default;
};

/// Image of `e` under `map`, sorted.
Edge map_edge(std::span<const Vertex> map, std::span<const Vertex> e);

/// True when `m` is injective and every pattern edge maps onto its matched
/// edge, which is present in `host`.
bool is_valid_embedding(const EmbeddingMap& m, const Hypergraph& pattern, const Hypergraph& host);

}  // namespace rbx
