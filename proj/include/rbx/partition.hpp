#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rbx/hypergraph.hpp"

namespace rbx {

/// Ordered list of disjoint vertex blocks covering [0, n). Empty blocks are
/// allowed; each block is kept sorted.
class VertexPartition {
 public:
  VertexPartition() = default;
  /// Throws InvalidParameters unless the blocks are disjoint and their union
  /// is exactly [0, total element count).
  explicit VertexPartition(std::vector<std::vector<Vertex>> blocks);

  /// Block i holds the vertices v with labels[v] == i.
  static VertexPartition from_labels(std::span<const int> labels, int block_count);

  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  int vertex_count() const noexcept { return n_; }
  /// vertex -> block index
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// Same partition with the blocks listed in the order given.
  VertexPartition reordered(std::span<const std::size_t> block_order) const;

  bool operator==(const VertexPartition& o) const { return blocks_ == o.blocks_; }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<int> labels_;
};

/// Throws InvalidParameters unless `p` partitions exactly the vertices of `g`.
void require_cover(const Hypergraph& g, const VertexPartition& p);

/// Per-block counts of edges lying inside a block.
struct IndexVector {
  std::vector<std::size_t> counts;

  std::size_t norm_inf() const;
  std::size_t norm_1() const;
  /// Counts sorted descending; index vectors are compared in this form.
  std::vector<std::size_t> canonical() const;

  bool operator==(const IndexVector&) const = default;
};

/// Calls `fn(labels)` for every partition of [0, n) into at most k blocks,
/// encoded as a restricted growth string (labels[0] = 0, labels[i] <= 1 +
/// max(labels[0..i))). Order is lexicographic in the label string.
/// Stops early when `fn` returns false.
void for_each_restricted_growth(int n, int k, const std::function<bool(std::span<const int>)>& fn);

/// Pull-style stream over the same partitions, each padded to k blocks.
class PartitionStream {
 public:
  PartitionStream(int n, int k);
  std::optional<VertexPartition> next();

 private:
  int n_;
  int k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> labels_;
  std::vector<int> prefix_max_;
};

std::vector<VertexPartition> enumerate_partitions(int n, int k);

IndexVector index_vector(const Hypergraph& f, const VertexPartition& p);

struct PartitionSearchOptions {
  std::uint64_t node_budget = 200'000'000;
};

struct ClassResult {
  /// 0 when F is (p-1)-colorable; p when no partition has sup-norm 1.
  int ell = 0;
  std::optional<VertexPartition> witness;
  std::optional<IndexVector> vector;
  std::uint64_t nodes = 0;
};

/// Class of a 2-graph with respect to (p-1)-block partitions. The witness is
/// the first minimizer in restricted-growth order.
ClassResult class_of(const Hypergraph& f, int p, const PartitionSearchOptions& opts = {});

/// First (p-1)-block partition (restricted-growth order) whose canonical
/// index vector is (2, 0, ..., 0).
std::optional<VertexPartition> config_witness(const Hypergraph& f, int p, const PartitionSearchOptions& opts = {});

}  // namespace rbx
