#include "rbx/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "rbx/errors.hpp"

namespace rbx {

VertexPartition::VertexPartition(std::vector<std::vector<Vertex>> blocks) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    total += b.size();
  }
  n_ = static_cast<int>(total);
  labels_.assign(total, -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Vertex v : blocks_[i]) {
      if (v < 0 || v >= n_)
        throw InvalidParameters("partition vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
      if (labels_[v] != -1) throw InvalidParameters("vertex " + std::to_string(v) + " appears in two blocks");
      labels_[v] = static_cast<int>(i);
    }
  }
}

VertexPartition VertexPartition::from_labels(std::span<const int> labels, int block_count) {
  std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(block_count));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0 || labels[v] >= block_count) throw InvalidParameters("block label out of range");
    blocks[labels[v]].push_back(static_cast<Vertex>(v));
  }
  return VertexPartition(std::move(blocks));
}

VertexPartition VertexPartition::reordered(std::span<const std::size_t> block_order) const {
  if (block_order.size() != blocks_.size()) throw InvalidParameters("block order has wrong length");
  std::vector<std::vector<Vertex>> out;
  out.reserve(blocks_.size());
  for (std::size_t i : block_order) out.push_back(blocks_.at(i));
  return VertexPartition(std::move(out));
}

void require_cover(const Hypergraph& g, const VertexPartition& p) {
  if (p.vertex_count() != g.n())
    throw InvalidParameters("partition covers " + std::to_string(p.vertex_count()) + " vertices but the graph has " +
                            std::to_string(g.n()));
}

std::size_t IndexVector::norm_inf() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::size_t IndexVector::norm_1() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::vector<std::size_t> IndexVector::canonical() const {
  auto c = counts;
  std::sort(c.rbegin(), c.rend());
  return c;
}

void for_each_restricted_growth(int n, int k, const std::function<bool(std::span<const int>)>& fn) {
  PartitionStream s(n, k);
  while (auto p = s.next())
    if (!fn(p->labels())) return;
}

PartitionStream::PartitionStream(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 1) throw InvalidParameters("partition enumeration needs n >= 0 and k >= 1");
}

std::optional<VertexPartition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    labels_.assign(static_cast<std::size_t>(n_), 0);
    prefix_max_.assign(static_cast<std::size_t>(n_), 0);
    return VertexPartition::from_labels(labels_, k_);
  }
  // advance the rightmost position that can still grow
  for (int i = n_ - 1; i >= 1; --i) {
    int limit = std::min(prefix_max_[i - 1] + 1, k_ - 1);
    if (labels_[i] < limit) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (int j = i + 1; j < n_; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return VertexPartition::from_labels(labels_, k_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<VertexPartition> enumerate_partitions(int n, int k) {
  std::vector<VertexPartition> out;
  PartitionStream s(n, k);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

IndexVector index_vector(const Hypergraph& f, const VertexPartition& p) {
  require_cover(f, p);
  IndexVector iv;
  iv.counts.assign(p.block_count(), 0);
  const auto& lab = p.labels();
  for (const auto& e : f.edges()) {
    if (e.empty()) continue;
    int b = lab[e[0]];
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return lab[v] == b; })) ++iv.counts[b];
  }
  return iv;
}

namespace {

/// Depth-first restricted-growth search over (p-1)-block partitions of a
/// 2-graph with per-block inside-edge counts maintained incrementally.
class BlockSearch {
 public:
  BlockSearch(const Hypergraph& f, int p, std::uint64_t budget) : n_(f.n()), k_(p - 1), budget_(budget) {
    if (f.r() != 2) throw WrongUniformity("partition class computations need a 2-graph");
    if (p < 2) throw InvalidParameters("p must be at least 2");
    if (n_ > 64) throw InvalidParameters("partition search supports at most 64 vertices");
    lower_adj_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& e : f.edges()) lower_adj_[e[1]] |= std::uint64_t{1} << e[0];
    labels_.assign(static_cast<std::size_t>(n_), 0);
    block_mask_.assign(static_cast<std::size_t>(k_), 0);
    inside_.assign(static_cast<std::size_t>(k_), 0);
  }

  // prune(block, new inside count, nonzero blocks, sum) cuts a branch; leaf returns false to stop.
  template <class Prune, class Leaf>
  void run(Prune&& prune, Leaf&& leaf) {
    stop_ = false;
    if (n_ == 0) {
      leaf(labels_, inside_, 0);
      return;
    }
    dfs(0, 0, 0, 0, prune, leaf);
  }

  std::uint64_t nodes() const { return nodes_; }
  int blocks() const { return k_; }

 private:
  template <class Prune, class Leaf>
  void dfs(int v, int used_blocks, std::size_t sum, int nonzero, Prune& prune, Leaf& leaf) {
    if (stop_) return;
    if (v == n_) {
      if (!leaf(labels_, inside_, sum)) stop_ = true;
      return;
    }
    int limit = std::min(used_blocks + 1, k_);
    for (int b = 0; b < limit && !stop_; ++b) {
      if (++nodes_ > budget_) throw BudgetExceeded("partition search exceeded its node budget", budget_);
      std::size_t add = static_cast<std::size_t>(std::popcount(lower_adj_[v] & block_mask_[b]));
      std::size_t before = inside_[b];
      int nz = nonzero + (before == 0 && add > 0 ? 1 : 0);
      if (prune(b, before + add, nz, sum + add)) continue;
      inside_[b] = before + add;
      block_mask_[b] |= std::uint64_t{1} << v;
      labels_[v] = b;
      dfs(v + 1, std::max(used_blocks, b + 1), sum + add, nz, prune, leaf);
      block_mask_[b] &= ~(std::uint64_t{1} << v);
      inside_[b] = before;
    }
  }

  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  std::vector<std::uint64_t> lower_adj_;
  std::vector<int> labels_;
  std::vector<std::uint64_t> block_mask_;
  std::vector<std::size_t> inside_;
};

}  // namespace

ClassResult class_of(const Hypergraph& f, int p, const PartitionSearchOptions& opts) {
  BlockSearch search(f, p, opts.node_budget);
  std::size_t best = SIZE_MAX;
  std::vector<int> best_labels;
  std::vector<std::size_t> best_counts;
  search.run(
      [&](int, std::size_t count, int, std::size_t sum) { return count >= 2 || (best != SIZE_MAX && sum >= best); },
      [&](const std::vector<int>& labels, const std::vector<std::size_t>& inside, std::size_t sum) {
        if (sum < best) {
          best = sum;
          best_labels = labels;
          best_counts = inside;
        }
        return best != 0;
      });
  ClassResult res;
  res.nodes = search.nodes();
  if (best == SIZE_MAX) {
    res.ell = p;
    return res;
  }
  res.ell = static_cast<int>(best);
  res.witness = VertexPartition::from_labels(best_labels, search.blocks());
  res.vector = IndexVector{best_counts};
  return res;
}

std::optional<VertexPartition> config_witness(const Hypergraph& f, int p, const PartitionSearchOptions& opts) {
  BlockSearch search(f, p, opts.node_budget);
  std::optional<VertexPartition> found;
  search.run([](int, std::size_t count, int nonzero, std::size_t) { return count > 2 || nonzero > 1; },
             [&](const std::vector<int>& labels, const std::vector<std::size_t>&, std::size_t sum) {
               if (sum != 2) return true;
               found = VertexPartition::from_labels(labels, search.blocks());
               return false;
             });
  return found;
}

}  // namespace rbx
