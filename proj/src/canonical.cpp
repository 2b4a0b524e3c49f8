#include "rbx/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

#include "rbx/errors.hpp"

namespace rbx {

namespace {

using Adjacency = std::vector<std::uint32_t>;
using Cells = std::vector<std::vector<int>>;

int pair_count(int n) { return n * (n - 1) / 2; }

std::uint64_t code_of(const Adjacency& adj, const std::vector<int>& pos) {
  const int n = static_cast<int>(adj.size());
  const int m = pair_count(n);
  std::uint64_t code = 0;
  for (int u = 0; u < n; ++u)
    for (std::uint32_t rest = adj[u] >> (u + 1); rest; rest &= rest - 1) {
      int v = u + 1 + std::countr_zero(rest);
      int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
      int idx = a * n - a * (a + 1) / 2 + (b - a - 1);
      code |= std::uint64_t{1} << (m - 1 - idx);
    }
  return code;
}

Adjacency adjacency_of(const Hypergraph& g) {
  if (g.r() != 2) throw WrongUniformity("canonical labeling takes a 2-graph");
  if (g.n() > kCanonicalMaxVertices)
    throw InvalidParameters("canonical labeling supports at most " + std::to_string(kCanonicalMaxVertices) + " vertices");
  Adjacency adj(static_cast<std::size_t>(g.n()), 0);
  for (const auto& e : g.edges()) {
    adj[e[0]] |= 1u << e[1];
    adj[e[1]] |= 1u << e[0];
  }
  return adj;
}

// Splits cells by neighbour counts into every cell until stable. The split
// order depends on counts only, so the result commutes with relabeling.
void refine(const Adjacency& adj, Cells& cells) {
  while (true) {
    std::vector<std::uint32_t> masks;
    masks.reserve(cells.size());
    for (const auto& c : cells) {
      std::uint32_t m = 0;
      for (int v : c) m |= 1u << v;
      masks.push_back(m);
    }
    Cells next;
    next.reserve(adj.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> sig(masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i) sig[i] = std::popcount(adj[v] & masks[i]);
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size();) {
        std::size_t j = i;
        std::vector<int> part;
        while (j < keyed.size() && keyed[j].first == keyed[i].first) part.push_back(keyed[j++].second);
        next.push_back(std::move(part));
        i = j;
      }
    }
    if (next.size() == cells.size()) return;
    cells = std::move(next);
  }
}

class Canonizer {
 public:
  explicit Canonizer(Adjacency adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    Cells cells{std::vector<int>(static_cast<std::size_t>(n_))};
    std::iota(cells[0].begin(), cells[0].end(), 0);
    refine(adj_, cells);
    std::vector<int> prefix;
    search(cells, prefix);
    return best_pos_;
  }

 private:
  void leaf(const Cells& cells) {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i][0]] = static_cast<int>(i);
    std::uint64_t code = code_of(adj_, pos);
    if (!have_) {
      have_ = true;
      first_code_ = best_code_ = code;
      first_pos_ = best_pos_ = pos;
      return;
    }
    if (code == first_code_) record_automorphism(first_pos_, pos);
    if (code == best_code_) {
      record_automorphism(best_pos_, pos);
    } else if (code > best_code_) {
      best_code_ = code;
      best_pos_ = std::move(pos);
    }
  }

  void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
    if (autos_.size() >= 256) return;
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inv[a[v]] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inv[b[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) autos_.push_back(std::move(gamma));
  }

  int find(std::vector<int>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  void search(const Cells& cells, std::vector<int>& prefix) {
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    std::vector<int> tried;
    for (int w : cells[target]) {
      // orbits of the automorphisms found so far that fix the prefix
      std::vector<int> uf(static_cast<std::size_t>(n_));
      std::iota(uf.begin(), uf.end(), 0);
      for (const auto& g : autos_) {
        bool fixes = true;
        for (int v : prefix) fixes = fixes && g[v] == v;
        if (!fixes) continue;
        for (int v = 0; v < n_; ++v) {
          int a = find(uf, v), b = find(uf, g[v]);
          if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
      }
      bool skip = false;
      for (int t : tried) skip = skip || find(uf, t) == find(uf, w);
      if (skip) continue;
      tried.push_back(w);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({w});
        std::vector<int> rest;
        for (int v : cells[i])
          if (v != w) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      refine(adj_, child);
      prefix.push_back(w);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  Adjacency adj_;
  int n_;
  bool have_ = false;
  std::uint64_t first_code_ = 0, best_code_ = 0;
  std::vector<int> first_pos_, best_pos_;
  std::vector<std::vector<int>> autos_;
};

std::uint64_t canonical_code_of(const Adjacency& adj) {
  auto pos = Canonizer(adj).run();
  return code_of(adj, pos);
}

Adjacency adjacency_from_code(int n, std::uint64_t code) {
  Adjacency adj(static_cast<std::size_t>(n), 0);
  const int m = pair_count(n);
  int idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++idx)
      if (code >> (m - 1 - idx) & 1) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
      }
  return adj;
}

std::vector<std::uint64_t> next_level(int n, const std::vector<std::uint64_t>& parents, int threads) {
  // Every graph on n vertices arises from a parent by adding a vertex of
  // minimum degree, so candidate neighbourhoods are capped by the minimum.
  std::vector<std::unordered_set<std::uint64_t>> found(static_cast<std::size_t>(std::max(threads, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&](std::size_t slot) {
    auto& out = found[slot];
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= parents.size()) return;
      Adjacency base = adjacency_from_code(n - 1, parents[i]);
      base.push_back(0);
      for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
        int k = std::popcount(s);
        bool ok = true;
        for (int u = 0; u < n - 1 && ok; ++u) ok = std::popcount(base[u]) + static_cast<int>(s >> u & 1) >= k;
        if (!ok) continue;
        Adjacency adj = base;
        adj[n - 1] = s;
        for (int u = 0; u < n - 1; ++u)
          if (s >> u & 1) adj[u] |= 1u << (n - 1);
        out.insert(canonical_code_of(adj));
      }
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, static_cast<std::size_t>(t));
    for (auto& t : pool) t.join();
  }
  std::unordered_set<std::uint64_t> all;
  for (auto& s : found) all.insert(s.begin(), s.end());
  std::vector<std::uint64_t> codes(all.begin(), all.end());
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace

std::uint64_t adjacency_code(const Hypergraph& g, const std::vector<int>& position) {
  auto adj = adjacency_of(g);
  if (static_cast<int>(position.size()) != g.n()) throw InvalidParameters("position map has the wrong length");
  return code_of(adj, position);
}

std::vector<int> canonical_labeling(const Hypergraph& g) { return Canonizer(adjacency_of(g)).run(); }

std::uint64_t canonical_code(const Hypergraph& g) { return canonical_code_of(adjacency_of(g)); }

Hypergraph canonical_form(const Hypergraph& g) { return graph_from_code(g.n(), canonical_code(g)); }

Hypergraph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > kCanonicalMaxVertices) throw InvalidParameters("vertex count out of range for adjacency codes");
  std::vector<Edge> edges;
  const int m = pair_count(n);
  int idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++idx)
      if (code >> (m - 1 - idx) & 1) edges.push_back({a, b});
  return Hypergraph(n, 2, std::move(edges));
}

std::vector<Hypergraph> nonisomorphic_graphs(int n, int threads) {
  if (n < 0) throw InvalidParameters("vertex count must be nonnegative");
  if (n > kGenerationMaxVertices)
    throw BudgetExceeded("isomorphism classes are generated for at most " + std::to_string(kGenerationMaxVertices) +
                             " vertices",
                         static_cast<std::uint64_t>(kGenerationMaxVertices));
  static std::mutex mu;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::vector<std::uint64_t> codes;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
      cache[0] = {0};
      cache[1] = {0};
    }
    for (int k = 2; k <= n; ++k)
      if (!cache.count(k)) cache[k] = next_level(k, cache[k - 1], threads);
    codes = cache[n];
  }
  std::vector<Hypergraph> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(graph_from_code(n, c));
  std::stable_sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace rbx
