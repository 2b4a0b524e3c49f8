#include "rbx/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <string>

#include "rbx/combinatorics.hpp"
#include "rbx/constructions.hpp"
#include "rbx/errors.hpp"

namespace rbx {

namespace {

int complete_edge_count_checked(int n, int r) {
  if (n < 0 || r < 1 || r > n) throw InvalidParameters("oracle needs 1 <= r <= n");
  auto m = binomial(n, r);
  if (m > 64) throw BudgetExceeded("K_" + std::to_string(n) + "^" + std::to_string(r) + " has " + std::to_string(m) +
                                       " edges, more than the 64 the exhaustive oracles handle",
                                   64);
  return static_cast<int>(m);
}

std::uint64_t count_blocks(std::span<const Vertex> e, const std::vector<int>& labels) {
  std::uint64_t seen = 0;
  for (Vertex v : e) seen |= std::uint64_t{1} << labels[v];
  return static_cast<std::uint64_t>(std::popcount(seen));
}

std::uint64_t f_value(const Hypergraph& g, const std::vector<int>& labels) {
  std::uint64_t f = 0;
  for (const auto& e : g.edges()) f += count_blocks(e, labels);
  return f;
}

std::uint64_t crossing_count(const Hypergraph& g, const std::vector<int>& labels) {
  std::uint64_t c = 0;
  for (const auto& e : g.edges()) c += count_blocks(e, labels) == e.size();
  return c;
}

}  // namespace

std::vector<std::uint64_t> copies_in_complete(int n, int r, const Hypergraph& pattern) {
  complete_edge_count_checked(n, r);
  if (pattern.r() != r) throw InvalidParameters("pattern uniformity differs from the host");
  std::set<std::uint64_t> seen;
  if (pattern.n() > n) return {};
  Hypergraph host = complete_hypergraph(n, r);
  BinomialTable binom(r);
  // colex rank -> lexicographic edge index
  std::vector<int> lex_of_rank(host.size());
  for (std::size_t i = 0; i < host.size(); ++i)
    lex_of_rank[binom.colex_rank(vertex_mask(host.edge(i)))] = static_cast<int>(i);

  std::vector<Vertex> active;
  for (Vertex v = 0; v < pattern.n(); ++v)
    if (pattern.degrees()[v] > 0) active.push_back(v);
  std::vector<int> map(static_cast<std::size_t>(pattern.n()), -1);
  std::uint64_t used = 0;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == active.size()) {
      std::uint64_t copy = 0;
      for (const auto& e : pattern.edges()) {
        std::uint64_t m = 0;
        for (Vertex v : e) m |= std::uint64_t{1} << map[v];
        copy |= std::uint64_t{1} << lex_of_rank[binom.colex_rank(m)];
      }
      seen.insert(copy);
      return;
    }
    for (int h = 0; h < n; ++h) {
      if (used >> h & 1) continue;
      used |= std::uint64_t{1} << h;
      map[active[i]] = h;
      self(self, i + 1);
      used &= ~(std::uint64_t{1} << h);
    }
  };
  dfs(dfs, 0);
  return {seen.begin(), seen.end()};
}

TuranOracleResult ex_bruteforce(int n, int r, std::span<const Hypergraph> family, const OracleOptions& opts) {
  const int m = complete_edge_count_checked(n, r);
  std::vector<std::uint64_t> copies;
  for (const auto& h : family) {
    if (h.r() != r) throw InvalidParameters("family member has uniformity " + std::to_string(h.r()));
    if (h.empty() && h.n() <= n) throw InvalidParameters("an edgeless family member is contained in every graph");
    auto c = copies_in_complete(n, r, h);
    copies.insert(copies.end(), c.begin(), c.end());
  }
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
  // copies that become complete when edge i is the highest one included
  std::vector<std::vector<std::uint64_t>> closing(static_cast<std::size_t>(m));
  for (auto c : copies) closing[63 - std::countl_zero(c)].push_back(c);

  auto can_add = [&](std::uint64_t chosen, int i) {
    std::uint64_t with = chosen | std::uint64_t{1} << i;
    for (auto c : closing[i])
      if ((c & with) == c) return false;
    return true;
  };

  std::uint64_t best_mask = 0;
  for (int i = 0; i < m; ++i)
    if (can_add(best_mask, i)) best_mask |= std::uint64_t{1} << i;
  int best = std::popcount(best_mask);

  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, int i, std::uint64_t chosen, int count) -> void {
    if (++nodes > opts.node_budget) throw BudgetExceeded("Turán oracle exceeded its node budget", opts.node_budget);
    if (count + (m - i) <= best) return;
    if (i == m) {
      best = count;
      best_mask = chosen;
      return;
    }
    if (can_add(chosen, i)) self(self, i + 1, chosen | std::uint64_t{1} << i, count + 1);
    self(self, i + 1, chosen, count);
  };
  dfs(dfs, 0, 0, 0);

  Hypergraph host = complete_hypergraph(n, r);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    if (best_mask >> i & 1) edges.push_back(host.edge(i));
  TuranOracleResult res;
  res.value = static_cast<std::uint64_t>(best);
  res.witness = Hypergraph(n, r, std::move(edges));
  res.nodes = nodes;
  return res;
}

AntiRamseyResult ar_bruteforce(int n, int r, const Hypergraph& f, const OracleOptions& opts) {
  if (f.r() != 2) throw WrongUniformity("anti-Ramsey oracle takes a 2-graph skeleton");
  if (f.empty()) throw InvalidParameters("an edgeless pattern is rainbow in every coloring");
  const int m = complete_edge_count_checked(n, r);
  Hypergraph pattern = r == 2 ? f : expansion(f, r).hypergraph;
  auto copies = copies_in_complete(n, r, pattern);

  std::vector<std::vector<std::vector<int>>> closing(static_cast<std::size_t>(m));
  for (auto c : copies) {
    std::vector<int> idx;
    for (std::uint64_t x = c; x; x &= x - 1) idx.push_back(std::countr_zero(x));
    closing[idx.back()].push_back(std::move(idx));
  }

  std::vector<int> color(static_cast<std::size_t>(m), -1);
  std::vector<int> best_color;
  int best = 0;
  std::uint64_t nodes = 0;
  std::vector<char> mark;
  auto rainbow = [&](const std::vector<int>& idx) {
    mark.assign(static_cast<std::size_t>(m), 0);
    for (int e : idx) {
      if (mark[color[e]]) return false;
      mark[color[e]] = 1;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int i, int used) -> void {
    if (used + (m - i) <= best) return;
    if (i == m) {
      best = used;
      best_color = color;
      return;
    }
    // open a new color first so large colorings are met early
    for (int c = used; c >= 0; --c) {
      if (++nodes > opts.node_budget)
        throw BudgetExceeded("anti-Ramsey oracle exceeded its node budget", opts.node_budget);
      color[i] = c;
      bool ok = true;
      for (const auto& idx : closing[i])
        if (rainbow(idx)) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1, std::max(used, c + 1));
      if (used + 1 + (m - i - 1) <= best) break;
    }
    color[i] = -1;
  };
  dfs(dfs, 0, 0);

  AntiRamseyResult res;
  res.max_rainbow_free_colors = best;
  res.value = static_cast<std::uint64_t>(best) + 1;
  res.nodes = nodes;
  if (best > 0) res.witness = EdgeColoring(complete_hypergraph(n, r), best_color);
  return res;
}

CrossingSplit crossing_split(const Hypergraph& g, const VertexPartition& p) {
  require_cover(g, p);
  CrossingSplit s;
  s.partition = p;
  const auto& lab = p.labels();
  for (const auto& e : g.edges()) {
    std::vector<VertexPair> parts;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        if (lab[e[i]] == lab[e[j]]) parts.emplace_back(e[i], e[j]);
    if (parts.empty()) {
      s.crossing.push_back(e);
    } else {
      s.non_crossing.push_back(e);
      s.non_crossing_parts.push_back(std::move(parts));
    }
  }
  return s;
}

std::vector<Vertex> non_crossing_part_neighbors(const CrossingSplit& split, Vertex v) {
  std::set<Vertex> out;
  for (const auto& parts : split.non_crossing_parts)
    for (auto [a, b] : parts) {
      if (a == v) out.insert(b);
      if (b == v) out.insert(a);
    }
  return {out.begin(), out.end()};
}

std::uint64_t f_potential(const Hypergraph& g, const VertexPartition& p) {
  require_cover(g, p);
  return f_value(g, p.labels());
}

MoveGain vertex_move_gain(const Hypergraph& g, const VertexPartition& p, Vertex v, std::size_t to) {
  require_cover(g, p);
  if (v < 0 || v >= g.n()) throw InvalidParameters("vertex out of range");
  if (to >= p.block_count()) throw InvalidParameters("target block out of range");
  const auto& lab = p.labels();
  const int from = lab[v];
  MoveGain mg;
  if (from == static_cast<int>(to)) return mg;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    int in_from = 0;
    bool meets_to = false;
    for (Vertex u : e) {
      in_from += lab[u] == from;
      meets_to = meets_to || lab[u] == static_cast<int>(to);
    }
    if (in_from == 1 && meets_to) ++mg.e_prime;
    if (in_from >= 2 && !meets_to) ++mg.e_double_prime;
  }
  mg.delta = static_cast<std::int64_t>(mg.e_double_prime) - static_cast<std::int64_t>(mg.e_prime);
  return mg;
}

PotentialResult f_maximize(const Hypergraph& g, int k, SearchMode mode, std::uint64_t seed,
                           const std::optional<VertexPartition>& start, const OracleOptions& opts) {
  if (k < 1) throw InvalidParameters("block count must be at least 1");
  if (k > 64) throw InvalidParameters("at most 64 blocks are supported");
  if (mode == SearchMode::automatic) mode = g.n() <= 10 ? SearchMode::exact : SearchMode::hillclimb;
  PotentialResult res;
  if (mode == SearchMode::exact) {
    std::vector<int> best_labels;
    std::uint64_t best = 0;
    bool have = false;
    PartitionStream stream(g.n(), k);
    while (auto part = stream.next()) {
      if (++res.nodes > opts.node_budget)
        throw BudgetExceeded("exact potential maximization exceeded its node budget", opts.node_budget);
      std::uint64_t f = f_value(g, part->labels());
      if (!have || f > best) {
        have = true;
        best = f;
        best_labels = part->labels();
      }
    }
    res.value = best;
    res.partition = VertexPartition::from_labels(best_labels, k);
    res.certified = true;
    return res;
  }

  std::vector<int> labels(static_cast<std::size_t>(g.n()), 0);
  if (start) {
    require_cover(g, *start);
    if (static_cast<int>(start->block_count()) != k) throw InvalidParameters("start partition has the wrong block count");
    labels = start->labels();
  } else {
    std::mt19937_64 rng(seed);
    for (auto& l : labels) l = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
  }
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (Vertex v : g.edge(i)) incident[v].push_back(i);
  while (true) {
    std::int64_t best_delta = 0;
    int best_v = -1, best_to = -1;
    for (int v = 0; v < g.n(); ++v) {
      const int from = labels[v];
      for (int to = 0; to < k; ++to) {
        if (to == from) continue;
        ++res.nodes;
        std::int64_t delta = 0;
        for (std::size_t i : incident[v]) {
          int in_from = 0;
          bool meets_to = false;
          for (Vertex u : g.edge(i)) {
            in_from += labels[u] == from;
            meets_to = meets_to || labels[u] == to;
          }
          if (in_from == 1 && meets_to) --delta;
          if (in_from >= 2 && !meets_to) ++delta;
        }
        if (delta > best_delta) {
          best_delta = delta;
          best_v = v;
          best_to = to;
        }
      }
    }
    if (best_v < 0) break;
    labels[best_v] = best_to;
    ++res.moves;
  }
  res.value = f_value(g, labels);
  res.partition = VertexPartition::from_labels(labels, k);
  res.certified = false;
  return res;
}

std::uint64_t distance_to_partition_turan(const Hypergraph& g, const VertexPartition& p) {
  require_cover(g, p);
  std::vector<int> sizes;
  for (const auto& b : p.blocks()) sizes.push_back(static_cast<int>(b.size()));
  std::uint64_t t = elementary_symmetric(sizes, g.r());
  std::uint64_t cross = crossing_count(g, p.labels());
  return g.size() + t - 2 * cross;
}

ClosenessResult closeness_to_turan(const Hypergraph& g, int p, SearchMode mode, const OracleOptions& opts,
                                   int exact_vertex_limit) {
  if (p < 2) throw InvalidParameters("p must be at least 2");
  const int k = p - 1;
  if (k > 64) throw InvalidParameters("at most 64 blocks are supported");
  const int n = g.n();
  if (mode == SearchMode::automatic) mode = n <= exact_vertex_limit ? SearchMode::exact : SearchMode::hillclimb;
  const auto sizes = balanced_block_sizes(n, k);
  const int q = n / k;
  const int big_blocks = n % k;
  const std::uint64_t t = elementary_symmetric(sizes, g.r());
  auto distance_for = [&](std::uint64_t cross) { return g.size() + t - 2 * cross; };

  ClosenessResult res;
  if (mode == SearchMode::exact) {
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> fill(static_cast<std::size_t>(k), 0);
    std::vector<int> best_labels;
    std::uint64_t best_cross = 0;
    bool have = false;
    int full_big = 0;  // blocks that reached q + 1
    auto dfs = [&](auto&& self, int v, int used) -> void {
      if (v == n) {
        // sizes must be exactly the balanced multiset
        int empties = k - used;
        if (q > 0 && empties > 0) return;
        if (full_big != big_blocks) return;
        std::uint64_t cross = crossing_count(g, labels);
        if (!have || cross > best_cross) {
          have = true;
          best_cross = cross;
          best_labels = labels;
        }
        return;
      }
      int limit = std::min(used + 1, k);
      for (int b = 0; b < limit; ++b) {
        if (++res.nodes > opts.node_budget)
          throw BudgetExceeded("exact closeness search exceeded its node budget", opts.node_budget);
        int cap = full_big < big_blocks ? q + 1 : q;
        if (fill[b] + 1 > cap) continue;
        // remaining vertices must be able to bring every open block up to q
        ++fill[b];
        bool became_big = fill[b] == q + 1;
        if (became_big) ++full_big;
        int deficit = 0;
        for (int j = 0; j < std::max(used, b + 1); ++j) deficit += std::max(0, q - fill[j]);
        deficit += q * (k - std::max(used, b + 1));
        if (deficit <= n - v - 1) {
          labels[v] = b;
          self(self, v + 1, std::max(used, b + 1));
        }
        if (became_big) --full_big;
        --fill[b];
      }
    };
    dfs(dfs, 0, 0);
    res.distance = distance_for(best_cross);
    res.witness = VertexPartition::from_labels(best_labels, k);
    res.certified = true;
    return res;
  }

  VertexPartition start = balanced_partition(n, k);
  std::vector<int> labels = start.labels();
  std::uint64_t cross = crossing_count(g, labels);
  while (true) {
    std::uint64_t best = cross;
    int bu = -1, bv = -1;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (labels[u] == labels[v]) continue;
        ++res.nodes;
        std::swap(labels[u], labels[v]);
        std::uint64_t c = crossing_count(g, labels);
        std::swap(labels[u], labels[v]);
        if (c > best) {
          best = c;
          bu = u;
          bv = v;
        }
      }
    if (bu < 0) break;
    std::swap(labels[bu], labels[bv]);
    cross = best;
  }
  res.distance = distance_for(cross);
  res.witness = VertexPartition::from_labels(labels, k);
  res.certified = false;
  return res;
}

}  // namespace rbx
