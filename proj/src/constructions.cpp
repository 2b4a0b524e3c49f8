#include "rbx/constructions.hpp"

#include <string>

#include "rbx/combinatorics.hpp"
#include "rbx/errors.hpp"

namespace rbx {

namespace {

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (auto [k, v] : kv) s += std::string(s.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  return s;
}

}  // namespace

int expansion_order(const Hypergraph& f, int r) {
  return f.n() + (r - 2) * static_cast<int>(f.size());
}

ExpansionResult expansion(const Hypergraph& f, int r) {
  if (f.r() != 2) throw WrongUniformity("expansion needs a 2-graph skeleton");
  if (r < 2) throw InvalidParameters("expansion needs r >= 2");
  ExpansionResult res;
  res.skeleton_vertices.resize(static_cast<std::size_t>(f.n()));
  for (int v = 0; v < f.n(); ++v) res.skeleton_vertices[v] = v;
  std::vector<Edge> edges;
  edges.reserve(f.size());
  Vertex next = f.n();
  for (const auto& e : f.edges()) {
    Edge x = e;
    for (int j = 0; j < r - 2; ++j) x.push_back(next++);
    edges.push_back(std::move(x));
  }
  res.hypergraph = Hypergraph(next, r, std::move(edges));
  // skeleton pairs are distinct and lead every expanded edge, so the sorted
  // order of expanded edges is the skeleton edge order
  res.edge_provenance.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) res.edge_provenance[i] = i;
  return res;
}

std::vector<int> balanced_block_sizes(int n, int blocks) {
  if (blocks < 1 || n < 0) throw InvalidParameters("balanced partition needs blocks >= 1 and n >= 0");
  int q = n / blocks;
  int s = n % blocks;
  std::vector<int> sizes(static_cast<std::size_t>(blocks), q);
  for (int i = blocks - s; i < blocks; ++i) ++sizes[i];
  return sizes;
}

VertexPartition balanced_partition(int n, int blocks) {
  auto sizes = balanced_block_sizes(n, blocks);
  std::vector<std::vector<Vertex>> out(sizes.size());
  Vertex v = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (int j = 0; j < sizes[i]; ++j) out[i].push_back(v++);
  return VertexPartition(std::move(out));
}

bool is_crossing(std::span<const Vertex> e, const VertexPartition& p) {
  std::uint64_t seen = 0;
  const auto& lab = p.labels();
  for (Vertex v : e) {
    std::uint64_t bit = std::uint64_t{1} << lab[v];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

std::uint64_t turan_count(int n, int p, int r) {
  if (p < 2) throw InvalidParameters("Turán construction needs p >= 2");
  if (r < 1) throw InvalidParameters("Turán construction needs r >= 1");
  auto sizes = balanced_block_sizes(n, p - 1);
  return elementary_symmetric(sizes, r);
}

TuranResult turan_hypergraph(int n, int p, int r) {
  if (p < 2) throw InvalidParameters("Turán construction needs p >= 2");
  if (r < 1) throw InvalidParameters("Turán construction needs r >= 1");
  if (p - 1 > 64) throw InvalidParameters("at most 64 blocks are supported");
  TuranResult res;
  res.partition = balanced_partition(n, p - 1);
  std::vector<Edge> edges;
  for_each_combination(n, r, [&](std::span<const int> c) {
    if (is_crossing(c, res.partition)) edges.emplace_back(c.begin(), c.end());
    return true;
  });
  res.count = edges.size();
  if (res.count != turan_count(n, p, r))
    throw Error("internal: Turán enumeration disagrees with the block-size formula");
  res.hypergraph = Hypergraph(n, r, std::move(edges));
  return res;
}

EdgeColoring trivial_lower_bound_coloring(int n, int r, const Hypergraph& f, const Hypergraph& extremal) {
  if (f.r() != 2) throw WrongUniformity("the forbidden skeleton must be a 2-graph");
  if (extremal.n() != n || extremal.r() != r)
    throw InvalidParameters("extremal graph must live on K_" + std::to_string(n) + "^" + std::to_string(r));
  Hypergraph host = complete_hypergraph(n, r);
  const int shared = static_cast<int>(extremal.size());
  std::vector<int> colors(host.size(), shared);
  for (std::size_t i = 0; i < extremal.size(); ++i) colors[*host.index_of(extremal.edge(i))] = static_cast<int>(i);
  return EdgeColoring(std::move(host), std::move(colors));
}

EdgeColoring lower_bound_coloring_r3(int n, int p, int l) {
  if (p < 4 || l < 2 || l > p || n < p - 1)
    throw InvalidParameters("r=3 construction needs p >= 4, 2 <= l <= p, n >= p-1 (" +
                            params({{"n", n}, {"p", p}, {"l", l}}) + ")");
  const VertexPartition part = balanced_partition(n, p - 1);
  const auto& lab = part.labels();
  const int classes = l - 2;
  for (int i = 0; i < classes; ++i)
    if (part.blocks()[i].size() < 2)
      throw DegenerateConstruction("block " + std::to_string(i) + " has fewer than 2 vertices, class " +
                                   std::to_string(i) + " would be empty (" + params({{"n", n}, {"p", p}, {"l", l}}) + ")");
  Hypergraph host = complete_hypergraph(n, 3);
  const auto t = static_cast<int>(turan_count(n, p, 3));
  std::vector<int> colors(host.size());
  int next_turan = 0;
  std::size_t rest = 0;
  for (std::size_t idx = 0; idx < host.size(); ++idx) {
    const Edge& e = host.edge(idx);
    if (is_crossing(e, part)) {
      colors[idx] = next_turan++;
      continue;
    }
    // smallest block (below l-2) holding two vertices of e, if any
    int cls = -1;
    for (int i = 0; i < classes && cls < 0; ++i) {
      int inside = 0;
      for (Vertex v : e) inside += lab[v] == i;
      if (inside >= 2) cls = i;
    }
    if (cls >= 0) {
      colors[idx] = t + cls;
    } else {
      colors[idx] = t + classes;
      ++rest;
    }
  }
  if (rest == 0)
    throw DegenerateConstruction("no edge is left for the final color (" + params({{"n", n}, {"p", p}, {"l", l}}) + ")");
  return EdgeColoring(std::move(host), std::move(colors));
}

EdgeColoring lower_bound_coloring_general(int n, int p, int r) {
  if (r < 4 || p <= r || n < p - 1)
    throw InvalidParameters("general construction needs p > r >= 4 and n >= p-1 (" +
                            params({{"n", n}, {"p", p}, {"r", r}}) + ")");
  const VertexPartition part = balanced_partition(n, p - 1);
  Hypergraph host = complete_hypergraph(n, r);
  const auto t = static_cast<int>(turan_count(n, p, r));
  std::vector<int> colors(host.size(), t);
  int next_turan = 0;
  for (std::size_t idx = 0; idx < host.size(); ++idx)
    if (is_crossing(host.edge(idx), part)) colors[idx] = next_turan++;
  if (static_cast<std::size_t>(t) == host.size())
    throw DegenerateConstruction("every r-set crosses the partition, no edge is left for the extra color (" +
                                 params({{"n", n}, {"p", p}, {"r", r}}) + ")");
  return EdgeColoring(std::move(host), std::move(colors));
}

}  // namespace rbx
