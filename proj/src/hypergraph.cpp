#include "rbx/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rbx/combinatorics.hpp"
#include "rbx/errors.hpp"

namespace rbx {

namespace {

std::string edge_string(std::span<const Vertex> e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

}  // namespace

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
  if (n < 0) throw InvalidParameters("vertex count must be nonnegative");
  if (r < 0) throw InvalidParameters("uniformity must be nonnegative");
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r)
      throw InvalidParameters("edge " + edge_string(e) + " does not have " + std::to_string(r) + " vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InvalidParameters("edge " + edge_string(e) + " repeats a vertex");
    if (!e.empty() && (e.front() < 0 || e.back() >= n))
      throw InvalidParameters("edge " + edge_string(e) + " leaves [0, " + std::to_string(n) + ")");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InvalidParameters("duplicate edge " + edge_string(*dup));
}

std::optional<std::size_t> Hypergraph::index_of(std::span<const Vertex> e) const {
  Edge key(e.begin(), e.end());
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++deg[v];
  return deg;
}

Hypergraph Hypergraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidParameters("relabeling has wrong length");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(map_edge(perm, e));
  return Hypergraph(n_, r_, std::move(out));
}

Hypergraph complete_hypergraph(int n, int r) {
  if (n < 0 || r < 0 || r > n)
    throw InvalidParameters("complete hypergraph needs 0 <= r <= n (got n=" + std::to_string(n) +
                            ", r=" + std::to_string(r) + ")");
  std::vector<Edge> edges;
  edges.reserve(binomial(n, r));
  for_each_combination(n, r, [&](std::span<const int> c) {
    edges.emplace_back(c.begin(), c.end());
    return true;
  });
  return Hypergraph(n, r, std::move(edges));
}

std::size_t codegree(const Hypergraph& g, std::span<const Vertex> u) {
  for (Vertex v : u)
    if (v < 0 || v >= g.n()) throw InvalidParameters("vertex " + std::to_string(v) + " out of range");
  Edge key(u.begin(), u.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  std::size_t count = 0;
  for (const auto& e : g.edges())
    if (std::includes(e.begin(), e.end(), key.begin(), key.end())) ++count;
  return count;
}

Hypergraph remove_edges(const Hypergraph& g, std::span<const Edge> removed) {
  std::vector<bool> drop(g.size(), false);
  for (const auto& e : removed) {
    auto idx = g.index_of(e);
    if (!idx) throw NotPresent("edge " + edge_string(e) + " is not in the hypergraph");
    drop[*idx] = true;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!drop[i]) kept.push_back(g.edge(i));
  return Hypergraph(g.n(), g.r(), std::move(kept));
}

Hypergraph add_edges(const Hypergraph& g, std::span<const Edge> added) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), added.begin(), added.end());
  return Hypergraph(g.n(), g.r(), std::move(edges));
}

EdgeColoring::EdgeColoring(Hypergraph host, std::vector<int> colors)
    : host_(std::move(host)), colors_(std::move(colors)) {
  if (colors_.size() != host_.size())
    throw InvalidParameters("coloring has " + std::to_string(colors_.size()) + " colors for " +
                            std::to_string(host_.size()) + " edges");
  std::map<int, int> rank;
  for (int c : colors_) {
    if (c < 0) throw InvalidParameters("color ids must be nonnegative");
    rank.emplace(c, 0);
  }
  int next = 0;
  for (auto& [id, r] : rank) r = next++;
  for (int& c : colors_) c = rank[c];
  color_count_ = next;
}

std::optional<int> EdgeColoring::color_of(std::span<const Vertex> e) const {
  auto idx = host_.index_of(e);
  if (!idx) return std::nullopt;
  return colors_[*idx];
}

std::vector<std::size_t> EdgeColoring::class_representatives() const {
  std::vector<std::size_t> rep(static_cast<std::size_t>(color_count_), host_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (rep[colors_[i]] == host_.size()) rep[colors_[i]] = i;
  return rep;
}

Edge map_edge(std::span<const Vertex> map, std::span<const Vertex> e) {
  Edge out;
  out.reserve(e.size());
  for (Vertex v : e) out.push_back(map[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_embedding(const EmbeddingMap& m, const Hypergraph& pattern, const Hypergraph& host) {
  if (static_cast<int>(m.pattern_to_host.size()) != pattern.n()) return false;
  if (m.matched_edges.size() != pattern.size()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(host.n()), false);
  for (Vertex v : m.pattern_to_host) {
    if (v < 0 || v >= host.n() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (map_edge(m.pattern_to_host, pattern.edge(i)) != m.matched_edges[i]) return false;
    if (!host.contains(m.matched_edges[i])) return false;
  }
  return true;
}

}  // namespace rbx
