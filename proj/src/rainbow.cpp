#include "rbx/rainbow.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "ordered_branches.hpp"
#include "rbx/combinatorics.hpp"
#include "rbx/constructions.hpp"
#include "rbx/errors.hpp"

namespace rbx {

namespace {

constexpr int kLookahead = 2;
constexpr std::uint64_t kDenseTableLimit = std::uint64_t{1} << 24;

std::string pair_string(VertexPair p) { return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}"; }

std::string edge_string(std::span<const Vertex> e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "}";
}

/// Host edge (as a vertex bitmask) -> color, or -1 when absent.
class EdgeColorTable {
 public:
  EdgeColorTable(const Hypergraph& host, std::span<const int> colors) : binom_(std::max(host.r(), 1)) {
    std::uint64_t slots = binom_.at(host.n(), host.r());
    dense_ = slots <= kDenseTableLimit;
    if (dense_) dense_table_.assign(static_cast<std::size_t>(slots), -1);
    for (std::size_t i = 0; i < host.size(); ++i) {
      std::uint64_t m = vertex_mask(host.edge(i));
      if (dense_)
        dense_table_[binom_.colex_rank(m)] = colors[i];
      else
        sparse_.emplace(m, colors[i]);
    }
  }

  int lookup(std::uint64_t mask) const {
    if (dense_) return dense_table_[binom_.colex_rank(mask)];
    auto it = sparse_.find(mask);
    return it == sparse_.end() ? -1 : it->second;
  }

 private:
  BinomialTable binom_;
  bool dense_ = true;
  std::vector<int> dense_table_;
  std::unordered_map<std::uint64_t, int> sparse_;
};

struct PendingEdge {
  int edge;
  int unmapped;
};

/// Backtracking matcher. Pattern vertices are placed in a fixed order; an
/// edge is checked for presence and color reuse when its last vertex is
/// placed, and edges with at most kLookahead unplaced vertices are checked
/// ahead for an available unused color (two such edges forced onto the same
/// single color also prune).
class RainbowMatcher {
 public:
  RainbowMatcher(const Hypergraph& host, std::span<const int> colors, const Hypergraph& pattern)
      : host_(host), colors_(colors), pattern_(pattern), table_(host, colors) {
    hn_ = host.n();
    pn_ = pattern.n();
    r_ = host.r();
    max_color_ = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    host_degree_ = host.degrees();
    pattern_degree_ = pattern.degrees();
    build_order();
  }

  int pattern_order() const { return pn_; }
  int root_count() const { return hn_; }

  detail::BranchOutcome<RainbowCopy> run_branch(int root, std::uint64_t budget, const std::atomic<int>& cutoff) const {
    State st;
    st.map.assign(static_cast<std::size_t>(pn_), -1);
    st.color_uses.assign(static_cast<std::size_t>(max_color_) + 1, 0);
    st.budget = budget;
    st.cutoff = &cutoff;
    st.branch = root;
    detail::BranchOutcome<RainbowCopy> out;
    try {
      if (try_place(st, 0, root) && dfs(st, 1)) out.found = assemble(st);
    } catch (const OverBudget&) {
      out.over_budget = true;
    } catch (const Cancelled&) {
    }
    out.nodes = st.nodes;
    return out;
  }

 private:
  struct OverBudget {};
  struct Cancelled {};

  struct State {
    std::vector<int> map;
    std::uint64_t used = 0;
    std::vector<int> color_uses;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    const std::atomic<int>* cutoff = nullptr;
    int branch = 0;
    std::vector<int> forced;
  };

  void build_order() {
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(pn_));
    for (std::size_t i = 0; i < pattern_.size(); ++i)
      for (Vertex v : pattern_.edge(i)) incident[v].push_back(static_cast<int>(i));
    std::vector<char> placed(static_cast<std::size_t>(pn_), 0);
    std::vector<int> touched_edges(pattern_.size(), 0);  // placed vertices per edge
    for (int step = 0; step < pn_; ++step) {
      int best = -1;
      std::pair<int, int> best_key{-1, -1};
      for (int v = 0; v < pn_; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int e : incident[v]) links += touched_edges[e] > 0;
        std::pair<int, int> key{links, pattern_degree_[v]};
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int e : incident[best]) ++touched_edges[e];
    }
    pos_.assign(static_cast<std::size_t>(pn_), 0);
    for (int d = 0; d < pn_; ++d) pos_[order_[d]] = d;

    completes_at_.assign(static_cast<std::size_t>(pn_), {});
    pending_at_.assign(static_cast<std::size_t>(pn_), {});
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
      const Edge& e = pattern_.edge(i);
      int last = 0;
      for (Vertex v : e) last = std::max(last, pos_[v]);
      if (!e.empty()) completes_at_[last].push_back(static_cast<int>(i));
      for (int d = 0; d < last; ++d) {
        int mapped = 0;
        for (Vertex v : e) mapped += pos_[v] <= d;
        int unmapped = static_cast<int>(e.size()) - mapped;
        if (mapped > 0 && unmapped <= kLookahead) pending_at_[d].push_back({static_cast<int>(i), unmapped});
      }
    }
  }

  std::uint64_t image_mask(const State& st, const Edge& e) const {
    std::uint64_t m = 0;
    for (Vertex v : e)
      if (st.map[v] >= 0) m |= std::uint64_t{1} << st.map[v];
    return m;
  }

  bool try_place(State& st, int depth, int hv) const {
    int pv = order_[depth];
    if (st.used >> hv & 1) return false;
    if (host_degree_[hv] < pattern_degree_[pv]) return false;
    if (++st.nodes > st.budget) throw OverBudget{};
    if ((st.nodes & 0xfff) == 0 && st.cutoff->load(std::memory_order_relaxed) < st.branch) throw Cancelled{};
    st.map[pv] = hv;
    st.used |= std::uint64_t{1} << hv;
    std::size_t done = 0;
    bool ok = true;
    for (int e : completes_at_[depth]) {
      int c = table_.lookup(image_mask(st, pattern_.edge(e)));
      if (c < 0 || st.color_uses[c] > 0) {
        ok = false;
        break;
      }
      ++st.color_uses[c];
      ++done;
    }
    if (ok) ok = look_ahead(st, depth);
    if (!ok) {
      for (std::size_t i = 0; i < done; ++i)
        --st.color_uses[table_.lookup(image_mask(st, pattern_.edge(completes_at_[depth][i])))];
      st.map[pv] = -1;
      st.used &= ~(std::uint64_t{1} << hv);
    }
    return ok;
  }

  void unplace(State& st, int depth) const {
    int pv = order_[depth];
    for (int e : completes_at_[depth]) --st.color_uses[table_.lookup(image_mask(st, pattern_.edge(e)))];
    st.used &= ~(std::uint64_t{1} << st.map[pv]);
    st.map[pv] = -1;
  }

  // Available unused colors for one pending edge: 0, 1 (returned in `only`) or 2 meaning "several".
  int available_colors(const State& st, std::uint64_t base, int unmapped, int& only) const {
    const std::uint64_t all = hn_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hn_) - 1;
    const std::uint64_t free = all & ~st.used;
    int found = 0;
    auto consider = [&](std::uint64_t mask) {
      int c = table_.lookup(mask);
      if (c < 0 || st.color_uses[c] > 0) return false;
      if (found == 0) {
        only = c;
        found = 1;
      } else if (c != only) {
        found = 2;
        return true;
      }
      return false;
    };
    if (unmapped == 0) {
      consider(base);
      return found;
    }
    for (std::uint64_t a = free; a; a &= a - 1) {
      std::uint64_t abit = a & -a;
      if (unmapped == 1) {
        if (consider(base | abit)) return found;
        continue;
      }
      for (std::uint64_t b = a & (a - 1); b; b &= b - 1)
        if (consider(base | abit | (b & -b))) return found;
    }
    return found;
  }

  bool look_ahead(State& st, int depth) const {
    st.forced.clear();
    for (const auto& pe : pending_at_[depth]) {
      int only = -1;
      int k = available_colors(st, image_mask(st, pattern_.edge(pe.edge)), pe.unmapped, only);
      if (k == 0) return false;
      if (k == 1) {
        if (std::find(st.forced.begin(), st.forced.end(), only) != st.forced.end()) return false;
        st.forced.push_back(only);
      }
    }
    return true;
  }

  bool dfs(State& st, int depth) const {
    if (depth == pn_) return true;
    for (int hv = 0; hv < hn_; ++hv) {
      if (!try_place(st, depth, hv)) continue;
      if (dfs(st, depth + 1)) return true;
      unplace(st, depth);
    }
    return false;
  }

  RainbowCopy assemble(const State& st) const {
    RainbowCopy copy;
    copy.embedding.pattern_to_host = st.map;
    for (const auto& e : pattern_.edges()) {
      Edge img = map_edge(st.map, e);
      copy.colors.push_back(table_.lookup(vertex_mask(img)));
      copy.embedding.matched_edges.push_back(std::move(img));
    }
    return copy;
  }

  const Hypergraph& host_;
  std::span<const int> colors_;
  const Hypergraph& pattern_;
  EdgeColorTable table_;
  int hn_ = 0;
  int pn_ = 0;
  int r_ = 0;
  int max_color_ = 0;
  std::vector<int> host_degree_;
  std::vector<int> pattern_degree_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<std::vector<int>> completes_at_;
  std::vector<std::vector<PendingEdge>> pending_at_;
};

}  // namespace

RainbowSearchResult find_rainbow_copy(const Hypergraph& host, std::span<const int> colors, const Hypergraph& pattern,
                                      const SearchOptions& opts) {
  if (pattern.r() != host.r())
    throw InvalidParameters("pattern uniformity " + std::to_string(pattern.r()) + " differs from host uniformity " +
                            std::to_string(host.r()));
  if (colors.size() != host.size()) throw InvalidParameters("one color per host edge is required");
  if (host.n() > 64) throw InvalidParameters("rainbow search supports hosts with at most 64 vertices");
  RainbowSearchResult res;
  if (pattern.n() > host.n()) return res;
  if (pattern.n() == 0) {
    res.copy = RainbowCopy{};
    return res;
  }
  RainbowMatcher matcher(host, colors, pattern);
  auto out = detail::search_branches_in_order<RainbowCopy>(
      matcher.root_count(), opts.threads, opts.node_budget, "rainbow search exceeded its node budget",
      [&](int b, std::uint64_t budget, const std::atomic<int>& cutoff) { return matcher.run_branch(b, budget, cutoff); });
  res.copy = std::move(out.found);
  res.nodes = out.nodes;
  return res;
}

RainbowSearchResult find_rainbow_copy(const EdgeColoring& coloring, const Hypergraph& pattern, const SearchOptions& opts) {
  return find_rainbow_copy(coloring.host(), coloring.colors(), pattern, opts);
}

bool is_rainbow_copy(const RainbowCopy& copy, const Hypergraph& host, std::span<const int> colors,
                     const Hypergraph& pattern) {
  if (!is_valid_embedding(copy.embedding, pattern, host)) return false;
  if (copy.colors.size() != pattern.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (colors[*host.index_of(copy.embedding.matched_edges[i])] != copy.colors[i]) return false;
  auto sorted = copy.colors;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::uint64_t big_pair_threshold(int n, int r, const Hypergraph& skeleton) {
  if (r < 3) throw InvalidParameters("big/small pairs are defined for r >= 3");
  if (skeleton.r() != 2) throw WrongUniformity("skeleton must be a 2-graph");
  auto tau = static_cast<std::uint64_t>(expansion_order(skeleton, r));
  return tau * binomial(n, r - 3) + skeleton.size();
}

PairClassification classify_pairs(const Hypergraph& g, const Hypergraph& skeleton) {
  PairClassification pc;
  pc.threshold = big_pair_threshold(g.n(), g.r(), skeleton);
  const auto n = static_cast<std::size_t>(g.n());
  pc.codegrees.assign(n * n, 0);
  for (const auto& e : g.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        ++pc.codegrees[e[i] * n + e[j]];
        ++pc.codegrees[e[j] * n + e[i]];
      }
  pc.small_degree.assign(n, 0);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (pc.codegrees[u * n + v] >= pc.threshold) {
        pc.big_pairs.emplace_back(u, v);
      } else {
        pc.small_pairs.emplace_back(u, v);
        ++pc.small_degree[u];
        ++pc.small_degree[v];
      }
    }
  return pc;
}

std::vector<Vertex> high_small_degree_vertices(const PairClassification& pc, int min_small_degree) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < pc.small_degree.size(); ++v)
    if (pc.small_degree[v] >= min_small_degree) out.push_back(static_cast<Vertex>(v));
  return out;
}

SkeletonExtension extend_skeleton(const EdgeColoring& rainbow_host, const Hypergraph& skeleton,
                                  std::span<const Vertex> skeleton_map, bool require_big_pairs) {
  const Hypergraph& g = rainbow_host.host();
  if (skeleton.r() != 2) throw WrongUniformity("skeleton must be a 2-graph");
  if (g.r() < 3) throw InvalidParameters("skeleton extension needs a host with r >= 3");
  if (static_cast<int>(skeleton_map.size()) != skeleton.n())
    throw InvalidParameters("skeleton map must list one host vertex per skeleton vertex");
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : skeleton_map) {
    if (v < 0 || v >= g.n()) throw InvalidParameters("skeleton map leaves the host vertex set");
    if (seen[v]) throw InvalidParameters("skeleton map is not injective");
    seen[v] = 1;
  }
  // host must be rainbow
  std::vector<std::size_t> first_with(static_cast<std::size_t>(rainbow_host.color_count()), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    int c = rainbow_host.color(i);
    if (first_with[c] != g.size())
      throw PreconditionFailed("host is not rainbow: edges " + edge_string(g.edge(first_with[c])) + " and " +
                               edge_string(g.edge(i)) + " share color " + std::to_string(c));
    first_with[c] = i;
  }
  if (require_big_pairs) {
    const std::uint64_t threshold = big_pair_threshold(g.n(), g.r(), skeleton);
    for (const auto& e : skeleton.edges()) {
      VertexPair hp = std::minmax(skeleton_map[e[0]], skeleton_map[e[1]]);
      std::array<Vertex, 2> pr{hp.first, hp.second};
      auto d = codegree(g, pr);
      if (d < threshold)
        throw PreconditionFailed("pair " + pair_string(hp) + " is small: codegree " + std::to_string(d) + " < " +
                                 std::to_string(threshold));
    }
  }

  const int r = g.r();
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : skeleton_map) used[v] = 1;

  SkeletonExtension out;
  RainbowCopy copy;
  copy.embedding.pattern_to_host.assign(static_cast<std::size_t>(expansion_order(skeleton, r)), -1);
  for (int v = 0; v < skeleton.n(); ++v) copy.embedding.pattern_to_host[v] = skeleton_map[v];
  Vertex next_new = skeleton.n();
  for (const auto& e : skeleton.edges()) {
    Vertex a = skeleton_map[e[0]], b = skeleton_map[e[1]];
    if (a > b) std::swap(a, b);
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < g.size() && !pick; ++i) {
      const Edge& he = g.edge(i);
      if (!std::binary_search(he.begin(), he.end(), a) || !std::binary_search(he.begin(), he.end(), b)) continue;
      bool fresh = true;
      for (Vertex w : he)
        if (w != a && w != b && used[w]) fresh = false;
      if (fresh) pick = i;
    }
    if (!pick) {
      out.failed_pair = VertexPair{a, b};
      return out;
    }
    const Edge& he = g.edge(*pick);
    for (Vertex w : he) {
      if (w == a || w == b) continue;
      used[w] = 1;
      copy.embedding.pattern_to_host[next_new++] = w;
    }
    copy.embedding.matched_edges.push_back(he);
    copy.colors.push_back(rainbow_host.color(*pick));
  }
  out.copy = std::move(copy);
  return out;
}

std::vector<VertexPair> terminal_pairs(const Hypergraph& h, const Hypergraph& f) {
  if (h.r() != 2 || f.r() != 2) throw WrongUniformity("terminal pairs are defined on 2-graph skeletons");
  std::vector<VertexPair> out;
  if (h.n() == f.n() && h.size() + 1 == f.size()) {
    for (const auto& e : f.edges()) {
      std::vector<Edge> drop{e};
      if (remove_edges(f, drop) == h) out.emplace_back(e[0], e[1]);
    }
  }
  if (out.empty()) throw InvalidParameters("H is not F minus one edge");
  return out;
}

VertexPair terminal_pair_in_host(const RainbowCopy& copy, VertexPair terminal) {
  const auto& m = copy.embedding.pattern_to_host;
  if (terminal.first < 0 || terminal.second < 0 || static_cast<std::size_t>(terminal.first) >= m.size() ||
      static_cast<std::size_t>(terminal.second) >= m.size())
    throw InvalidParameters("terminal pair outside the copy's pattern");
  return std::minmax(m[terminal.first], m[terminal.second]);
}

RainbowCollection maximal_disjoint_rainbow_collection(const EdgeColoring& coloring, const Hypergraph& pattern,
                                                      const SearchOptions& opts) {
  if (pattern.r() != coloring.host().r()) throw InvalidParameters("pattern and host uniformity differ");
  RainbowCollection out;
  out.rainbow_subgraph = coloring.class_representatives();
  std::sort(out.rainbow_subgraph.begin(), out.rainbow_subgraph.end());
  std::vector<std::size_t> remaining = out.rainbow_subgraph;
  while (true) {
    std::vector<Edge> edges;
    std::vector<int> colors;
    for (std::size_t i : remaining) {
      edges.push_back(coloring.host().edge(i));
      colors.push_back(coloring.color(i));
    }
    Hypergraph sub(coloring.host().n(), coloring.host().r(), std::move(edges));
    SearchOptions o = opts;
    o.node_budget = opts.node_budget - std::min(opts.node_budget, out.nodes);
    auto res = find_rainbow_copy(sub, colors, pattern, o);
    out.nodes += res.nodes;
    if (!res.copy || pattern.empty()) break;
    std::vector<std::size_t> kept;
    for (std::size_t i : remaining) {
      const Edge& e = coloring.host().edge(i);
      if (std::find(res.copy->embedding.matched_edges.begin(), res.copy->embedding.matched_edges.end(), e) ==
          res.copy->embedding.matched_edges.end())
        kept.push_back(i);
    }
    remaining = std::move(kept);
    out.copies.push_back(std::move(*res.copy));
  }
  return out;
}

}  // namespace rbx
