#include "rbx/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "rbx/errors.hpp"

namespace rbx {

namespace {

class Colorer {
 public:
  explicit Colorer(const Hypergraph& f) : n_(f.n()) {
    if (f.r() != 2) throw WrongUniformity("chromatic number is defined here for 2-graphs only");
    if (n_ > 64) throw InvalidParameters("chromatic number supports at most 64 vertices");
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& e : f.edges()) {
      adj_[e[0]] |= std::uint64_t{1} << e[1];
      adj_[e[1]] |= std::uint64_t{1} << e[0];
    }
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return std::popcount(adj_[a]) > std::popcount(adj_[b]); });
  }

  std::optional<std::vector<int>> color(int k) {
    if (n_ == 0) return std::vector<int>{};
    if (k <= 0) return std::nullopt;
    k_ = k;
    classes_.assign(static_cast<std::size_t>(k), 0);
    assignment_.assign(static_cast<std::size_t>(n_), -1);
    if (!dfs(0, 0)) return std::nullopt;
    return assignment_;
  }

  int chromatic() {
    if (n_ == 0) return 0;
    for (int k = 1;; ++k)
      if (color(k)) return k;
  }

 private:
  bool dfs(int i, int used) {
    if (i == n_) return true;
    int v = order_[i];
    // first vertex gets color 0; new colors are opened one at a time
    int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c] & adj_[v]) continue;
      classes_[c] |= std::uint64_t{1} << v;
      assignment_[v] = c;
      if (dfs(i + 1, std::max(used, c + 1))) return true;
      classes_[c] &= ~(std::uint64_t{1} << v);
    }
    assignment_[v] = -1;
    return false;
  }

  int n_;
  int k_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> order_;
  std::vector<std::uint64_t> classes_;
  std::vector<int> assignment_;
};

Hypergraph without(const Hypergraph& f, std::initializer_list<std::size_t> drop) {
  std::vector<Edge> kept;
  kept.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) kept.push_back(f.edge(i));
  return Hypergraph(f.n(), f.r(), std::move(kept));
}

}  // namespace

int chromatic_number(const Hypergraph& f) { return Colorer(f).chromatic(); }

std::optional<std::vector<int>> k_coloring(const Hypergraph& f, int k) { return Colorer(f).color(k); }

EdgeCriticality is_edge_critical(const Hypergraph& f) {
  if (f.r() != 2) throw WrongUniformity("edge criticality is defined for 2-graphs");
  if (f.empty()) throw NotApplicable("edge criticality needs at least one edge");
  int chi = chromatic_number(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    // removing one edge lowers chi by at most one
    if (!k_coloring(without(f, {i}), chi - 1)) continue;
    return {true, f.edge(i)};
  }
  return {false, std::nullopt};
}

CriticalityReport doubly_critical_report(const Hypergraph& f, int p) {
  if (f.r() != 2) throw WrongUniformity("doubly edge-critical test needs a 2-graph");
  if (p < 2) throw InvalidParameters("p must be at least 2");
  CriticalityReport rep;
  rep.p = p;
  rep.chi = chromatic_number(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (k_coloring(without(f, {i}), p - 1)) {
      rep.failing_edge = f.edge(i);
      return rep;
    }
  }
  for (std::size_t i = 0; i < f.size() && !rep.witness_pair; ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      // chi(F - ei) >= p already, so chi(F - ei - ej) >= p - 1
      if (k_coloring(without(f, {i, j}), p - 1)) {
        rep.witness_pair = std::make_pair(f.edge(i), f.edge(j));
        break;
      }
    }
  }
  rep.is_doubly_p_critical = rep.witness_pair.has_value();
  return rep;
}

}  // namespace rbx
