#include "rbx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "rbx/canonical.hpp"
#include "rbx/combinatorics.hpp"
#include "rbx/constructions.hpp"
#include "rbx/errors.hpp"

namespace rbx {

namespace {

std::string graph_tag(const Hypergraph& f) {
  return std::to_string(f.n()) + "v" + std::to_string(f.size()) + "e";
}

void add_check(VerificationReport& rep, std::string name, bool pass, std::string detail) {
  if (!pass) rep.reasons.push_back(name + ": " + detail);
  rep.checks.push_back({std::move(name), pass, std::move(detail)});
}

void finish(VerificationReport& rep) {
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.pass; });
}

Hypergraph without_edge(const Hypergraph& f, std::size_t i) {
  std::vector<Edge> d{f.edge(i)};
  return remove_edges(f, d);
}

Hypergraph expanded(const Hypergraph& f, int r) { return r == 2 ? f : expansion(f, r).hypergraph; }

}  // namespace

VerificationReport verify_lower_bound(int n, int p, int r, int ell, const Hypergraph& f, const VerifyOptions& opts) {
  if (f.r() != 2) throw WrongUniformity("skeleton must be a 2-graph");
  if (r < 3) throw InvalidParameters("lower-bound constructions need r >= 3");
  VerificationReport rep;
  rep.n = n;
  rep.r = r;
  rep.p = p;
  rep.skeleton = f;
  if (r == 3) rep.ell = ell;
  std::ostringstream id;
  id << "lower-bound:n" << n << ":p" << p << ":r" << r;
  if (r == 3) id << ":l" << ell;
  id << ":F" << graph_tag(f);
  rep.scenario = id.str();

  auto crit = doubly_critical_report(f, p);
  if (!crit.is_doubly_p_critical)
    throw PreconditionFailed("F is not doubly edge-" + std::to_string(p) + "-critical (chi = " + std::to_string(crit.chi) +
                             ")");
  EdgeColoring coloring = [&] {
    if (r == 3) {
      auto cls = class_of(f, p);
      if (cls.ell != ell)
        throw PreconditionFailed("class_of(F," + std::to_string(p) + ") = " + std::to_string(cls.ell) +
                                 " != " + std::to_string(ell));
      return lower_bound_coloring_r3(n, p, ell);
    }
    if (p <= r) throw PreconditionFailed("the r >= 4 construction needs p > r");
    return lower_bound_coloring_general(n, p, r);
  }();

  const std::uint64_t t = turan_count(n, p, r);
  rep.expected_colors = r == 3 ? t + static_cast<std::uint64_t>(ell) - 1 : t + 1;
  rep.observed_colors = static_cast<std::uint64_t>(coloring.color_count());
  add_check(rep, "color-count", rep.expected_colors == rep.observed_colors,
            std::to_string(*rep.observed_colors) + " colors, expected " + std::to_string(*rep.expected_colors));

  Hypergraph pattern = expansion(f, r).hypergraph;
  auto found = find_rainbow_copy(coloring, pattern, opts.search);
  rep.rainbow_found = found.copy.has_value();
  rep.rainbow_nodes = found.nodes;
  add_check(rep, "rainbow-free", !found.copy,
            found.copy ? "rainbow copy found" : "no rainbow copy in " + std::to_string(found.nodes) + " nodes");

  if (!found.copy && opts.collection_sweep) {
    const std::uint64_t bound = binomial(n, 2);
    bool ok = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto col = maximal_disjoint_rainbow_collection(coloring, expansion(without_edge(f, i), r).hypergraph, opts.search);
      rep.collections.push_back({f.edge(i), col.copies.size(), bound, col.nodes});
      ok = ok && col.copies.size() <= bound;
    }
    add_check(rep, "collection-bound", ok, std::to_string(rep.collections.size()) + " edges checked against " +
                                               std::to_string(bound));
  }

  if (opts.observational_samples > 0) {
    Observation obs;
    obs.colors = *rep.observed_colors + 1;
    obs.seed = opts.seed;
    std::vector<int> class_size(static_cast<std::size_t>(coloring.color_count()), 0);
    for (int c : coloring.colors()) ++class_size[c];
    std::vector<std::size_t> movable;
    for (std::size_t i = 0; i < coloring.colors().size(); ++i)
      if (class_size[coloring.color(i)] >= 2) movable.push_back(i);
    std::mt19937_64 rng(opts.seed);
    for (int s = 0; s < opts.observational_samples && !movable.empty(); ++s) {
      std::vector<int> colors(coloring.colors().begin(), coloring.colors().end());
      colors[movable[rng() % movable.size()]] = coloring.color_count();
      auto res = find_rainbow_copy(EdgeColoring(coloring.host(), colors), pattern, opts.search);
      ++obs.samples;
      obs.forced_rainbow += res.copy.has_value();
    }
    rep.observational = obs;
  }
  finish(rep);
  return rep;
}

VerificationReport verify_small_case(int n, int r, const Hypergraph& f, const VerifyOptions& opts) {
  if (f.r() != 2) throw WrongUniformity("skeleton must be a 2-graph");
  if (f.empty()) throw InvalidParameters("skeleton needs at least one edge");
  VerificationReport rep;
  rep.n = n;
  rep.r = r;
  rep.skeleton = f;
  rep.scenario = "small-case:n" + std::to_string(n) + ":r" + std::to_string(r) + ":F" + graph_tag(f);

  auto ar = ar_bruteforce(n, r, f, opts.oracle);
  std::vector<Hypergraph> family;
  for (std::size_t i = 0; i < f.size(); ++i) family.push_back(expanded(without_edge(f, i), r));
  // F - e with no edges (F a single edge) sits in every graph: ex is 0 there
  bool trivial_family = std::any_of(family.begin(), family.end(), [](const Hypergraph& h) { return h.empty(); });
  TuranOracleResult ex;
  if (trivial_family) {
    ex.witness = Hypergraph(n, r, {});
  } else {
    ex = ex_bruteforce(n, r, family, opts.oracle);
  }
  rep.ar = ar.value;
  rep.ex = ex.value;
  add_check(rep, "trivial-bound", ar.value >= ex.value + 2,
            "ar " + std::to_string(ar.value) + " vs ex + 2 = " + std::to_string(ex.value + 2));

  Hypergraph pattern = expanded(f, r);
  auto trivial = trivial_lower_bound_coloring(n, r, f, ex.witness);
  rep.observed_colors = static_cast<std::uint64_t>(trivial.color_count());
  auto found = find_rainbow_copy(trivial, pattern, opts.search);
  rep.rainbow_found = found.copy.has_value();
  rep.rainbow_nodes = found.nodes;
  add_check(rep, "trivial-coloring-rainbow-free", !found.copy,
            std::to_string(trivial.color_count()) + " colors, " + (found.copy ? "rainbow copy found" : "none"));

  if (ar.witness) {
    auto again = find_rainbow_copy(*ar.witness, pattern, opts.search);
    bool ok = !again.copy && static_cast<std::uint64_t>(ar.witness->color_count()) + 1 == ar.value;
    add_check(rep, "optimal-coloring-rainbow-free", ok,
              std::to_string(ar.witness->color_count()) + " colors, " + (again.copy ? "rainbow copy found" : "none"));
  }
  finish(rep);
  return rep;
}

ScanResult scan_doubly_critical(int max_vertices, int p, int threads) {
  if (p < 2) throw InvalidParameters("p must be at least 2");
  if (max_vertices > kGenerationMaxVertices)
    throw BudgetExceeded("scan covers at most " + std::to_string(kGenerationMaxVertices) + " vertices",
                         static_cast<std::uint64_t>(kGenerationMaxVertices));
  ScanResult out;
  out.max_vertices = max_vertices;
  out.p = p;
  for (int n = 1; n <= max_vertices; ++n) {
    auto graphs = nonisomorphic_graphs(n, threads);
    std::vector<Hypergraph> candidates;
    for (auto& g : graphs) {
      auto deg = g.degrees();
      if (std::find(deg.begin(), deg.end(), 0) != deg.end()) continue;
      ++out.graphs_examined;
      // chi(F - e1 - e2) = p - 1 caps both the edge count and chi(F)
      if (g.size() < 2 || g.size() > turan_count(n, p, 2) + 2) continue;
      candidates.push_back(std::move(g));
    }
    std::vector<std::optional<CorpusEntry>> entries(candidates.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= candidates.size()) return;
        const auto& g = candidates[i];
        int chi = chromatic_number(g);
        if (chi < p || chi > p + 1) continue;
        auto rep = doubly_critical_report(g, p);
        if (!rep.is_doubly_p_critical) continue;
        CorpusEntry e{g, rep, class_of(g, p), std::nullopt};
        if (e.cls.ell >= 3) e.config_witness = config_witness(g, p);
        entries[i] = std::move(e);
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto& e : entries) {
      if (!e) continue;
      if (e->cls.ell >= 3) {
        ++out.class_ge3_tested;
        bool ok = false;
        if (e->config_witness) {
          auto canon = index_vector(e->graph, *e->config_witness).canonical();
          std::vector<std::size_t> want(static_cast<std::size_t>(p - 1), 0);
          want[0] = 2;
          ok = canon == want;
        }
        out.class_ge3_failed += !ok;
      }
      out.corpus.push_back(std::move(*e));
    }
  }
  return out;
}

std::string report_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << std::left << std::setw(40) << "scenario" << std::right << std::setw(4) << "n" << std::setw(4) << "r"
     << std::setw(4) << "p" << std::setw(4) << "l" << std::setw(10) << "expected" << std::setw(10) << "observed"
     << std::setw(6) << "ar" << std::setw(6) << "ex" << std::setw(9) << "rainbow" << std::setw(6) << "pass" << '\n';
  for (const auto& r : reports) {
    os << std::left << std::setw(40) << r.scenario << std::right << std::setw(4) << r.n << std::setw(4) << r.r
       << std::setw(4) << (r.p ? std::to_string(r.p) : "-") << std::setw(4) << opt(r.ell) << std::setw(10)
       << opt(r.expected_colors) << std::setw(10) << opt(r.observed_colors) << std::setw(6) << opt(r.ar)
       << std::setw(6) << opt(r.ex) << std::setw(9)
       << (r.rainbow_found ? (*r.rainbow_found ? "found" : "none") : "-") << std::setw(6) << (r.pass ? "yes" : "no")
       << '\n';
  }
  return os.str();
}

}  // namespace rbx
