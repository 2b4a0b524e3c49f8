// Runs the acceptance suite and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../support/brute.hpp"
#include "../support/cli_corpus.hpp"
#include "../support/fixtures.hpp"
#include "rbx/chromatic.hpp"
#include "rbx/combinatorics.hpp"
#include "rbx/constructions.hpp"
#include "rbx/oracles.hpp"
#include "rbx/partition.hpp"
#include "rbx/rainbow.hpp"
#include "rbx/verify.hpp"

using namespace rbx;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::uint64_t crossing_sets(int n, int p, int r) {
  auto sizes = balanced_block_sizes(n, p - 1);
  std::vector<int> block;
  for (int b = 0; b < static_cast<int>(sizes.size()); ++b)
    for (int i = 0; i < sizes[b]; ++i) block.push_back(b);
  std::uint64_t count = 0;
  for (const auto& e : brute::all_rsets(n, r)) {
    std::set<int> seen;
    for (int v : e) seen.insert(block[v]);
    count += seen.size() == e.size();
  }
  return count;
}

struct GridCase {
  int n, p, r;
};

std::vector<GridCase> turan_grid(int max_n) {
  std::vector<GridCase> out;
  for (int p = 3; p <= 6; ++p)
    for (int r = 2; r < p; ++r)
      for (int n = 0; n <= max_n; ++n) out.push_back({n, p, r});
  return out;
}

std::uint64_t pair_budget(int n) { return binomial(n, 2); }

std::vector<VerificationReport> lower_bound_reports;

void criterion1(Outcome& o) {
  auto start = Clock::now();
  int cases = 0;
  for (auto [n, p, r] : turan_grid(12)) {
    auto t = turan_hypergraph(n, p, r);
    auto direct = crossing_sets(n, p, r);
    o.require(t.count == direct && t.hypergraph.size() == direct,
              "t_" + std::to_string(p) + "(" + std::to_string(n) + "," + std::to_string(r) + ")");
    ++cases;
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < 10, "time limit");
  o.detail << cases << " cases in " << secs << " s";
}

void criterion2(Outcome& o) {
  int cases = 0;
  // 15 cases for r = 3
  const std::vector<std::array<int, 3>> r3{{6, 4, 2},  {6, 4, 4},  {8, 4, 3},  {9, 4, 2},  {10, 5, 2},
                                           {10, 5, 5}, {11, 5, 3}, {12, 4, 4}, {12, 6, 2}, {12, 6, 6},
                                           {13, 6, 4}, {14, 5, 4}, {15, 4, 2}, {16, 4, 3}, {16, 6, 5}};
  for (auto [n, p, l] : r3) {
    auto c = lower_bound_coloring_r3(n, p, l);
    auto want = crossing_sets(n, p, 3) + static_cast<std::uint64_t>(l) - 1;
    std::set<int> distinct(c.colors().begin(), c.colors().end());
    o.require(static_cast<std::uint64_t>(c.color_count()) == want && distinct.size() == want,
              "r3 n=" + std::to_string(n) + " p=" + std::to_string(p) + " l=" + std::to_string(l));
    ++cases;
  }
  // 15 cases for r >= 4
  const std::vector<std::array<int, 3>> gen{{6, 5, 4},  {7, 5, 4},  {8, 5, 4},  {9, 6, 4},  {10, 6, 5},
                                            {10, 5, 4}, {11, 7, 4}, {12, 5, 4}, {12, 6, 5}, {13, 7, 6},
                                            {14, 6, 4}, {14, 7, 5}, {15, 6, 5}, {16, 5, 4}, {16, 7, 6}};
  for (auto [n, p, r] : gen) {
    auto c = lower_bound_coloring_general(n, p, r);
    auto want = crossing_sets(n, p, r) + 1;
    std::set<int> distinct(c.colors().begin(), c.colors().end());
    o.require(static_cast<std::uint64_t>(c.color_count()) == want && distinct.size() == want,
              "general n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r));
    ++cases;
  }
  o.detail << cases << " cases, exact";
}

void criterion3(Outcome& o) {
  VerifyOptions opts;
  opts.search.threads = threads();
  opts.collection_sweep = true;
  auto start = Clock::now();
  for (int n : {15, 16}) {
    auto rep = verify_lower_bound(n, 4, 3, 2, fx::K(5), opts);
    o.require(rep.rainbow_found == false, "rainbow K5^(3) at n=" + std::to_string(n));
    o.require(rep.pass, rep.scenario);
    o.detail << "n=" << n << " r=3: " << *rep.observed_colors << " colors, " << rep.rainbow_nodes << " nodes; ";
    lower_bound_reports.push_back(rep);
  }

  // r = 4 needs a doubly edge-5-critical skeleton; take the smallest expansion
  auto scan = scan_doubly_critical(6, 5, threads());
  o.require(!scan.corpus.empty(), "no doubly edge-5-critical graph on at most 6 vertices");
  if (!scan.corpus.empty()) {
    const auto* best = &scan.corpus.front();
    for (const auto& e : scan.corpus)
      if (expansion_order(e.graph, 4) < expansion_order(best->graph, 4)) best = &e;
    int tau = expansion_order(best->graph, 4);
    for (int n = 12; n <= 14; ++n) {
      auto rep = verify_lower_bound(n, 5, 4, 0, best->graph, opts);
      o.require(rep.rainbow_found == false, "rainbow copy at r=4 n=" + std::to_string(n));
      o.require(rep.pass, rep.scenario);
      lower_bound_reports.push_back(rep);
    }
    o.detail << "r=4 n=12..14 with F on " << best->graph.n() << " vertices and " << best->graph.size()
             << " edges: none found, vacuously since tau=" << tau << " > n; ";
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < 600, "time limit");
  o.detail << secs << " s";
}

void criterion4(Outcome& o) {
  auto start = Clock::now();
  struct Case {
    int n;
    Hypergraph f;
    std::uint64_t expect;
    const char* name;
  };
  const std::vector<Case> cases{{4, fx::K(3), 4, "ar(4,K3)"}, {5, fx::K(3), 5, "ar(5,K3)"}, {4, fx::P(2), 2, "ar(4,P2)"}};
  for (const auto& c : cases) {
    auto ar = ar_bruteforce(c.n, 2, c.f);
    o.require(ar.value == c.expect && ar.certified, c.name);
    o.require(static_cast<int>(ar.value) == brute::ar(c.n, 2, c.f), std::string(c.name) + " vs enumeration");
    std::vector<Hypergraph> family;
    bool edgeless = false;
    for (const auto& e : c.f.edges()) {
      std::vector<Edge> one{e};
      family.push_back(remove_edges(c.f, one));
      edgeless = edgeless || family.back().size() == 0;
    }
    std::uint64_t ex = edgeless ? 0 : ex_bruteforce(c.n, 2, family).value;
    o.require(ar.value >= ex + 2, std::string(c.name) + " trivial bound");
    o.detail << c.name << "=" << ar.value << " (ex=" << ex << ") ";
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < 300, "time limit");
  o.detail << secs << " s";
}

void criterion5(Outcome& o) {
  auto start = Clock::now();
  struct Case {
    Hypergraph g;
    int p;
    const char* name;
  };
  const std::vector<Case> cases{{fx::K(4), 3, "K4"}, {fx::K(5), 4, "K5"}, {fx::K(6), 5, "K6"}, {fx::bowtie(), 3, "bowtie"}};
  for (const auto& c : cases) {
    o.require(doubly_critical_report(c.g, c.p).is_doubly_p_critical, std::string(c.name) + " doubly critical");
    o.require(class_of(c.g, c.p).ell == 2, std::string(c.name) + " class 2");
  }
  auto w = config_witness(fx::bowtie(), 3);
  o.require(w && index_vector(fx::bowtie(), *w).canonical() == std::vector<std::size_t>{2, 0}, "bowtie (2,0)");
  for (int p : {3, 4}) {
    auto s = scan_doubly_critical(9, p, threads());
    o.require(s.class_ge3_failed == 0, "scan p=" + std::to_string(p));
    o.detail << "scan(9," << p << "): " << s.corpus.size() << " graphs, " << s.class_ge3_tested
             << " of class>=3 tested, " << s.class_ge3_failed << " failed; ";
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < 900, "time limit");
  o.detail << secs << " s";
}

void criterion6(Outcome& o) {
  std::size_t checked = 0, violations = 0;
  for (const auto& rep : lower_bound_reports) {
    o.require(rep.collections.size() == rep.skeleton.size(), rep.scenario + " sweep incomplete");
    for (const auto& c : rep.collections) {
      ++checked;
      bool ok = c.size <= pair_budget(rep.n) && c.bound == pair_budget(rep.n);
      violations += !ok;
    }
  }
  o.require(checked > 0 && violations == 0, "collection bound");
  o.detail << checked << " collections over " << lower_bound_reports.size() << " colorings, " << violations
           << " violations";
}

void criterion7(Outcome& o) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    int r = 2 + t % 3;
    int n = r + 1 + static_cast<int>(rng() % 6);
    auto g = brute::random_graph(rng, n, r, 0.5);
    int k = 2 + static_cast<int>(rng() % 3);
    std::vector<int> labels;
    for (int v = 0; v < n; ++v) labels.push_back(static_cast<int>(rng() % k));
    auto p = VertexPartition::from_labels(labels, static_cast<std::size_t>(k));
    auto f = f_potential(g, p);
    auto split = crossing_split(g, p);
    o.require(f == brute::f_value(g, labels), "potential vs direct count");
    o.require(f <= r * g.size() - split.non_crossing.size(), "potential inequality");
  }
  int grid = 0;
  for (auto [n, p, r] : turan_grid(12)) {
    auto t = turan_hypergraph(n, p, r);
    o.require(f_potential(t.hypergraph, t.partition) == static_cast<std::uint64_t>(r) * t.count, "Turán potential");
    ++grid;
  }
  for (int t = 0; t < 100; ++t) {
    int r = 2 + t % 2;
    int n = 4 + t % 5;
    auto g = brute::random_graph(rng, n, r, 0.5);
    int k = 2 + t % 3;
    auto e = f_maximize(g, k, SearchMode::exact);
    o.require(e.value == brute::f_max(g, k) && f_potential(g, e.partition) == e.value, "f_maximize exact");
  }
  o.detail << "500 random inequalities, " << grid << " Turán identities, 100 exact maximizations";
}

void criterion8(Outcome& o) {
  int cases = 0, edits = 0;
  for (auto [n, p, r] : turan_grid(10)) {
    auto t = turan_hypergraph(n, p, r);
    auto base = closeness_to_turan(t.hypergraph, p, SearchMode::exact);
    o.require(base.distance == 0, "closeness of the Turán hypergraph");
    ++cases;
    if (t.count > 0) {
      std::vector<Edge> one{t.hypergraph.edge(t.hypergraph.size() / 2)};
      auto less = closeness_to_turan(remove_edges(t.hypergraph, one), p, SearchMode::exact);
      o.require(less.distance == 1, "edge deletion");
      ++edits;
    }
    for (const auto& e : brute::all_rsets(n, r)) {
      if (t.hypergraph.contains(e)) continue;
      std::vector<Edge> one{e};
      auto more = closeness_to_turan(add_edges(t.hypergraph, one), p, SearchMode::exact);
      o.require(more.distance == 1, "edge insertion");
      ++edits;
      break;
    }
  }
  o.detail << cases << " Turán hypergraphs, " << edits << " single-edge edits";
}

void criterion9(Outcome& o, const std::string& exe, const std::string& data) {
  auto tmp = (std::filesystem::temp_directory_path() / "rbx_acceptance").string();
  cli::write_fixtures(tmp);
  auto cases = cli::corpus(data, tmp);
  std::set<std::string> covered;
  for (const auto& c : cases) {
    std::vector<std::string> outs;
    for (int th : {1, 1, 8, 8}) {
      auto r = cli::run(exe, c.subcommand + " " + c.args + " --threads " + std::to_string(th));
      o.require(r.exit_code == 0, c.subcommand + " " + c.args + " exit " + std::to_string(r.exit_code));
      outs.push_back(r.out);
    }
    bool same = std::all_of(outs.begin(), outs.end(), [&](const std::string& s) { return s == outs[0]; });
    o.require(same && !outs[0].empty(), c.subcommand + " " + c.args + " output differs");
    covered.insert(c.subcommand);
  }
  for (const auto& s : cli::subcommands()) o.require(covered.count(s) > 0, s + " not covered");
  o.detail << cases.size() << " invocations over " << covered.size() << " subcommands, 4 runs each";
}

}  // namespace

int main(int argc, char** argv) {
  std::string exe = argc > 1 ? argv[1] : RBX_CLI;
  std::string data = argc > 2 ? argv[2] : RBX_TEST_DATA;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"turan-counts", criterion1},
      {"construction-color-counts", criterion2},
      {"lower-bound-rainbow-free", criterion3},
      {"oracle-agreement", criterion4},
      {"criticality-and-class", criterion5},
      {"collection-bound", criterion6},
      {"potential-identities", criterion7},
      {"closeness-sanity", criterion8},
      {"cli-determinism", [&](Outcome& o) { criterion9(o, exe, data); }},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index++ << " " << name << ": " << o.detail.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
