#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rbx/canonical.hpp"
#include "rbx/chromatic.hpp"
#include "rbx/constructions.hpp"
#include "rbx/errors.hpp"
#include "rbx/io.hpp"
#include "rbx/oracles.hpp"
#include "rbx/partition.hpp"
#include "rbx/rainbow.hpp"
#include "rbx/verify.hpp"

using namespace rbx;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000'000ULL;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int named_size(const std::string& spec, std::size_t skip) {
  try {
    std::size_t used = 0;
    int k = std::stoi(spec.substr(skip), &used);
    if (used + skip == spec.size() && k >= 0) return k;
  } catch (const std::exception&) {
  }
  throw UsageError("unknown named graph " + spec);
}

// @K5, @C5, @P2 (path with two edges), @bowtie
Hypergraph named_graph(const std::string& spec) {
  std::string name = spec.substr(1);
  std::vector<Edge> edges;
  if (name == "bowtie") return Hypergraph(5, 2, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  if (name.size() >= 2 && name[0] == 'K') return complete_hypergraph(named_size(name, 1), 2);
  if (name.size() >= 2 && name[0] == 'C') {
    int k = named_size(name, 1);
    if (k < 3) throw UsageError("cycles need at least 3 vertices");
    for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
    return Hypergraph(k, 2, std::move(edges));
  }
  if (name.size() >= 2 && name[0] == 'P') {
    int k = named_size(name, 1);
    for (int i = 0; i < k; ++i) edges.push_back({i, i + 1});
    return Hypergraph(k + 1, 2, std::move(edges));
  }
  throw UsageError("unknown named graph " + spec);
}

Hypergraph load_graph(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return named_graph(spec);
  return parse_hypergraph(read_file(spec));
}

EdgeColoring load_coloring(const std::string& path) { return parse_coloring(read_file(path)); }
VertexPartition load_partition(const std::string& path) { return parse_partition(read_file(path)); }

void emit(const Common& c, const Json& j) {
  std::string text = dump_line(j);
  if (c.output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + c.output);
  out << text;
}

SearchMode parse_mode(const std::string& m) {
  if (m == "auto") return SearchMode::automatic;
  if (m == "exact") return SearchMode::exact;
  return SearchMode::hillclimb;
}

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad vertex list " + s);
    }
  }
  return out;
}

Json merged(Json base, const Json& extra) {
  for (auto it = extra.begin(); it != extra.end(); ++it) base[it.key()] = it.value();
  return base;
}

Json coloring_doc(const EdgeColoring& c) { return merged(to_json(c), {{"color_count", c.color_count()}}); }

Json search_json(const RainbowSearchResult& r) {
  return Json{{"found", r.copy.has_value()},
              {"copy", r.copy ? to_json(*r.copy) : Json(nullptr)},
              {"nodes_explored", r.nodes}};
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--threads", c.threads, "worker threads (output does not depend on it)")->check(CLI::Range(1, 1024));
  sub->add_option("--seed", c.seed, "seed for randomized procedures");
  sub->add_option("--budget-nodes", c.budget, "node budget for exhaustive searches");
  sub->add_option("-o,--output", c.output, "write the JSON document here [default: stdout]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow expansion toolkit: hypergraph constructions, rainbow searches and exact oracles"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  Common c;
  std::function<void()> action;

  std::string input, coloring_path, partition_path, extremal_path, skeleton_path, start_path, map_text, mode = "auto";
  std::vector<std::string> inputs;
  int n = 0, p = 0, r = 2, ell = 2, k = 2, min_small = 1, samples = 0, exact_limit = 10;
  int move_vertex = -1, move_to = -1;
  int max_vertices = 5;
  bool count_only = false, expand = false, allow_small = false, deleted_family = false, no_collections = false,
       table = false, summary = false;

  auto* chromatic = app.add_subcommand("chromatic", "chromatic number of a 2-graph");
  chromatic->add_option("-i,--input", input, "graph file or @name (@K5, @C5, @P2, @bowtie)")->required();
  add_common(chromatic, c);
  chromatic->callback([&] { action = [&] { emit(c, {{"chi", chromatic_number(load_graph(input))}}); }; });

  auto* critical = app.add_subcommand("critical", "edge-criticality, or the doubly edge-p-critical report with -p");
  critical->add_option("-i,--input", input, "graph file or @name")->required();
  critical->add_option("-p", p, "target p (0: plain edge-criticality)");
  add_common(critical, c);
  critical->callback([&] {
    action = [&] {
      auto g = load_graph(input);
      if (p > 0) return emit(c, to_json(doubly_critical_report(g, p)));
      auto ec = is_edge_critical(g);
      emit(c, {{"chi", chromatic_number(g)}, {"edge_critical", ec.critical}, {"edge", ec.edge ? Json(*ec.edge) : Json(nullptr)}});
    };
  });

  auto* cls = app.add_subcommand("class", "class of a 2-graph with respect to (p-1)-block partitions");
  cls->add_option("-i,--input", input, "graph file or @name")->required();
  cls->add_option("-p", p, "p (partitions have p-1 blocks)")->required();
  add_common(cls, c);
  cls->callback([&] {
    action = [&] {
      PartitionSearchOptions o{c.budget};
      emit(c, to_json(class_of(load_graph(input), p, o)));
    };
  });

  auto* cw = app.add_subcommand("config-witness", "first (p-1)-partition with index vector (2,0,...,0)");
  cw->add_option("-i,--input", input, "graph file or @name")->required();
  cw->add_option("-p", p, "p (partitions have p-1 blocks)")->required();
  add_common(cw, c);
  cw->callback([&] {
    action = [&] {
      auto g = load_graph(input);
      auto w = config_witness(g, p, PartitionSearchOptions{c.budget});
      Json j{{"found", w.has_value()}};
      j["witness"] = w ? to_json(*w) : Json(nullptr);
      j["index_vector"] = w ? to_json(index_vector(g, *w)) : Json(nullptr);
      emit(c, j);
    };
  });

  auto* expand_cmd = app.add_subcommand("expand", "r-expansion of a 2-graph");
  expand_cmd->add_option("-i,--input", input, "graph file or @name")->required();
  expand_cmd->add_option("-r", r, "uniformity of the expansion")->required();
  add_common(expand_cmd, c);
  expand_cmd->callback([&] {
    action = [&] {
      auto e = expansion(load_graph(input), r);
      emit(c, merged(to_json(e.hypergraph),
                     {{"skeleton_vertices", e.skeleton_vertices}, {"edge_provenance", e.edge_provenance}}));
    };
  });

  auto* turan = app.add_subcommand("turan", "Turán hypergraph on a balanced (p-1)-partition");
  turan->add_option("-n", n, "vertex count")->required();
  turan->add_option("-p", p, "p (p-1 blocks)")->required();
  turan->add_option("-r", r, "uniformity")->required();
  turan->add_flag("--count-only", count_only, "print only the edge count [default: off]");
  add_common(turan, c);
  turan->callback([&] {
    action = [&] {
      if (count_only) return emit(c, {{"t", turan_count(n, p, r)}});
      auto t = turan_hypergraph(n, p, r);
      emit(c, merged(to_json(t.hypergraph), {{"partition", to_json(t.partition)}, {"t", t.count}}));
    };
  });

  auto* ctriv = app.add_subcommand("color-trivial", "rainbow extremal graph plus one extra color");
  ctriv->add_option("-n", n, "vertex count")->required();
  ctriv->add_option("-r", r, "uniformity")->required();
  ctriv->add_option("-i,--input", input, "skeleton F (file or @name)")->required();
  ctriv->add_option("--extremal", extremal_path, "extremal r-graph file, e.g. an ex-oracle witness")->required();
  add_common(ctriv, c);
  ctriv->callback([&] {
    action = [&] {
      emit(c, coloring_doc(trivial_lower_bound_coloring(n, r, load_graph(input), parse_hypergraph(read_file(extremal_path)))));
    };
  });

  auto* cr3 = app.add_subcommand("color-r3", "3-uniform lower-bound coloring with t + l - 1 colors");
  cr3->add_option("-n", n, "vertex count")->required();
  cr3->add_option("-p", p, "p")->required();
  cr3->add_option("-l", ell, "class l");
  add_common(cr3, c);
  cr3->callback([&] {
    action = [&] { emit(c, merged(coloring_doc(lower_bound_coloring_r3(n, p, ell)), {{"partition", to_json(balanced_partition(n, p - 1))}})); };
  });

  auto* cgen = app.add_subcommand("color-general", "r-uniform lower-bound coloring with t + 1 colors");
  cgen->add_option("-n", n, "vertex count")->required();
  cgen->add_option("-p", p, "p")->required();
  cgen->add_option("-r", r, "uniformity (4 <= r < p)")->required();
  add_common(cgen, c);
  cgen->callback([&] {
    action = [&] { emit(c, merged(coloring_doc(lower_bound_coloring_general(n, p, r)), {{"partition", to_json(balanced_partition(n, p - 1))}})); };
  });

  auto pattern_for = [&](const Hypergraph& host) {
    auto g = load_graph(input);
    return expand ? expansion(g, host.r()).hypergraph : g;
  };

  auto* rf = app.add_subcommand("rainbow-find", "exhaustive search for a rainbow copy");
  rf->add_option("-c,--coloring", coloring_path, "colored host file")->required();
  rf->add_option("-i,--input", input, "pattern file or @name")->required();
  rf->add_flag("--expand", expand, "treat the pattern as a 2-graph skeleton and expand it to the host uniformity [default: off]");
  add_common(rf, c);
  rf->callback([&] {
    action = [&] {
      auto col = load_coloring(coloring_path);
      emit(c, search_json(find_rainbow_copy(col, pattern_for(col.host()), SearchOptions{c.budget, c.threads})));
    };
  });

  auto* cp = app.add_subcommand("classify-pairs", "big and small vertex pairs of an r-graph");
  cp->add_option("-i,--input", input, "r-graph file")->required();
  cp->add_option("-f,--skeleton", skeleton_path, "skeleton F (file or @name)")->required();
  cp->add_option("--min-small-degree", min_small, "report vertices in at least this many small pairs");
  add_common(cp, c);
  cp->callback([&] {
    action = [&] {
      auto pc = classify_pairs(load_graph(input), load_graph(skeleton_path));
      emit(c, {{"threshold", pc.threshold},
               {"big_pairs", pc.big_pairs},
               {"small_pairs", pc.small_pairs},
               {"small_degree", pc.small_degree},
               {"high_small_degree", high_small_degree_vertices(pc, min_small)}});
    };
  });

  auto* es = app.add_subcommand("extend-skeleton", "greedy extension of an embedded skeleton into a rainbow expansion");
  es->add_option("-c,--coloring", coloring_path, "rainbow host coloring file")->required();
  es->add_option("-f,--skeleton", skeleton_path, "skeleton F (file or @name)")->required();
  es->add_option("--map", map_text, "host vertex of each skeleton vertex, comma separated")->required();
  es->add_flag("--allow-small-pairs", allow_small, "do not require every skeleton pair to be big [default: off]");
  add_common(es, c);
  es->callback([&] {
    action = [&] {
      auto ext = extend_skeleton(load_coloring(coloring_path), load_graph(skeleton_path), parse_vertex_list(map_text), !allow_small);
      Json j{{"extended", ext.copy.has_value()}};
      j["copy"] = ext.copy ? to_json(*ext.copy) : Json(nullptr);
      j["failed_pair"] = ext.failed_pair ? Json(*ext.failed_pair) : Json(nullptr);
      emit(c, j);
    };
  });

  auto* coll = app.add_subcommand("collection", "maximal edge-disjoint rainbow collection");
  coll->add_option("-c,--coloring", coloring_path, "colored host file")->required();
  coll->add_option("-i,--input", input, "pattern file or @name")->required();
  coll->add_flag("--expand", expand, "treat the pattern as a 2-graph skeleton and expand it to the host uniformity [default: off]");
  add_common(coll, c);
  coll->callback([&] {
    action = [&] {
      auto col = load_coloring(coloring_path);
      auto res = maximal_disjoint_rainbow_collection(col, pattern_for(col.host()), SearchOptions{c.budget, c.threads});
      Json copies = Json::array();
      for (const auto& cp : res.copies) copies.push_back(to_json(cp));
      emit(c, {{"size", res.copies.size()},
               {"copies", std::move(copies)},
               {"rainbow_subgraph", res.rainbow_subgraph},
               {"nodes_explored", res.nodes}});
    };
  });

  auto* exo = app.add_subcommand("ex-oracle", "exact Turán number by branch-and-bound");
  exo->add_option("-n", n, "vertex count")->required();
  exo->add_option("-r", r, "uniformity")->required();
  exo->add_option("-i,--input", inputs, "forbidden graphs (files or @names); repeatable")->required();
  exo->add_flag("--expand", expand, "expand each forbidden 2-graph to uniformity r [default: off]");
  exo->add_flag("--deleted-edge-family", deleted_family, "forbid every F - e instead of F itself [default: off]");
  add_common(exo, c);
  exo->callback([&] {
    action = [&] {
      std::vector<Hypergraph> family;
      for (const auto& spec : inputs) {
        auto g = load_graph(spec);
        std::vector<Hypergraph> members;
        if (deleted_family) {
          for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<Edge> d{g.edge(i)};
            members.push_back(remove_edges(g, d));
          }
        } else {
          members.push_back(g);
        }
        for (auto& h : members) family.push_back(expand && h.r() == 2 && r > 2 ? expansion(h, r).hypergraph : h);
      }
      auto res = ex_bruteforce(n, r, family, OracleOptions{c.budget});
      emit(c, oracle_json(res.value, to_json(res.witness), res.certified, res.nodes));
    };
  });

  auto* aro = app.add_subcommand("ar-oracle", "exact anti-Ramsey number of the r-expansion");
  aro->add_option("-n", n, "vertex count")->required();
  aro->add_option("-r", r, "uniformity")->required();
  aro->add_option("-i,--input", input, "skeleton F (file or @name)")->required();
  add_common(aro, c);
  aro->callback([&] {
    action = [&] {
      auto res = ar_bruteforce(n, r, load_graph(input), OracleOptions{c.budget});
      Json j = oracle_json(res.value, res.witness ? coloring_doc(*res.witness) : Json(nullptr), res.certified, res.nodes);
      j["max_rainbow_free_colors"] = res.max_rainbow_free_colors;
      emit(c, j);
    };
  });

  auto* cs = app.add_subcommand("crossing-split", "crossing and non-crossing edges, partition potential and move gains");
  cs->add_option("-i,--input", input, "r-graph file or @name")->required();
  cs->add_option("--partition", partition_path, "partition file")->required();
  cs->add_option("--vertex", move_vertex, "report non-crossing-part neighbours of this vertex (-1: none)");
  cs->add_option("--to-block", move_to, "with --vertex: gain of moving it into this block (-1: none)");
  add_common(cs, c);
  cs->callback([&] {
    action = [&] {
      auto g = load_graph(input);
      auto part = load_partition(partition_path);
      auto split = crossing_split(g, part);
      Json j = to_json(split);
      j["f_potential"] = f_potential(g, part);
      if (move_vertex >= 0) {
        j["ncp_neighbors"] = non_crossing_part_neighbors(split, move_vertex);
        if (move_to >= 0) {
          auto mg = vertex_move_gain(g, part, move_vertex, static_cast<std::size_t>(move_to));
          j["move_gain"] = {{"e_prime", mg.e_prime}, {"e_double_prime", mg.e_double_prime}, {"delta", mg.delta}};
        }
      }
      emit(c, j);
    };
  });

  auto* fm = app.add_subcommand("f-max", "maximize the partition potential");
  fm->add_option("-i,--input", input, "r-graph file or @name")->required();
  fm->add_option("-k", k, "block count");
  fm->add_option("--mode", mode, "auto, exact or hillclimb")->check(CLI::IsMember({"auto", "exact", "hillclimb"}));
  fm->add_option("--start", start_path, "hill-climb start partition file [default: seeded random]");
  add_common(fm, c);
  fm->callback([&] {
    action = [&] {
      std::optional<VertexPartition> start;
      if (!start_path.empty()) start = load_partition(start_path);
      auto res = f_maximize(load_graph(input), k, parse_mode(mode), c.seed, start, OracleOptions{c.budget});
      emit(c, merged(to_json(res.partition), {{"partition", to_json(res.partition)},
                                              {"value", res.value},
                                              {"certified", res.certified},
                                              {"nodes_explored", res.nodes},
                                              {"moves", res.moves}}));
    };
  });

  auto* cl = app.add_subcommand("closeness", "edit distance to the nearest balanced Turán hypergraph");
  cl->add_option("-i,--input", input, "r-graph file or @name")->required();
  cl->add_option("-p", p, "p (p-1 blocks)")->required();
  cl->add_option("--mode", mode, "auto, exact or hillclimb")->check(CLI::IsMember({"auto", "exact", "hillclimb"}));
  cl->add_option("--exact-vertex-limit", exact_limit, "auto mode is exact up to this many vertices");
  add_common(cl, c);
  cl->callback([&] {
    action = [&] {
      auto res = closeness_to_turan(load_graph(input), p, parse_mode(mode), OracleOptions{c.budget}, exact_limit);
      emit(c, merged(to_json(res.witness), {{"distance", res.distance},
                                            {"witness", to_json(res.witness)},
                                            {"certified", res.certified},
                                            {"nodes_explored", res.nodes}}));
    };
  });

  auto* vlb = app.add_subcommand("verify-lower-bound", "check a lower-bound construction end to end");
  vlb->add_option("-n", n, "vertex count")->required();
  vlb->add_option("-p", p, "p")->required();
  vlb->add_option("-r", r, "uniformity")->required();
  vlb->add_option("-l", ell, "class l (r = 3)");
  vlb->add_option("-i,--input", input, "skeleton F (file or @name)")->required();
  vlb->add_flag("--no-collections", no_collections, "skip the greedy collection sweep [default: off]");
  vlb->add_option("--samples", samples, "observational colorings with one extra color (not part of the verdict)");
  vlb->add_flag("--table", table, "print a text table instead of JSON [default: off]");
  add_common(vlb, c);
  vlb->callback([&] {
    action = [&] {
      VerifyOptions o;
      o.search = {c.budget, c.threads};
      o.collection_sweep = !no_collections;
      o.observational_samples = samples;
      o.seed = c.seed;
      auto rep = verify_lower_bound(n, p, r, ell, load_graph(input), o);
      if (table) {
        std::fputs(report_table({rep}).c_str(), stdout);
        return;
      }
      emit(c, to_json(rep));
    };
  });

  auto* vs = app.add_subcommand("verify-small", "oracle cross-check on a small complete host");
  vs->add_option("-n", n, "vertex count")->required();
  vs->add_option("-r", r, "uniformity")->required();
  vs->add_option("-i,--input", input, "skeleton F (file or @name)")->required();
  vs->add_flag("--table", table, "print a text table instead of JSON [default: off]");
  add_common(vs, c);
  vs->callback([&] {
    action = [&] {
      VerifyOptions o;
      o.search = {c.budget, c.threads};
      o.oracle = {c.budget};
      auto rep = verify_small_case(n, r, load_graph(input), o);
      if (table) {
        std::fputs(report_table({rep}).c_str(), stdout);
        return;
      }
      emit(c, to_json(rep));
    };
  });

  auto* scan = app.add_subcommand("scan", "doubly edge-p-critical graphs up to isomorphism");
  scan->add_option("--max-vertices", max_vertices, "largest vertex count scanned (at most 9)");
  scan->add_option("-p", p, "p")->required();
  scan->add_flag("--summary", summary, "omit the corpus listing [default: off]");
  add_common(scan, c);
  scan->callback([&] {
    action = [&] {
      Json j = to_json(scan_doubly_critical(max_vertices, p, c.threads));
      if (summary) j.erase("corpus");
      emit(c, j);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    action();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
