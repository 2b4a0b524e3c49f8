// Python bindings. Structured values cross the boundary as JSON text in the
// same formats the CLI reads and writes; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbx/canonical.hpp"
#include "rbx/chromatic.hpp"
#include "rbx/constructions.hpp"
#include "rbx/errors.hpp"
#include "rbx/io.hpp"
#include "rbx/oracles.hpp"
#include "rbx/partition.hpp"
#include "rbx/rainbow.hpp"
#include "rbx/verify.hpp"

namespace py = pybind11;
using namespace rbx;

namespace {

std::string dump(const Json& j) { return j.dump(); }

SearchMode parse_mode(const std::string& mode) {
  if (mode == "auto") return SearchMode::automatic;
  if (mode == "exact") return SearchMode::exact;
  if (mode == "hillclimb") return SearchMode::hillclimb;
  throw InvalidParameters("mode must be auto, exact or hillclimb");
}

std::vector<Hypergraph> expanded_family(const std::vector<std::string>& members, int r) {
  std::vector<Hypergraph> out;
  for (const auto& m : members) {
    auto g = parse_hypergraph(m);
    out.push_back(g.r() == 2 && r > 2 ? expansion(g, r).hypergraph : g);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_rbx, m) {
  m.doc() = "rainbow hypergraph toolkit";

  auto base = py::register_exception<Error>(m, "RbxError", PyExc_RuntimeError);
  py::register_exception<InvalidParameters>(m, "InvalidParameters", base);
  py::register_exception<WrongUniformity>(m, "WrongUniformity", base);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base);
  py::register_exception<DegenerateConstruction>(m, "DegenerateConstruction", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  m.def("chromatic_number", [](const std::string& g) { return chromatic_number(parse_hypergraph(g)); });

  m.def("doubly_critical_report",
        [](const std::string& g, int p) { return dump(to_json(doubly_critical_report(parse_hypergraph(g), p))); });

  m.def(
      "class_of",
      [](const std::string& g, int p, std::uint64_t budget) {
        return dump(to_json(class_of(parse_hypergraph(g), p, PartitionSearchOptions{budget})));
      },
      py::arg("graph"), py::arg("p"), py::arg("budget") = PartitionSearchOptions{}.node_budget);

  m.def("config_witness", [](const std::string& g, int p) -> std::optional<std::string> {
    auto w = config_witness(parse_hypergraph(g), p);
    if (!w) return std::nullopt;
    return dump(to_json(*w));
  });

  m.def("expansion", [](const std::string& g, int r) { return dump(to_json(expansion(parse_hypergraph(g), r).hypergraph)); });

  m.def("turan_hypergraph", [](int n, int p, int r) {
    auto t = turan_hypergraph(n, p, r);
    Json j = to_json(t.hypergraph);
    j["partition"] = to_json(t.partition);
    j["t"] = t.count;
    return dump(j);
  });

  m.def("turan_count", &turan_count);

  m.def("lower_bound_coloring_r3", [](int n, int p, int l) { return dump(to_json(lower_bound_coloring_r3(n, p, l))); });

  m.def("lower_bound_coloring_general",
        [](int n, int p, int r) { return dump(to_json(lower_bound_coloring_general(n, p, r))); });

  m.def(
      "find_rainbow_copy",
      [](const std::string& coloring, const std::string& pattern, bool expand, std::uint64_t budget, int threads) {
        auto c = parse_coloring(coloring);
        auto f = parse_hypergraph(pattern);
        if (expand) f = expansion(f, c.host().r()).hypergraph;
        RainbowSearchResult res;
        {
          py::gil_scoped_release release;
          res = find_rainbow_copy(c, f, SearchOptions{budget, threads});
        }
        return dump(Json{{"found", res.copy.has_value()},
                         {"copy", res.copy ? to_json(*res.copy) : Json(nullptr)},
                         {"nodes_explored", res.nodes}});
      },
      py::arg("coloring"), py::arg("pattern"), py::arg("expand") = false,
      py::arg("budget") = SearchOptions{}.node_budget, py::arg("threads") = 1);

  m.def(
      "ex_bruteforce",
      [](int n, int r, const std::vector<std::string>& family, std::uint64_t budget) {
        auto fam = expanded_family(family, r);
        auto res = ex_bruteforce(n, r, fam, OracleOptions{budget});
        return dump(oracle_json(res.value, to_json(res.witness), res.certified, res.nodes));
      },
      py::arg("n"), py::arg("r"), py::arg("family"), py::arg("budget") = OracleOptions{}.node_budget);

  m.def(
      "ar_bruteforce",
      [](int n, int r, const std::string& f, std::uint64_t budget) {
        auto res = ar_bruteforce(n, r, parse_hypergraph(f), OracleOptions{budget});
        Json j = oracle_json(res.value, res.witness ? to_json(*res.witness) : Json(nullptr), res.certified, res.nodes);
        j["max_rainbow_free_colors"] = res.max_rainbow_free_colors;
        return dump(j);
      },
      py::arg("n"), py::arg("r"), py::arg("f"), py::arg("budget") = OracleOptions{}.node_budget);

  m.def("f_potential",
        [](const std::string& g, const std::string& p) { return f_potential(parse_hypergraph(g), parse_partition(p)); });

  m.def(
      "f_maximize",
      [](const std::string& g, int k, const std::string& mode, std::uint64_t seed) {
        auto res = f_maximize(parse_hypergraph(g), k, parse_mode(mode), seed);
        return dump(Json{{"partition", to_json(res.partition)},
                         {"value", res.value},
                         {"certified", res.certified},
                         {"nodes_explored", res.nodes},
                         {"moves", res.moves}});
      },
      py::arg("graph"), py::arg("k"), py::arg("mode") = "auto", py::arg("seed") = 0);

  m.def(
      "closeness_to_turan",
      [](const std::string& g, int p, const std::string& mode) {
        auto res = closeness_to_turan(parse_hypergraph(g), p, parse_mode(mode));
        return dump(Json{{"distance", res.distance},
                         {"witness", to_json(res.witness)},
                         {"certified", res.certified},
                         {"nodes_explored", res.nodes}});
      },
      py::arg("graph"), py::arg("p"), py::arg("mode") = "auto");

  m.def(
      "verify_lower_bound",
      [](int n, int p, int r, int ell, const std::string& f, int threads) {
        VerifyOptions opts;
        opts.search.threads = threads;
        auto g = parse_hypergraph(f);
        VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = verify_lower_bound(n, p, r, ell, g, opts);
        }
        return dump(to_json(rep));
      },
      py::arg("n"), py::arg("p"), py::arg("r"), py::arg("ell"), py::arg("f"), py::arg("threads") = 1);

  m.def("verify_small_case",
        [](int n, int r, const std::string& f) { return dump(to_json(verify_small_case(n, r, parse_hypergraph(f)))); });

  m.def(
      "scan_doubly_critical",
      [](int max_vertices, int p, int threads) {
        ScanResult res;
        {
          py::gil_scoped_release release;
          res = scan_doubly_critical(max_vertices, p, threads);
        }
        return dump(to_json(res));
      },
      py::arg("max_vertices"), py::arg("p"), py::arg("threads") = 1);

  m.def("nonisomorphic_graph_count", [](int n) { return nonisomorphic_graphs(n).size(); });
}
