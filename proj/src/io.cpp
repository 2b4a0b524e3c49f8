#include "rbx/io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rbx/errors.hpp"

namespace rbx {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path.empty() ? "/" : path, std::string("missing key \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<long long>();
}

int small_int(const Json& j, const std::string& path, long long lo, long long hi) {
  long long v = integer(j, path);
  if (v < lo || v > hi) throw ParseError(path, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Edge edge_from_json(const Json& j, const std::string& path, int n) {
  Edge e;
  const auto& a = array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) e.push_back(small_int(a[i], at(path, i), 0, n - 1));
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(path, "edge repeats a vertex");
  return e;
}

std::string edge_text(const Edge& e) { return Json(e).dump(); }

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto colon = msg.find("; ");
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                     colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
}

Hypergraph hypergraph_from_json(const Json& j, const std::string& path) {
  int n = small_int(field(j, path, "n"), at(path, "n"), 0, 1 << 20);
  int r = small_int(field(j, path, "r"), at(path, "r"), 0, 1 << 20);
  const auto& edges = array(field(j, path, "edges"), at(path, "edges"));
  std::vector<Edge> out;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto where = at(at(path, "edges"), i);
    Edge e = edge_from_json(edges[i], where, n);
    if (static_cast<int>(e.size()) != r)
      throw ParseError(where, "edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
    if (!seen.insert(e).second) throw ParseError(where, "duplicate edge " + edge_text(e));
    out.push_back(std::move(e));
  }
  return Hypergraph(n, r, std::move(out));
}

EdgeColoring coloring_from_json(const Json& j, const std::string& path) {
  Hypergraph host = hypergraph_from_json(field(j, path, "host"), at(path, "host"));
  const auto& entries = array(field(j, path, "colors"), at(path, "colors"));
  std::vector<int> colors(host.size(), -1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto where = at(at(path, "colors"), i);
    Edge e = edge_from_json(field(entries[i], where, "edge"), at(where, "edge"), host.n());
    int c = small_int(field(entries[i], where, "color"), at(where, "color"), 0, 1LL << 30);
    auto idx = host.index_of(e);
    if (!idx) throw ParseError(where, "edge " + edge_text(e) + " is not in the host");
    if (colors[*idx] >= 0) throw ParseError(where, "edge " + edge_text(e) + " colored twice");
    colors[*idx] = c;
  }
  for (std::size_t i = 0; i < host.size(); ++i)
    if (colors[i] < 0) throw ParseError(at(path, "colors"), "host edge " + edge_text(host.edge(i)) + " has no color");
  return EdgeColoring(std::move(host), std::move(colors));
}

VertexPartition partition_from_json(const Json& j, const std::string& path) {
  const auto& blocks = array(field(j, path, "blocks"), at(path, "blocks"));
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto where = at(at(path, "blocks"), i);
    std::vector<Vertex> b;
    const auto& a = array(blocks[i], where);
    for (std::size_t k = 0; k < a.size(); ++k) b.push_back(small_int(a[k], at(where, k), 0, 1 << 20));
    out.push_back(std::move(b));
  }
  try {
    return VertexPartition(std::move(out));
  } catch (const InvalidParameters& e) {
    throw ParseError(at(path, "blocks"), e.what());
  }
}

RainbowCopy rainbow_copy_from_json(const Json& j, const std::string& path) {
  RainbowCopy c;
  const auto& map = array(field(j, path, "map"), at(path, "map"));
  std::map<int, int> m;
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto where = at(at(path, "map"), i);
    const auto& pr = array(map[i], where);
    if (pr.size() != 2) throw ParseError(where, "expected [pattern_vertex, host_vertex]");
    int pv = small_int(pr[0], at(where, 0), 0, 1 << 20);
    if (pv != static_cast<int>(i)) throw ParseError(where, "pattern vertices must be listed as 0, 1, 2, ...");
    m[pv] = small_int(pr[1], at(where, 1), 0, 1 << 20);
  }
  for (auto [pv, hv] : m) c.embedding.pattern_to_host.push_back(hv);
  const auto& edges = array(field(j, path, "edges"), at(path, "edges"));
  for (std::size_t i = 0; i < edges.size(); ++i)
    c.embedding.matched_edges.push_back(edge_from_json(edges[i], at(at(path, "edges"), i), 1 << 20));
  const auto& colors = array(field(j, path, "colors"), at(path, "colors"));
  for (std::size_t i = 0; i < colors.size(); ++i) c.colors.push_back(small_int(colors[i], at(at(path, "colors"), i), 0, 1LL << 30));
  if (c.colors.size() != c.embedding.matched_edges.size())
    throw ParseError(at(path, "colors"), "one color per matched edge expected");
  return c;
}

Hypergraph parse_hypergraph(std::string_view text) { return hypergraph_from_json(parse_json_text(text)); }
EdgeColoring parse_coloring(std::string_view text) { return coloring_from_json(parse_json_text(text)); }
VertexPartition parse_partition(std::string_view text) { return partition_from_json(parse_json_text(text)); }

Json to_json(const Hypergraph& g) { return Json{{"n", g.n()}, {"r", g.r()}, {"edges", g.edges()}}; }

Json to_json(const EdgeColoring& c) {
  Json colors = Json::array();
  for (std::size_t i = 0; i < c.host().size(); ++i) colors.push_back({{"edge", c.host().edge(i)}, {"color", c.color(i)}});
  return Json{{"host", to_json(c.host())}, {"colors", std::move(colors)}};
}

Json to_json(const VertexPartition& p) { return Json{{"blocks", p.blocks()}}; }

Json to_json(const RainbowCopy& c) {
  Json map = Json::array();
  for (std::size_t v = 0; v < c.embedding.pattern_to_host.size(); ++v)
    map.push_back({static_cast<int>(v), c.embedding.pattern_to_host[v]});
  return Json{{"map", std::move(map)}, {"edges", c.embedding.matched_edges}, {"colors", c.colors}};
}

Json to_json(const IndexVector& v) { return Json(v.counts); }

Json to_json(const CriticalityReport& r) {
  Json j{{"chi", r.chi}, {"p", r.p}, {"doubly_critical", r.is_doubly_p_critical}};
  j["witness_pair"] = r.witness_pair ? Json::array({r.witness_pair->first, r.witness_pair->second}) : Json(nullptr);
  j["failing_edge"] = r.failing_edge ? Json(*r.failing_edge) : Json(nullptr);
  return j;
}

Json to_json(const ClassResult& c) {
  Json j{{"class", c.ell}, {"nodes_explored", c.nodes}};
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  j["index_vector"] = c.vector ? to_json(*c.vector) : Json(nullptr);
  return j;
}

Json to_json(const Check& c) { return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

Json to_json(const VerificationReport& r) {
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json cols = Json::array();
  for (const auto& c : r.collections)
    cols.push_back({{"removed", c.removed}, {"size", c.size}, {"bound", c.bound}, {"nodes_explored", c.nodes}});
  Json j{{"scenario", r.scenario},
         {"n", r.n},
         {"r", r.r},
         {"p", r.p ? Json(r.p) : Json(nullptr)},
         {"l", opt(r.ell)},
         {"F", to_json(r.skeleton)},
         {"expected_colors", opt(r.expected_colors)},
         {"observed_colors", opt(r.observed_colors)},
         {"rainbow_found", opt(r.rainbow_found)},
         {"rainbow_nodes", r.rainbow_nodes},
         {"ar", opt(r.ar)},
         {"ex", opt(r.ex)},
         {"collections", std::move(cols)},
         {"checks", std::move(checks)},
         {"pass", r.pass},
         {"reasons", r.reasons}};
  if (r.observational) {
    const auto& o = *r.observational;
    j["observational"] = {
        {"colors", o.colors}, {"samples", o.samples}, {"forced_rainbow", o.forced_rainbow}, {"seed", o.seed}};
  } else {
    j["observational"] = nullptr;
  }
  return j;
}

Json to_json(const ScanResult& s) {
  Json corpus = Json::array();
  for (const auto& e : s.corpus) {
    Json entry{{"graph", to_json(e.graph)}, {"report", to_json(e.report)}, {"class", e.cls.ell}};
    entry["class_witness"] = e.cls.witness ? to_json(*e.cls.witness) : Json(nullptr);
    entry["config_witness"] = e.config_witness ? to_json(*e.config_witness) : Json(nullptr);
    corpus.push_back(std::move(entry));
  }
  return Json{{"max_vertices", s.max_vertices},
              {"p", s.p},
              {"graphs_examined", s.graphs_examined},
              {"corpus_size", s.corpus.size()},
              {"class_ge3_tested", s.class_ge3_tested},
              {"class_ge3_failed", s.class_ge3_failed},
              {"corpus", std::move(corpus)}};
}

Json to_json(const CrossingSplit& s) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < s.non_crossing.size(); ++i) {
    Json pairs = Json::array();
    for (auto [a, b] : s.non_crossing_parts[i]) pairs.push_back({a, b});
    parts.push_back({{"edge", s.non_crossing[i]}, {"parts", std::move(pairs)}});
  }
  return Json{{"partition", to_json(s.partition)},
              {"crossing", s.crossing},
              {"non_crossing", s.non_crossing},
              {"non_crossing_parts", std::move(parts)}};
}

Json oracle_json(const Json& value, const Json& witness, bool certified, std::uint64_t nodes) {
  return Json{{"value", value}, {"witness", witness}, {"certified", certified}, {"nodes_explored", nodes}};
}

std::string serialize(const Hypergraph& g) { return dump_line(to_json(g)); }
std::string serialize(const EdgeColoring& c) { return dump_line(to_json(c)); }
std::string serialize(const VertexPartition& p) { return dump_line(to_json(p)); }

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

}  // namespace rbx
