#include <catch_amalgamated.hpp>

#include <random>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "rbx/combinatorics.hpp"
#include "rbx/errors.hpp"
#include "rbx/hypergraph.hpp"
#include "rbx/io.hpp"

using namespace rbx;

TEST_CASE("complete hypergraph edge counts") {
  CHECK(complete_hypergraph(4, 2).size() == 6);
  CHECK(complete_hypergraph(5, 3).size() == 10);
  CHECK(complete_hypergraph(6, 3).size() == 20);
  CHECK(complete_hypergraph(3, 0).size() == 1);
  CHECK_THROWS_AS(complete_hypergraph(3, 4), InvalidParameters);
  CHECK_THROWS_AS(complete_hypergraph(3, -1), InvalidParameters);
  auto k = complete_hypergraph(6, 3);
  CHECK(std::is_sorted(k.edges().begin(), k.edges().end()));
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 1}, {1, 0}}), InvalidParameters);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 3}}), InvalidParameters);
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 0}}), InvalidParameters);
  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1}}), InvalidParameters);
  Hypergraph g(4, 2, {{3, 2}, {1, 0}});
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{2, 3});
  CHECK(g.contains(std::vector<int>{3, 2}));
}

TEST_CASE("codegree examples and closed form") {
  CHECK(codegree(complete_hypergraph(5, 3), std::vector<int>{0, 1}) == 3);
  CHECK(codegree(complete_hypergraph(4, 2), std::vector<int>{0, 1}) == 1);
  CHECK(codegree(Hypergraph(3, 2, {}), std::vector<int>{0}) == 0);
  CHECK_THROWS_AS(codegree(complete_hypergraph(4, 2), std::vector<int>{4}), InvalidParameters);
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r <= n; ++r) {
      auto k = complete_hypergraph(n, r);
      for (int u = 0; u <= r; ++u) {
        std::vector<int> U;
        for (int i = 0; i < u; ++i) U.push_back(i);
        CHECK(codegree(k, U) == binomial(n - u, r - u));
      }
    }
}

TEST_CASE("remove and re-add edges") {
  auto k4 = fx::K(4);
  std::vector<Edge> one{{0, 1}};
  CHECK(remove_edges(k4, one).size() == 5);
  CHECK(remove_edges(k4, {}) == k4);
  auto tri = fx::K(3);
  auto empty = remove_edges(tri, tri.edges());
  CHECK(empty.empty());
  CHECK(empty.n() == 3);
  std::vector<Edge> missing{{0, 1}};
  CHECK_THROWS_AS(remove_edges(empty, missing), NotPresent);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto g = brute::random_graph(rng, 7, 3, 0.4);
    std::vector<Edge> d;
    for (std::size_t i = 0; i < g.size(); i += 2) d.push_back(g.edge(i));
    CHECK(add_edges(remove_edges(g, d), d) == g);
  }
}

TEST_CASE("edge colorings renumber to a contiguous range") {
  auto k = fx::K(3);
  EdgeColoring c(k, {7, 3, 7});
  CHECK(c.color_count() == 2);
  CHECK(c.color(0) == 1);
  CHECK(c.color(1) == 0);
  CHECK(c.class_representatives() == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(EdgeColoring(k, {0, 1}), InvalidParameters);
  CHECK_THROWS_AS(EdgeColoring(k, {0, -1, 2}), InvalidParameters);
}

TEST_CASE("embedding validity") {
  auto host = fx::K(4);
  auto pat = fx::P(2);
  EmbeddingMap ok{{3, 1, 0}, {{1, 3}, {0, 1}}};
  CHECK(is_valid_embedding(ok, pat, host));
  EmbeddingMap clash{{1, 1, 0}, {{1, 1}, {0, 1}}};
  CHECK_FALSE(is_valid_embedding(clash, pat, host));
  EmbeddingMap wrong_edge{{3, 1, 0}, {{1, 3}, {0, 2}}};
  CHECK_FALSE(is_valid_embedding(wrong_edge, pat, host));
}

TEST_CASE("hypergraph and coloring JSON round trips") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto g = brute::random_graph(rng, 6, 1 + t % 4, 0.5);
    CHECK(parse_hypergraph(serialize(g)) == g);
    std::vector<int> colors;
    for (std::size_t i = 0; i < g.size(); ++i) colors.push_back(static_cast<int>(rng() % 4));
    EdgeColoring c(g, colors);
    CHECK(parse_coloring(serialize(c)) == c);
    CHECK(serialize(parse_coloring(serialize(c))) == serialize(c));
  }
  VertexPartition p({{0, 2}, {}, {1, 3}});
  CHECK(parse_partition(serialize(p)) == p);
  CHECK(serialize(fx::K(3)) == "{\"edges\":[[0,1],[0,2],[1,2]],\"n\":3,\"r\":2}\n");
}

TEST_CASE("parse errors carry a location") {
  auto location = [](auto&& fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.location();
    }
    return std::string("none");
  };
  CHECK(location([] { parse_hypergraph(R"({"n":3,"r":2,"edges":[[0,1],[1,0]]})"); }) == "/edges/1");
  CHECK(location([] { parse_hypergraph(R"({"n":3,"r":2,"edges":[[0,1],[1,5]]})"); }) == "/edges/1/1");
  CHECK(location([] { parse_hypergraph("{\"n\":3,\n \"r\":2,\n \"edges\": [[0,1]"); }).rfind("line 3", 0) == 0);
  CHECK(location([] { parse_hypergraph(R"({"n":3,"edges":[]})"); }) == "/");
  const char* missing = R"({"host":{"n":3,"r":2,"edges":[[0,1],[0,2],[1,2]]},
    "colors":[{"edge":[0,1],"color":0},{"edge":[0,2],"color":1}]})";
  CHECK(location([&] { parse_coloring(missing); }) == "/colors");
  const char* twice = R"({"host":{"n":3,"r":2,"edges":[[0,1],[0,2]]},
    "colors":[{"edge":[0,1],"color":0},{"edge":[1,0],"color":1}]})";
  CHECK(location([&] { parse_coloring(twice); }) == "/colors/1");
  const char* foreign = R"({"host":{"n":3,"r":2,"edges":[[0,1]]},"colors":[{"edge":[1,2],"color":0}]})";
  CHECK(location([&] { parse_coloring(foreign); }) == "/colors/0");
  CHECK(location([] { parse_partition(R"({"blocks":[[0,1],[1]]})"); }) == "/blocks");
}
