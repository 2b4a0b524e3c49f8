#include <catch_amalgamated.hpp>

#include <random>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "rbx/canonical.hpp"
#include "rbx/chromatic.hpp"
#include "rbx/errors.hpp"

using namespace rbx;

namespace {

Hypergraph minus(const Hypergraph& g, std::vector<Edge> d) { return remove_edges(g, d); }

}  // namespace

TEST_CASE("chromatic number of named graphs") {
  CHECK(chromatic_number(fx::K(4)) == 4);
  CHECK(chromatic_number(fx::C(5)) == 3);
  CHECK(chromatic_number(fx::K33()) == 2);
  CHECK(chromatic_number(Hypergraph(0, 2, {})) == 0);
  CHECK(chromatic_number(Hypergraph(3, 2, {})) == 1);
  CHECK_THROWS_AS(chromatic_number(complete_hypergraph(4, 3)), WrongUniformity);
}

TEST_CASE("chromatic number agrees with assignment enumeration on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n)) REQUIRE(chromatic_number(g) == brute::chromatic(g));
}

TEST_CASE("chromatic number agrees with enumeration on random 7-vertex graphs and is monotone") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    auto g = brute::random_graph(rng, 7, 2, 0.3 + 0.01 * t);
    int chi = chromatic_number(g);
    REQUIRE(chi == brute::chromatic(g));
    auto col = k_coloring(g, chi);
    REQUIRE(col);
    CHECK(brute::is_proper(g, *col));
    if (chi > 0) CHECK_FALSE(k_coloring(g, chi - 1));
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(chromatic_number(minus(g, {g.edge(i)})) <= chi);
  }
}

TEST_CASE("edge criticality") {
  auto k4 = is_edge_critical(fx::K(4));
  CHECK(k4.critical);
  CHECK(k4.edge == Edge{0, 1});
  CHECK_FALSE(is_edge_critical(fx::C(4)).critical);
  CHECK(is_edge_critical(fx::C(5)).critical);
  CHECK_THROWS_AS(is_edge_critical(Hypergraph(3, 2, {})), NotApplicable);
}

TEST_CASE("doubly critical reports") {
  auto k4 = doubly_critical_report(fx::K(4), 3);
  CHECK(k4.is_doubly_p_critical);
  REQUIRE(k4.witness_pair);
  CHECK(k4.witness_pair->first == Edge{0, 1});
  CHECK(k4.witness_pair->second == Edge{2, 3});
  CHECK_FALSE(k4.failing_edge);

  auto bow = doubly_critical_report(fx::bowtie(), 3);
  CHECK(bow.is_doubly_p_critical);
  REQUIRE(bow.witness_pair);
  CHECK(chromatic_number(minus(fx::bowtie(), {bow.witness_pair->first, bow.witness_pair->second})) == 2);

  auto c5 = doubly_critical_report(fx::C(5), 3);
  CHECK_FALSE(c5.is_doubly_p_critical);
  CHECK(c5.failing_edge == Edge{0, 1});
  CHECK_FALSE(c5.witness_pair);

  // the literal definition shifts cliques by one
  CHECK(doubly_critical_report(fx::K(5), 4).is_doubly_p_critical);
  CHECK(doubly_critical_report(fx::K(6), 5).is_doubly_p_critical);
  CHECK_FALSE(doubly_critical_report(fx::K(4), 4).is_doubly_p_critical);
  CHECK_FALSE(doubly_critical_report(fx::K(3), 2).is_doubly_p_critical);
  CHECK(doubly_critical_report(fx::P(2), 2).is_doubly_p_critical);
}

TEST_CASE("doubly critical verdicts re-verify by enumeration") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n))
      for (int p = 2; p <= 4; ++p) {
        if (g.size() < 2) continue;
        auto rep = doubly_critical_report(g, p);
        bool every = true;
        for (std::size_t i = 0; i < g.size(); ++i) every = every && brute::chromatic(minus(g, {g.edge(i)})) >= p;
        bool some = false;
        for (std::size_t i = 0; i < g.size() && !some; ++i)
          for (std::size_t j = i + 1; j < g.size() && !some; ++j)
            some = brute::chromatic(minus(g, {g.edge(i), g.edge(j)})) == p - 1;
        REQUIRE(rep.is_doubly_p_critical == (every && some));
        CHECK(rep.is_doubly_p_critical == (rep.witness_pair && !rep.failing_edge));
        if (rep.failing_edge) CHECK(brute::chromatic(minus(g, {*rep.failing_edge})) <= p - 1);
        if (rep.witness_pair)
          CHECK(brute::chromatic(minus(g, {rep.witness_pair->first, rep.witness_pair->second})) == p - 1);
        if (rep.is_doubly_p_critical) CHECK(rep.chi >= p);
      }
}
