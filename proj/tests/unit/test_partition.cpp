#include <catch_amalgamated.hpp>

#include <random>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "rbx/canonical.hpp"
#include "rbx/chromatic.hpp"
#include "rbx/errors.hpp"
#include "rbx/partition.hpp"

using namespace rbx;

namespace {

// partitions of an n-set into at most k blocks
std::uint64_t stirling_sum(int n, int k) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j) s[i][j] = s[i - 1][j - 1] + static_cast<std::uint64_t>(j) * s[i - 1][j];
  std::uint64_t total = 0;
  for (int j = 0; j <= k; ++j) total += s[n][j];
  return total;
}

}  // namespace

TEST_CASE("partition enumeration") {
  auto three = enumerate_partitions(3, 2);
  REQUIRE(three.size() == 4);
  CHECK(three[0].blocks() == std::vector<std::vector<int>>{{0, 1, 2}, {}});
  CHECK(three[1].blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(three[2].blocks() == std::vector<std::vector<int>>{{0, 2}, {1}});
  CHECK(three[3].blocks() == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(enumerate_partitions(4, 1).size() == 1);
  CHECK(enumerate_partitions(4, 4).size() == 15);
  for (int n = 0; n <= 8; ++n)
    for (int k = 1; k <= 5; ++k) {
      std::uint64_t count = 0;
      PartitionStream s(n, k);
      while (auto part = s.next()) {
        CHECK(part->block_count() == static_cast<std::size_t>(k));
        ++count;
      }
      CHECK(count == stirling_sum(n, k));
    }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(VertexPartition({{0, 1}, {1, 2}}), InvalidParameters);
  CHECK_THROWS_AS(VertexPartition({{0, 2}}), InvalidParameters);
  CHECK_NOTHROW(VertexPartition({{1, 0}, {}, {2}}));
  CHECK_THROWS_AS(index_vector(fx::K(4), VertexPartition({{0, 1, 2}})), InvalidParameters);
}

TEST_CASE("index vectors") {
  CHECK(index_vector(fx::K(4), VertexPartition({{0, 1}, {2, 3}})).counts == std::vector<std::size_t>{1, 1});
  CHECK(index_vector(fx::K(4), VertexPartition({{0, 1, 2}, {3}})).counts == std::vector<std::size_t>{3, 0});
  CHECK(index_vector(fx::C(5), VertexPartition({{0, 1, 2}, {3, 4}})).counts == std::vector<std::size_t>{2, 1});
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto g = brute::random_graph(rng, 7, 2, 0.5);
    std::vector<int> labels;
    for (int v = 0; v < 7; ++v) labels.push_back(static_cast<int>(rng() % 3));
    auto p = VertexPartition::from_labels(labels, 3);
    auto iv = index_vector(g, p);
    std::size_t crossing = 0;
    for (const auto& e : g.edges()) crossing += labels[e[0]] != labels[e[1]];
    CHECK(iv.norm_1() + crossing == g.size());
    CHECK(iv.counts == brute::block_counts(g, labels, 3));
  }
}

TEST_CASE("class examples") {
  auto k4 = class_of(fx::K(4), 3);
  CHECK(k4.ell == 2);
  REQUIRE(k4.witness);
  CHECK(k4.witness->blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(k4.vector->counts == std::vector<std::size_t>{1, 1});
  CHECK(class_of(fx::bowtie(), 3).ell == 2);
  CHECK(class_of(fx::K(5), 4).ell == 2);
  CHECK(class_of(fx::C(4), 3).ell == 0);
  CHECK(class_of(fx::K(4), 2).ell == 2);
  CHECK_THROWS_AS(class_of(complete_hypergraph(4, 3), 3), WrongUniformity);
}

TEST_CASE("configuration witnesses") {
  auto w = config_witness(fx::bowtie(), 3);
  REQUIRE(w);
  auto canon = index_vector(fx::bowtie(), *w).canonical();
  CHECK(canon == std::vector<std::size_t>{2, 0});
  CHECK_FALSE(config_witness(fx::K(5), 4));
  CHECK_FALSE(config_witness(fx::K(4), 3));
}

TEST_CASE("class and configuration witness agree with labeled enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n))
      for (int p = 2; p <= 4; ++p) {
        auto c = class_of(g, p);
        REQUIRE(c.ell == brute::class_of(g, p));
        if (c.witness) {
          auto iv = index_vector(g, *c.witness);
          CHECK(iv.norm_inf() == (c.ell == 0 ? 0u : 1u));
          CHECK(static_cast<int>(iv.norm_1()) == c.ell);
        }
        CHECK(config_witness(g, p).has_value() == brute::has_two_zero_config(g, p));
      }
}

TEST_CASE("class is invariant under relabeling and block order") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 40; ++t) {
    auto g = brute::random_graph(rng, 7, 2, 0.6);
    auto c = class_of(g, 4);
    auto perm = brute::random_perm(rng, 7);
    CHECK(class_of(g.relabeled(perm), 4).ell == c.ell);
    if (c.witness) {
      auto re = c.witness->reordered(std::vector<std::size_t>{2, 0, 1});
      CHECK(index_vector(g, re).canonical() == c.vector->canonical());
    }
  }
}

TEST_CASE("doubly critical graphs have class between 2 and p") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : nonisomorphic_graphs(n))
      for (int p = 3; p <= 4; ++p) {
        if (g.size() < 2 || !doubly_critical_report(g, p).is_doubly_p_critical) continue;
        int ell = class_of(g, p).ell;
        CHECK(ell >= 2);
        CHECK(ell <= p);
      }
}

TEST_CASE("partition search budget") {
  PartitionSearchOptions tiny{5};
  CHECK_THROWS_AS(class_of(fx::K(8), 5, tiny), BudgetExceeded);
}
