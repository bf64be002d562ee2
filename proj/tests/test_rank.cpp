#include <gtest/gtest.h>

#include <random>

#include "bngraph/corpus.hpp"
#include "bngraph/divisor.hpp"
#include "bngraph/io.hpp"
#include "bngraph/rank.hpp"
#include "oracles.hpp"

namespace {

using namespace bng;

Divisor make(const Multigraph& g, std::vector<std::int64_t> c) { return Divisor(g, std::move(c)); }

TEST(Rank, LoopExample) {
  const Multigraph g = families::loop_example();
  const Divisor vw = make(g, {1, 1});
  const Divisor two_v = make(g, {2, 0});
  EXPECT_EQ(rank(vw).rank, 1);
  EXPECT_EQ(rank_sharp(vw).rank, 0);
  EXPECT_EQ(rank(two_v).rank, 1);
  EXPECT_EQ(rank_sharp(two_v).rank, 1);
}

TEST(Rank, RefinementDoesNotPreserveRank) {
  const Multigraph g = families::loop_example();
  const RefinementMap map = subdivide_loops(g);
  const Divisor vw = make(g, {1, 1});
  EXPECT_EQ(rank(vw).rank, 1);
  EXPECT_EQ(rank(transport(map, vw)).rank, 0);
}

TEST(Rank, Basics) {
  const Multigraph theta = families::theta();
  EXPECT_EQ(rank(Divisor(theta)).rank, 0);
  EXPECT_EQ(rank(make(theta, {-1, 0})).rank, -1);
  EXPECT_EQ(rank(make(theta, {5, -6})).rank, -1);
  EXPECT_EQ(rank(canonical_divisor(theta)).rank, 1);
  EXPECT_EQ(rank(make(families::complete(4), {1, 1, 0, 0})).rank, 0);
}

TEST(Rank, CertificatesVerify) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 2 + trial % 4, trial % 4, 0);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(-1, 4)(rng));
    const RankResult r = rank(d);
    EXPECT_TRUE(verify_certificate(d, r));
    EXPECT_EQ(r.certificate.degree(), r.rank + 1);
    EXPECT_TRUE(r.certificate.is_effective());
  }
}

TEST(Rank, AgreesWithDefinitionOracle) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 2 + trial % 3, trial % 3, trial % 2);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(-1, 3)(rng));
    EXPECT_EQ(rank(d).rank, oracle::rank(d)) << format_divisor(d);
  }
}

TEST(Rank, NaiveAndMemoizedAgree) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 2 + trial % 4, trial % 4, trial % 2);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(-1, 2 * g.genus() + 1)(rng));
    EXPECT_EQ(rank(d, {.base = 0, .memoize = true}).rank, rank(d, {.base = 0, .memoize = false}).rank);
  }
}

TEST(Rank, IndependentOfBaseVertex) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 2 + trial % 5, trial % 4, trial % 2);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(0, 2 * g.genus())(rng));
    const int r0 = rank(d).rank;
    for (Vertex q = 1; q < g.vertex_count(); ++q) EXPECT_EQ(rank(d, {.base = q}).rank, r0);
  }
}

TEST(Rank, InvariantUnderEquivalenceAndBoundedByDegree) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 2 + trial % 4, trial % 4, trial % 3);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(-2, 5)(rng));
    Divisor moved = d;
    moved += std::uniform_int_distribution<int>(-2, 2)(rng) * twister(g, trial % g.vertex_count());
    const int r = rank(d).rank;
    EXPECT_EQ(rank(moved).rank, r);
    EXPECT_LE(r, std::max<std::int64_t>(-1, d.degree()));
    const int rs = rank_sharp(d).rank;
    EXPECT_LE(rs, r);
  }
}

TEST(Rank, SharpEqualsPlainWithoutLoops) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 2 + trial % 4, trial % 4, 0);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(-1, 4)(rng));
    EXPECT_EQ(rank_sharp(d).rank, rank(d).rank);
  }
}

TEST(Rank, SharpIndependentOfLoopCounts) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 1 + trial % 4, trial % 3, 1 + trial % 2);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(0, 2 * g.genus())(rng));
    const int base = rank_sharp(d).rank;
    std::vector<int> twos(static_cast<std::size_t>(g.loop_count()), 2);
    std::vector<int> mixed(static_cast<std::size_t>(g.loop_count()));
    for (std::size_t i = 0; i < mixed.size(); ++i) mixed[i] = 1 + static_cast<int>(i % 2);
    EXPECT_EQ(rank_sharp(d, {}, std::span<const int>(twos)).rank, base);
    EXPECT_EQ(rank_sharp(d, {}, std::span<const int>(mixed)).rank, base);
  }
}

TEST(Rank, RiemannRochLoopless) {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 2 + trial % 4, 1 + trial % 4, 0);
    const int genus = g.genus();
    const Divisor k = canonical_divisor(g);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(-2, 2 * genus)(rng));
    EXPECT_EQ(rank(d).rank - rank(k - d).rank, d.degree() - genus + 1);
  }
}

TEST(Rank, RiemannRochWithLoopsThroughSharpRank) {
  // The canonical divisor transports to the canonical divisor of the loop
  // subdivision, so r#(D) - r#(K - D) = deg D - g + 1 on loopy graphs too.
  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 1 + trial % 4, trial % 3, 1 + trial % 2);
    const Divisor k = canonical_divisor(g);
    EXPECT_EQ(transport(subdivide_loops(g), k), canonical_divisor(subdivide_loops(g).target));
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(-2, 2 * g.genus())(rng));
    EXPECT_EQ(rank_sharp(d).rank - rank_sharp(k - d).rank, d.degree() - g.genus() + 1);
  }
}

TEST(Rank, SubdivisionInvarianceLoopless) {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 2 + trial % 3, 1 + trial % 3, 0);
    const RefinementMap map = subdivide_uniform(g, 1 + trial % 2);
    const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(0, 2 * g.genus())(rng));
    EXPECT_EQ(rank(transport(map, d)).rank, rank(d).rank);
  }
}

TEST(Rank, CliffordOnBundledLooplessGraphs) {
  std::mt19937 rng(79);
  for (const auto& entry : loopless(bundled_corpus())) {
    const Multigraph& g = entry.graph;
    if (g.genus() < 1) continue;
    const Divisor k = canonical_divisor(g);
    for (int i = 0; i < 20; ++i) {
      const Divisor d = oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(0, 2 * g.genus() - 2)(rng));
      if (rank(k - d).rank < 0) continue;
      EXPECT_LE(2 * rank(d).rank, d.degree()) << entry.name;
    }
  }
}

}  // namespace
