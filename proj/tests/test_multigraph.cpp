#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bngraph/enumerate.hpp"
#include "bngraph/multigraph.hpp"
#include "oracles.hpp"

namespace {

using namespace bng;

TEST(Multigraph, Genus) {
  EXPECT_EQ(genus(families::theta()), 2);
  EXPECT_EQ(genus(families::loop_example()), 2);
  EXPECT_EQ(genus(families::dumbbell()), 2);
  EXPECT_EQ(genus(families::cycle(5)), 1);
  EXPECT_EQ(genus(families::complete(4)), 3);
  EXPECT_EQ(genus(Multigraph()), 0);
}

TEST(Multigraph, ChainOfLoopsCounts) {
  for (int g = 2; g <= 4; ++g) {
    const Multigraph c = families::chain_of_loops(g);
    EXPECT_EQ(c.vertex_count(), g * (2 * g - 1) - (g - 1));
    EXPECT_EQ(c.genus(), g);
    EXPECT_FALSE(c.has_loops());
  }
  const Multigraph c2 = families::chain_of_loops(2);
  EXPECT_EQ(c2.vertex_count(), 5);
  EXPECT_EQ(c2.edge_count(), 6u);
  const Multigraph c3 = families::chain_of_loops(3);
  EXPECT_EQ(c3.vertex_count(), 13);
  EXPECT_EQ(c3.edge_count(), 15u);
  EXPECT_THROW(families::chain_of_loops(1), ValidationError);
}

TEST(Multigraph, Intersection) {
  const Multigraph theta = families::theta();
  EXPECT_EQ(intersection(theta, 0, 1), 3);
  EXPECT_EQ(intersection(theta, 0, 0), -3);
  EXPECT_EQ(intersection(families::dumbbell(), 0, 0), -1);
  const Multigraph loop1 = families::loop_example();
  EXPECT_EQ(loop1.degree(0), 4);
  EXPECT_EQ(intersection(loop1, 0, 0), -2);
  EXPECT_EQ(intersection(loop1, 0, 1), 2);
  EXPECT_THROW(intersection(loop1, 0, 2), ValidationError);
}

TEST(Multigraph, LaplacianExamples) {
  const IntMatrix c3 = laplacian_matrix(families::cycle(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c3(i, j), i == j ? -2 : 1);
  const IntMatrix th = laplacian_matrix(families::theta());
  EXPECT_EQ(th(0, 0), -3);
  EXPECT_EQ(th(0, 1), 3);
  const IntMatrix single_loop = laplacian_matrix(Multigraph::from_edges(1, {{0, 0}}));
  EXPECT_EQ(single_loop(0, 0), 0);
}

TEST(Multigraph, LaplacianSymmetricWithZeroRowSums) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 1 + trial % 7, trial % 5, trial % 3);
    const IntMatrix m = laplacian_matrix(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(m(i, j), m(j, i));
        sum += m(i, j);
      }
      EXPECT_EQ(sum, 0);
    }
  }
}

TEST(Multigraph, RejectsBadInput) {
  EXPECT_THROW(Multigraph::from_edges(3, {{0, 1}}), ValidationError);
  EXPECT_THROW(Multigraph::from_edges(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(Multigraph::from_edges(0, {}), ValidationError);
}

TEST(Multigraph, StructuralEquality) {
  EXPECT_EQ(Multigraph::from_edges(2, {{1, 0}, {0, 1}, {1, 0}}), families::theta());
  EXPECT_FALSE(families::theta() == families::dumbbell());
}

TEST(Subdivision, Uniform) {
  const RefinementMap c3 = subdivide_uniform(families::cycle(3), 1);
  EXPECT_EQ(c3.target.vertex_count(), 6);
  EXPECT_TRUE(isomorphic(c3.target, families::cycle(6)));
  std::set<Vertex> image;
  for (Vertex v = 0; v < 3; ++v) image.insert(c3(v));
  EXPECT_EQ(image.size(), 3u);
  for (Vertex v : image)
    for (Vertex w : c3.target.neighbors(v)) EXPECT_FALSE(image.contains(w));

  const RefinementMap th = subdivide_uniform(families::theta(), 2);
  EXPECT_EQ(th.target.vertex_count(), 8);
  EXPECT_EQ(th.target.edge_count(), 9u);
  EXPECT_EQ(th.target.genus(), 2);

  const RefinementMap l1 = subdivide_uniform(families::loop_example(), 1);
  EXPECT_EQ(l1.target.vertex_count(), 5);
  EXPECT_EQ(l1.target.genus(), 2);
  EXPECT_FALSE(l1.target.has_loops());

  const RefinementMap id = subdivide_uniform(families::theta(), 0);
  EXPECT_EQ(id.target, families::theta());
  EXPECT_THROW(subdivide_uniform(families::theta(), -1), ValidationError);
}

TEST(Subdivision, Loops) {
  const RefinementMap l1 = subdivide_loops(families::loop_example());
  EXPECT_EQ(l1.target.vertex_count(), 3);
  EXPECT_FALSE(l1.target.has_loops());
  EXPECT_EQ(l1.target.multiplicity(0, 1), 2);
  EXPECT_EQ(l1.target.multiplicity(0, 2), 2);

  const std::vector<int> counts{2, 3};
  const RefinementMap db = subdivide_loops(families::dumbbell(), counts);
  EXPECT_EQ(db.target.vertex_count(), 7);
  EXPECT_EQ(db.target.genus(), 2);
  EXPECT_FALSE(db.target.has_loops());

  const RefinementMap k4 = subdivide_loops(families::complete(4));
  EXPECT_EQ(k4.target, families::complete(4));

  const std::vector<int> wrong{1};
  EXPECT_THROW(subdivide_loops(families::dumbbell(), wrong), ValidationError);
  const std::vector<int> zero{0, 1};
  EXPECT_THROW(subdivide_loops(families::dumbbell(), zero), ValidationError);
}

TEST(Subdivision, PreservesGenusAndNewVerticesAreValencyTwo) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 1 + trial % 6, trial % 4, 1 + trial % 3);
    for (const RefinementMap& map : {subdivide_uniform(g, 1 + trial % 2), subdivide_loops(g)}) {
      EXPECT_EQ(map.target.genus(), g.genus());
      std::set<Vertex> image(map.inclusion.begin(), map.inclusion.end());
      EXPECT_EQ(image.size(), map.inclusion.size());
      for (Vertex v = 0; v < map.target.vertex_count(); ++v) {
        if (image.contains(v)) continue;
        EXPECT_EQ(map.target.degree(v), 2);
        EXPECT_EQ(map.target.loops(v), 0);
      }
    }
  }
}

TEST(Enumerate, CubicMatchesBruteForce) {
  for (int g = 2; g <= 4; ++g) {
    const auto graphs = enumerate_cubic(g);
    const auto expected = oracle::cubic_classes(g);
    EXPECT_EQ(graphs.size(), expected.size()) << "genus " << g;
    std::set<std::vector<int>> seen;
    for (const Multigraph& m : graphs) {
      EXPECT_EQ(m.genus(), g);
      EXPECT_EQ(m.vertex_count(), 2 * g - 2);
      for (Vertex v = 0; v < m.vertex_count(); ++v) EXPECT_EQ(m.degree(v), 3);
      seen.insert(oracle::canonical_form(m));
    }
    EXPECT_EQ(seen, std::set<std::vector<int>>(expected.begin(), expected.end()));
  }
  EXPECT_EQ(enumerate_cubic(2).size(), 2u);
  EXPECT_EQ(enumerate_cubic(3).size(), 5u);
  EXPECT_EQ(enumerate_cubic(4).size(), 17u);
}

TEST(Enumerate, CubicGenusThreeContainsK4) {
  const auto graphs = enumerate_cubic(3);
  EXPECT_TRUE(std::any_of(graphs.begin(), graphs.end(),
                          [](const Multigraph& m) { return isomorphic(m, families::complete(4)); }));
}

TEST(Enumerate, CapAndRangeErrors) {
  EXPECT_THROW(enumerate_cubic(1), ValidationError);
  EXPECT_THROW(enumerate_cubic(4, 3), CapExceeded);
  EXPECT_THROW(enumerate_min_valency3(4, 3), CapExceeded);
}

TEST(Enumerate, MinValencyThree) {
  for (int g = 2; g <= 3; ++g) {
    for (const Multigraph& m : enumerate_min_valency3(g)) {
      EXPECT_EQ(m.genus(), g);
      for (Vertex v = 0; v < m.vertex_count(); ++v) EXPECT_GE(m.degree(v), 3);
    }
  }
  EXPECT_EQ(enumerate_min_valency3(2).size(), 3u);
  EXPECT_EQ(enumerate_min_valency3(3).size(), 15u);
}

TEST(Enumerate, CanonicalFormAgreesWithBruteForce) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 6;
    const Multigraph a = oracle::random_multigraph(rng, n, trial % 5, trial % 2);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : a.edges()) edges.emplace_back(perm[e.u], perm[e.w]);
    const Multigraph b = Multigraph::from_edges(n, edges);
    EXPECT_EQ(canonical_form(a), canonical_form(b));
    EXPECT_TRUE(isomorphic(a, b));
    EXPECT_TRUE(isomorphic(canonical_relabel(a), a));

    const Multigraph c = oracle::random_multigraph(rng, n, trial % 5, trial % 2);
    EXPECT_EQ(isomorphic(a, c), oracle::canonical_form(a) == oracle::canonical_form(c));
  }
}

TEST(Enumerate, AutomorphismsAndEdgeConnectivity) {
  EXPECT_EQ(automorphism_count(families::complete(4)), 24);
  EXPECT_EQ(edge_connectivity(families::complete(4)), 3);
  EXPECT_EQ(automorphism_count(families::theta()), 2);
  EXPECT_EQ(edge_connectivity(families::theta()), 3);
  EXPECT_EQ(edge_connectivity(families::chain_of_loops(2)), 2);
  EXPECT_EQ(edge_connectivity(Multigraph()), 0);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 1 + trial % 6, trial % 6, trial % 3);
    EXPECT_EQ(automorphism_count(g), oracle::automorphism_count(g));
    EXPECT_EQ(edge_connectivity(g), oracle::edge_connectivity(g));
  }
}

}  // namespace
