#include <gtest/gtest.h>

#include <random>

#include "ecclab/catalog.hpp"
#include "ecclab/eccentric.hpp"
#include "ecclab/tree.hpp"
#include "oracles.hpp"

using namespace ecclab;

TEST(IsEccentric, AsymmetricOnP4) {
  const auto p = eccentricity_profile(path_graph(4));
  EXPECT_TRUE(is_eccentric(p, 3, 1));
  EXPECT_FALSE(is_eccentric(p, 1, 3));
  EXPECT_TRUE(is_eccentric(p, 0, 3));
}

TEST(EccentricityProfile, SetsAreNonemptyAndExact) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 2 + trial % 10, 0.2);
    const auto p = eccentricity_profile(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      ASSERT_FALSE(p.eccentric_sets[v].empty());
      for (Vertex u : p.eccentric_sets[v]) ASSERT_EQ(p.distances.at(u, v), p.ecc(v));
    }
  }
}

TEST(EccentricGraph, Examples) {
  EXPECT_EQ(eccentric_graph(path_graph(3)), complete_graph(3));
  EXPECT_EQ(eccentric_graph(cycle_graph(6)), build_graph(6, {{0, 3}, {1, 4}, {2, 5}}));
  const Graph k23 = complete_bipartite_graph(2, 3);
  EXPECT_EQ(eccentric_graph(k23), build_graph(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST(EccentricGraph, DomainErrors) {
  EXPECT_THROW(eccentric_graph(Graph(1)), domain_error);
  EXPECT_THROW(eccentric_graph(Graph(3)), domain_error);
  EXPECT_THROW(eccentricity_matrix(build_graph(4, {{0, 1}, {2, 3}})), domain_error);
}

TEST(EccentricityMatrix, Examples) {
  EXPECT_EQ(eccentricity_matrix(path_graph(2)), IntMatrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(eccentricity_matrix(star_graph(3)),
            IntMatrix({{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}}));
  EXPECT_EQ(eccentricity_matrix(cycle_graph(4)),
            IntMatrix({{0, 0, 2, 0}, {0, 0, 0, 2}, {2, 0, 0, 0}, {0, 2, 0, 0}}));
}

TEST(EccentricGirth, Examples) {
  EXPECT_EQ(eccentric_girth(path_graph(8)), 0u);
  EXPECT_EQ(eccentric_girth(path_graph(7)), 3u);
  EXPECT_EQ(eccentric_girth(cycle_graph(7)), 7u);
}

// Both formulations of E(G), the matrix pattern and symmetry on random connected graphs
// with 2..8 vertices.
TEST(EccentricGraph, MatchesFloydWarshallOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 2 + trial % 7, 0.05 * (trial % 9));
    const Graph e = eccentric_graph(g);
    ASSERT_EQ(e, oracle::naive_eccentric_graph(g)) << canonical_encoding(g);
    const IntMatrix m = eccentricity_matrix(g);
    ASSERT_EQ(m, oracle::naive_eccentricity_matrix(g));
    ASSERT_TRUE(m.is_symmetric());
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex v = 0; v < g.num_vertices(); ++v) ASSERT_EQ(m(u, v) != 0, e.adjacent(u, v));
    }
  }
}

TEST(EccentricGraph, TreesGiveConnectedEccentricGraphs) {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto it = enumerate_trees(n);
    while (auto t = it.next()) ASSERT_TRUE(is_connected(eccentric_graph(t->graph())));
  }
}
