#include <gtest/gtest.h>

#include "ecclab/catalog.hpp"
#include "ecclab/eccentric.hpp"
#include "oracles.hpp"

using namespace ecclab;

TEST(BuildFamily, Examples) {
  EXPECT_EQ(build_family({Family::path, {5}}), build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  const Graph s33 = build_family({Family::double_star, {3, 3}});
  EXPECT_EQ(s33.num_vertices(), 8u);
  EXPECT_TRUE(s33.adjacent(0, 1));
  EXPECT_EQ(build_family({Family::h_graph, {3}}).num_vertices(), 9u);
  EXPECT_EQ(build_family({Family::grid, {3, 5}}).num_vertices(), 15u);
  EXPECT_THROW(build_family({Family::grid, {3}}), input_error);
  EXPECT_THROW(parse_family("dodecahedron"), input_error);
  EXPECT_EQ(parse_family("complete-bipartite"), Family::complete_bipartite);
}

// Edge lists pinned so that labelings stay stable.
TEST(BuildFamily, StableLabelings) {
  EXPECT_EQ(canonical_encoding(double_star_graph(2, 1)), "5:0-1,0-2,0-3,1-4");
  EXPECT_EQ(canonical_encoding(h_graph(1)), "5:0-1,0-2,0-3,1-2,1-4");
  EXPECT_EQ(canonical_encoding(grid_graph(2, 2)), "4:0-1,0-2,1-3,2-3");
  EXPECT_EQ(canonical_encoding(hypercube_graph(2)), "4:0-1,0-2,1-3,2-3");
  EXPECT_EQ(canonical_encoding(star_graph(2)), "3:0-1,0-2");
  EXPECT_EQ(canonical_encoding(complete_bipartite_graph(1, 2)), "3:0-1,0-2");
}

TEST(ExpectedEccentric, Examples) {
  const Graph e8 = expected_eccentric({Family::path, {8}});
  EXPECT_TRUE(e8.adjacent(0, 7));
  EXPECT_EQ(e8.degree(0), 4u);
  EXPECT_EQ(e8.degree(7), 4u);
  EXPECT_TRUE(oracle::isomorphic(e8, double_star_graph(3, 3)));
  EXPECT_TRUE(find_isomorphism(eccentric_graph(path_graph(8)), double_star_graph(3, 3)).has_value());
  EXPECT_TRUE(oracle::isomorphic(expected_eccentric({Family::path, {9}}), h_graph(3)));
  EXPECT_EQ(expected_eccentric({Family::cycle, {6}}), build_graph(6, {{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(expected_eccentric({Family::star, {4}}), complete_graph(5));
  EXPECT_EQ(oracle::naive_eccentric_graph(star_graph(4)), complete_graph(5));
  EXPECT_THROW(expected_eccentric({Family::grid, {3, 3}}), input_error);
}

TEST(ExpectedEccentric, MatchesOracleOnEveryFamilyMember) {
  for (std::size_t n = 2; n <= 16; ++n) {
    ASSERT_EQ(expected_eccentric({Family::path, {n}}), oracle::naive_eccentric_graph(path_graph(n)));
    ASSERT_EQ(expected_eccentric({Family::complete, {n}}),
              oracle::naive_eccentric_graph(complete_graph(n)));
    ASSERT_EQ(expected_eccentric({Family::star, {n}}), oracle::naive_eccentric_graph(star_graph(n)));
    if (n >= 3) {
      ASSERT_EQ(expected_eccentric({Family::cycle, {n}}),
                oracle::naive_eccentric_graph(cycle_graph(n)));
    }
  }
  for (std::size_t s = 1; s <= 6; ++s) {
    for (std::size_t t = 1; t <= 6; ++t) {
      ASSERT_EQ(expected_eccentric({Family::complete_bipartite, {s, t}}),
                oracle::naive_eccentric_graph(complete_bipartite_graph(s, t)));
    }
  }
}
