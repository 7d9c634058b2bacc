#include <gtest/gtest.h>

#include "ecclab/catalog.hpp"
#include "ecclab/eccentric.hpp"
#include "ecclab/invertibility.hpp"
#include "oracles.hpp"

using namespace ecclab;

namespace {

std::vector<Tree> tuple(std::initializer_list<Graph> graphs) {
  std::vector<Tree> out;
  for (const auto& g : graphs) out.emplace_back(g);
  return out;
}

}  // namespace

TEST(Invertibility, Examples) {
  EXPECT_TRUE(check_invertibility_classification(tuple({star_graph(3), path_graph(2)})).computed);
  EXPECT_TRUE(
      check_invertibility_classification(tuple({path_graph(4), path_graph(2), path_graph(2)}))
          .computed);
  for (const auto& t : {tuple({path_graph(5), path_graph(2)}), tuple({path_graph(3), path_graph(3)}),
                        tuple({star_graph(3), path_graph(3)})}) {
    const auto c = check_invertibility_classification(t);
    EXPECT_FALSE(c.predicted);
    EXPECT_FALSE(c.computed);
    EXPECT_TRUE(c.agree);
    EXPECT_EQ(c.det, 0);
  }
}

TEST(Invertibility, SingleTreesMatchLaplace) {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto it = enumerate_trees(n);
    std::size_t seen = 0;
    while (auto t = it.next()) {
      if (++seen > 200) break;
      const std::vector<Tree> one{*t};
      const auto c = check_invertibility_classification(one);
      ASSERT_TRUE(c.agree) << canonical_encoding(t->graph());
      if (n <= 6) {
        ASSERT_EQ(c.det, oracle::laplace_det(oracle::naive_eccentricity_matrix(t->graph())));
      }
    }
  }
}

TEST(Invertibility, HypercubesAreInvertible) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const IntMatrix e = eccentricity_matrix(hypercube_graph(k));
    EXPECT_EQ(e, BigInt(k) * antidiagonal_j(std::size_t{1} << k));
    EXPECT_NE(determinant(e), 0);
  }
}

TEST(StarProbe, SmallCases) {
  const StarProbe s3 = star_product_determinant_probe(3, 0);
  EXPECT_EQ(s3.det, -12);
  EXPECT_EQ(s3.smallest_entry, 1);
  EXPECT_EQ(s3.largest_entry, 2);
  EXPECT_TRUE(s3.matches_block_form);
  EXPECT_TRUE(s3.matches_power_form);

  const StarProbe p3 = star_product_determinant_probe(2, 0);
  EXPECT_EQ(p3.det, 4);
  EXPECT_EQ(eccentricity_matrix(path_graph(3)), IntMatrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));

  const StarProbe s3p2 = star_product_determinant_probe(3, 1);
  EXPECT_NE(s3p2.det, 0);
  EXPECT_EQ(s3p2.smallest_entry, 2);
  EXPECT_EQ(s3p2.largest_entry, 3);
  EXPECT_TRUE(s3p2.matches_power_form);
  EXPECT_THROW(star_product_determinant_probe(1, 0), input_error);
}

TEST(StarProbe, PowerFormAcrossSizes) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t j = 0; j <= 3; ++j) {
      const StarProbe p = star_product_determinant_probe(n, j);
      ASSERT_TRUE(p.matches_power_form) << n << " " << j << ": " << p.det << " vs " << p.factored_form;
      ASSERT_EQ(p.smallest_entry, j + 1);
      ASSERT_EQ(p.largest_entry, j + 2);
    }
  }
}

TEST(RowDependency, WitnessesForEachDiameterCase) {
  // Diameter 3 (double star), 4 and 6.
  for (const Graph& g : {double_star_graph(2, 1), path_graph(5), path_graph(7),
                         double_star_graph(3, 3)}) {
    const Tree t(g);
    for (std::size_t copies = 0; copies <= 2; ++copies) {
      const auto dep = lemma_dependency_witness(t, copies);
      ASSERT_TRUE(dep.has_value());
      const IntMatrix m = eccentricity_matrix(tree_box_p2_power(t, copies).graph);
      ASSERT_TRUE(verify_row_dependency(m, *dep)) << canonical_encoding(g) << " j=" << copies;
      ASSERT_EQ(determinant(m), 0);
    }
  }
  EXPECT_FALSE(lemma_dependency_witness(Tree(star_graph(4)), 1).has_value());
  EXPECT_FALSE(lemma_dependency_witness(Tree(path_graph(4)), 1).has_value());
}

TEST(RowDependency, VerifierRejectsFalseClaims) {
  const IntMatrix m{{1, 2}, {3, 4}};
  EXPECT_FALSE(verify_row_dependency(m, {0, {1}, 1, 1}));
  EXPECT_TRUE(verify_row_dependency(IntMatrix({{2, 4}, {1, 2}}), {0, {1}, 1, 2}));
  EXPECT_FALSE(verify_row_dependency(m, {0, {0}, 1, 1}));
}
