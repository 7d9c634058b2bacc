#pragma once

// Invertibility of the eccentricity matrix of a Cartesian product of trees.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecclab/catalog.hpp"
#include "ecclab/eccentric.hpp"
#include "ecclab/int_matrix.hpp"
#include "ecclab/product.hpp"
#include "ecclab/tree.hpp"

namespace ecclab {

inline constexpr std::size_t kDefaultMatrixCap = 4096;

// T_1 [] ... [] T_k as a graph; a single factor is returned unchanged.
inline ProductGraph tree_product(std::span<const Tree> trees, std::size_t cap) {
  if (trees.empty()) throw input_error("need at least one tree");
  if (trees.size() == 1) {
    if (trees[0].num_vertices() > cap) throw resource_error("matrix side exceeds the cap");
    return {trees[0].graph(), ProductIndexMap({trees[0].num_vertices()})};
  }
  std::vector<Graph> graphs;
  for (const auto& t : trees) graphs.push_back(t.graph());
  return cartesian_product(graphs, cap);
}

// T [] P_2 [] ... [] P_2 with `copies` factors of P_2.
inline ProductGraph tree_box_p2_power(const Tree& t, std::size_t copies,
                                      std::size_t cap = kDefaultMatrixCap) {
  std::vector<Tree> trees{t};
  for (std::size_t i = 0; i < copies; ++i) trees.emplace_back(path_graph(2));
  return tree_product(trees, cap);
}

// Exactly one factor is a star (P_2 and P_3 included) or P_4 and all others are P_2.
inline bool predicted_invertible(std::span<const Tree> trees) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!is_star(trees[i]) && !is_p4(trees[i])) continue;
    bool rest_p2 = true;
    for (std::size_t j = 0; j < trees.size() && rest_p2; ++j) {
      rest_p2 = j == i || trees[j].num_vertices() == 2;
    }
    if (rest_p2) return true;
  }
  return false;
}

struct InvertibilityCheck {
  bool predicted = false;
  bool computed = false;
  bool agree = false;
  BigInt det;
};

inline InvertibilityCheck check_invertibility_classification(
    std::span<const Tree> trees, std::size_t cap = kDefaultMatrixCap) {
  const ProductGraph product = tree_product(trees, cap);
  InvertibilityCheck out;
  out.predicted = predicted_invertible(trees);
  out.det = determinant(eccentricity_matrix(product.graph));
  out.computed = out.det != 0;
  out.agree = out.predicted == out.computed;
  return out;
}

// Exact det of E(S_n [] P_2^j) next to the closed form built from its entries.
// With a the smallest and b the largest nonzero entry, the single-block form is
// (-1)^n * n * a^2 * b^(n-1); the full matrix is that block Kronecker the antidiagonal
// J of side 2^j, so det = block^(2^j) * det(J)^(n+1).
struct StarProbe {
  BigInt det;
  BigInt smallest_entry;  // a
  BigInt largest_entry;   // b
  BigInt block_det;       // (-1)^n * n * a^2 * b^(n-1)
  BigInt predicted_det;   // block_det^(2^j) * det(J_{2^j})^(n+1)
  bool matches_block_form = false;  // |det| == n a^2 b^(n-1)
  bool matches_power_form = false;  // det == predicted_det
  std::string factored_form;
};

inline StarProbe star_product_determinant_probe(std::size_t n_leaves, std::size_t num_p2,
                                                std::size_t cap = kDefaultMatrixCap) {
  if (n_leaves < 2) throw input_error("star probe needs at least two leaves");
  if (num_p2 > 3) throw input_error("star probe supports 0..3 copies of P_2");
  const ProductGraph g = tree_box_p2_power(Tree(star_graph(n_leaves)), num_p2, cap);
  const IntMatrix m = eccentricity_matrix(g.graph);
  StarProbe p;
  p.det = determinant(m);
  bool first = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (first || m(i, j) < p.smallest_entry) p.smallest_entry = m(i, j);
      if (first || m(i, j) > p.largest_entry) p.largest_entry = m(i, j);
      first = false;
    }
  }
  const BigInt n = n_leaves;
  const BigInt magnitude = n * p.smallest_entry * p.smallest_entry *
                           boost::multiprecision::pow(p.largest_entry,
                                                      static_cast<unsigned>(n_leaves - 1));
  p.block_det = n_leaves % 2 == 0 ? magnitude : BigInt(-magnitude);
  const std::size_t j_side = std::size_t{1} << num_p2;
  const BigInt j_det = determinant(antidiagonal_j(j_side));
  p.predicted_det = boost::multiprecision::pow(p.block_det, static_cast<unsigned>(j_side)) *
                    boost::multiprecision::pow(j_det, static_cast<unsigned>(n_leaves + 1));
  p.matches_block_form = boost::multiprecision::abs(p.det) == magnitude;
  p.matches_power_form = p.det == p.predicted_det;
  p.factored_form = "((-1)^" + std::to_string(n_leaves) + " * " + std::to_string(n_leaves) +
                    " * " + p.smallest_entry.str() + "^2 * " + p.largest_entry.str() + "^" +
                    std::to_string(n_leaves - 1) + ")^" + std::to_string(j_side) +
                    " * det(J_" + std::to_string(j_side) + ")^" +
                    std::to_string(n_leaves + 1);
  return p;
}

// scale_target * row(target) == scale_sources * sum of row(s) over sources.
struct RowDependency {
  std::size_t target = 0;
  std::vector<std::size_t> sources;
  BigInt scale_target = 1;
  BigInt scale_sources = 1;
};

inline bool verify_row_dependency(const IntMatrix& m, const RowDependency& dep) {
  if (dep.scale_target == 0 || dep.scale_sources == 0) return false;
  if (std::find(dep.sources.begin(), dep.sources.end(), dep.target) != dep.sources.end()) {
    return false;
  }
  for (std::size_t col = 0; col < m.cols(); ++col) {
    BigInt sum = 0;
    for (std::size_t s : dep.sources) sum += m(s, col);
    if (dep.scale_target * m(dep.target, col) != dep.scale_sources * sum) return false;
  }
  return true;
}

// The row dependency that makes E(T [] P_2^j) singular when T is neither a star nor
// P_4, built from a diametrical path a b c d ...:
//   diameter 3: a leaf e hanging off b (or c) has the same row as a (or d);
//   diameter 4: the row of the center c is a multiple of the sum of its neighbours' rows;
//   diameter > 4: the rows of b and c are proportional.
// Rows are taken at the P_2 coordinates all equal to 0. Returns nullopt for stars and
// P_4. The caller checks the result with verify_row_dependency.
inline std::optional<RowDependency> lemma_dependency_witness(const Tree& t,
                                                             std::size_t copies,
                                                             std::size_t cap = kDefaultMatrixCap) {
  if (is_star(t) || is_p4(t)) return std::nullopt;
  const DistanceData d = all_pairs_distances(t.graph());
  const auto path = diametrical_paths(t, d).front().vertices;
  const ProductGraph g = tree_box_p2_power(t, copies, cap);
  const std::size_t stride = g.index.size() / t.num_vertices();
  auto row_of = [stride](Vertex x) { return x * stride; };

  RowDependency dep;
  if (d.diameter == 3) {
    const Vertex a = path[0], b = path[1], c = path[2], dd = path[3];
    for (Vertex hub : {b, c}) {
      for (Vertex e : t.graph().neighbors(hub)) {
        if (e == a || e == b || e == c || e == dd) continue;
        dep.target = row_of(e);
        dep.sources = {row_of(hub == b ? a : dd)};
        return dep;
      }
    }
    return std::nullopt;
  }

  const IntMatrix m = eccentricity_matrix(g.graph);
  if (d.diameter == 4) {
    const Vertex c = path[2];
    dep.target = row_of(c);
    for (Vertex y : t.graph().neighbors(c)) dep.sources.push_back(row_of(y));
  } else {
    dep.target = row_of(path[1]);
    dep.sources = {row_of(path[2])};
  }
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (m(dep.target, col) == 0) continue;
    BigInt sum = 0;
    for (std::size_t s : dep.sources) sum += m(s, col);
    dep.scale_target = sum;
    dep.scale_sources = m(dep.target, col);
    break;
  }
  return dep;
}

}  // namespace ecclab
