#pragma once

// Cartesian and Kronecker graph products and the eccentric-graph facts about them.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "ecclab/catalog.hpp"
#include "ecclab/eccentric.hpp"
#include "ecclab/graph.hpp"
#include "ecclab/tree.hpp"

namespace ecclab {

inline constexpr std::size_t kDefaultProductCap = 20'000;

// Row-major mixed radix: (x_1, ..., x_k) -> flat index with x_1 most significant.
// For two factors of sizes (m, n) this is (i, j) -> i*n + j.
class ProductIndexMap {
 public:
  ProductIndexMap() = default;

  explicit ProductIndexMap(std::vector<std::size_t> factor_sizes)
      : sizes_(std::move(factor_sizes)), strides_(sizes_.size(), 1) {
    for (std::size_t i = sizes_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * sizes_[i];
    total_ = sizes_.empty() ? 0 : strides_[0] * sizes_[0];
  }

  const std::vector<std::size_t>& factor_sizes() const { return sizes_; }
  std::size_t arity() const { return sizes_.size(); }
  std::size_t size() const { return total_; }
  std::size_t stride(std::size_t factor) const { return strides_[factor]; }

  std::size_t flat(std::span<const Vertex> tuple) const {
    if (tuple.size() != sizes_.size()) throw input_error("tuple arity mismatch");
    std::size_t out = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] >= sizes_[i]) throw input_error("tuple coordinate out of range");
      out += tuple[i] * strides_[i];
    }
    return out;
  }

  std::size_t flat(std::initializer_list<Vertex> tuple) const {
    return flat(std::span<const Vertex>(tuple.begin(), tuple.size()));
  }

  std::vector<Vertex> tuple(std::size_t index) const {
    if (index >= total_) throw input_error("flat index out of range");
    std::vector<Vertex> out(sizes_.size());
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      out[i] = index / strides_[i];
      index %= strides_[i];
    }
    return out;
  }

  Vertex coordinate(std::size_t index, std::size_t factor) const {
    return (index / strides_[factor]) % sizes_[factor];
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
};

struct ProductGraph {
  Graph graph;
  ProductIndexMap index;
};

namespace detail {

inline ProductIndexMap checked_index(std::span<const Graph> factors, std::size_t cap) {
  std::vector<std::size_t> sizes;
  std::size_t total = 1;
  for (const auto& f : factors) {
    sizes.push_back(f.num_vertices());
    if (total > cap / f.num_vertices()) {
      throw resource_error("product exceeds the cap of " + std::to_string(cap) + " vertices");
    }
    total *= f.num_vertices();
  }
  if (total > cap) {
    throw resource_error("product exceeds the cap of " + std::to_string(cap) + " vertices");
  }
  return ProductIndexMap(std::move(sizes));
}

}  // namespace detail

inline ProductGraph cartesian_product(std::span<const Graph> factors,
                                      std::size_t cap = kDefaultProductCap) {
  if (factors.size() < 2) throw input_error("cartesian_product needs at least two factors");
  for (const auto& f : factors) {
    if (f.num_vertices() < 2 || !is_connected(f)) {
      throw input_error("cartesian_product factors must be connected with >= 2 vertices");
    }
  }
  ProductIndexMap index = detail::checked_index(factors, cap);
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < index.size(); ++x) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Vertex xi = index.coordinate(x, i);
      for (Vertex y : factors[i].neighbors(xi)) {
        if (y > xi) edges.push_back({x, x + (y - xi) * index.stride(i)});
      }
    }
  }
  return {Graph(index.size(), std::move(edges)), std::move(index)};
}

inline ProductGraph cartesian_product(std::initializer_list<Graph> factors,
                                      std::size_t cap = kDefaultProductCap) {
  return cartesian_product(std::span<const Graph>(factors.begin(), factors.size()), cap);
}

// (a1, b1) ~ (a2, b2) iff a1 ~ a2 and b1 ~ b2. Flat index a*|B| + b.
inline Graph kronecker_product_graph(const Graph& a, const Graph& b,
                                     std::size_t cap = kDefaultProductCap) {
  if (a.num_vertices() < 2 || b.num_vertices() < 2) {
    throw input_error("kronecker_product_graph needs factors with >= 2 vertices");
  }
  const std::array<Graph, 2> pair{a, b};
  const ProductIndexMap index = detail::checked_index(pair, cap);
  std::vector<Edge> edges;
  for (const auto& ea : a.edges()) {
    for (const auto& eb : b.edges()) {
      edges.push_back(make_edge(index.flat({ea.u, eb.u}), index.flat({ea.v, eb.v})));
      edges.push_back(make_edge(index.flat({ea.u, eb.v}), index.flat({ea.v, eb.u})));
    }
  }
  return Graph(index.size(), std::move(edges));
}

// Distances and eccentricities of the product are the coordinate sums, checked over
// every vertex pair.
inline bool check_additivity(std::span<const Graph> factors,
                             std::size_t cap = kDefaultProductCap) {
  const ProductGraph product = cartesian_product(factors, cap);
  const DistanceData whole = all_pairs_distances(product.graph);
  std::vector<DistanceData> parts;
  for (const auto& f : factors) parts.push_back(all_pairs_distances(f));
  const auto& index = product.index;
  for (std::size_t u = 0; u < index.size(); ++u) {
    std::uint32_t ecc_sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) ecc_sum += parts[i].ecc[index.coordinate(u, i)];
    if (whole.ecc[u] != ecc_sum) return false;
    for (std::size_t v = 0; v < index.size(); ++v) {
      std::uint32_t sum = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        sum += parts[i].at(index.coordinate(u, i), index.coordinate(v, i));
      }
      if (whole.at(u, v) != sum) return false;
    }
  }
  return true;
}

// v is eccentric to u in the product iff v_i is eccentric to u_i in every factor.
inline bool check_componentwise_eccentric(std::span<const Graph> factors,
                                          std::size_t cap = kDefaultProductCap) {
  const ProductGraph product = cartesian_product(factors, cap);
  const EccentricityProfile whole = eccentricity_profile(product.graph);
  std::vector<EccentricityProfile> parts;
  for (const auto& f : factors) parts.push_back(eccentricity_profile(f));
  const auto& index = product.index;
  for (std::size_t u = 0; u < index.size(); ++u) {
    for (std::size_t v = 0; v < index.size(); ++v) {
      bool every = true;
      for (std::size_t i = 0; i < parts.size() && every; ++i) {
        every = is_eccentric(parts[i], index.coordinate(v, i), index.coordinate(u, i));
      }
      if (every != is_eccentric(whole, v, u)) return false;
    }
  }
  return true;
}

// In P_4 (0-1-2-3): 0 ~ 2 and 1 ~ 3 in E(P_4), yet (0,1) and (2,3) are not adjacent in
// E(P_4 [] P_4). Componentwise E-adjacency does not lift to the product.
inline bool p4_box_p4_remark_holds() {
  const Graph p4 = path_graph(4);
  const Graph e4 = eccentric_graph(p4);
  const ProductGraph square = cartesian_product({p4, p4});
  const Graph e = eccentric_graph(square.graph);
  return e4.adjacent(0, 2) && e4.adjacent(1, 3) &&
         !e.adjacent(square.index.flat({0, 1}), square.index.flat({2, 3}));
}

struct VertexTriple {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
};

struct FactorTriple {
  std::size_t factor = 0;
  VertexTriple triple;
};

// Four product vertices a, b, c, d forming a 4-cycle in E(G_1 [] ... [] G_k).
//
// `peak` needs u ~ v ~ w in E(G_s) with e(v) >= max(e(u), e(w)); `valley` needs the
// same in E(G_t) with e(v) <= min(e(u), e(w)). `fillers[i]` for every other factor is
// an E-edge (u_i, v_i) with e(u_i) >= e(v_i); entries at s and t are ignored.
// Coordinates: s takes (u, v, w, v), t takes (v, w, v, u), fillers take (v, u, v, u).
inline std::array<std::size_t, 4> four_cycle_witness(std::span<const Graph> factors,
                                                     const FactorTriple& peak,
                                                     const FactorTriple& valley,
                                                     std::span<const Edge> fillers,
                                                     std::size_t cap = kDefaultProductCap) {
  const std::size_t k = factors.size();
  if (k < 2 || peak.factor >= k || valley.factor >= k || peak.factor == valley.factor) {
    throw precondition_error("four_cycle_witness needs two distinct factor positions");
  }
  if (fillers.size() != k) throw precondition_error("one filler slot per factor is required");
  const ProductIndexMap index = detail::checked_index(factors, cap);

  std::vector<std::array<Vertex, 4>> coords(k);
  for (std::size_t i = 0; i < k; ++i) {
    const DistanceData d = all_pairs_distances(factors[i]);
    auto adjacent = [&](Vertex x, Vertex y) {
      return x < d.n && y < d.n && detail::eccentric_adjacent(d, x, y);
    };
    if (i == peak.factor || i == valley.factor) {
      const auto& [u, v, w] = i == peak.factor ? peak.triple : valley.triple;
      if (!adjacent(u, v) || !adjacent(v, w)) {
        throw precondition_error("triple in factor " + std::to_string(i) +
                                 " is not a path in the eccentric graph");
      }
      if (i == peak.factor) {
        if (d.ecc[v] < std::max(d.ecc[u], d.ecc[w])) {
          throw precondition_error("peak vertex does not have the largest eccentricity");
        }
        coords[i] = {u, v, w, v};
      } else {
        if (d.ecc[v] > std::min(d.ecc[u], d.ecc[w])) {
          throw precondition_error("valley vertex does not have the smallest eccentricity");
        }
        coords[i] = {v, w, v, u};
      }
    } else {
      const auto [u, v] = fillers[i];
      if (!adjacent(u, v) || d.ecc[u] < d.ecc[v]) {
        throw precondition_error("filler in factor " + std::to_string(i) +
                                 " must be an E-edge (u, v) with e(u) >= e(v)");
      }
      coords[i] = {v, u, v, u};
    }
  }

  std::array<std::size_t, 4> out{};
  for (std::size_t corner = 0; corner < 4; ++corner) {
    std::vector<Vertex> tuple(k);
    for (std::size_t i = 0; i < k; ++i) tuple[i] = coords[i][corner];
    out[corner] = index.flat(tuple);
  }
  return out;
}

inline bool is_self_centered(const DistanceData& d) { return d.radius == d.diameter; }

// For self-centered a and b, E(a [] b) equals E(a) x E(b) as labeled graphs under the
// row-major index map.
inline bool check_kronecker_correspondence(const Graph& a, const Graph& b,
                                           std::size_t cap = kDefaultProductCap) {
  const DistanceData da = all_pairs_distances(a);
  const DistanceData db = all_pairs_distances(b);
  if (!is_self_centered(da) || !is_self_centered(db)) {
    throw precondition_error("check_kronecker_correspondence needs self-centered factors");
  }
  const ProductGraph product = cartesian_product({a, b}, cap);
  return eccentric_graph(product.graph) ==
         kronecker_product_graph(eccentric_graph(da), eccentric_graph(db), cap);
}

// Product girth from factor eccentric girths: 3 when every factor has 3; 4 when at
// least two factors have eccentric girth >= 3 and not all are 3; nullopt otherwise.
inline std::optional<std::size_t> predicted_product_girth_general(
    std::span<const std::size_t> factor_girths) {
  const bool all_three = std::all_of(factor_girths.begin(), factor_girths.end(),
                                     [](std::size_t g) { return g == 3; });
  if (all_three) return 3;
  const auto cyclic = std::count_if(factor_girths.begin(), factor_girths.end(),
                                    [](std::size_t g) { return g >= 3; });
  if (cyclic >= 2) return 4;
  return std::nullopt;
}

inline std::optional<std::size_t> predicted_product_girth_general(
    std::span<const Graph> factors) {
  std::vector<std::size_t> girths;
  for (const auto& f : factors) girths.push_back(eccentric_girth(f));
  return predicted_product_girth_general(girths);
}

// True iff some pair of vertices has two common neighbours.
inline bool has_four_cycle(const Graph& g) {
  std::unordered_set<std::uint64_t> seen;
  const std::uint64_t n = g.num_vertices();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!seen.insert(nb[i] * n + nb[j]).second) return true;
      }
    }
  }
  return false;
}

// Eccentric girth of T_1 [] ... [] T_k:
//   0 if every E(T_i) has girth 0; 3 if every E(T_i) has girth 3;
//   6 if all but one factor are P_2 and the remaining E(T_1) is C_4-free with girth 3;
//   4 otherwise.
inline std::size_t predicted_tree_product_girth(std::span<const Tree> trees) {
  if (trees.size() < 2) throw input_error("predicted_tree_product_girth needs >= 2 factors");
  std::vector<std::size_t> girths;
  for (const auto& t : trees) girths.push_back(eccentric_girth(t.graph()));
  if (std::all_of(girths.begin(), girths.end(), [](std::size_t g) { return g == 0; })) return 0;
  if (std::all_of(girths.begin(), girths.end(), [](std::size_t g) { return g == 3; })) return 3;
  const auto non_p2 = std::count_if(trees.begin(), trees.end(),
                                    [](const Tree& t) { return t.num_vertices() != 2; });
  if (non_p2 == 1) {
    const auto it = std::find_if(trees.begin(), trees.end(),
                                 [](const Tree& t) { return t.num_vertices() != 2; });
    const std::size_t i = static_cast<std::size_t>(it - trees.begin());
    if (girths[i] == 3 && !has_four_cycle(eccentric_graph(it->graph()))) return 6;
  }
  return 4;
}

// E(P_m [] P_n) from the quadrant rule: each vertex joins the corner(s) opposite its
// quadrant. Quadrants overlap on middle rows/columns when m or n is odd.
inline Graph grid_eccentric_closed_form(std::size_t m, std::size_t n) {
  if (m < 3 || n < 3) {
    throw unsupported_size_error("grid closed form is stated for m, n >= 3");
  }
  const ProductIndexMap index({m, n});
  auto at = [&](std::size_t i, std::size_t j) { return index.flat({i - 1, j - 1}); };
  const std::size_t m_hi = (m + 1) / 2;
  const std::size_t n_hi = (n + 1) / 2;
  const std::size_t m_lo = m / 2;
  const std::size_t n_lo = n / 2;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t self = at(i, j);
      if (i <= m_hi && j <= n_hi) edges.push_back(make_edge(self, at(m, n)));
      if (i > m_lo && j > n_lo) edges.push_back(make_edge(self, at(1, 1)));
      if (i <= m_hi && j > n_lo) edges.push_back(make_edge(self, at(m, 1)));
      if (i > m_lo && j <= n_hi) edges.push_back(make_edge(self, at(1, n)));
    }
  }
  return Graph(m * n, std::move(edges));
}

// 0 if both even, 4 if exactly one even, 3 if both odd (m, n >= 3).
inline std::size_t grid_girth_rule(std::size_t m, std::size_t n) {
  const bool m_even = m % 2 == 0;
  const bool n_even = n % 2 == 0;
  if (m_even && n_even) return 0;
  if (m_even != n_even) return 4;
  return 3;
}

enum class CycleProductShape {
  matching,          // nm/2 disjoint edges
  disjoint_cycles,   // (even side)/2 cycles of length 2*(odd side)
  kronecker_cycles,  // E(C_n) x E(C_m), 4-regular
};

struct CycleProductReport {
  CycleProductShape shape = CycleProductShape::matching;
  std::size_t regular_degree = 0;
  std::optional<std::size_t> component_count;
  std::optional<std::size_t> component_order;
  std::size_t predicted_girth = 0;
};

inline CycleProductReport cycle_product_structure(std::size_t n, std::size_t m) {
  if (n < 3 || m < 3) throw input_error("cycle_product_structure needs n, m >= 3");
  CycleProductReport r;
  const bool n_even = n % 2 == 0;
  const bool m_even = m % 2 == 0;
  if (n_even && m_even) {
    r.shape = CycleProductShape::matching;
    r.regular_degree = 1;
    r.component_count = n * m / 2;
    r.component_order = 2;
    r.predicted_girth = 0;
  } else if (n_even != m_even) {
    const std::size_t even = n_even ? n : m;
    const std::size_t odd = n_even ? m : n;
    r.shape = CycleProductShape::disjoint_cycles;
    r.regular_degree = 2;
    r.component_count = even / 2;
    r.component_order = 2 * odd;
    r.predicted_girth = 2 * odd;
  } else {
    r.shape = CycleProductShape::kronecker_cycles;
    r.regular_degree = 4;
    r.predicted_girth = n == 3 && m == 3 ? 3 : 4;
  }
  return r;
}

// The map f: C_n [] C_n -> C_n x C_n for odd n, returned as perm[flat(i,j)] = flat(f(i,j)).
// Computed 1-based: f(1,1) = (1,1), f(i,1) = (n+2-i, n+2-i) for i >= 2, and
// f(i,j) = f(i,1) + (j-1, 1-j) mod n with residues taken in 1..n.
inline std::vector<Vertex> cn_cn_isomorphism(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw precondition_error("cn_cn_isomorphism needs odd n >= 3");
  const ProductIndexMap index({n, n});
  const auto N = static_cast<long long>(n);
  auto wrap = [N](long long x) { return ((x - 1) % N + N) % N + 1; };
  std::vector<Vertex> perm(n * n);
  for (long long i = 1; i <= N; ++i) {
    const long long s = i == 1 ? 1 : N + 2 - i;
    for (long long j = 1; j <= N; ++j) {
      const long long a = wrap(s + (j - 1));
      const long long b = wrap(s + (1 - j));
      perm[index.flat({static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1)})] =
          index.flat({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
    }
  }
  return perm;
}

}  // namespace ecclab
