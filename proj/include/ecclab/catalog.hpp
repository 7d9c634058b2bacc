#pragma once

// Named graph families with fixed labelings, and the known eccentric graphs of the
// families that have closed forms.
//
// Labelings:
//   path(n), cycle(n)        0..n-1 in natural order
//   star(n)                  S_n on n+1 vertices, center 0
//   double_star(s, t)        centers 0 and 1; leaves 2..s+1 on 0, s+2..s+t+1 on 1
//   complete(n)              K_n
//   complete_bipartite(s, t) parts {0..s-1} and {s..s+t-1}
//   h_graph(t)               triangle {0,1,2}; pendants 3..t+2 on 0, t+3..2t+2 on 1
//   grid(m, n)               (i, j) -> i*n + j, equal to cartesian_product(P_m, P_n)
//   hypercube(k)             P_2^k in binary order (bit k-1 is the first factor)

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ecclab/errors.hpp"
#include "ecclab/graph.hpp"

namespace ecclab {

enum class Family {
  path,
  cycle,
  star,
  double_star,
  complete,
  complete_bipartite,
  h_graph,
  grid,
  hypercube,
};

struct FamilySpec {
  Family family = Family::path;
  std::vector<std::size_t> parameters;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::double_star: return "double-star";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::h_graph: return "h-graph";
    case Family::grid: return "grid";
    case Family::hypercube: return "hypercube";
  }
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::path, Family::cycle, Family::star, Family::double_star,
                   Family::complete, Family::complete_bipartite, Family::h_graph, Family::grid,
                   Family::hypercube}) {
    if (family_name(f) == name) return f;
  }
  throw input_error("unknown family: " + std::string(name));
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw input_error("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw input_error("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

inline Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw input_error("star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

inline Graph double_star_graph(std::size_t s, std::size_t t) {
  if (s < 1 || t < 1) throw input_error("double star needs s, t >= 1");
  std::vector<Edge> edges{{0, 1}};
  for (Vertex i = 0; i < s; ++i) edges.push_back({0, 2 + i});
  for (Vertex i = 0; i < t; ++i) edges.push_back({1, 2 + s + i});
  return Graph(s + t + 2, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw input_error("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

inline Graph complete_bipartite_graph(std::size_t s, std::size_t t) {
  if (s < 1 || t < 1) throw input_error("complete bipartite graph needs s, t >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < s; ++i) {
    for (Vertex j = 0; j < t; ++j) edges.push_back({i, s + j});
  }
  return Graph(s + t, std::move(edges));
}

inline Graph h_graph(std::size_t t) {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (Vertex i = 0; i < t; ++i) {
    edges.push_back({0, 3 + i});
    edges.push_back({1, 3 + t + i});
  }
  return Graph(2 * t + 3, std::move(edges));
}

inline Graph grid_graph(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw input_error("grid needs m, n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (j + 1 < n) edges.push_back({i * n + j, i * n + j + 1});
      if (i + 1 < m) edges.push_back({i * n + j, (i + 1) * n + j});
    }
  }
  return Graph(m * n, std::move(edges));
}

inline Graph hypercube_graph(std::size_t k) {
  if (k < 1 || k > 16) throw input_error("hypercube needs 1 <= k <= 16");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (std::size_t bit = 0; bit < k; ++bit) {
      const Vertex y = x ^ (std::size_t{1} << bit);
      if (x < y) edges.push_back({x, y});
    }
  }
  return Graph(n, std::move(edges));
}

namespace detail {

inline void require_arity(const FamilySpec& spec, std::size_t arity) {
  if (spec.parameters.size() != arity) {
    throw input_error(std::string(family_name(spec.family)) + " takes " +
                      std::to_string(arity) + " parameter(s)");
  }
}

}  // namespace detail

inline Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.parameters;
  switch (spec.family) {
    case Family::path: detail::require_arity(spec, 1); return path_graph(p[0]);
    case Family::cycle: detail::require_arity(spec, 1); return cycle_graph(p[0]);
    case Family::star: detail::require_arity(spec, 1); return star_graph(p[0]);
    case Family::double_star: detail::require_arity(spec, 2); return double_star_graph(p[0], p[1]);
    case Family::complete: detail::require_arity(spec, 1); return complete_graph(p[0]);
    case Family::complete_bipartite:
      detail::require_arity(spec, 2);
      return complete_bipartite_graph(p[0], p[1]);
    case Family::h_graph: detail::require_arity(spec, 1); return h_graph(p[0]);
    case Family::grid: detail::require_arity(spec, 2); return grid_graph(p[0], p[1]);
    case Family::hypercube: detail::require_arity(spec, 1); return hypercube_graph(p[0]);
  }
  throw input_error("unknown family");
}

// The eccentric graph each family is known to have, in the family's own labels.
//
// P_n, n > 3 even: double star with centers 0 and n-1; 0 carries {n/2..n-2} and n-1
//   carries {1..n/2-1}.
// P_n, n > 3 odd: triangle {0, (n-1)/2, n-1}; 0 carries {(n+1)/2..n-2} and n-1 carries
//   {1..(n-3)/2}.
// C_n: i ~ i + n/2 for even n; i ~ i +- (n-1)/2 for odd n.
// K_{s,t}: K_s u K_t for s, t > 1; a star when either side is 1.
// S_n: K_{n+1}. Not stated with the other closed forms; it follows because every leaf
//   is eccentric to the center and every leaf pair is at the maximum distance 2.
inline Graph expected_eccentric(const FamilySpec& spec) {
  const auto& p = spec.parameters;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::path: {
      detail::require_arity(spec, 1);
      const std::size_t n = p[0];
      if (n < 2) throw input_error("eccentric graph needs at least two vertices");
      if (n <= 3) return complete_graph(n);
      edges.push_back({0, n - 1});
      if (n % 2 == 0) {
        for (Vertex v = n / 2; v <= n - 2; ++v) edges.push_back({0, v});
        for (Vertex v = 1; v <= n / 2 - 1; ++v) edges.push_back({v, n - 1});
      } else {
        const Vertex mid = (n - 1) / 2;
        edges.push_back({0, mid});
        edges.push_back({mid, n - 1});
        for (Vertex v = (n + 1) / 2; v <= n - 2; ++v) edges.push_back({0, v});
        for (Vertex v = 1; v <= (n - 3) / 2; ++v) edges.push_back({v, n - 1});
      }
      return Graph(n, std::move(edges));
    }
    case Family::cycle: {
      detail::require_arity(spec, 1);
      const std::size_t n = p[0];
      if (n < 3) throw input_error("cycle needs n >= 3");
      for (Vertex i = 0; i < n; ++i) {
        if (n % 2 == 0) {
          edges.push_back(make_edge(i, (i + n / 2) % n));
        } else {
          edges.push_back(make_edge(i, (i + (n - 1) / 2) % n));
        }
      }
      return Graph(n, std::move(edges));
    }
    case Family::complete:
      detail::require_arity(spec, 1);
      if (p[0] < 2) throw input_error("eccentric graph needs at least two vertices");
      return complete_graph(p[0]);
    case Family::complete_bipartite: {
      detail::require_arity(spec, 2);
      const std::size_t s = p[0];
      const std::size_t t = p[1];
      if (s < 1 || t < 1) throw input_error("complete bipartite graph needs s, t >= 1");
      if (s == 1 || t == 1) return complete_graph(s + t);
      for (Vertex i = 0; i < s; ++i) {
        for (Vertex j = i + 1; j < s; ++j) edges.push_back({i, j});
      }
      for (Vertex i = s; i < s + t; ++i) {
        for (Vertex j = i + 1; j < s + t; ++j) edges.push_back({i, j});
      }
      return Graph(s + t, std::move(edges));
    }
    case Family::star:
      detail::require_arity(spec, 1);
      if (p[0] < 1) throw input_error("star needs at least one leaf");
      return complete_graph(p[0] + 1);
    default:
      throw input_error("no closed-form eccentric graph for family " +
                        std::string(family_name(spec.family)));
  }
}

}  // namespace ecclab
