#pragma once

// Eccentric graph and eccentricity matrix of a connected graph.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ecclab/graph.hpp"
#include "ecclab/int_matrix.hpp"

namespace ecclab {

// The eccentric relation of a connected graph: eccentric_sets[v] lists every u with
// d(u,v) = e(v).
struct EccentricityProfile {
  Graph graph;
  DistanceData distances;
  std::vector<std::vector<Vertex>> eccentric_sets;

  std::uint32_t ecc(Vertex v) const { return distances.ecc[v]; }
};

inline EccentricityProfile eccentricity_profile(const Graph& g) {
  EccentricityProfile p{g, all_pairs_distances(g), {}};
  const std::size_t n = g.num_vertices();
  p.eccentric_sets.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (p.distances.at(u, v) == p.distances.ecc[v] && u != v) p.eccentric_sets[v].push_back(u);
    }
  }
  return p;
}

// True when u is eccentric to v. Not symmetric.
inline bool is_eccentric(const EccentricityProfile& p, Vertex u, Vertex v) {
  return p.distances.at(u, v) == p.distances.ecc[v];
}

namespace detail {

inline void require_eccentric_domain(const Graph& g) {
  if (g.num_vertices() < 2) throw domain_error("eccentric graph needs at least two vertices");
  if (!is_connected(g)) throw domain_error("eccentric graph needs a connected graph");
}

// u ~ v in E(G) iff d(u,v) = min(e(u), e(v)).
inline bool eccentric_adjacent(const DistanceData& d, Vertex u, Vertex v) {
  return u != v && d.at(u, v) == std::min(d.ecc[u], d.ecc[v]);
}

}  // namespace detail

// Eccentric graph built from precomputed distances of a connected graph.
inline Graph eccentric_graph(const DistanceData& d) {
  if (d.n < 2) throw domain_error("eccentric graph needs at least two vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < d.n; ++u) {
    for (Vertex v = u + 1; v < d.n; ++v) {
      if (detail::eccentric_adjacent(d, u, v)) edges.push_back({u, v});
    }
  }
  return Graph(d.n, std::move(edges));
}

inline Graph eccentric_graph(const Graph& g) {
  detail::require_eccentric_domain(g);
  return eccentric_graph(all_pairs_distances(g));
}

inline IntMatrix eccentricity_matrix(const DistanceData& d) {
  IntMatrix m(d.n, d.n);
  for (Vertex u = 0; u < d.n; ++u) {
    for (Vertex v = 0; v < d.n; ++v) {
      if (detail::eccentric_adjacent(d, u, v)) m(u, v) = d.at(u, v);
    }
  }
  return m;
}

inline IntMatrix eccentricity_matrix(const Graph& g) {
  detail::require_eccentric_domain(g);
  return eccentricity_matrix(all_pairs_distances(g));
}

inline std::size_t eccentric_girth(const Graph& g) { return girth(eccentric_graph(g)); }

}  // namespace ecclab
