#pragma once

// Simple undirected graphs on vertices 0..n-1, BFS distances, girth, union and
// small-instance isomorphism.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecclab/errors.hpp"

namespace ecclab {

using Vertex = std::size_t;

// Normalized undirected edge, always u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

class Graph {
 public:
  Graph() : Graph(1) {}

  explicit Graph(std::size_t num_vertices) : adjacency_(num_vertices) {
    if (num_vertices == 0) throw input_error("graph needs at least one vertex");
  }

  // Accepts any list of endpoint pairs; pairs are normalized and deduplicated.
  Graph(std::size_t num_vertices, std::span<const std::pair<Vertex, Vertex>> edge_list)
      : Graph(num_vertices) {
    edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
      if (a >= num_vertices || b >= num_vertices) {
        throw input_error("edge endpoint out of range: " + std::to_string(a) + "-" +
                          std::to_string(b) + " with " + std::to_string(num_vertices) +
                          " vertices");
      }
      if (a == b) throw input_error("self-loop at vertex " + std::to_string(a));
      edges_.push_back(make_edge(a, b));
    }
    finalize();
  }

  Graph(std::size_t num_vertices, std::vector<Edge> edges) : Graph(num_vertices) {
    for (auto& e : edges) {
      if (e.u >= num_vertices || e.v >= num_vertices) {
        throw input_error("edge endpoint out of range: " + to_string(e));
      }
      if (e.u == e.v) throw input_error("self-loop at vertex " + std::to_string(e.u));
      e = make_edge(e.u, e.v);
    }
    edges_ = std::move(edges);
    finalize();
  }

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& row = adjacency_.at(a);
    return std::binary_search(row.begin(), row.end(), b);
  }

  bool operator==(const Graph& other) const {
    return num_vertices() == other.num_vertices() && edges_ == other.edges_;
  }

 private:
  void finalize() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(std::size_t num_vertices,
                         std::span<const std::pair<Vertex, Vertex>> edge_list) {
  return Graph(num_vertices, edge_list);
}

inline Graph build_graph(std::size_t num_vertices,
                         std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return Graph(num_vertices, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(),
                                                                       edge_list.size()));
}

// Canonical text form "n:u-v,u-v,...", used to order failure witnesses.
inline std::string canonical_encoding(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + ":";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) out += ',';
    out += to_string(e);
    first = false;
  }
  return out;
}

namespace detail {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Hop counts from `source`; unreached vertices keep kUnreached.
inline std::vector<std::uint32_t> bfs_levels(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> level(g.num_vertices(), kUnreached);
  std::vector<Vertex> frontier{source};
  level[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex x = frontier[head];
    for (Vertex y : g.neighbors(x)) {
      if (level[y] == kUnreached) {
        level[y] = level[x] + 1;
        frontier.push_back(y);
      }
    }
  }
  return level;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  const auto level = detail::bfs_levels(g, 0);
  return std::none_of(level.begin(), level.end(),
                      [](std::uint32_t d) { return d == detail::kUnreached; });
}

// Number of connected components.
inline std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

// Vertex count of every connected component, in order of each component's smallest vertex.
inline std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<std::size_t> sizes;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    const auto level = detail::bfs_levels(g, s);
    std::size_t size = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (level[v] != detail::kUnreached) {
        seen[v] = true;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

// All-pairs hop distances of a connected graph together with eccentricities.
struct DistanceData {
  std::size_t n = 0;
  std::vector<std::uint32_t> dist;  // row-major n*n
  std::vector<std::uint32_t> ecc;
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;

  std::uint32_t at(Vertex u, Vertex v) const { return dist[u * n + v]; }
  std::span<const std::uint32_t> row(Vertex u) const {
    return std::span<const std::uint32_t>(dist).subspan(u * n, n);
  }
};

inline DistanceData all_pairs_distances(const Graph& g) {
  DistanceData out;
  out.n = g.num_vertices();
  out.dist.resize(out.n * out.n);
  out.ecc.resize(out.n);
  for (Vertex s = 0; s < out.n; ++s) {
    const auto level = detail::bfs_levels(g, s);
    std::uint32_t far = 0;
    for (Vertex t = 0; t < out.n; ++t) {
      if (level[t] == detail::kUnreached) {
        throw domain_error("distances require a connected graph");
      }
      out.dist[s * out.n + t] = level[t];
      far = std::max(far, level[t]);
    }
    out.ecc[s] = far;
  }
  out.diameter = *std::max_element(out.ecc.begin(), out.ecc.end());
  out.radius = *std::min_element(out.ecc.begin(), out.ecc.end());
  return out;
}

// Length of the shortest cycle, 0 for forests. Disconnected graphs are fine: the BFS
// from every vertex sees every cycle of its own component.
inline std::size_t girth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> level(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(level.begin(), level.end(), detail::kUnreached);
    frontier.clear();
    frontier.push_back(s);
    level[s] = 0;
    parent[s] = s;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const Vertex x = frontier[head];
      if (2 * static_cast<std::size_t>(level[x]) + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (level[y] == detail::kUnreached) {
          level[y] = level[x] + 1;
          parent[y] = x;
          frontier.push_back(y);
        } else if (y != parent[x]) {
          best = std::min<std::size_t>(best, std::size_t{level[x]} + level[y] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

inline Graph graph_union(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw input_error("graph_union needs equal vertex counts");
  }
  std::vector<Edge> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Graph(a.num_vertices(), std::move(edges));
}

// Relabels every edge {u,v} as {map[u], map[v]}.
inline Graph apply_vertex_map(const Graph& g, std::span<const Vertex> map) {
  const std::size_t n = g.num_vertices();
  if (map.size() != n) throw input_error("vertex map has the wrong length");
  std::vector<bool> hit(n, false);
  for (Vertex image : map) {
    if (image >= n || hit[image]) throw input_error("vertex map is not a permutation");
    hit[image] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) edges.push_back(make_edge(map[e.u], map[e.v]));
  return Graph(n, std::move(edges));
}

inline constexpr std::size_t kIsomorphismVertexLimit = 16;

namespace detail {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.num_vertices()) {
    signature_a_ = signatures(a_);
    signature_b_ = signatures(b_);
    // Highest degree first, then keep every later vertex attached to something mapped.
    order_.reserve(n_);
    std::vector<bool> placed(n_, false);
    while (order_.size() < n_) {
      Vertex pick = n_;
      std::size_t best_links = 0;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (Vertex w : a_.neighbors(v)) links += placed[w] ? 1 : 0;
        if (pick == n_ || links > best_links ||
            (links == best_links && a_.degree(v) > a_.degree(pick))) {
          pick = v;
          best_links = links;
        }
      }
      placed[pick] = true;
      order_.push_back(pick);
    }
  }

  std::optional<std::vector<Vertex>> run() {
    auto sorted_a = signature_a_;
    auto sorted_b = signature_b_;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
    forward_.assign(n_, n_);
    backward_.assign(n_, n_);
    if (!extend(0)) return std::nullopt;
    return forward_;
  }

 private:
  using Signature = std::pair<std::size_t, std::vector<std::size_t>>;

  static std::vector<Signature> signatures(const Graph& g) {
    std::vector<Signature> out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      out[v].first = g.degree(v);
      for (Vertex w : g.neighbors(v)) out[v].second.push_back(g.degree(w));
      std::sort(out[v].second.begin(), out[v].second.end());
    }
    return out;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < n_; ++y) {
      if (backward_[y] != n_ || signature_a_[x] != signature_b_[y]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const Vertex px = order_[i];
        consistent = a_.adjacent(x, px) == b_.adjacent(y, forward_[px]);
      }
      if (!consistent) continue;
      forward_[x] = y;
      backward_[y] = x;
      if (extend(depth + 1)) return true;
      forward_[x] = n_;
      backward_[y] = n_;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t n_;
  std::vector<Signature> signature_a_;
  std::vector<Signature> signature_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> forward_;
  std::vector<Vertex> backward_;
};

}  // namespace detail

// Backtracking isomorphism search for graphs up to kIsomorphismVertexLimit vertices.
// The returned map sends vertex v of `a` to map[v] in `b`.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.num_vertices() > kIsomorphismVertexLimit || b.num_vertices() > kIsomorphismVertexLimit) {
    throw unsupported_size_error("find_isomorphism supports at most 16 vertices");
  }
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return std::nullopt;
  }
  return detail::IsomorphismSearch(a, b).run();
}

}  // namespace ecclab
