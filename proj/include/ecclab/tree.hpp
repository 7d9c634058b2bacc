#pragma once

// Labeled trees: Prüfer generation and enumeration, stems, diametrical paths, the
// subtree induced by a diametrical path, and the tree-level eccentric-graph checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ecclab/eccentric.hpp"
#include "ecclab/graph.hpp"

namespace ecclab {

class no_stem_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// A connected acyclic graph. Construction validates the shape.
class Tree {
 public:
  explicit Tree(Graph g) : graph_(std::move(g)) {
    if (graph_.num_edges() + 1 != graph_.num_vertices() || !is_connected(graph_)) {
      throw input_error("not a tree: " + canonical_encoding(graph_));
    }
  }

  const Graph& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }

  bool operator==(const Tree&) const = default;

 private:
  Graph graph_;
};

inline bool is_path_graph(const Graph& g) {
  if (!is_connected(g) || g.num_edges() + 1 != g.num_vertices()) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

// S_k for some k >= 1: one center adjacent to every other vertex. Includes P_2 and P_3.
inline bool is_star(const Tree& t) {
  const std::size_t n = t.num_vertices();
  if (n < 2) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (t.graph().degree(v) == n - 1) return true;
  }
  return false;
}

inline bool is_p4(const Tree& t) { return t.num_vertices() == 4 && is_path_graph(t.graph()); }

// Decodes a Prüfer sequence (values in [0, n)) of length n - 2.
inline Tree tree_from_prufer(std::size_t n, const std::vector<Vertex>& code) {
  if (n < 2 || code.size() + 2 != n) throw input_error("Prüfer code length must be n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : code) {
    if (x >= n) throw input_error("Prüfer code entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex x : code) {
    edges.push_back(make_edge(leaf, x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(make_edge(leaf, n - 1));
  return Tree(Graph(n, std::move(edges)));
}

// Uniform labeled tree; the same (n, seed) always yields the same tree.
inline Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw input_error("random_tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> code(n - 2);
  for (auto& x : code) x = pick(rng);
  return tree_from_prufer(n, code);
}

inline constexpr std::size_t kMaxEnumeratedTreeSize = 8;

inline std::size_t labeled_tree_count(std::size_t n) {
  std::size_t count = 1;
  for (std::size_t i = 2; i < n; ++i) count *= n;
  return count;
}

// The labeled tree whose Prüfer code is `rank` written in base n (most significant
// digit first). Ranks 0..n^(n-2)-1 cover every tree once, so ranges can be split
// across workers.
inline Tree tree_from_prufer_rank(std::size_t n, std::size_t rank) {
  std::vector<Vertex> code(n - 2);
  for (std::size_t i = code.size(); i-- > 0;) {
    code[i] = rank % n;
    rank /= n;
  }
  return tree_from_prufer(n, code);
}

// Streams every labeled tree on n vertices (2 <= n <= 8).
class TreeEnumerator {
 public:
  explicit TreeEnumerator(std::size_t n) : n_(n) {
    if (n < 2 || n > kMaxEnumeratedTreeSize) {
      throw unsupported_size_error("enumerate_trees supports 2 <= n <= 8, got " +
                                   std::to_string(n));
    }
    total_ = labeled_tree_count(n);
  }

  std::size_t size() const { return total_; }

  std::optional<Tree> next() {
    if (rank_ == total_) return std::nullopt;
    return tree_from_prufer_rank(n_, rank_++);
  }

 private:
  std::size_t n_;
  std::size_t total_ = 0;
  std::size_t rank_ = 0;
};

inline TreeEnumerator enumerate_trees(std::size_t n) { return TreeEnumerator(n); }

// Path from `leaf` to the nearest vertex of degree greater than two, both inclusive.
inline std::vector<Vertex> stem_at(const Tree& t, Vertex leaf) {
  const Graph& g = t.graph();
  if (leaf >= g.num_vertices() || g.degree(leaf) != 1) {
    throw input_error("stem_at needs a leaf, got vertex " + std::to_string(leaf));
  }
  if (is_path_graph(g)) throw no_stem_error("a path graph has no stems");
  std::vector<Vertex> stem{leaf};
  Vertex previous = leaf;
  Vertex current = g.neighbors(leaf)[0];
  while (g.degree(current) == 2) {
    stem.push_back(current);
    const auto nb = g.neighbors(current);
    const Vertex next = nb[0] == previous ? nb[1] : nb[0];
    previous = current;
    current = next;
  }
  stem.push_back(current);
  return stem;
}

// Unique path between u and v in a tree.
inline std::vector<Vertex> tree_path(const Tree& t, Vertex u, Vertex v) {
  const Graph& g = t.graph();
  std::vector<Vertex> parent(g.num_vertices(), g.num_vertices());
  std::vector<Vertex> queue{u};
  parent[u] = u;
  for (std::size_t head = 0; head < queue.size() && parent[v] == g.num_vertices(); ++head) {
    for (Vertex y : g.neighbors(queue[head])) {
      if (parent[y] == g.num_vertices()) {
        parent[y] = queue[head];
        queue.push_back(y);
      }
    }
  }
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// v_0 ... v_L with L = diameter, stored with v_0 < v_L.
struct DiametricalPath {
  std::vector<Vertex> vertices;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::size_t length() const { return vertices.size() - 1; }

  bool operator==(const DiametricalPath&) const = default;
};

inline std::vector<DiametricalPath> diametrical_paths(const Tree& t, const DistanceData& d) {
  std::vector<DiametricalPath> out;
  for (Vertex u = 0; u < d.n; ++u) {
    for (Vertex v = u + 1; v < d.n; ++v) {
      if (d.at(u, v) == d.diameter) out.push_back({tree_path(t, u, v)});
    }
  }
  return out;
}

inline std::vector<DiametricalPath> diametrical_paths(const Tree& t) {
  if (t.num_vertices() < 2) throw input_error("diametrical_paths needs n >= 2");
  return diametrical_paths(t, all_pairs_distances(t.graph()));
}

// A subtree given by original vertex labels; `tree` uses local labels 0..k-1 where
// local i is original vertices[i].
struct InducedSubtree {
  std::vector<Vertex> vertices;
  Tree tree;

  // Lifts a graph on local labels to the original vertex set of size n.
  Graph lift(const Graph& local, std::size_t n) const {
    std::vector<Edge> edges;
    edges.reserve(local.num_edges());
    for (const auto& e : local.edges()) edges.push_back(make_edge(vertices[e.u], vertices[e.v]));
    return Graph(n, std::move(edges));
  }
};

namespace detail {

inline InducedSubtree restrict_tree(const Tree& t, const std::vector<bool>& keep) {
  const Graph& g = t.graph();
  std::vector<Vertex> local(g.num_vertices(), g.num_vertices());
  std::vector<Vertex> vertices;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (keep[v]) {
      local[v] = vertices.size();
      vertices.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({local[e.u], local[e.v]});
  }
  const std::size_t k = vertices.size();
  return InducedSubtree{std::move(vertices), Tree(Graph(k, std::move(edges)))};
}

}  // namespace detail

// Removes the stems at every leaf (other than the endpoints of `p`) that ends some
// other diametrical path. The branching vertex that terminates a stem is kept, and
// degrees are those of the original tree.
inline InducedSubtree induced_subtree(const Tree& t, const DiametricalPath& p,
                                      const std::vector<DiametricalPath>& all_paths) {
  if (std::find(all_paths.begin(), all_paths.end(), p) == all_paths.end()) {
    throw input_error("induced_subtree needs a diametrical path of the tree");
  }
  std::vector<bool> keep(t.num_vertices(), true);
  for (const auto& q : all_paths) {
    if (q == p) continue;
    for (Vertex z : {q.front(), q.back()}) {
      if (z == p.front() || z == p.back()) continue;
      const auto stem = stem_at(t, z);
      for (std::size_t i = 0; i + 1 < stem.size(); ++i) keep[stem[i]] = false;
    }
  }
  return detail::restrict_tree(t, keep);
}

inline InducedSubtree induced_subtree(const Tree& t, const DiametricalPath& p) {
  return induced_subtree(t, p, diametrical_paths(t));
}

struct StructureCheck {
  bool holds = false;
  std::size_t path_count = 0;
  bool covers_all_vertices = false;    // every vertex lies in some induced subtree
  bool subtrees_contain_paths = false;  // each induced subtree contains its path
  std::optional<Edge> mismatch;  // first edge of the symmetric difference
};

// E(T) against the union of E(T_i) over the subtrees induced by every diametrical path.
inline StructureCheck check_structure_theorem(const Tree& t) {
  const std::size_t n = t.num_vertices();
  const DistanceData d = all_pairs_distances(t.graph());
  const Graph whole = eccentric_graph(d);
  const auto paths = diametrical_paths(t, d);
  Graph combined(n);
  std::vector<bool> covered(n, false);
  StructureCheck out;
  out.subtrees_contain_paths = true;
  for (const auto& p : paths) {
    const auto sub = induced_subtree(t, p, paths);
    combined = graph_union(combined, sub.lift(eccentric_graph(sub.tree.graph()), n));
    for (Vertex v : sub.vertices) covered[v] = true;
    for (Vertex v : p.vertices) {
      if (!std::binary_search(sub.vertices.begin(), sub.vertices.end(), v)) {
        out.subtrees_contain_paths = false;
      }
    }
  }
  out.covers_all_vertices = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  out.path_count = paths.size();
  out.holds = combined == whole;
  if (!out.holds) {
    std::vector<Edge> diff;
    std::set_symmetric_difference(whole.edges().begin(), whole.edges().end(),
                                  combined.edges().begin(), combined.edges().end(),
                                  std::back_inserter(diff));
    out.mismatch = diff.front();
  }
  return out;
}

inline std::size_t diametrical_pair_count(const DistanceData& d) {
  std::size_t count = 0;
  for (Vertex u = 0; u < d.n; ++u) {
    for (Vertex v = u + 1; v < d.n; ++v) count += d.at(u, v) == d.diameter ? 1 : 0;
  }
  return count;
}

inline std::size_t predicted_tree_girth(const DistanceData& d) {
  if (d.diameter % 2 == 0) return 3;
  return diametrical_pair_count(d) == 1 ? 0 : 4;
}

// 3 for even diameter, 0 for odd diameter with a unique diametrical path, else 4.
inline std::size_t predicted_tree_girth(const Tree& t) {
  if (t.num_vertices() < 2) throw input_error("predicted_tree_girth needs n >= 2");
  return predicted_tree_girth(all_pairs_distances(t.graph()));
}

// No v1 ~ v2 ~ v3 in E(T) with e(v1) < e(v2) < e(v3).
inline bool check_monotone_exclusion(const Tree& t) {
  const DistanceData d = all_pairs_distances(t.graph());
  const Graph e = eccentric_graph(d);
  for (Vertex v2 = 0; v2 < d.n; ++v2) {
    for (Vertex v1 : e.neighbors(v2)) {
      if (d.ecc[v1] >= d.ecc[v2]) continue;
      for (Vertex v3 : e.neighbors(v2)) {
        if (d.ecc[v3] > d.ecc[v2]) return false;
      }
    }
  }
  return true;
}

// Every pair of diametrical paths shares a vertex.
inline bool diametrical_paths_intersect(const std::vector<DiametricalPath>& paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const auto& a = paths[i].vertices;
      const auto& b = paths[j].vertices;
      const bool shared = std::any_of(a.begin(), a.end(), [&](Vertex x) {
        return std::find(b.begin(), b.end(), x) != b.end();
      });
      if (!shared) return false;
    }
  }
  return true;
}

// For odd diameter with a unique diametrical path v_0..v_L: E(T) is a forest and every
// vertex is E-adjacent to exactly one of v_0, v_L. Vacuously true for other trees.
inline bool check_unique_path_structure(const Tree& t) {
  const DistanceData d = all_pairs_distances(t.graph());
  if (d.diameter % 2 == 0 || diametrical_pair_count(d) != 1) return true;
  const auto path = diametrical_paths(t, d).front();
  const Graph e = eccentric_graph(d);
  if (girth(e) != 0) return false;
  for (Vertex v = 0; v < d.n; ++v) {
    const int hits = (e.adjacent(v, path.front()) ? 1 : 0) + (e.adjacent(v, path.back()) ? 1 : 0);
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace ecclab
