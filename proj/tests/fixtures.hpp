#pragma once

// The 12-vertex example tree, its three induced subtrees and their eccentric graphs,
// transcribed from the figures with labels shifted to 0-based.

#include <utility>
#include <vector>

#include "ecclab/graph.hpp"
#include "ecclab/tree.hpp"

namespace fixture {

using ecclab::Edge;
using ecclab::Graph;
using ecclab::Tree;
using ecclab::Vertex;

inline Tree example_tree() {
  return Tree(ecclab::build_graph(
      12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}, {7, 8}, {7, 11}, {3, 9}, {9, 10}}));
}

// Pairs as printed (1-based).
inline Graph from_one_based(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) edges.push_back(ecclab::make_edge(a - 1, b - 1));
  return Graph(n, std::move(edges));
}

// 24 edges.
inline Graph example_eccentric_graph() {
  return from_one_based(12, {{9, 7},  {7, 2},   {7, 3},   {7, 8},   {7, 4},   {4, 9},
                             {10, 7}, {10, 9},  {11, 9},  {11, 7},  {5, 9},   {9, 6},
                             {7, 1},  {4, 1},   {10, 1},  {11, 1},  {5, 1},   {6, 1},
                             {5, 12}, {6, 12},  {12, 7},  {4, 12},  {10, 12}, {11, 12}});
}

struct InducedCase {
  std::vector<Vertex> path;      // 0-based
  std::vector<Vertex> vertices;  // 0-based, sorted
  Graph eccentric;               // lifted to all 12 vertices
};

inline std::vector<InducedCase> induced_cases() {
  return {
      {{0, 1, 2, 3, 4, 5, 6},
       {0, 1, 2, 3, 4, 5, 6, 7, 9, 10},
       from_one_based(12, {{1, 7}, {2, 7}, {8, 7}, {4, 7}, {4, 1}, {10, 7}, {10, 1}, {11, 7},
                           {11, 1}, {5, 1}, {6, 1}, {3, 7}})},
      {{8, 7, 2, 3, 4, 5, 6},
       {2, 3, 4, 5, 6, 7, 8, 9, 10},
       from_one_based(12, {{9, 7}, {7, 3}, {7, 8}, {4, 7}, {4, 9}, {10, 7}, {10, 9}, {11, 7},
                           {11, 9}, {5, 9}, {9, 6}})},
      {{11, 7, 2, 3, 4, 5, 6},
       {2, 3, 4, 5, 6, 7, 9, 10, 11},
       from_one_based(12, {{12, 7}, {7, 3}, {7, 8}, {4, 7}, {4, 12}, {10, 7}, {10, 12},
                           {11, 7}, {11, 12}, {5, 12}, {12, 6}})},
  };
}

}  // namespace fixture
