#pragma once

// Shared fixtures and generators for the unit and acceptance suites.
//
// Worked-example graphs use 0-based ids. Where an example labels vertices
// 1..k, id = label - 1. The generation example labels its vertices
// a, b, 1, 2, 3, 4; those map to ids 0, 1, 2, 3, 4, 5.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "unswitch/generation.hpp"
#include "unswitch/graph.hpp"

namespace unswitch::testing {

inline Graph edges_graph(int n, std::vector<Edge> edges) { return graph_from_edges(n, edges); }

// Clique {3,4,5}, independent {0,1,2}, every cross edge present.
inline Graph complete_split_3_3() {
  Graph g(6);
  for (Vertex c = 3; c < 6; ++c) {
    for (Vertex x = 0; x < 3; ++x) g.insert_edge(x, c);
    for (Vertex d = c + 1; d < 6; ++d) g.insert_edge(c, d);
  }
  return g;
}

// complete_split_3_3 without labels {2,6} and {3,5}.
inline Graph modified_split_3_3() {
  Graph g = complete_split_3_3();
  g.erase_edge(1, 5);
  g.erase_edge(2, 4);
  return g;
}

// Clique {1,3}, independent {0,2}; degrees (3,3,2,2).
inline Graph small_split_example() { return edges_graph(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}, {1, 3}}); }

inline constexpr Vertex kA = 0;
inline constexpr Vertex kB = 1;
inline constexpr Vertex kOne = 2;
inline constexpr Vertex kTwo = 3;
inline constexpr Vertex kThree = 4;
inline constexpr Vertex kFour = 5;

// Clique {1,2,3,4} with cross edges a-1, b-2, b-3, b-4.
inline Graph generation_example_before() {
  Graph g(6);
  for (Vertex u = kOne; u <= kFour; ++u)
    for (Vertex v = u + 1; v <= kFour; ++v) g.insert_edge(u, v);
  g.insert_edge(kA, kOne);
  g.insert_edge(kB, kTwo);
  g.insert_edge(kB, kThree);
  g.insert_edge(kB, kFour);
  return g;
}

// The same graph after the single repair chord b-1.
inline Graph generation_example_after() {
  Graph g = generation_example_before();
  g.insert_edge(kB, kOne);
  return g;
}

// Seed for which generate_unswitchable({2, 4, seed}) draws exactly the cross
// edges of generation_example_before. Found by scanning seeds upward from 0.
inline constexpr std::uint64_t kGenerationExampleSeed = 561;

// Erdos-Renyi style labeled graph; each pair present with probability
// num/den.
inline Graph random_graph(SplitMix64& rng, int n, std::uint64_t num = 1, std::uint64_t den = 2) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.below(den) < num) g.insert_edge(u, v);
  return g;
}

// Every labeled graph on n vertices (n <= 6 keeps this under 2^15).
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) g.insert_edge(pairs[k].u, pairs[k].v);
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<int> sorted_desc(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace unswitch::testing
