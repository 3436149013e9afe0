#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "unswitch/graph.hpp"

namespace unswitch {

// Induced path v1-a-b-v2 with v1, v2 independent and a, b in the clique.
struct P4Record {
  std::array<Vertex, 4> path;
  bool operator==(const P4Record&) const = default;
};

// For each pair v1 < v2 of `independent`, every a in N(v1)-N(v2) and b in
// N(v2)-N(v1) (both ascending). Throws PreconditionError unless
// `independent` is edgeless and its complement is a clique.
std::vector<P4Record> find_all_p4s(const Graph& g, std::span<const Vertex> independent);

struct ChordCount {
  Edge chord;
  int count = 0;
  bool operator==(const ChordCount&) const = default;
};

// Each record [v1,a,b,v2] contributes chords {v1,b} and {a,v2}. Sorted by
// count descending, ties by chord.
std::vector<ChordCount> chord_frequencies(std::span<const P4Record> p4s);

// Greedy repair: add the most frequent chord and recompute the P4 list
// until it is empty. Returns the added edges in order; `g` is updated in
// place.
std::vector<Edge> add_min_edges(Graph& g, std::vector<P4Record> p4s,
                                std::span<const Vertex> independent);

// splitmix64. Bounded draws use rejection so every platform sees the same
// stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  int n1 = 0;  // independent side, vertices 0..n1-1
  int n2 = 2;  // clique side, vertices n1..n1+n2-1
  std::uint64_t seed = 0;
};

struct Generated {
  Graph graph;
  // Clique edges, then random cross edges, then repair chords, in the order
  // they were added.
  std::vector<Edge> edge_list;
  std::size_t repair_edges = 0;
};

// Random split graph on the given partition, repaired into an unswitchable
// graph. Draw order: number of independent vertices to connect in [0, n1];
// then per vertex its pick among the not-yet-picked ones, a target count in
// [0, n2], and target picks with duplicates redrawn. Throws InvalidConfig
// when n2 < 2 or n1 < 0.
Generated generate_unswitchable(const GenConfig& cfg);

}  // namespace unswitch
