#pragma once

// Brute-force ground truth for small graphs. Nothing here calls into the
// recognition, splitting or switching code it is used to check.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unswitch/graph.hpp"

namespace unswitch::oracle {

inline constexpr int kMaxExhaustiveVertices = 12;
inline constexpr int kMaxRealizationLength = 8;
inline constexpr int kMaxEdgeSubsetOrder = 7;
inline constexpr int kMaxCanonicalOrder = 11;

// True when no 4-subset carries one perfect matching fully present and
// another fully absent. Uses adjacency bitmasks; throws SizeGuardExceeded
// above kMaxExhaustiveVertices.
bool forbidden_free_exhaustive(const Graph& g);

// Removes the smallest-id vertex that is isolated or adjacent to every
// remaining vertex, one at a time. Returns the removal order when the graph
// empties.
std::optional<std::vector<Vertex>> threshold_elimination(const Graph& g);

// Every labeled simple graph in which vertex i has degree d[i]. Throws
// SizeGuardExceeded above kMaxRealizationLength.
std::vector<Graph> enumerate_labeled_realizations(std::span<const int> d);

// Permutation search restricted to degree-preserving maps.
bool is_isomorphic(const Graph& a, const Graph& b);

bool unique_up_to_isomorphism(std::span<const Graph> graphs);

// --- corpus of non-isomorphic graphs -------------------------------------

// Upper-triangle adjacency bits, pair (u,v) with u < v in lexicographic
// order at bit index k.
using Code = std::uint64_t;

Code encode(const Graph& g);
Graph decode(int n, Code code);

// Smallest code over all relabelings that list vertices by non-increasing
// degree. Equal for two graphs exactly when they are isomorphic.
Code canonical_code(const Graph& g);

enum class Execution { Serial, Parallel };

// All graphs on n vertices up to isomorphism, by canonicalizing every edge
// subset. Sorted by canonical code; identical output for both execution
// modes. Throws SizeGuardExceeded above kMaxEdgeSubsetOrder.
std::vector<Graph> enumerate_graphs(int n, Execution exec = Execution::Parallel);

// Graphs on n+1 vertices up to isomorphism, from all ways of attaching a
// new vertex to each graph of `order_n` (which must be complete for n).
std::vector<Graph> extend_by_vertex(std::span<const Graph> order_n,
                                    Execution exec = Execution::Parallel);

// Non-isomorphic graphs on 1..max_n vertices, ordered by vertex count then
// canonical code. Edge-subset enumeration up to 6 vertices, vertex
// extension beyond.
std::vector<Graph> corpus(int max_n, Execution exec = Execution::Parallel);

}  // namespace unswitch::oracle
