#pragma once

#include <span>
#include <vector>

#include "unswitch/graph.hpp"

namespace unswitch {

// Clique / independent-set certificate of a split graph. Both lists are
// sorted by vertex id.
struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;

  bool operator==(const SplitPartition&) const = default;
};

// Largest 1-based position i with d_i >= i-1. Throws PreconditionError on
// an empty sequence.
int split_index(std::span<const int> d);

// Both sides of the degree-sum identity that characterizes split graphs.
struct SplitBalance {
  int m = 0;
  long lhs = 0;  // sum of the first m degrees
  long rhs = 0;  // m(m-1) + sum of the remaining degrees

  bool holds() const noexcept { return lhs == rhs; }
};

SplitBalance split_balance(std::span<const int> d);

bool is_split_sequence(std::span<const int> d);

// True when `p` covers every vertex once, the clique side is complete and
// the independent side is edgeless.
bool verify_split_partition(const Graph& g, const SplitPartition& p);

// Top-m vertices by (degree desc, id asc) as the clique. Throws NotSplit
// when the degree identity fails, InternalInconsistency if no tie exchange
// at the boundary yields a valid certificate.
SplitPartition split_partition(const Graph& g);

// Clique on the first m positions; independent positions, in order, are
// joined to the clique vertices with the largest residual degree (earlier
// positions on ties). Vertex i gets degree d[i]. Throws NotSplit or
// SaturationFailure.
Graph construct_split_graph(std::span<const int> d);

}  // namespace unswitch
