#pragma once

#include <optional>
#include <vector>

#include "unswitch/graph.hpp"
#include "unswitch/split.hpp"

namespace unswitch {

// Outcome of recognition. A switchable graph always carries a witness: an
// induced P4, C4 or 2K2 of the input.
struct SwitchVerdict {
  std::optional<QuadClass> witness;

  bool unswitchable() const noexcept { return !witness.has_value(); }
};

// Split test on the degree sequence, then a clique-edge scan over the
// independent neighborhoods of each clique vertex. A clique edge {u,v} whose
// two difference sets are both nonempty gives the induced path x-u-v-y.
SwitchVerdict recognize(const Graph& g);

// Sets S_1..S_2n over vertices 0..N-1. Vertices a in S_i and b in S_j with
// i <= j (1-based) are adjacent exactly when i + n < j or i > n.
struct EggletonFamily {
  int n = 1;
  std::vector<std::vector<Vertex>> sets;  // sets[i-1] holds S_i

  int vertex_count() const;
  bool operator==(const EggletonFamily&) const = default;
};

// Throws InvalidFamily on a wrong set count, overlapping sets, or labels
// that do not cover 0..N-1.
void validate_family(const EggletonFamily& f);

Graph eggleton_construct(const EggletonFamily& f);

// Family reproducing `g`, found by peeling isolated and dominating vertices
// in alternating rounds. Each round contributes one level, which gives the
// smallest n this peeling admits. Throws NotUnswitchable.
EggletonFamily eggleton_decompose(const Graph& g);

// Same, but with the independent side fixed to `p.independent`. Levels come
// from the nested independent neighborhoods. Throws NotUnswitchable when `g`
// is switchable and PreconditionError when `p` is not a split certificate.
EggletonFamily eggleton_decompose(const Graph& g, const SplitPartition& p);

}  // namespace unswitch
