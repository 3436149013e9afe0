#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "unswitch/graph.hpp"

namespace unswitch {

// Replace two independent edges by the two absent pairs of another perfect
// matching on the same four vertices. Every vertex keeps its degree.
struct TwoSwitch {
  std::array<Edge, 2> removed;
  std::array<Edge, 2> added;

  // Normalized form: each edge with u < v and each pair sorted.
  TwoSwitch canonical() const;

  auto operator<=>(const TwoSwitch&) const = default;
};

std::ostream& operator<<(std::ostream& os, const TwoSwitch& s);

// Throws InvalidSwitch naming the violated condition.
void validate_two_switch(const Graph& g, const TwoSwitch& s);

Graph apply_two_switch(const Graph& g, const TwoSwitch& s);

// All valid 2-switches, in canonical form, ordered by 4-subset (lexicographic)
// then by matching. Empty exactly when the graph is unswitchable.
std::vector<TwoSwitch> enumerate_two_switches(const Graph& g);

struct Normalization {
  Graph graph;
  std::vector<TwoSwitch> switches;
};

// Makes the maximum-degree vertex adjacent to exactly the next d1 vertices in
// degree order by a sequence of 2-switches. Choices follow the smallest
// deficient position i, then the smallest outside neighbor position j, then
// the smallest pivot position t.
Normalization normalize_max_vertex(const Graph& g);

inline constexpr std::size_t kDefaultSwitchStateLimit = 1'000'000;

// Shortest 2-switch sequence turning g into h (breadth-first over labeled
// graphs). nullopt when per-vertex degrees differ. Throws
// SearchBudgetExceeded once more than `state_limit` graphs were visited, and
// PreconditionError beyond 11 vertices.
std::optional<std::vector<TwoSwitch>> two_switch_path(
    const Graph& g, const Graph& h, std::size_t state_limit = kDefaultSwitchStateLimit);

}  // namespace unswitch
