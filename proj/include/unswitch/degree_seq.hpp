#pragma once

#include <span>
#include <string>
#include <vector>

#include "unswitch/graph.hpp"

namespace unswitch {

// Havel-Hakimi step: saturate the head entry against the next d[0]
// entries and re-sort. Throws PreconditionError when d is empty or
// d[0] < 1, NonGraphical when d[0] > len-1 or an entry would go negative.
std::vector<int> reduce_head(std::span<const int> d);

// Kleitman-Wang step: remove position i and decrement the d[i] highest
// remaining entries (earlier positions win ties), then re-sort.
std::vector<int> reduce_at(std::span<const int> d, std::size_t i);

bool is_graphical(std::span<const int> d);

// The sequence of head reductions, starting with the (sorted) input and
// ending either at the all-zero sequence or at the step that failed.
struct GraphicalTrace {
  bool graphical = false;
  std::vector<std::vector<int>> steps;
  std::string failure;  // empty when graphical
};

GraphicalTrace graphical_trace(std::span<const int> d);

// Deterministic Havel-Hakimi realization. Vertex i of the result has
// degree d[i]. Throws NonGraphical.
Graph realize(std::span<const int> d);

std::string format_sequence(std::span<const int> d);

}  // namespace unswitch
