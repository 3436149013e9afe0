#pragma once

// Canonicalization sweeps behind oracle::enumerate_graphs and
// oracle::extend_by_vertex. The serial versions are the reference the
// OpenMP versions are tested and benchmarked against.

#include <vector>

#include "unswitch/oracle.hpp"

namespace unswitch::oracle::detail {

// Canonical codes of every subset of the n(n-1)/2 possible edges, sorted
// and deduplicated.
std::vector<Code> edge_subset_codes_serial(int n);
std::vector<Code> edge_subset_codes_omp(int n);

// Canonical codes of every one-vertex extension of `base` (graphs on n
// vertices), sorted and deduplicated.
std::vector<Code> extension_codes_serial(int n, const std::vector<Code>& base);
std::vector<Code> extension_codes_omp(int n, const std::vector<Code>& base);

// Canonical code of the graph on n vertices given by adjacency rows.
Code canonical_code_rows(int n, const std::vector<std::uint32_t>& rows);

}  // namespace unswitch::oracle::detail
