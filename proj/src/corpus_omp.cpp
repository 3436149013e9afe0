#include <algorithm>
#include <cstdint>
#include <vector>

#include "corpus_kernels.hpp"

namespace unswitch::oracle::detail {

namespace {

void sort_unique(std::vector<Code>& codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

// Each thread deduplicates its own slice; the merged result is sorted, so it
// does not depend on how iterations were scheduled.
template <typename CodeAt>
std::vector<Code> sweep(std::int64_t count, CodeAt&& code_at) {
  std::vector<Code> merged;
#pragma omp parallel
  {
    std::vector<Code> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t i = 0; i < count; ++i) local.push_back(code_at(i));
    sort_unique(local);
#pragma omp critical
    merged.insert(merged.end(), local.begin(), local.end());
  }
  sort_unique(merged);
  return merged;
}

std::vector<std::uint32_t> rows_from_code(int n, Code code) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((code >> k) & 1u) {
        rows[i] |= 1u << j;
        rows[j] |= 1u << i;
      }
  return rows;
}

}  // namespace

std::vector<Code> edge_subset_codes_omp(int n) {
  const int pairs = n * (n - 1) / 2;
  return sweep(std::int64_t{1} << pairs, [n](std::int64_t mask) {
    return canonical_code_rows(n, rows_from_code(n, static_cast<Code>(mask)));
  });
}

std::vector<Code> extension_codes_omp(int n, const std::vector<Code>& base) {
  const std::int64_t per_graph = std::int64_t{1} << n;
  return sweep(static_cast<std::int64_t>(base.size()) * per_graph, [&](std::int64_t i) {
    auto rows = rows_from_code(n, base[static_cast<std::size_t>(i / per_graph)]);
    const auto nbrs = static_cast<std::uint32_t>(i % per_graph);
    rows.push_back(nbrs);
    for (int v = 0; v < n; ++v)
      if ((nbrs >> v) & 1u) rows[v] |= 1u << n;
    return canonical_code_rows(n + 1, rows);
  });
}

}  // namespace unswitch::oracle::detail
