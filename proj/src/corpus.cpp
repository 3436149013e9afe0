#include <algorithm>
#include <string>

#include "corpus_kernels.hpp"
#include "unswitch/error.hpp"
#include "unswitch/oracle.hpp"

namespace unswitch::oracle {

namespace {

constexpr int pair_index(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

std::vector<std::uint32_t> rows_of(int n, Code code) {
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

void check_order(int n) {
  if (n < 0 || n > kMaxCanonicalOrder) {
    throw SizeGuardExceeded("canonical codes limited to " + std::to_string(kMaxCanonicalOrder) +
                            " vertices");
  }
}

}  // namespace

Code encode(const Graph& g) {
  check_order(g.vertex_count());
  Code c = 0;
  for (const Edge& e : g.edges()) c |= Code{1} << pair_index(g.vertex_count(), e.u, e.v);
  return c;
}

Graph decode(int n, Code code) {
  check_order(n);
  Graph g(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((code >> k) & 1u) g.insert_edge(i, j);
  return g;
}

namespace detail {

Code canonical_code_rows(int n, const std::vector<std::uint32_t>& rows) {
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) degree[v] = __builtin_popcount(rows[v]);

  // Vertices sorted by degree desc; runs of equal degree are permuted freely.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && degree[order[j]] == degree[order[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }

  Code best = ~Code{0};
  auto code_of = [&] {
    Code c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((rows[order[i]] >> order[j]) & 1u) c |= Code{1} << pair_index(n, i, j);
    return c;
  };
  auto permute = [&](auto&& self, std::size_t run) -> void {
    if (run == runs.size()) {
      best = std::min(best, code_of());
      return;
    }
    auto first = order.begin() + runs[run].first;
    auto last = order.begin() + runs[run].second;
    std::sort(first, last);
    do {
      self(self, run + 1);
    } while (std::next_permutation(first, last));
  };
  permute(permute, 0);
  return n == 0 ? 0 : best;
}

std::vector<Code> edge_subset_codes_serial(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Code> codes;
  for (Code mask = 0; mask < (Code{1} << pairs); ++mask) {
    codes.push_back(canonical_code_rows(n, rows_of(n, mask)));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::vector<Code> extension_codes_serial(int n, const std::vector<Code>& base) {
  std::vector<Code> codes;
  for (Code g : base) {
    auto rows = rows_of(n, g);
    rows.push_back(0);
    for (std::uint32_t nbrs = 0; nbrs < (1u << n); ++nbrs) {
      auto ext = rows;
      ext[n] = nbrs;
      for (int v = 0; v < n; ++v)
        if ((nbrs >> v) & 1u) ext[v] |= 1u << n;
      codes.push_back(canonical_code_rows(n + 1, ext));
    }
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

}  // namespace detail

Code canonical_code(const Graph& g) {
  check_order(g.vertex_count());
  return detail::canonical_code_rows(g.vertex_count(), rows_of(g.vertex_count(), encode(g)));
}

namespace {

std::vector<Graph> decode_all(int n, const std::vector<Code>& codes) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (Code c : codes) out.push_back(decode(n, c));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, Execution exec) {
  if (n < 0 || n > kMaxEdgeSubsetOrder) {
    throw SizeGuardExceeded("edge-subset enumeration limited to " +
                            std::to_string(kMaxEdgeSubsetOrder) + " vertices");
  }
  const auto codes = exec == Execution::Serial ? detail::edge_subset_codes_serial(n)
                                               : detail::edge_subset_codes_omp(n);
  return decode_all(n, codes);
}

std::vector<Graph> extend_by_vertex(std::span<const Graph> order_n, Execution exec) {
  if (order_n.empty()) return {};
  const int n = order_n.front().vertex_count();
  check_order(n + 1);
  std::vector<Code> base;
  base.reserve(order_n.size());
  for (const Graph& g : order_n) {
    if (g.vertex_count() != n) throw PreconditionError("extend_by_vertex needs equal orders");
    base.push_back(encode(g));
  }
  const auto codes = exec == Execution::Serial ? detail::extension_codes_serial(n, base)
                                               : detail::extension_codes_omp(n, base);
  return decode_all(n + 1, codes);
}

std::vector<Graph> corpus(int max_n, Execution exec) {
  constexpr int kSubsetLimit = 6;
  std::vector<Graph> out;
  std::vector<Graph> layer;
  for (int n = 1; n <= max_n; ++n) {
    layer = n <= kSubsetLimit ? enumerate_graphs(n, exec) : extend_by_vertex(layer, exec);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace unswitch::oracle
