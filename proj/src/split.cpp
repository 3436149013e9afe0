#include "unswitch/split.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "unswitch/degree_seq.hpp"
#include "unswitch/error.hpp"

namespace unswitch {

int split_index(std::span<const int> d) {
  if (d.empty()) throw PreconditionError("split index of an empty sequence");
  int m = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= static_cast<int>(i)) m = static_cast<int>(i) + 1;
  }
  return m;
}

SplitBalance split_balance(std::span<const int> d) {
  SplitBalance b;
  b.m = split_index(d);
  b.lhs = std::accumulate(d.begin(), d.begin() + b.m, 0L);
  b.rhs = static_cast<long>(b.m) * (b.m - 1) + std::accumulate(d.begin() + b.m, d.end(), 0L);
  return b;
}

bool is_split_sequence(std::span<const int> d) {
  if (d.empty()) return true;
  return split_balance(d).holds();
}

bool verify_split_partition(const Graph& g, const SplitPartition& p) {
  std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto* side : {&p.clique, &p.independent}) {
    for (Vertex v : *side) {
      if (v < 0 || v >= g.vertex_count() || seen[v]++ != 0) return false;
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != g.vertex_count()) return false;
  for (std::size_t a = 0; a < p.clique.size(); ++a)
    for (std::size_t b = a + 1; b < p.clique.size(); ++b)
      if (!g.has_edge(p.clique[a], p.clique[b])) return false;
  for (std::size_t a = 0; a < p.independent.size(); ++a)
    for (std::size_t b = a + 1; b < p.independent.size(); ++b)
      if (g.has_edge(p.independent[a], p.independent[b])) return false;
  return true;
}

namespace {

SplitPartition partition_from_mask(const DegreeSequence& ds, const std::vector<bool>& in_clique) {
  SplitPartition p;
  for (std::size_t i = 0; i < ds.order.size(); ++i) {
    (in_clique[i] ? p.clique : p.independent).push_back(ds.order[i]);
  }
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  return p;
}

constexpr long kMaxBoundaryExchanges = 1'000'000;

}  // namespace

SplitPartition split_partition(const Graph& g) {
  const DegreeSequence ds = degree_sequence(g);
  if (ds.size() == 0) return {};
  const SplitBalance balance = split_balance(ds.degrees);
  if (!balance.holds()) {
    throw NotSplit("degree identity fails: m=" + std::to_string(balance.m) +
                   " lhs=" + std::to_string(balance.lhs) + " rhs=" + std::to_string(balance.rhs));
  }
  const int m = balance.m;
  const int n = static_cast<int>(ds.size());

  std::vector<bool> in_clique(static_cast<std::size_t>(n), false);
  std::fill(in_clique.begin(), in_clique.begin() + m, true);
  SplitPartition p = partition_from_mask(ds, in_clique);
  if (verify_split_partition(g, p)) return p;

  // Exchange vertices of the boundary degree class: choose which k of the
  // tied positions [lo, hi) go into the clique.
  const int boundary = ds.degrees[m - 1];
  const int lo = static_cast<int>(
      std::find(ds.degrees.begin(), ds.degrees.end(), boundary) - ds.degrees.begin());
  int hi = lo;
  while (hi < n && ds.degrees[hi] == boundary) ++hi;
  const int k = m - lo;
  std::vector<bool> pick(static_cast<std::size_t>(hi - lo), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  long tries = 0;
  // prev_permutation on a true-first mask walks k-subsets lexicographically.
  while (std::prev_permutation(pick.begin(), pick.end())) {
    if (++tries > kMaxBoundaryExchanges) break;
    for (int i = lo; i < hi; ++i) in_clique[i] = pick[i - lo];
    p = partition_from_mask(ds, in_clique);
    if (verify_split_partition(g, p)) return p;
  }
  throw InternalInconsistency("no top-m split certificate despite degree identity holding");
}

Graph construct_split_graph(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return Graph(0);
  if (!std::is_sorted(d.begin(), d.end(), std::greater<>())) {
    throw PreconditionError("construct_split_graph needs a non-increasing sequence");
  }
  if (!is_graphical(d) || !is_split_sequence(d)) {
    throw NotSplit(format_sequence(d) + " is not a split sequence");
  }
  const int m = split_index(d);
  Graph g(n);
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = a + 1; b < m; ++b) g.insert_edge(a, b);

  std::vector<int> residual(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    residual[i] = d[i] - (m - 1);
    if (residual[i] < 0) throw SaturationFailure("clique vertex over-saturated");
  }
  std::vector<int> by_residual(static_cast<std::size_t>(m));
  for (Vertex v = m; v < n; ++v) {
    std::iota(by_residual.begin(), by_residual.end(), 0);
    std::stable_sort(by_residual.begin(), by_residual.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });
    if (d[v] > m) throw SaturationFailure("independent vertex needs more than m neighbors");
    for (int k = 0; k < d[v]; ++k) {
      const int c = by_residual[k];
      if (residual[c] == 0) {
        throw SaturationFailure("clique residuals exhausted at vertex " + std::to_string(v));
      }
      --residual[c];
      g.insert_edge(v, c);
    }
  }
  if (std::any_of(residual.begin(), residual.end(), [](int r) { return r != 0; })) {
    throw SaturationFailure("clique residual degrees left unsaturated");
  }
  return g;
}

}  // namespace unswitch
