#include "unswitch/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "unswitch/error.hpp"

namespace unswitch::oracle {

namespace {

std::vector<std::uint32_t> adjacency_rows(const Graph& g) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= 1u << e.v;
    rows[e.v] |= 1u << e.u;
  }
  return rows;
}

}  // namespace

bool forbidden_free_exhaustive(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxExhaustiveVertices) {
    throw SizeGuardExceeded("exhaustive scan limited to " +
                            std::to_string(kMaxExhaustiveVertices) + " vertices");
  }
  const auto rows = adjacency_rows(g);
  auto adj = [&](int u, int v) { return (rows[u] >> v) & 1u; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const std::array<unsigned, 3> present{adj(a, b) + adj(c, d), adj(a, c) + adj(b, d),
                                                adj(a, d) + adj(b, c)};
          const bool full = std::find(present.begin(), present.end(), 2u) != present.end();
          const bool empty = std::find(present.begin(), present.end(), 0u) != present.end();
          if (full && empty) return false;
        }
  return true;
}

std::optional<std::vector<Vertex>> threshold_elimination(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int remaining = n; remaining > 0; --remaining) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (!alive[v]) continue;
      int live = 0;
      for (Vertex w : g.neighbors(v)) live += alive[w] ? 1 : 0;
      if (live == 0 || live == remaining - 1) pick = v;
    }
    if (pick < 0) return std::nullopt;
    alive[pick] = false;
    order.push_back(pick);
  }
  return order;
}

std::vector<Graph> enumerate_labeled_realizations(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  if (n > kMaxRealizationLength) {
    throw SizeGuardExceeded("realization enumeration limited to length " +
                            std::to_string(kMaxRealizationLength));
  }
  std::vector<Graph> out;
  if (std::any_of(d.begin(), d.end(), [&](int x) { return x < 0 || x > n - 1; })) return out;

  std::vector<int> residual(d.begin(), d.end());
  Graph cur(n);
  // Vertex v picks exactly residual[v] partners among later vertices.
  auto place = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(cur);
      return;
    }
    const int need = residual[v];
    std::vector<Vertex> candidates;
    for (Vertex w = v + 1; w < n; ++w) {
      if (residual[w] > 0) candidates.push_back(w);
    }
    if (need > static_cast<int>(candidates.size())) return;
    std::vector<bool> take(candidates.size(), false);
    std::fill(take.begin(), take.begin() + need, true);
    do {
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (take[k]) {
          --residual[candidates[k]];
          cur.insert_edge(v, candidates[k]);
        }
      }
      const int saved = residual[v];
      residual[v] = 0;
      self(self, v + 1);
      residual[v] = saved;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (take[k]) {
          ++residual[candidates[k]];
          cur.erase_edge(v, candidates[k]);
        }
      }
    } while (std::prev_permutation(take.begin(), take.end()));
  };
  place(place, 0);
  return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto da = vertex_degrees(a);
  auto db = vertex_degrees(b);
  {
    auto sa = da;
    auto sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || db[w] != da[v]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

bool unique_up_to_isomorphism(std::span<const Graph> graphs) {
  for (std::size_t i = 1; i < graphs.size(); ++i) {
    if (!is_isomorphic(graphs[0], graphs[i])) return false;
  }
  return true;
}

}  // namespace unswitch::oracle
