#include "unswitch/switching.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>

#include "unswitch/error.hpp"

namespace unswitch {

TwoSwitch TwoSwitch::canonical() const {
  TwoSwitch s;
  for (int k = 0; k < 2; ++k) {
    s.removed[k] = Edge::normalized(removed[k].u, removed[k].v);
    s.added[k] = Edge::normalized(added[k].u, added[k].v);
  }
  std::sort(s.removed.begin(), s.removed.end());
  std::sort(s.added.begin(), s.added.end());
  return s;
}

std::ostream& operator<<(std::ostream& os, const TwoSwitch& s) {
  return os << "remove {" << s.removed[0].u << "," << s.removed[0].v << "} {" << s.removed[1].u
            << "," << s.removed[1].v << "} add {" << s.added[0].u << "," << s.added[0].v << "} {"
            << s.added[1].u << "," << s.added[1].v << "}";
}

void validate_two_switch(const Graph& g, const TwoSwitch& s) {
  const std::array<Vertex, 4> quad{s.removed[0].u, s.removed[0].v, s.removed[1].u,
                                   s.removed[1].v};
  for (int i = 0; i < 4; ++i) {
    if (quad[i] < 0 || quad[i] >= g.vertex_count()) {
      throw InvalidSwitch("vertex out of range: " + std::to_string(quad[i]));
    }
    for (int j = 0; j < i; ++j) {
      if (quad[i] == quad[j]) throw InvalidSwitch("removed edges are not independent");
    }
  }
  for (const Edge& e : s.removed) {
    if (!g.has_edge(e.u, e.v)) {
      throw InvalidSwitch("removed edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is not present");
    }
  }
  // Each added pair must take one endpoint from each removed edge, and the
  // two added pairs must cover all four vertices.
  auto crosses = [&](const Edge& e) {
    auto in = [](Vertex x, const Edge& r) { return x == r.u || x == r.v; };
    return (in(e.u, s.removed[0]) && in(e.v, s.removed[1])) ||
           (in(e.u, s.removed[1]) && in(e.v, s.removed[0]));
  };
  const auto& a = s.added;
  if (!crosses(a[0]) || !crosses(a[1]) || a[0].u == a[1].u || a[0].u == a[1].v ||
      a[0].v == a[1].u || a[0].v == a[1].v) {
    throw InvalidSwitch("added pairs do not form a degree-preserving matching");
  }
  for (const Edge& e : a) {
    if (g.has_edge(e.u, e.v)) {
      throw InvalidSwitch("added edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is already present");
    }
  }
}

Graph apply_two_switch(const Graph& g, const TwoSwitch& s) {
  validate_two_switch(g, s);
  Graph out = g;
  for (const Edge& e : s.removed) out.erase_edge(e.u, e.v);
  for (const Edge& e : s.added) out.insert_edge(e.u, e.v);
  return out;
}

namespace {

// The three perfect matchings on a sorted quadruple {a,b,c,d}:
// {ab,cd}, {ac,bd}, {ad,bc}.
constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kMatchings{{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

template <typename HasEdge, typename Emit>
void switches_on_quad(const std::array<Vertex, 4>& q, HasEdge&& has_edge, Emit&& emit) {
  std::array<int, 3> present{};  // edges of each matching present
  for (int m = 0; m < 3; ++m) {
    for (const auto& p : kMatchings[m]) present[m] += has_edge(q[p[0]], q[p[1]]) ? 1 : 0;
  }
  for (int from = 0; from < 3; ++from) {
    if (present[from] != 2) continue;
    for (int to = 0; to < 3; ++to) {
      if (to == from || present[to] != 0) continue;
      TwoSwitch s;
      for (int k = 0; k < 2; ++k) {
        s.removed[k] = {q[kMatchings[from][k][0]], q[kMatchings[from][k][1]]};
        s.added[k] = {q[kMatchings[to][k][0]], q[kMatchings[to][k][1]]};
      }
      emit(s.canonical());
    }
  }
}

template <typename HasEdge, typename Emit>
void all_switches(int n, HasEdge&& has_edge, Emit&& emit) {
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) switches_on_quad({a, b, c, d}, has_edge, emit);
}

}  // namespace

std::vector<TwoSwitch> enumerate_two_switches(const Graph& g) {
  std::vector<TwoSwitch> out;
  all_switches(
      g.vertex_count(), [&](Vertex u, Vertex v) { return g.has_edge(u, v); },
      [&](const TwoSwitch& s) { out.push_back(s); });
  return out;
}

Normalization normalize_max_vertex(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("normalize_max_vertex on empty graph");
  const DegreeSequence ds = degree_sequence(g);
  const auto& pos = ds.order;  // pos[i] = vertex at sorted position i
  const int n = g.vertex_count();
  const int d1 = ds.degrees[0];
  const Vertex top = pos[0];

  Normalization result{g, {}};
  Graph& cur = result.graph;
  for (;;) {
    int i = -1;
    for (int p = 1; p <= d1; ++p) {
      if (!cur.has_edge(top, pos[p])) {
        i = p;
        break;
      }
    }
    if (i < 0) break;
    int j = -1;
    for (int p = d1 + 1; p < n; ++p) {
      if (cur.has_edge(top, pos[p])) {
        j = p;
        break;
      }
    }
    if (j < 0) throw InternalInconsistency("max-degree vertex lost its degree");
    const Vertex vi = pos[i];
    const Vertex vj = pos[j];
    int t = -1;
    for (int p = 1; p < n; ++p) {
      const Vertex vt = pos[p];
      if (vt != vj && cur.has_edge(vi, vt) && !cur.has_edge(vj, vt)) {
        t = p;
        break;
      }
    }
    if (t < 0) throw InternalInconsistency("no pivot vertex for normalization switch");
    const Vertex vt = pos[t];
    TwoSwitch s{{Edge{top, vj}, Edge{vi, vt}}, {Edge{top, vi}, Edge{vj, vt}}};
    s = s.canonical();
    cur = apply_two_switch(cur, s);
    result.switches.push_back(s);
  }
  return result;
}

namespace {

using Code = std::uint64_t;

class PairIndex {
 public:
  explicit PairIndex(int n) : n_(n), index_(static_cast<std::size_t>(n * n), -1) {
    int k = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) index_[u * n + v] = index_[v * n + u] = k++;
  }
  Code bit(Vertex u, Vertex v) const { return Code{1} << index_[u * n_ + v]; }

 private:
  int n_;
  std::vector<int> index_;
};

Code encode(const Graph& g, const PairIndex& idx) {
  Code c = 0;
  for (const Edge& e : g.edges()) c |= idx.bit(e.u, e.v);
  return c;
}

}  // namespace

std::optional<std::vector<TwoSwitch>> two_switch_path(const Graph& g, const Graph& h,
                                                      std::size_t state_limit) {
  if (g.vertex_count() != h.vertex_count()) return std::nullopt;
  if (vertex_degrees(g) != vertex_degrees(h)) return std::nullopt;
  const int n = g.vertex_count();
  if (n > 11) throw PreconditionError("two_switch_path supports at most 11 vertices");

  const PairIndex idx(n);
  const Code start = encode(g, idx);
  const Code goal = encode(h, idx);
  if (start == goal) return std::vector<TwoSwitch>{};

  struct Parent {
    Code prev;
    TwoSwitch via;
  };
  std::unordered_map<Code, Parent> parent;
  parent.emplace(start, Parent{start, {}});
  std::deque<Code> queue{start};

  while (!queue.empty()) {
    const Code cur = queue.front();
    queue.pop_front();
    bool done = false;
    all_switches(
        n, [&](Vertex u, Vertex v) { return (cur & idx.bit(u, v)) != 0; },
        [&](const TwoSwitch& s) {
          if (done) return;
          Code next = cur;
          for (const Edge& e : s.removed) next ^= idx.bit(e.u, e.v);
          for (const Edge& e : s.added) next ^= idx.bit(e.u, e.v);
          if (parent.contains(next)) return;
          if (parent.size() >= state_limit) {
            throw SearchBudgetExceeded("2-switch search exceeded " + std::to_string(state_limit) +
                                       " states");
          }
          parent.emplace(next, Parent{cur, s});
          if (next == goal) {
            done = true;
            return;
          }
          queue.push_back(next);
        });
    if (done) break;
  }
  if (!parent.contains(goal)) return std::nullopt;

  std::vector<TwoSwitch> path;
  for (Code c = goal; c != start;) {
    const Parent& p = parent.at(c);
    path.push_back(p.via);
    c = p.prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace unswitch
