#include "unswitch/graph.hpp"

#include <algorithm>
#include <numeric>

#include "unswitch/error.hpp"

namespace unswitch {

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.u << ' ' << e.v;
}

Graph::Graph(int n) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_pair(Vertex u, Vertex v) const {
  const int n = vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw InvalidGraph("endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) +
                       "} with n=" + std::to_string(n));
  }
  if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return false;
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::insert_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edges_;
  return true;
}

bool Graph::erase_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return false;
  nu.erase(it);
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edges_;
  return true;
}

Graph graph_from_edges(int n, std::span<const Edge> edges, std::vector<Edge>* duplicates) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (!g.insert_edge(e.u, e.v) && duplicates != nullptr) {
      duplicates->push_back(Edge::normalized(e.u, e.v));
    }
  }
  return g;
}

std::vector<int> vertex_degrees(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  return d;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence ds;
  ds.order.resize(static_cast<std::size_t>(g.vertex_count()));
  std::iota(ds.order.begin(), ds.order.end(), 0);
  std::stable_sort(ds.order.begin(), ds.order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  ds.degrees.reserve(ds.order.size());
  for (Vertex v : ds.order) ds.degrees.push_back(g.degree(v));
  return ds;
}

std::string to_string(QuadKind kind) {
  switch (kind) {
    case QuadKind::P4: return "P4";
    case QuadKind::C4: return "C4";
    case QuadKind::TwoK2: return "2K2";
    case QuadKind::Other: return "OTHER";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const QuadClass& q) {
  os << to_string(q.kind);
  for (Vertex v : q.vertices) os << ' ' << v;
  return os;
}

QuadClass classify_quad(const Graph& g, std::array<Vertex, 4> quad) {
  for (int i = 0; i < 4; ++i) {
    if (quad[i] < 0 || quad[i] >= g.vertex_count()) {
      throw InvalidGraph("quad vertex out of range: " + std::to_string(quad[i]));
    }
    for (int j = 0; j < i; ++j) {
      if (quad[i] == quad[j]) throw InvalidGraph("duplicate quad vertex: " + std::to_string(quad[i]));
    }
  }
  std::sort(quad.begin(), quad.end());

  std::array<std::array<bool, 4>, 4> a{};
  std::array<int, 4> local_degree{};
  int edge_total = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.has_edge(quad[i], quad[j])) {
        a[i][j] = a[j][i] = true;
        ++local_degree[i];
        ++local_degree[j];
        ++edge_total;
      }
    }
  }
  auto count_degree = [&](int d) {
    return std::count(local_degree.begin(), local_degree.end(), d);
  };

  QuadClass out;
  out.vertices = quad;

  if (edge_total == 3 && count_degree(1) == 2 && count_degree(2) == 2) {
    // Walk from the smaller endpoint; quad is sorted so the first degree-1
    // slot holds it.
    int cur = static_cast<int>(std::find(local_degree.begin(), local_degree.end(), 1) -
                               local_degree.begin());
    int prev = -1;
    for (int step = 0; step < 4; ++step) {
      out.vertices[step] = quad[cur];
      int next = -1;
      for (int k = 0; k < 4; ++k) {
        if (a[cur][k] && k != prev) {
          next = k;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    out.kind = QuadKind::P4;
  } else if (edge_total == 4 && count_degree(2) == 4) {
    // Slot 0 is the smallest vertex; its first neighbor slot is the smaller one.
    int prev = 0;
    int cur = a[0][1] ? 1 : 2;
    out.vertices[0] = quad[0];
    for (int step = 1; step < 4; ++step) {
      out.vertices[step] = quad[cur];
      int next = -1;
      for (int k = 0; k < 4; ++k) {
        if (a[cur][k] && k != prev) {
          next = k;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    out.kind = QuadKind::C4;
  } else if (edge_total == 2 && count_degree(1) == 4) {
    // quad[0] is in the lexicographically smaller edge.
    int mate = 1;
    while (!a[0][mate]) ++mate;
    std::array<int, 2> rest{};
    int r = 0;
    for (int k = 1; k < 4; ++k) {
      if (k != mate) rest[r++] = k;
    }
    out.vertices = {quad[0], quad[mate], quad[rest[0]], quad[rest[1]]};
    out.kind = QuadKind::TwoK2;
  }
  return out;
}

namespace {

template <typename Visit>
void scan_quads(const Graph& g, Visit&& visit) {
  const int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          QuadClass q = classify_quad(g, {a, b, c, d});
          if (q.kind != QuadKind::Other && !visit(q)) return;
        }
}

}  // namespace

std::optional<QuadClass> find_forbidden_quad(const Graph& g) {
  std::optional<QuadClass> found;
  scan_quads(g, [&](const QuadClass& q) {
    found = q;
    return false;
  });
  return found;
}

std::vector<QuadClass> all_forbidden_quads(const Graph& g) {
  std::vector<QuadClass> out;
  scan_quads(g, [&](const QuadClass& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

}  // namespace unswitch
