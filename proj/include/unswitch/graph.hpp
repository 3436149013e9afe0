#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace unswitch {

using Vertex = int;

// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  auto operator<=>(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
// sorted and duplicate-free, so each one behaves as a flat set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Return false when the edge was already present / absent. Both throw
  // InvalidGraph on self-loops or out-of-range endpoints.
  bool insert_edge(Vertex u, Vertex v);
  bool erase_edge(Vertex u, Vertex v);

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

// Builds a graph from an edge list. Repeated pairs (in either orientation)
// are collapsed; when `duplicates` is non-null each collapsed repeat is
// appended to it.
Graph graph_from_edges(int n, std::span<const Edge> edges,
                       std::vector<Edge>* duplicates = nullptr);

// Non-increasing degrees plus the vertex that sits at each position.
struct DegreeSequence {
  std::vector<int> degrees;
  std::vector<Vertex> order;

  std::size_t size() const noexcept { return degrees.size(); }
  bool operator==(const DegreeSequence&) const = default;
};

// Stable sort by (degree desc, vertex id asc).
DegreeSequence degree_sequence(const Graph& g);

// Per-vertex degrees in vertex-id order.
std::vector<int> vertex_degrees(const Graph& g);

enum class QuadKind { P4, C4, TwoK2, Other };

std::string to_string(QuadKind kind);

// Classification of the subgraph induced on four vertices. `vertices` is in
// path order for P4 (smaller endpoint first), cyclic order for C4 (smallest
// vertex first, then its smaller neighbor), and as two sorted edges with the
// lexicographically smaller edge first for TwoK2. Other keeps ascending ids.
struct QuadClass {
  QuadKind kind = QuadKind::Other;
  std::array<Vertex, 4> vertices{};

  bool operator==(const QuadClass&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadClass& q);

QuadClass classify_quad(const Graph& g, std::array<Vertex, 4> quad);

// First induced P4, C4 or 2K2 over 4-subsets in lexicographic order.
// Returns nullopt exactly when the graph admits no 2-switch.
std::optional<QuadClass> find_forbidden_quad(const Graph& g);

// Every induced P4, C4 and 2K2, in the same lexicographic order.
std::vector<QuadClass> all_forbidden_quads(const Graph& g);

}  // namespace unswitch
