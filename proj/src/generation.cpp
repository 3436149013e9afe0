#include "unswitch/generation.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>

#include "unswitch/error.hpp"

namespace unswitch {

namespace {

void require_split_sides(const Graph& g, std::span<const Vertex> independent) {
  std::vector<bool> in_indep(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : independent) {
    if (v < 0 || v >= g.vertex_count()) {
      throw PreconditionError("independent vertex out of range: " + std::to_string(v));
    }
    in_indep[v] = true;
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (in_indep[u] && in_indep[v] && g.has_edge(u, v)) {
        throw PreconditionError("independent side has edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
      }
      if (!in_indep[u] && !in_indep[v] && !g.has_edge(u, v)) {
        throw PreconditionError("clique side misses edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
      }
    }
  }
}

}  // namespace

std::vector<P4Record> find_all_p4s(const Graph& g, std::span<const Vertex> independent) {
  require_split_sides(g, independent);
  std::vector<Vertex> side(independent.begin(), independent.end());
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());

  std::vector<P4Record> out;
  std::vector<Vertex> only1;
  std::vector<Vertex> only2;
  for (std::size_t i = 0; i < side.size(); ++i) {
    for (std::size_t j = i + 1; j < side.size(); ++j) {
      const auto s1 = g.neighbors(side[i]);
      const auto s2 = g.neighbors(side[j]);
      only1.clear();
      only2.clear();
      std::set_difference(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(only1));
      std::set_difference(s2.begin(), s2.end(), s1.begin(), s1.end(), std::back_inserter(only2));
      if (only1.empty() || only2.empty()) continue;
      for (Vertex a : only1)
        for (Vertex b : only2) out.push_back({{side[i], a, b, side[j]}});
    }
  }
  return out;
}

std::vector<ChordCount> chord_frequencies(std::span<const P4Record> p4s) {
  std::map<Edge, int> counts;
  for (const P4Record& r : p4s) {
    ++counts[Edge::normalized(r.path[0], r.path[2])];
    ++counts[Edge::normalized(r.path[1], r.path[3])];
  }
  std::vector<ChordCount> out;
  out.reserve(counts.size());
  for (const auto& [chord, count] : counts) out.push_back({chord, count});
  // map order already sorts chords, so a stable sort by count keeps ties
  // lexicographic.
  std::stable_sort(out.begin(), out.end(),
                   [](const ChordCount& a, const ChordCount& b) { return a.count > b.count; });
  return out;
}

std::vector<Edge> add_min_edges(Graph& g, std::vector<P4Record> p4s,
                                std::span<const Vertex> independent) {
  std::vector<bool> in_indep(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : independent) in_indep.at(v) = true;
  const auto n1 = static_cast<std::size_t>(std::count(in_indep.begin(), in_indep.end(), true));
  const std::size_t bound = n1 * (in_indep.size() - n1);

  std::vector<Edge> added;
  while (!p4s.empty()) {
    const Edge chord = chord_frequencies(p4s).front().chord;
    if (in_indep[chord.u] == in_indep[chord.v]) {
      throw InternalInconsistency("repair chord is not a cross pair");
    }
    if (!g.insert_edge(chord.u, chord.v)) {
      throw InternalInconsistency("repair chord already present");
    }
    added.push_back(chord);
    if (added.size() > bound) throw InternalInconsistency("repair loop exceeded n1*n2 chords");
    p4s = find_all_p4s(g, independent);
  }
  return added;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Reject the low (2^64 mod bound) values so x % bound is exactly uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

Generated generate_unswitchable(const GenConfig& cfg) {
  if (cfg.n1 < 0) throw InvalidConfig("n1 must be non-negative");
  if (cfg.n2 < 2) throw InvalidConfig("n2 must be at least 2");
  const int n1 = cfg.n1;
  const int n2 = cfg.n2;

  Generated out;
  out.graph = Graph(n1 + n2);
  auto add = [&](Vertex u, Vertex v) {
    if (!out.graph.insert_edge(u, v)) return false;
    out.edge_list.push_back(Edge::normalized(u, v));
    return true;
  };
  for (Vertex a = n1; a < n1 + n2; ++a)
    for (Vertex b = a + 1; b < n1 + n2; ++b) add(a, b);

  SplitMix64 rng(cfg.seed);
  std::vector<Vertex> unpicked(static_cast<std::size_t>(n1));
  for (int i = 0; i < n1; ++i) unpicked[i] = i;

  auto to_connect = rng.below(static_cast<std::uint64_t>(n1) + 1);
  while (to_connect-- > 0) {
    const auto slot = rng.below(unpicked.size());
    const Vertex v = unpicked[slot];
    unpicked.erase(unpicked.begin() + static_cast<std::ptrdiff_t>(slot));
    auto targets = rng.below(static_cast<std::uint64_t>(n2) + 1);
    while (targets > 0) {
      const auto c = static_cast<Vertex>(n1 + rng.below(static_cast<std::uint64_t>(n2)));
      if (add(v, c)) --targets;
    }
  }

  std::vector<Vertex> independent(static_cast<std::size_t>(n1));
  for (int i = 0; i < n1; ++i) independent[i] = i;
  auto p4s = find_all_p4s(out.graph, independent);
  if (!p4s.empty()) {
    const auto repair = add_min_edges(out.graph, std::move(p4s), independent);
    out.edge_list.insert(out.edge_list.end(), repair.begin(), repair.end());
    out.repair_edges = repair.size();
  }
  return out;
}

}  // namespace unswitch
