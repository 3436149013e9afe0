#include "unswitch/unswitchable.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>

#include "unswitch/error.hpp"

namespace unswitch {

SwitchVerdict recognize(const Graph& g) {
  const DegreeSequence ds = degree_sequence(g);
  if (ds.size() == 0) return {};

  if (!is_split_sequence(ds.degrees)) {
    // A non-split graph induces 2K2, C4 or C5, and C5 contains a P4.
    auto quad = find_forbidden_quad(g);
    if (!quad) throw InternalInconsistency("non-split graph without a forbidden quadruple");
    return {quad};
  }

  const SplitPartition p = split_partition(g);

  // Independent neighbors of each clique vertex, built from the adjacency
  // lists of the independent vertices.
  std::vector<std::vector<Vertex>> indep_nbrs(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex x : p.independent) {
    for (Vertex u : g.neighbors(x)) indep_nbrs[u].push_back(x);
  }

  std::vector<Vertex> u_only;
  std::vector<Vertex> v_only;
  for (std::size_t a = 0; a < p.clique.size(); ++a) {
    for (std::size_t b = a + 1; b < p.clique.size(); ++b) {
      const Vertex u = p.clique[a];
      const Vertex v = p.clique[b];
      const auto& su = indep_nbrs[u];
      const auto& sv = indep_nbrs[v];
      u_only.clear();
      v_only.clear();
      std::set_difference(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(u_only));
      std::set_difference(sv.begin(), sv.end(), su.begin(), su.end(), std::back_inserter(v_only));
      if (!u_only.empty() && !v_only.empty()) {
        QuadClass q = classify_quad(g, {u_only.front(), u, v, v_only.front()});
        if (q.kind != QuadKind::P4) throw InternalInconsistency("clique-edge witness is not a P4");
        return {q};
      }
    }
  }
  return {};
}

int EggletonFamily::vertex_count() const {
  std::size_t total = 0;
  for (const auto& s : sets) total += s.size();
  return static_cast<int>(total);
}

void validate_family(const EggletonFamily& f) {
  if (f.n < 1) throw InvalidFamily("n must be positive");
  if (f.sets.size() != static_cast<std::size_t>(2 * f.n)) {
    throw InvalidFamily("expected " + std::to_string(2 * f.n) + " sets, got " +
                        std::to_string(f.sets.size()));
  }
  const int total = f.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(total), -1);
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    for (Vertex v : f.sets[i]) {
      if (v < 0 || v >= total) {
        throw InvalidFamily("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(total - 1));
      }
      if (owner[v] >= 0) {
        throw InvalidFamily("vertex " + std::to_string(v) + " appears in S" +
                            std::to_string(owner[v] + 1) + " and S" + std::to_string(i + 1));
      }
      owner[v] = static_cast<int>(i);
    }
  }
}

Graph eggleton_construct(const EggletonFamily& f) {
  validate_family(f);
  Graph g(f.vertex_count());
  const int sets = 2 * f.n;
  for (int i = 1; i <= sets; ++i) {
    for (int j = i; j <= sets; ++j) {
      if (!(i + f.n < j || i > f.n)) continue;
      const auto& si = f.sets[i - 1];
      const auto& sj = f.sets[j - 1];
      for (Vertex a : si)
        for (Vertex b : sj)
          if (a != b) g.insert_edge(a, b);
    }
  }
  return g;
}

namespace {

// Independent vertices at level r go to S_r, clique vertices at level s go
// to S_{n+s}; a and b are then adjacent iff s(b) > r(a).
EggletonFamily family_from_levels(int n, const std::vector<std::pair<Vertex, int>>& indep,
                                  const std::vector<std::pair<Vertex, int>>& clique) {
  EggletonFamily f;
  f.n = n;
  f.sets.assign(static_cast<std::size_t>(2 * n), {});
  for (auto [v, r] : indep) f.sets[r - 1].push_back(v);
  for (auto [v, s] : clique) f.sets[n + s - 1].push_back(v);
  for (auto& s : f.sets) std::sort(s.begin(), s.end());
  return f;
}

void require_unswitchable(const Graph& g) {
  const SwitchVerdict verdict = recognize(g);
  if (!verdict.unswitchable()) {
    std::string w = to_string(verdict.witness->kind);
    for (Vertex v : verdict.witness->vertices) w += " " + std::to_string(v);
    throw NotUnswitchable("graph is switchable, witness " + w);
  }
}

}  // namespace

EggletonFamily eggleton_decompose(const Graph& g) {
  require_unswitchable(g);
  const int total = g.vertex_count();
  if (total == 0) return EggletonFamily{1, {{}, {}}};

  std::vector<bool> alive(static_cast<std::size_t>(total), true);
  std::vector<int> live_degree = vertex_degrees(g);
  int remaining = total;

  auto drop = [&](const std::vector<Vertex>& group) {
    for (Vertex v : group) alive[v] = false;
    for (Vertex v : group) {
      for (Vertex w : g.neighbors(v)) {
        if (alive[w]) --live_degree[w];
      }
    }
    remaining -= static_cast<int>(group.size());
  };

  // round -> (isolated group, dominating group)
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> rounds;
  while (remaining > 0) {
    std::vector<Vertex> isolated;
    for (Vertex v = 0; v < total; ++v) {
      if (alive[v] && live_degree[v] == 0) isolated.push_back(v);
    }
    drop(isolated);
    std::vector<Vertex> dominating;
    for (Vertex v = 0; v < total; ++v) {
      if (alive[v] && live_degree[v] == remaining - 1) dominating.push_back(v);
    }
    drop(dominating);
    if (isolated.empty() && dominating.empty()) {
      throw InternalInconsistency("peeling stalled on a graph recognized as unswitchable");
    }
    rounds.emplace_back(std::move(isolated), std::move(dominating));
  }

  const int levels = static_cast<int>(rounds.size());
  std::vector<std::pair<Vertex, int>> indep;
  std::vector<std::pair<Vertex, int>> clique;
  for (int t = 0; t < levels; ++t) {
    const int level = levels - t;
    for (Vertex v : rounds[t].first) indep.emplace_back(v, level);
    for (Vertex v : rounds[t].second) clique.emplace_back(v, level);
  }
  EggletonFamily f = family_from_levels(levels, indep, clique);
  if (eggleton_construct(f) != g) {
    throw InternalInconsistency("peeling family does not reproduce the graph");
  }
  return f;
}

EggletonFamily eggleton_decompose(const Graph& g, const SplitPartition& p) {
  if (!verify_split_partition(g, p)) {
    throw PreconditionError("eggleton_decompose given an invalid split partition");
  }
  require_unswitchable(g);
  if (g.vertex_count() == 0) return EggletonFamily{1, {{}, {}}};

  // Larger independent neighborhoods get lower levels.
  std::map<int, int, std::greater<>> level_of_degree;
  for (Vertex x : p.independent) level_of_degree.emplace(g.degree(x), 0);
  int r = 0;
  for (auto& [deg, level] : level_of_degree) level = ++r;

  std::vector<std::pair<Vertex, int>> indep;
  std::vector<int> indep_level(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex x : p.independent) {
    indep_level[x] = level_of_degree.at(g.degree(x));
    indep.emplace_back(x, indep_level[x]);
  }
  std::vector<std::pair<Vertex, int>> clique;
  int n = std::max(1, r);
  for (Vertex b : p.clique) {
    int s = 1;
    for (Vertex x : g.neighbors(b)) s = std::max(s, indep_level[x] + 1);
    clique.emplace_back(b, s);
    n = std::max(n, s);
  }
  EggletonFamily f = family_from_levels(n, indep, clique);
  if (eggleton_construct(f) != g) {
    throw InternalInconsistency("partition family does not reproduce the graph");
  }
  return f;
}

}  // namespace unswitch
