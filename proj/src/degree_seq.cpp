#include "unswitch/degree_seq.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

#include "unswitch/error.hpp"

namespace unswitch {

namespace {

void require_non_increasing(std::span<const int> d) {
  if (!std::is_sorted(d.begin(), d.end(), std::greater<>())) {
    throw PreconditionError("sequence is not non-increasing: " + format_sequence(d));
  }
}

void sort_descending(std::vector<int>& d) { std::sort(d.begin(), d.end(), std::greater<>()); }

bool all_zero(std::span<const int> d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

}  // namespace

std::string format_sequence(std::span<const int> d) {
  std::string s = "<";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(d[i]);
  }
  return s + ">";
}

std::vector<int> reduce_head(std::span<const int> d) {
  if (d.empty()) throw PreconditionError("reduce_head on empty sequence");
  require_non_increasing(d);
  if (d[0] < 1) throw PreconditionError("reduce_head needs d[0] >= 1");
  return reduce_at(d, 0);
}

std::vector<int> reduce_at(std::span<const int> d, std::size_t i) {
  if (i >= d.size()) throw PreconditionError("reduce_at position out of range");
  require_non_increasing(d);
  const int k = d[i];
  if (k < 1) throw PreconditionError("reduce_at needs d[i] >= 1");
  if (static_cast<std::size_t>(k) > d.size() - 1) {
    throw NonGraphical("entry " + std::to_string(k) + " exceeds the " +
                       std::to_string(d.size() - 1) + " other entries");
  }
  std::vector<int> rest;
  rest.reserve(d.size() - 1);
  for (std::size_t p = 0; p < d.size(); ++p) {
    if (p != i) rest.push_back(d[p]);
  }
  // rest is still non-increasing, so its first k entries are the highest.
  for (int p = 0; p < k; ++p) {
    if (--rest[p] < 0) {
      throw NonGraphical("entry would become negative reducing " + format_sequence(d));
    }
  }
  sort_descending(rest);
  return rest;
}

GraphicalTrace graphical_trace(std::span<const int> d) {
  GraphicalTrace trace;
  std::vector<int> cur(d.begin(), d.end());
  sort_descending(cur);
  trace.steps.push_back(cur);

  if (std::any_of(cur.begin(), cur.end(), [](int x) { return x < 0; })) {
    trace.failure = "negative entry";
    return trace;
  }
  if (std::accumulate(cur.begin(), cur.end(), 0L) % 2 != 0) {
    trace.failure = "odd degree sum";
    return trace;
  }
  while (!all_zero(cur)) {
    try {
      cur = reduce_head(cur);
    } catch (const NonGraphical& e) {
      trace.failure = e.what();
      return trace;
    }
    trace.steps.push_back(cur);
  }
  trace.graphical = true;
  return trace;
}

bool is_graphical(std::span<const int> d) { return graphical_trace(d).graphical; }

Graph realize(std::span<const int> d) {
  GraphicalTrace trace = graphical_trace(d);
  if (!trace.graphical) {
    throw NonGraphical(format_sequence(d) + " is not graphical: " + trace.failure);
  }
  Graph g(static_cast<int>(d.size()));

  // (residual degree, vertex); ties go to the smaller vertex id.
  std::vector<std::pair<int, Vertex>> live;
  live.reserve(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) live.emplace_back(d[v], static_cast<Vertex>(v));
  auto resort = [&] {
    std::sort(live.begin(), live.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
  };
  resort();

  while (!live.empty() && live.front().first > 0) {
    auto [k, head] = live.front();
    live.erase(live.begin());
    if (static_cast<std::size_t>(k) > live.size()) {
      throw InternalInconsistency("realization ran out of targets");
    }
    for (int p = 0; p < k; ++p) {
      if (--live[p].first < 0) throw InternalInconsistency("realization went negative");
      g.insert_edge(head, live[p].second);
    }
    resort();
  }
  return g;
}

}  // namespace unswitch
