#include "unswitch/oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "test_support.hpp"
#include "unswitch/error.hpp"

namespace unswitch {
namespace {

using Seq = std::vector<int>;
using testing::edges_graph;

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph h(g.vertex_count());
  for (const Edge& e : g.edges()) h.insert_edge(perm[e.u], perm[e.v]);
  return h;
}

std::vector<Vertex> random_permutation(SplitMix64& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

TEST(ForbiddenFreeExhaustive, Examples) {
  EXPECT_TRUE(oracle::forbidden_free_exhaustive(testing::complete_split_3_3()));
  EXPECT_FALSE(oracle::forbidden_free_exhaustive(testing::modified_split_3_3()));
  EXPECT_FALSE(oracle::forbidden_free_exhaustive(edges_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(oracle::forbidden_free_exhaustive(Graph(0)));
  EXPECT_THROW(oracle::forbidden_free_exhaustive(Graph(13)), SizeGuardExceeded);
}

TEST(ThresholdElimination, Examples) {
  const auto order = oracle::threshold_elimination(testing::complete_split_3_3());
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(order->size(), 6u);
  EXPECT_FALSE(oracle::threshold_elimination(edges_graph(4, {{0, 1}, {1, 2}, {2, 3}})).has_value());
  // Star: leaf 1 is isolated-free but centre 0 dominates first.
  EXPECT_EQ(oracle::threshold_elimination(edges_graph(3, {{0, 1}, {0, 2}})),
            (std::vector<Vertex>{0, 1, 2}));
}

TEST(LabeledRealizations, SmallCounts) {
  EXPECT_EQ(oracle::enumerate_labeled_realizations(Seq{1, 1}).size(), 1u);
  EXPECT_EQ(oracle::enumerate_labeled_realizations(Seq{2, 2, 2}).size(), 1u);
  EXPECT_EQ(oracle::enumerate_labeled_realizations(Seq{3, 3, 2, 2}).size(), 1u);
  EXPECT_EQ(oracle::enumerate_labeled_realizations(Seq{5, 5, 5, 3, 3, 3}).size(), 1u);
  // Perfect matchings of 4 points.
  EXPECT_EQ(oracle::enumerate_labeled_realizations(Seq{1, 1, 1, 1}).size(), 3u);
  // 2-regular on 6: 60 hexagons plus 10 triangle pairs.
  EXPECT_EQ(oracle::enumerate_labeled_realizations(Seq{2, 2, 2, 2, 2, 2}).size(), 70u);
  EXPECT_TRUE(oracle::enumerate_labeled_realizations(Seq{1, 1, 1}).empty());
  EXPECT_TRUE(oracle::enumerate_labeled_realizations(Seq{}).size() == 1u);
  EXPECT_THROW(oracle::enumerate_labeled_realizations(Seq(9, 0)), SizeGuardExceeded);
}

TEST(LabeledRealizations, EachHasRequestedDegrees) {
  const Seq d{3, 2, 2, 2, 1, 0, 2};
  const auto all = oracle::enumerate_labeled_realizations(d);
  EXPECT_FALSE(all.empty());
  std::set<oracle::Code> distinct;
  for (const Graph& g : all) {
    EXPECT_EQ(vertex_degrees(g), d);
    distinct.insert(oracle::encode(g));
  }
  EXPECT_EQ(distinct.size(), all.size());
}

TEST(IsIsomorphic, Examples) {
  const Graph path = edges_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(oracle::is_isomorphic(path, edges_graph(4, {{2, 0}, {0, 3}, {3, 1}})));
  const Graph hexagon = edges_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Graph triangles = edges_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(oracle::is_isomorphic(hexagon, triangles));
  EXPECT_FALSE(oracle::is_isomorphic(Graph(3), Graph(4)));
  EXPECT_TRUE(oracle::is_isomorphic(Graph(0), Graph(0)));
}

TEST(UniqueUpToIsomorphism, Examples) {
  EXPECT_TRUE(oracle::unique_up_to_isomorphism(oracle::enumerate_labeled_realizations(Seq{1, 1, 1, 1})));
  EXPECT_FALSE(
      oracle::unique_up_to_isomorphism(oracle::enumerate_labeled_realizations(Seq{2, 2, 2, 2, 2, 2})));
  EXPECT_TRUE(oracle::unique_up_to_isomorphism({}));
  EXPECT_TRUE(oracle::unique_up_to_isomorphism(oracle::enumerate_labeled_realizations(Seq{3, 3, 2, 2})));
}

TEST(Codes, EncodeDecodeRoundTrip) {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.below(12));
    const Graph g = testing::random_graph(rng, n);
    EXPECT_EQ(oracle::decode(n, oracle::encode(g)), g);
  }
}

TEST(Codes, CanonicalCodeIsRelabelingInvariant) {
  SplitMix64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const Graph g = testing::random_graph(rng, n);
    const Graph h = relabel(g, random_permutation(rng, n));
    EXPECT_EQ(oracle::canonical_code(g), oracle::canonical_code(h));
    EXPECT_TRUE(oracle::is_isomorphic(g, h));
  }
}

TEST(Codes, CanonicalCodeSeparatesNonIsomorphic) {
  const Graph hexagon = edges_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Graph triangles = edges_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_NE(oracle::canonical_code(hexagon), oracle::canonical_code(triangles));
  EXPECT_THROW(oracle::canonical_code(Graph(12)), SizeGuardExceeded);
}

TEST(Corpus, CountsPerOrder) {
  // Graphs up to isomorphism on n vertices.
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(oracle::enumerate_graphs(n).size(), expected[n]) << n;
  const auto six = oracle::enumerate_graphs(6);
  EXPECT_EQ(oracle::extend_by_vertex(six).size(), 1044u);
  EXPECT_EQ(oracle::corpus(6).size(), 208u);
  EXPECT_THROW(oracle::enumerate_graphs(8), SizeGuardExceeded);
}

TEST(Corpus, SerialAndParallelAgree) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(oracle::enumerate_graphs(n, oracle::Execution::Serial),
              oracle::enumerate_graphs(n, oracle::Execution::Parallel));
  }
  const auto six = oracle::enumerate_graphs(6);
  EXPECT_EQ(oracle::extend_by_vertex(six, oracle::Execution::Serial),
            oracle::extend_by_vertex(six, oracle::Execution::Parallel));
}

TEST(Corpus, ExtensionMatchesEdgeSubsets) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(oracle::extend_by_vertex(oracle::enumerate_graphs(n - 1)), oracle::enumerate_graphs(n));
  }
}

// No two corpus graphs are isomorphic, checked with the permutation search
// inside buckets of equal degree sequence.
TEST(Corpus, PairwiseNonIsomorphic) {
  std::map<std::vector<int>, std::vector<Graph>> buckets;
  for (const Graph& g : oracle::corpus(6)) buckets[degree_sequence(g).degrees].push_back(g);
  for (const auto& [degrees, graphs] : buckets) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j)
        EXPECT_FALSE(oracle::is_isomorphic(graphs[i], graphs[j]));
  }
}

TEST(Corpus, EveryLabeledGraphIsRepresented) {
  std::set<oracle::Code> codes;
  for (const Graph& g : oracle::enumerate_graphs(5)) codes.insert(oracle::canonical_code(g));
  for (const Graph& g : testing::all_labeled_graphs(5)) {
    EXPECT_TRUE(codes.count(oracle::canonical_code(g)));
  }
}

}  // namespace
}  // namespace unswitch
