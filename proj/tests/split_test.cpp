#include "unswitch/split.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "unswitch/degree_seq.hpp"
#include "unswitch/error.hpp"
#include "unswitch/oracle.hpp"

namespace unswitch {
namespace {

using Seq = std::vector<int>;
using testing::edges_graph;

// Tries every vertex subset as the clique side.
bool split_by_search(const Graph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      for (Vertex v = u + 1; v < n && ok; ++v) {
        const bool in_u = (mask >> u) & 1u;
        const bool in_v = (mask >> v) & 1u;
        if (in_u && in_v && !g.has_edge(u, v)) ok = false;
        if (!in_u && !in_v && g.has_edge(u, v)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

TEST(SplitIndex, Examples) {
  EXPECT_EQ(split_index(Seq{3, 3, 2, 2}), 3);
  EXPECT_EQ(split_index(Seq{0, 0, 0}), 1);
  EXPECT_EQ(split_index(Seq{5, 5, 5, 5, 5, 5, 3, 3, 3, 3, 3, 3}), 6);
  EXPECT_EQ(split_index(Seq{5, 4, 4, 3, 2, 2}), 4);
  EXPECT_THROW(split_index(Seq{}), PreconditionError);
}

TEST(SplitBalance, Examples) {
  const SplitBalance small = split_balance(Seq{3, 3, 2, 2});
  EXPECT_EQ(small.m, 3);
  EXPECT_EQ(small.lhs, 8);
  EXPECT_EQ(small.rhs, 8);
  EXPECT_TRUE(small.holds());

  const SplitBalance twin = split_balance(Seq{5, 5, 5, 5, 5, 5, 3, 3, 3, 3, 3, 3});
  EXPECT_EQ(twin.m, 6);
  EXPECT_EQ(twin.lhs, 30);
  EXPECT_EQ(twin.rhs, 48);
  EXPECT_FALSE(twin.holds());

  const SplitBalance six = split_balance(Seq{5, 4, 4, 3, 2, 2});
  EXPECT_EQ(six.m, 4);
  EXPECT_EQ(six.lhs, 16);
  EXPECT_EQ(six.rhs, 16);
}

TEST(IsSplitSequence, Examples) {
  EXPECT_TRUE(is_split_sequence(Seq{3, 3, 2, 2}));
  EXPECT_FALSE(is_split_sequence(Seq{5, 5, 5, 5, 5, 5, 3, 3, 3, 3, 3, 3}));
  EXPECT_TRUE(is_split_sequence(Seq{5, 4, 4, 3, 2, 2}));
  EXPECT_FALSE(is_split_sequence(Seq{2, 2, 2, 2}));
  EXPECT_TRUE(is_split_sequence(Seq{0}));
}

TEST(SplitPartition, SmallExample) {
  const SplitPartition p = split_partition(testing::small_split_example());
  EXPECT_EQ(p.clique, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(p.independent, (std::vector<Vertex>{2}));
}

TEST(SplitPartition, CompleteSplitGraph) {
  // m = 4, so one independent vertex joins the clique; the smallest id wins.
  const SplitPartition p = split_partition(testing::complete_split_3_3());
  EXPECT_EQ(p.clique, (std::vector<Vertex>{0, 3, 4, 5}));
  EXPECT_EQ(p.independent, (std::vector<Vertex>{1, 2}));
}

TEST(SplitPartition, CompleteGraphIsAllClique) {
  const SplitPartition p =
      split_partition(edges_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(p.clique, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(p.independent.empty());
}

TEST(SplitPartition, RejectsNonSplit) {
  EXPECT_THROW(split_partition(edges_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), NotSplit);
  EXPECT_THROW(split_partition(edges_graph(4, {{0, 1}, {2, 3}})), NotSplit);
}

TEST(VerifySplitPartition, RejectsBadCertificates) {
  const Graph g = testing::small_split_example();
  EXPECT_TRUE(verify_split_partition(g, {{0, 1, 3}, {2}}));
  EXPECT_FALSE(verify_split_partition(g, {{0, 1, 2, 3}, {}}));
  EXPECT_TRUE(verify_split_partition(g, {{1, 3}, {0, 2}}));
  EXPECT_FALSE(verify_split_partition(g, {{1, 2}, {0, 3}}));
  EXPECT_FALSE(verify_split_partition(g, {{0, 1}, {2}}));
}

TEST(ConstructSplitGraph, Examples) {
  EXPECT_EQ(construct_split_graph(Seq{3, 3, 2, 2}),
            edges_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}));
  EXPECT_EQ(construct_split_graph(Seq{2, 1, 1}), edges_graph(3, {{0, 1}, {0, 2}}));
  EXPECT_EQ(construct_split_graph(Seq{0}), Graph(1));
}

TEST(ConstructSplitGraph, Errors) {
  EXPECT_THROW(construct_split_graph(Seq{1, 2, 1}), PreconditionError);
  EXPECT_THROW(construct_split_graph(Seq{1, 1, 1}), NotSplit);
  EXPECT_THROW(construct_split_graph(Seq{2, 2, 2, 2}), NotSplit);
}

// The degree identity holds exactly for graphs admitting a clique /
// independent partition, and split_partition returns a valid certificate.
TEST(SplitIdentity, AgreesWithPartitionSearch) {
  int split = 0;
  for (const Graph& g : oracle::corpus(7)) {
    const bool expected = split_by_search(g);
    EXPECT_EQ(is_split_sequence(degree_sequence(g).degrees), expected);
    if (expected) {
      ++split;
      EXPECT_TRUE(verify_split_partition(g, split_partition(g)));
    } else {
      EXPECT_THROW(split_partition(g), NotSplit);
    }
  }
  EXPECT_GT(split, 100);
}

TEST(ConstructSplitGraph, RoundTripOverSplitSequences) {
  for (const Graph& g : oracle::corpus(7)) {
    const Seq d = degree_sequence(g).degrees;
    if (!is_split_sequence(d)) continue;
    const Graph h = construct_split_graph(d);
    EXPECT_EQ(vertex_degrees(h), d);
    EXPECT_TRUE(verify_split_partition(h, split_partition(h)));
  }
}

}  // namespace
}  // namespace unswitch
