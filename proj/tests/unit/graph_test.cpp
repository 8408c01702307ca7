#include <gtest/gtest.h>

#include <random>

#include "spexlab/constructors.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/random.hpp"

using namespace spexlab;

TEST(BuildGraph, Triangle) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g, complete_graph(3));
}

TEST(BuildGraph, RejectsBadInput) {
  EXPECT_THROW(build_graph(2, {{0, 0}}), GraphError);
  EXPECT_THROW(build_graph(4, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(build_graph(4, {{0, 1}, {0, 1}}), GraphError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(build_graph(3, {{-1, 2}}), GraphError);
}

TEST(BuildGraph, EdgesSortedAndNormalized) {
  const Graph g = build_graph(4, {{3, 1}, {2, 0}, {1, 0}});
  const std::vector<Edge> want{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), want);
  EXPECT_EQ(g.degrees(), (std::vector<int>{2, 2, 1, 1}));
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete_graph(4)), empty_graph(4));
  EXPECT_EQ(complement(complement(cycle_graph(5))), cycle_graph(5));
  const Graph c = complement(perfect_matching(4));
  EXPECT_EQ(c.edge_count(), 4u);
  EXPECT_TRUE(classify_degrees(c).is_regular);
  EXPECT_TRUE(is_connected(c));
}

TEST(DisjointUnion, Examples) {
  const Graph g = disjoint_union({complete_graph(3), complete_graph(3)});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(components(g).size(), 2u);
  EXPECT_EQ(disjoint_union({cycle_graph(4)}), cycle_graph(4));
  EXPECT_THROW(disjoint_union(std::span<const Graph>{}), GraphError);
}

TEST(Join, WheelAndCore) {
  EXPECT_EQ(join({Graph(1), cycle_graph(4)}), odd_wheel(2));
  const Graph core = join({Graph(1), complement(perfect_matching(2)), complete_graph(2)});
  EXPECT_EQ(core.order(), 5);
  EXPECT_EQ(core.degrees(), (std::vector<int>{2, 3, 3, 3, 3}));
}

TEST(Join, ChainAddsNoSkipEdges) {
  EXPECT_EQ(join({Graph(1), Graph(1), Graph(1)}), path_graph(3));
}

TEST(Components, Examples) {
  const auto two = components(disjoint_union({complete_graph(3), complete_graph(3)}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].graph.order(), 3);
  EXPECT_EQ(two[1].labels, (std::vector<Vertex>{3, 4, 5}));
  EXPECT_EQ(components(cycle_graph(7)).size(), 1u);
  const auto singles = components(empty_graph(3));
  ASSERT_EQ(singles.size(), 3u);
  for (const auto& c : singles) EXPECT_EQ(c.graph.order(), 1);
}

TEST(ClassifyDegrees, Examples) {
  auto c = classify_degrees(cycle_graph(6));
  EXPECT_TRUE(c.is_regular);
  EXPECT_FALSE(c.is_nearly_regular);
  EXPECT_EQ(c.max_degree, 2);

  c = classify_degrees(join({Graph(1), complement(perfect_matching(2)), complete_graph(2)}));
  EXPECT_TRUE(c.is_nearly_regular);
  EXPECT_EQ(c.max_degree, 3);
  ASSERT_TRUE(c.deficient_vertex);
  EXPECT_EQ(*c.deficient_vertex, 0);

  c = classify_degrees(path_graph(3));
  EXPECT_FALSE(c.is_regular);
  EXPECT_FALSE(c.is_nearly_regular);
}

TEST(Graph, InducedAndRelabel) {
  const Graph c5 = cycle_graph(5);
  const std::vector<Vertex> keep{0, 1, 2};
  EXPECT_EQ(c5.induced(keep), path_graph(3));
  const std::vector<Vertex> perm{4, 3, 2, 1, 0};
  const Graph r = c5.relabeled(perm);
  EXPECT_EQ(r.edge_count(), 5u);
  EXPECT_TRUE(r.adjacent(4, 3));
  EXPECT_THROW((void)c5.with_edge(0, 1), GraphError);
  EXPECT_TRUE(c5.with_edge(0, 2).adjacent(2, 0));
}

TEST(GraphProperty, ComplementIsInvolutionAndPartitionsPairs) {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = random_graph(n, 0.4, rng);
    const Graph c = complement(g);
    EXPECT_EQ(complement(c), g);
    EXPECT_EQ(g.edge_count() + c.edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
    std::size_t sum = 0;
    for (int d : g.degrees()) sum += d;
    EXPECT_EQ(sum, 2 * g.edge_count());
    std::size_t comp_order = 0;
    for (const auto& comp : components(g)) comp_order += comp.graph.order();
    EXPECT_EQ(comp_order, static_cast<std::size_t>(n));
  }
}

TEST(GraphProperty, ClassificationExclusive) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 8), 0.7, rng);
    const auto c = classify_degrees(g);
    EXPECT_FALSE(c.is_regular && c.is_nearly_regular);
    EXPECT_EQ(c.is_nearly_regular, c.deficient_vertex.has_value());
  }
}
