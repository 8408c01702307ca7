#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spexlab/constructors.hpp"
#include "spexlab/random.hpp"
#include "spexlab/walks.hpp"

using namespace spexlab;

TEST(WalkProfile, Triangle) {
  const auto p = walk_profile(complete_graph(3), 3);
  ASSERT_EQ(p.length(), 3);
  EXPECT_EQ(p.level(1), 6);
  EXPECT_EQ(p.level(2), 12);
  EXPECT_EQ(p.level(3), 24);
}

TEST(WalkProfile, MatchesMatrixPowers) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 12), 0.4, rng);
    const int L = 1 + static_cast<int>(rng() % 10);
    EXPECT_EQ(walk_profile(g, L).counts, oracle::walk_totals(g, L));
  }
}

TEST(WalkProfile, LargeCountsStayExact) {
  const auto p = walk_profile(complete_graph(20), 40);
  mpz_class want;
  mpz_ui_pow_ui(want.get_mpz_t(), 19, 40);
  EXPECT_EQ(p.level(40), want * 20);
}

TEST(VertexWalks, RegularComponentPowers) {
  const Graph g = disjoint_union({core_component(4), complete_graph(4), complete_graph(4)});
  const auto t = vertex_walks(g, 5);
  for (int l = 0; l <= 5; ++l) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, l);
    for (Vertex v = 5; v < 13; ++v) EXPECT_EQ(t[l][v], p);
  }
}

TEST(VertexWalks, DeficientVertexCounts) {
  for (const Graph& g : enumerate_family({FamilyKind::GFAM, 3, 15})) {
    const auto c = classify_degrees(g);
    ASSERT_TRUE(c.deficient_vertex);
    const auto t = vertex_walks(g, 3);
    const long d = 3;
    EXPECT_EQ(t[2][*c.deficient_vertex], d * d - d);
    EXPECT_EQ(t[3][*c.deficient_vertex], (d * d - 1) * (d - 1));
  }
}

TEST(WalkProfile, FirstLevelsOnFamily) {
  for (auto [delta, n] : {std::pair{3, 13}, std::pair{3, 15}, std::pair{5, 19}}) {
    for (const Graph& g : enumerate_family({FamilyKind::GFAM, delta, n})) {
      const auto p = walk_profile(g, 2);
      EXPECT_EQ(p.level(1), n * delta - 1);
      EXPECT_EQ(p.level(2), (n - 1) * delta * delta + (delta - 1) * (delta - 1));
    }
  }
}

TEST(ClosedForm, CoreComponentMember) {
  const Graph g = disjoint_union({core_component(4), complete_graph(4), complete_graph(4)});
  const auto s = extract_deficient_structure(g);
  EXPECT_EQ(s.delta, 3);
  EXPECT_EQ(s.q, 5);
  EXPECT_EQ(s.deficient, 0);
  const auto cf = closed_form_profile(s.delta, s.n, s.q, s.e12, s.sum_d2sq, s.sum_d1sq);
  const auto p = walk_profile(g, 6);
  for (int l = 1; l <= 6; ++l) EXPECT_EQ(cf[l - 1], p.level(l)) << "level " << l;
}

TEST(ClosedForm, RejectsInconsistentParameters) {
  EXPECT_THROW(closed_form_profile(3, 13, 6, 4, 0, 0), WalkFormError);   // even q
  EXPECT_THROW(closed_form_profile(3, 13, 7, 4, 0, 0), WalkFormError);   // q > 2 delta - 1
  EXPECT_THROW(closed_form_profile(3, 4, 5, 4, 0, 0), WalkFormError);    // n < q
  EXPECT_THROW(closed_form_profile(3, 13, 5, 1, 0, 0), WalkFormError);   // e12 below bound
  EXPECT_THROW(closed_form_profile(1, 13, 5, 4, 0, 0), WalkFormError);
  EXPECT_THROW(extract_deficient_structure(cycle_graph(5)), WalkFormError);
}

TEST(Compare, Examples) {
  const Graph two_c3 = disjoint_union({cycle_graph(3), cycle_graph(3)});
  EXPECT_EQ(walk_compare(two_c3, cycle_graph(6)).relation, Relation::equiv);
  const Graph k3k1 = disjoint_union({complete_graph(3), Graph(1)});
  const auto r = walk_compare(k3k1, path_graph(4));
  EXPECT_EQ(r.relation, Relation::succ);
  ASSERT_TRUE(r.witness_level);
  EXPECT_EQ(*r.witness_level, 2);
  EXPECT_EQ(walk_compare(path_graph(4), k3k1).relation, Relation::prec);
  EXPECT_EQ(walk_compare(odd_wheel(3), odd_wheel(3)).relation, Relation::equiv);
  EXPECT_EQ(to_string(Relation::succ), "SUCC");
  EXPECT_EQ(default_horizon(Graph(3), Graph(5)), 10);
}

TEST(Compare, Antisymmetric) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    const Graph a = random_graph_with_edges(n, m, rng), b = random_graph_with_edges(n, m, rng);
    const auto ab = walk_compare(a, b).relation, ba = walk_compare(b, a).relation;
    if (ab == Relation::equiv) {
      EXPECT_EQ(ba, Relation::equiv);
    } else {
      EXPECT_NE(ab, ba);
      EXPECT_NE(ba, Relation::equiv);
    }
  }
}

TEST(ExInfinity, Examples) {
  const std::vector<Graph> single{cycle_graph(5)};
  EXPECT_EQ(ex_infinity(single).survivors, (std::vector<std::size_t>{0}));
  const std::vector<Graph> equiv{cycle_graph(6), disjoint_union({cycle_graph(3), cycle_graph(3)})};
  const auto all = ex_infinity(equiv);
  EXPECT_EQ(all.survivors, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(all.stabilization_level, 0);
  // W^2: 10, 12, 12; W^3 of the last two: 24 vs 18.
  const std::vector<Graph> mixed{path_graph(4), disjoint_union({complete_graph(3), Graph(1)}), complete_bipartite(1, 3)};
  const auto r = ex_infinity(mixed);
  EXPECT_EQ(r.survivors, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.stabilization_level, 3);
  EXPECT_EQ(r.horizon, 8);
  ASSERT_GE(r.remaining_after_level.size(), 3u);
  EXPECT_EQ(r.remaining_after_level[0], 3u);
  EXPECT_EQ(r.remaining_after_level[1], 2u);
  EXPECT_EQ(r.remaining_after_level[2], 1u);
}
