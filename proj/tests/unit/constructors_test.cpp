#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "spexlab/canonical.hpp"
#include "spexlab/constructors.hpp"
#include "spexlab/subgraph.hpp"

using namespace spexlab;

TEST(Primitive, Examples) {
  const Graph c4 = primitive(Primitive::cycle, 4);
  EXPECT_EQ(c4.edge_count(), 4u);
  EXPECT_TRUE(classify_degrees(c4).is_regular);
  EXPECT_EQ(c4.max_degree(), 2);
  const Graph m6 = primitive(Primitive::matching, 6);
  EXPECT_EQ(m6.edge_count(), 3u);
  EXPECT_EQ(m6.max_degree(), 1);
  EXPECT_THROW(primitive(Primitive::matching, 5), std::invalid_argument);
  EXPECT_THROW(primitive(Primitive::cycle, 2), std::invalid_argument);
  EXPECT_EQ(primitive(Primitive::complete, 5).edge_count(), 10u);
  EXPECT_EQ(primitive(Primitive::empty, 3).edge_count(), 0u);
}

TEST(OddWheelConstruct, Examples) {
  const Graph w5 = odd_wheel(2);
  EXPECT_EQ(w5.order(), 5);
  EXPECT_EQ(w5.edge_count(), 8u);
  EXPECT_EQ(odd_wheel(3).degree(0), 6);
  EXPECT_EQ(odd_wheel(4).order(), 9);
  EXPECT_EQ(odd_wheel(4).edge_count(), 16u);
  EXPECT_THROW(odd_wheel(1), std::invalid_argument);
}

TEST(CoreComponent, Examples) {
  EXPECT_EQ(core_component(4).degrees(), (std::vector<int>{2, 3, 3, 3, 3}));
  EXPECT_EQ(core_component(6).degrees(), (std::vector<int>{4, 5, 5, 5, 5, 5, 5}));
  EXPECT_THROW(core_component(5), std::invalid_argument);
  EXPECT_THROW(core_component(2), std::invalid_argument);
}

TEST(Family, UExample) {
  const auto u = enumerate_family({FamilyKind::U, 4, 8});
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(canonical_form(u[0]), canonical_form(disjoint_union({complete_graph(4), complete_graph(4)})));
}

TEST(Family, VExample) {
  const auto v = enumerate_family({FamilyKind::V, 4, 11});
  ASSERT_EQ(v.size(), 2u);
  const Graph prism = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  const std::set<std::string> want{canonical_form(disjoint_union({core_component(4), complete_bipartite(3, 3)})),
                                   canonical_form(disjoint_union({core_component(4), prism}))};
  std::set<std::string> got;
  for (const Graph& g : v) got.insert(canonical_form(g));
  EXPECT_EQ(got, want);
}

TEST(Family, GfamSizes) {
  EXPECT_EQ(enumerate_family({FamilyKind::GFAM, 3, 13}).size(), 1u);
  EXPECT_EQ(enumerate_family({FamilyKind::GFAM, 3, 15}).size(), 2u);
}

TEST(Family, MembersRespectDefinition) {
  for (const Graph& g : enumerate_family({FamilyKind::U, 4, 13})) {
    const auto c = classify_degrees(g);
    EXPECT_TRUE(c.is_regular || c.is_nearly_regular);
    EXPECT_EQ(c.max_degree, 3);
    for (const auto& comp : components(g)) EXPECT_LE(comp.graph.order(), 6);
  }
  for (const Graph& g : enumerate_family({FamilyKind::GFAM, 3, 15})) {
    EXPECT_TRUE(classify_degrees(g).is_nearly_regular);
    for (const auto& comp : components(g)) EXPECT_LE(comp.graph.order(), 6);
  }
}

TEST(Family, Validation) {
  EXPECT_THROW(validate({FamilyKind::U, 2, 8}), FamilyError);
  EXPECT_THROW(validate({FamilyKind::V, 5, 11}), FamilyError);
  EXPECT_THROW(validate({FamilyKind::V, 4, 10}), FamilyError);
  EXPECT_THROW(validate({FamilyKind::GFAM, 3, 11}), FamilyError);
  EXPECT_THROW(validate({FamilyKind::GFAM, 4, 17}), FamilyError);
  EXPECT_NO_THROW(validate({FamilyKind::GFAM, 3, 13}));
  EXPECT_TRUE(enumerate_family({FamilyKind::V, 6, 11}).empty());
}

TEST(Family, FirstMemberMatchesEnumeration) {
  const FamilySpec spec{FamilyKind::V, 4, 15};
  const auto all = enumerate_family(spec);
  const auto first = first_family_member(spec);
  ASSERT_TRUE(first);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(*first, all.front());
}

TEST(Candidate, TheoremFourForm) {
  const auto v = enumerate_family({FamilyKind::V, 4, 11});
  const Graph g = spex_candidate({22, 4, 0, v[0]});
  EXPECT_EQ(g.order(), 22);
  EXPECT_EQ(g.edge_count(), 11u * 11u + v[0].edge_count() + 1);
  EXPECT_EQ(contains_odd_wheel(g, 4), Decision::no);
}

TEST(Candidate, OddKIsWheelFree) {
  const auto spec = default_candidate_spec(20, 3);
  EXPECT_EQ(spec.left_size(), 10);
  const Graph g = spex_candidate(spec);
  EXPECT_EQ(contains_odd_wheel(g, 3), Decision::no);
}

TEST(Candidate, MatchingFormIsW5Free) {
  const auto spec = default_candidate_spec(20, 2);
  EXPECT_TRUE(spec.r_matching);
  const Graph g = spex_candidate(spec);
  EXPECT_EQ(contains_odd_wheel(g, 2), Decision::no);
}

TEST(Candidate, RejectsWrongInnerOrder) {
  EXPECT_THROW(spex_candidate({22, 4, 0, complete_graph(4)}), std::invalid_argument);
}

TEST(Candidate, DefaultLeftSizes) {
  EXPECT_EQ(default_left_size(22, 2), 12);
  EXPECT_EQ(default_left_size(20, 2), 10);
  EXPECT_EQ(default_left_size(21, 3), 11);
  EXPECT_EQ(default_left_size(20, 4), 10);
  EXPECT_EQ(default_left_size(21, 4), 10);
  EXPECT_EQ(default_left_size(22, 4), 11);
  EXPECT_EQ(default_left_size(23, 4), 12);
}

TEST(Candidate, WheelFreedomAgreesWithOracle) {
  const auto spec = default_candidate_spec(10, 2);
  const Graph g = spex_candidate(spec);
  EXPECT_FALSE(oracle::has_odd_wheel(g, 2));
  EXPECT_EQ(contains_odd_wheel(g, 2), Decision::no);
}
