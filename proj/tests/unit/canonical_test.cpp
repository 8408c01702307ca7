#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "spexlab/canonical.hpp"
#include "spexlab/constructors.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/random.hpp"

using namespace spexlab;

namespace {

std::vector<Vertex> random_perm(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = random_graph(n, 0.45, rng);
    const Graph h = g.relabeled(random_perm(n, rng));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
  }
}

TEST(Canonical, LabelingIsPermutationGivingCanonicalGraph) {
  std::mt19937_64 rng(8);
  const Graph g = random_graph(11, 0.5, rng);
  auto perm = canonical_labeling(g);
  EXPECT_EQ(g.relabeled(perm), canonical_graph(g));
  std::sort(perm.begin(), perm.end());
  for (int i = 0; i < 11; ++i) EXPECT_EQ(perm[i], i);
}

TEST(Canonical, SymmetricGraphs) {
  std::mt19937_64 rng(9);
  for (const Graph& g : {complete_graph(9), cycle_graph(12), complete_bipartite(4, 5), perfect_matching(10),
                         disjoint_union({complete_graph(4), complete_graph(4), complete_graph(4)})}) {
    EXPECT_EQ(canonical_form(g), canonical_form(g.relabeled(random_perm(g.order(), rng))));
  }
}

TEST(Canonical, SeparatesNonIsomorphicCubicPairs) {
  const Graph k33 = complete_bipartite(3, 3);
  const Graph prism = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_NE(canonical_form(k33), canonical_form(prism));
  EXPECT_NE(canonical_form(cycle_graph(6)), canonical_form(disjoint_union({cycle_graph(3), cycle_graph(3)})));
}

TEST(Canonical, AgreesWithBruteLexMinPartition) {
  // Both forms must induce the same isomorphism classes on random graphs.
  std::mt19937_64 rng(10);
  std::map<std::string, std::string> fast_to_brute, brute_to_fast;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const Graph g = random_graph_with_edges(n, static_cast<int>(rng() % 8) + 3, rng);
    const std::string f = canonical_form(g), b = brute_canonical_form(g);
    EXPECT_EQ(brute_canonical_form(g.relabeled(random_perm(n, rng))), b);
    auto [it1, new1] = fast_to_brute.emplace(f, b);
    auto [it2, new2] = brute_to_fast.emplace(b, f);
    EXPECT_EQ(it1->second, b);
    EXPECT_EQ(it2->second, f);
  }
}

TEST(Canonical, AtlasClassCounts) {
  // Graph atlas class counts for orders 1..7 (networkx oracle).
  const std::vector<std::size_t> want{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(all_graphs(n).size(), want[n - 1]) << "order " << n;
}
