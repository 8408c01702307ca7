#include <benchmark/benchmark.h>

#include <random>

#include "spexlab/canonical.hpp"
#include "spexlab/constructors.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/random.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/subgraph.hpp"
#include "spexlab/walks.hpp"

using namespace spexlab;

static void BM_CanonicalFormRandom(benchmark::State& state) {
  std::mt19937_64 rng(0);
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(10)->Arg(20)->Arg(40);

static void BM_CanonicalFormCubic(benchmark::State& state) {
  const auto& cubic = connected_regular_graphs(3, 12);
  for (auto _ : state)
    for (const auto& g : cubic) benchmark::DoNotOptimize(canonical_form(g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cubic.size()));
}
BENCHMARK(BM_CanonicalFormCubic);

static void BM_WalkProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Graph g = random_graph(n, 0.2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(walk_profile(g, 2 * n));
}
BENCHMARK(BM_WalkProfile)->Arg(15)->Arg(30)->Arg(60);

static void BM_SpectralRadiusCandidate(benchmark::State& state) {
  const Graph g = spex_candidate(default_candidate_spec(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).radius);
}
BENCHMARK(BM_SpectralRadiusCandidate)->Arg(40)->Arg(100)->Arg(200);

static void BM_OddWheelCandidate(benchmark::State& state) {
  const Graph g = spex_candidate(default_candidate_spec(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(contains_odd_wheel(g, 3));
}
BENCHMARK(BM_OddWheelCandidate)->Arg(20)->Arg(40);

static void BM_OddWheelRandom(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(contains_odd_wheel(g, 3));
}
BENCHMARK(BM_OddWheelRandom)->Arg(12)->Arg(24);

static void BM_ExactQuotientRadius(benchmark::State& state) {
  const Matrix<mpq_class> b2{{3, 2, 48}, {52, 1, 0}, {52, 0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(exact_radius(b2, mpq_class("1/1000000000000")));
}
BENCHMARK(BM_ExactQuotientRadius);

BENCHMARK_MAIN();
