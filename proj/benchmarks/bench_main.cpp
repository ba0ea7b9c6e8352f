#include <benchmark/benchmark.h>

#include <random>

#include "achieve/congruence.hpp"
#include "achieve/lemma.hpp"
#include "achieve/simulate.hpp"
#include "achieve/solver.hpp"

using namespace achieve;

static void BM_ClassifyHT2(benchmark::State& state) {
  const Hypergraph h = build_ht(2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(h));
}
BENCHMARK(BM_ClassifyHT2);

static void BM_SolveFn(benchmark::State& state) {
  const Hypergraph h = build_fn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(h, WinCriterion::Early));
  state.counters["vertices"] = static_cast<double>(h.vertex_count());
}
BENCHMARK(BM_SolveFn)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SolveRandom(benchmark::State& state) {
  RandomHypergraphOptions o;
  o.min_vertices = o.max_vertices = static_cast<std::size_t>(state.range(0));
  o.min_edges = o.max_edges = 8;
  o.min_edge_size = 3;
  o.max_edge_size = 4;
  const Hypergraph h = random_hypergraph(17, o);
  SolveStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(solve(h, WinCriterion::Fair, &stats));
  state.counters["nodes"] = static_cast<double>(stats.nodes);
}
BENCHMARK(BM_SolveRandom)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

// Points scattered in a box with a few planted copies of the goal set.
static std::vector<PlanarPoint> scattered(std::size_t n, const GoalSet& g) {
  std::mt19937_64 rng(n);
  const double side = std::sqrt(static_cast<double>(n)) * 1.5;
  std::uniform_real_distribution<double> box(0.0, side);
  std::vector<PlanarPoint> pts;
  for (std::size_t c = 0; c < n / 20; ++c) {
    const Vec2 center{box(rng), box(rng)};
    for (std::size_t k = 0; k < 5; ++k) pts.push_back(PlanarPoint::free(g.point(k, center, 0.1 * c, 1)));
  }
  while (pts.size() < n) pts.push_back(PlanarPoint::free({box(rng), box(rng)}));
  return pts;
}

static void BM_FindCopies(benchmark::State& state) {
  const GoalSet g;
  const auto pts = scattered(static_cast<std::size_t>(state.range(0)), g);
  for (auto _ : state) benchmark::DoNotOptimize(find_copies(pts, g, kEpsInternal));
}
BENCHMARK(BM_FindCopies)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

static void BM_FindThreats(benchmark::State& state) {
  const GoalSet g;
  const auto pts = scattered(static_cast<std::size_t>(state.range(0)), g);
  const std::vector<PlanarPoint> mine(pts.begin() + 1, pts.end());
  for (auto _ : state) benchmark::DoNotOptimize(find_threats(mine, {}, g, kEpsInternal));
}
BENCHMARK(BM_FindThreats)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_Simulate(benchmark::State& state) {
  const auto kind = static_cast<AdversaryKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(kind, 100, 1));
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_Simulate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_LemmaSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lemma_search(static_cast<std::uint64_t>(state.range(0)), 1));
}
BENCHMARK(BM_LemmaSearch)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
