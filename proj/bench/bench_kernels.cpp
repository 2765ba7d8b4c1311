// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <random>

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "pzono/hardness.hpp"
#include "pzono/oracles.hpp"
#include "pzono/serial.hpp"
#include "pzono/splitting.hpp"

using namespace pzono;

namespace {

PolyZonotope multi_affine(Index r) {
  std::mt19937_64 rng(1);
  return fixtures::random_set(rng, {1, r, 2 * r, 1, 1, true});
}

PolyZonotope cubic() {
  std::mt19937_64 rng(2);
  return fixtures::random_set(rng, {1, 4, 8, 3, 1, false});
}

std::vector<SplitNode> level(std::size_t depth) {
  std::mt19937_64 rng(3);
  return expand_tree(fixtures::random_set(rng, {2, 3, 6, 3, 1, false}), depth, SplitStrategy::cyclic());
}

void BM_corner_min(benchmark::State& state) {
  const auto pz = multi_affine(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(corner_min(pz));
}
void BM_corner_min_serial(benchmark::State& state) {
  const auto pz = multi_affine(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::corner_min(pz));
}

void BM_grid_search(benchmark::State& state) {
  const auto pz = cubic();
  for (auto _ : state) benchmark::DoNotOptimize(grid_search(pz, static_cast<std::size_t>(state.range(0))));
}
void BM_grid_search_serial(benchmark::State& state) {
  const auto pz = cubic();
  for (auto _ : state) benchmark::DoNotOptimize(serial::grid_search(pz, static_cast<std::size_t>(state.range(0))));
}

void BM_bipartization(benchmark::State& state) {
  const Graph g = Graph::random(static_cast<std::size_t>(state.range(0)), 0.5, 9);
  for (auto _ : state) benchmark::DoNotOptimize(bipartization_brute(g));
}
void BM_bipartization_serial(benchmark::State& state) {
  const Graph g = Graph::random(static_cast<std::size_t>(state.range(0)), 0.5, 9);
  for (auto _ : state) benchmark::DoNotOptimize(serial::bipartization_brute(g));
}

void BM_expand_level(benchmark::State& state) {
  const auto nodes = level(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand_level(nodes, SplitStrategy::cyclic()));
}
void BM_expand_level_serial(benchmark::State& state) {
  const auto nodes = level(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::expand_level(nodes, SplitStrategy::cyclic()));
}

}  // namespace

BENCHMARK(BM_corner_min)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_corner_min_serial)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_grid_search)->Arg(21)->Arg(41);
BENCHMARK(BM_grid_search_serial)->Arg(21)->Arg(41);
BENCHMARK(BM_bipartization)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_bipartization_serial)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_expand_level)->Arg(6)->Arg(10);
BENCHMARK(BM_expand_level_serial)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
