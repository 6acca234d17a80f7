#include <benchmark/benchmark.h>

#include "bankit/causality.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/generate.hpp"
#include "bankit/graph.hpp"
#include "bankit/potential.hpp"

using namespace bankit;

namespace {

Ban network(std::size_t n, std::uint64_t seed = 7) {
  Rng rng(seed);
  return random_monotone_ban(n, rng);
}

void BM_TransitionGraph(benchmark::State& state) {
  const Ban ban = network(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TransitionGraph(ban).arc_count());
  state.SetComplexityN(std::int64_t{1} << state.range(0));
}
BENCHMARK(BM_TransitionGraph)->DenseRange(8, 16, 4)->Complexity();

void BM_DistancesFrom(benchmark::State& state) {
  const TransitionGraph g(network(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distances_from(g, 0));
  state.SetComplexityN(std::int64_t{1} << state.range(0));
}
BENCHMARK(BM_DistancesFrom)->DenseRange(8, 16, 4)->Complexity();

void BM_Attractors(benchmark::State& state) {
  const TransitionGraph g(network(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(attractors(g).attractors.size());
}
BENCHMARK(BM_Attractors)->DenseRange(8, 16, 4);

void BM_Classify(benchmark::State& state) {
  const Ban ban = network(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(ban).nice);
}
BENCHMARK(BM_Classify)->Arg(6)->Arg(12)->Arg(20);

void BM_CarrierTables(benchmark::State& state) {
  const std::size_t n = 10;
  Rng rng(11);
  const Ban ban = random_monotone_ban(n, rng);
  const Streamline line = random_streamline(ban, random_configuration(n, rng), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(carrier_tables(ban, line).survivors());
}
BENCHMARK(BM_CarrierTables)->Arg(30)->Arg(300);

void BM_TauForest(benchmark::State& state) {
  const std::size_t n = 10;
  Rng rng(13);
  const Ban ban = random_monotone_ban(n, rng);
  const Trajectory t = random_trajectory(ban, random_configuration(n, rng), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(tau_forest(ban, t).tree_count);
}
BENCHMARK(BM_TauForest)->Arg(30)->Arg(300);

}  // namespace
BENCHMARK_MAIN();
