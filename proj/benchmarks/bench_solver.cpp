#include <benchmark/benchmark.h>

#include "fvs/branching.hpp"
#include "fvs/oracle.hpp"
#include "fvs/reductions.hpp"

namespace {

void BM_SolvePlanted(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const fvs::PlantedInstance p = fvs::gen_planted(static_cast<fvs::Vertex>(state.range(1)), k, 1);
  fvs::ExtendedInstance inst(p.graph, k);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    fvs::SearchStats stats;
    benchmark::DoNotOptimize(fvs::solve(inst, {}, stats));
    nodes = stats.nodes_visited;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolvePlanted)
    ->ArgsProduct({{2, 4, 6, 8}, {200, 2000}})
    ->Unit(benchmark::kMillisecond);

void BM_MinimumRandom(benchmark::State& state) {
  const auto n = static_cast<fvs::Vertex>(state.range(0));
  const fvs::Graph g = fvs::gen_random_graph(n, static_cast<std::size_t>(n) * 3 / 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(fvs::minimum_fvs(g));
}
BENCHMARK(BM_MinimumRandom)->Arg(12)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ReduceLarge(benchmark::State& state) {
  const fvs::PlantedInstance p = fvs::gen_planted(static_cast<fvs::Vertex>(state.range(0)), 8, 3);
  fvs::ExtendedInstance inst(p.graph, 8);
  for (auto _ : state) {
    const auto cp = inst.checkpoint();
    benchmark::DoNotOptimize(fvs::reduce_to_fixpoint(inst));
    inst.rollback(cp);
    inst.set_budget(8);
  }
}
BENCHMARK(BM_ReduceLarge)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
