#include <benchmark/benchmark.h>

#include "blockpd/block_tree.hpp"
#include "blockpd/dp.hpp"
#include "blockpd/generator.hpp"

namespace {

using namespace blockpd;

void BM_SolveChain(benchmark::State& state) {
  const auto g = chain_of_triangles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(g).weight);
  }
  state.SetComplexityN(state.range(0));
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_SolveChain)
    ->RangeMultiplier(10)
    ->Range(1000, 1000000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_FindBlocksChain(benchmark::State& state) {
  const auto g = chain_of_triangles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_blocks(g).block_count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindBlocksChain)
    ->RangeMultiplier(10)
    ->Range(1000, 1000000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

// Random block graphs, block sizes 2..6; the tree is built outside the loop.
void BM_SolveRandomGivenTree(benchmark::State& state) {
  const auto g = random_block_graph(static_cast<std::size_t>(state.range(0)),
                                    6, 1000, 17);
  const auto tree = find_blocks(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(g, tree).weight);
  }
  state.SetComplexityN(static_cast<std::int64_t>(g.vertex_count()));
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_SolveRandomGivenTree)
    ->RangeMultiplier(10)
    ->Range(1000, 100000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
