#include <benchmark/benchmark.h>

#include "dedup_layout/examples.hpp"
#include "dedup_layout/graph.hpp"

namespace {

void BM_EnumeratePathsExample1(benchmark::State& state) {
    const auto g = dedup_layout::make_example1(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto paths = dedup_layout::enumerate_paths(g, 2);
        benchmark::DoNotOptimize(paths);
    }
}
BENCHMARK(BM_EnumeratePathsExample1)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumeratePathsTreeDeep(benchmark::State& state) {
    const auto tree = dedup_layout::make_tree16();
    const auto g = tree.to_file_graph();
    for (auto _ : state) {
        auto paths = dedup_layout::enumerate_paths(g, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(paths);
    }
}
BENCHMARK(BM_EnumeratePathsTreeDeep)->Arg(4)->Arg(8)->Arg(31);

}  // namespace
