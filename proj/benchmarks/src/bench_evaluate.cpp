#include <benchmark/benchmark.h>

#include <variant>

#include "dedup_layout/coded_design.hpp"
#include "dedup_layout/examples.hpp"
#include "dedup_layout/metrics.hpp"

namespace {

void BM_EvaluateExample1Coded(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto g = dedup_layout::make_example1(N);
    const auto store =
        std::get<dedup_layout::CodedStore>(dedup_layout::build_example_store("example1_coded", N));
    for (auto _ : state) {
        auto report = dedup_layout::evaluate(store, g, 2, false);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_EvaluateExample1Coded)->Arg(1)->Arg(2)->Arg(3);

void BM_EvaluateUncodedJump(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto g = dedup_layout::make_example1(N);
    const auto store =
        std::get<dedup_layout::UncodedStore>(dedup_layout::build_example_store("example1_mn", N));
    for (auto _ : state) {
        auto report = dedup_layout::evaluate(store, g, 2, true);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_EvaluateUncodedJump)->Arg(1)->Arg(2);

}  // namespace
