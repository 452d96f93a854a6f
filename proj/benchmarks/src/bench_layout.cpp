#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "dedup_layout/examples.hpp"
#include "dedup_layout/folding.hpp"
#include "dedup_layout/jump_tree.hpp"

namespace {

// Deterministic k-arc graph: arcs spread over the first 2k+2 odd slots.
dedup_layout::SparseHamiltonianGraph random_sham(int n, int k, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<int> feet;
    for (int v = 1; v <= n; ++v) feet.push_back(v);
    std::shuffle(feet.begin(), feet.end(), rng);
    std::vector<std::pair<int, int>> arcs;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < feet.size() && static_cast<int>(arcs.size()) < k; ++i)
        for (std::size_t j = i + 1; j < feet.size(); ++j) {
            const int u = feet[i], v = feet[j];
            if (used[feet[i]] || used[feet[j]] || std::abs(u - v) <= 1) continue;
            arcs.emplace_back(u, v);
            used[feet[i]] = used[feet[j]] = true;
            break;
        }
    return dedup_layout::SparseHamiltonianGraph(n, std::move(arcs));
}

void BM_LayoutSham(benchmark::State& state) {
    const auto g = random_sham(static_cast<int>(state.range(0)), 4, 7u);
    for (auto _ : state) {
        auto layout = dedup_layout::layout_sham(g);
        benchmark::DoNotOptimize(layout);
    }
}
BENCHMARK(BM_LayoutSham)->Arg(16)->Arg(32)->Arg(64);

void BM_MinMaxDecomposition(benchmark::State& state) {
    const auto tree = dedup_layout::make_caterpillar12();
    for (auto _ : state) {
        auto result = dedup_layout::min_max_decomposition(tree);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_MinMaxDecomposition);

}  // namespace
