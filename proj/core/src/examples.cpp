#include "dedup_layout/examples.hpp"

#include <stdexcept>

namespace dedup_layout {

SparseHamiltonianGraph make_cycle_odd(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("make_cycle_odd: n must be odd and >= 3");
    return SparseHamiltonianGraph(n, {{1, n}});
}

SparseHamiltonianGraph make_rainbow(int k, int n) {
    if (k < 1) throw std::invalid_argument("make_rainbow: need k >= 1");
    if (n < 2 * k + 2) throw std::invalid_argument("make_rainbow: need n >= 2k+2");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= k; ++i) arcs.emplace_back(i, 2 * k + 2 - i);
    return SparseHamiltonianGraph(n, std::move(arcs));
}

SparseHamiltonianGraph make_long_arc(int k, int n) {
    if (k < 1) throw std::invalid_argument("make_long_arc: need k >= 1");
    if (n % k != 0) throw std::invalid_argument("make_long_arc: n must be divisible by k");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= k; ++i) arcs.emplace_back(i, i * (n / k));
    return SparseHamiltonianGraph(n, std::move(arcs));
}

FileGraph make_example1(int N) {
    if (N < 1) throw std::invalid_argument("make_example1: need N >= 1");
    const int n = 8 * N + 2;
    const int a = 8 * N + 1;
    const int b = 8 * N + 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 8 * N; ++i) edges.emplace_back(i, i + 1);
    for (int i = 1; i <= 6 * N; ++i) edges.emplace_back(i, a);
    for (int i = 2 * N + 1; i <= 8 * N; ++i) edges.emplace_back(i, b);
    edges.emplace_back(a, b);
    return FileGraph(n, std::move(edges));
}

FileGraph make_example2(int N) {
    if (N < 1) throw std::invalid_argument("make_example2: need N >= 1");
    const int n = 6 * N;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 5 * N; ++i) edges.emplace_back(i, i + 1);
    for (int i = 1; i <= N; ++i) {
        const int b = 5 * N + i;
        for (int j = 2 * i - 1; j <= 3 * N + 2 * i; ++j) edges.emplace_back(j, b);
        for (int i2 = i + 1; i2 <= N; ++i2) edges.emplace_back(b, 5 * N + i2);
    }
    return FileGraph(n, std::move(edges));
}

RootedTree make_example1j() {
    std::vector<int> parent(9, 0);
    parent[1] = parent[2] = parent[3] = 7;
    parent[4] = parent[5] = parent[6] = 8;
    parent[8] = 7;
    return RootedTree(8, 7, std::move(parent));
}

RootedTree make_tree2() {
    std::vector<int> parent(8, 0);
    parent[1] = 2;
    parent[2] = 3;
    parent[4] = 3;
    parent[5] = 4;
    parent[6] = 3;
    parent[7] = 6;
    return RootedTree(7, 3, std::move(parent));
}

RootedTree make_tree16() {
    const int n = 31;
    std::vector<int> parent(n + 1, 0);
    for (int v = 2; v <= n; ++v) parent[v] = v / 2;
    return RootedTree(n, 1, std::move(parent));
}

RootedTree make_caterpillar12() {
    std::vector<int> parent(100, 0);
    for (int v = 2; v <= 8; ++v) parent[v] = v - 1;  // body 1..8 rooted at 1
    int next = 9;
    for (int h = 1; h <= 12; ++h) {
        const int attach = ((h - 1) % 8) + 1;
        const int len = (h % 3) + 1;
        int prev = attach;
        for (int j = 0; j < len; ++j) {
            parent[next] = prev;
            prev = next;
            ++next;
        }
    }
    const int n = next - 1;
    parent.resize(n + 1);
    return RootedTree(n, 1, std::move(parent));
}

FileGraph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return FileGraph(n, std::move(edges));
}

ExampleGraph gen_example(const std::string& name, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("gen_example: '" + name + "' expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "cycle_odd") {
        need(1);
        return make_cycle_odd(params[0]);
    }
    if (name == "rainbow") {
        need(2);
        return make_rainbow(params[0], params[1]);
    }
    if (name == "long_arc") {
        need(2);
        return make_long_arc(params[0], params[1]);
    }
    if (name == "example1") {
        need(1);
        return make_example1(params[0]);
    }
    if (name == "example2") {
        need(1);
        return make_example2(params[0]);
    }
    if (name == "example1j") {
        need(0);
        return make_example1j();
    }
    if (name == "tree2") {
        need(0);
        return make_tree2();
    }
    if (name == "tree16") {
        need(0);
        return make_tree16();
    }
    if (name == "caterpillar12") {
        need(0);
        return make_caterpillar12();
    }
    if (name == "path") {
        need(1);
        return make_path(params[0]);
    }
    throw std::invalid_argument("gen_example: unknown example name '" + name + "'");
}

FileGraph example_file_graph(const ExampleGraph& g) {
    if (const auto* fg = std::get_if<FileGraph>(&g)) return *fg;
    if (const auto* sh = std::get_if<SparseHamiltonianGraph>(&g)) return sh->to_file_graph();
    return std::get<RootedTree>(g).to_file_graph();
}

}  // namespace dedup_layout
