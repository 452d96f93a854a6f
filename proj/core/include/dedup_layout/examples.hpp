#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dedup_layout/graph.hpp"

namespace dedup_layout {

// Named fixture families with pinned vertex labelings, so every fixture is
// byte-reproducible.

// Line 1..n plus the closing arc {1,n}; n must be odd and >= 3.
SparseHamiltonianGraph make_cycle_odd(int n);

// Nested arcs {i, 2k+2-i} for i = 1..k on a line of n >= 2k+2 vertices.
SparseHamiltonianGraph make_rainbow(int k, int n);

// Long arcs {i, i*n/k} for i = 1..k (n divisible by k); bandwidth is at
// least k because the k arcs pairwise interleave.
SparseHamiltonianGraph make_long_arc(int k, int n);

// Line x_1..x_{8N}; hub a = 8N+1 adjacent to 1..6N and to b; hub b = 8N+2
// adjacent to 2N+1..8N. Total n = 8N+2.
FileGraph make_example1(int N);

// Line x_1..x_{5N}; hubs b_i = 5N+i (i = 1..N) adjacent to the line range
// [2i-1, 3N+2i] and forming a clique among themselves. Total n = 6N.
FileGraph make_example2(int N);

// Eight-node tree: leaves 1,2,3 under a = 7; leaves 4,5,6 under b = 8;
// edge {7,8}; rooted at 7.
RootedTree make_example1j();

// Two-hair caterpillar: hairs 1-2 and 5-4 meeting at branching vertex 3,
// body 3-6-7; rooted at the branching vertex 3.
RootedTree make_tree2();

// Complete binary tree of depth 4 (31 nodes, 16 leaves), heap labeling
// (children of v are 2v and 2v+1), rooted at 1.
RootedTree make_tree16();

// Twelve-hair caterpillar: body 1..8; hair h (h = 1..12) attaches to body
// vertex ((h-1) mod 8) + 1 and has (h mod 3) + 1 vertices, labeled
// consecutively outward from the body starting at 9. Rooted at body
// vertex 1.
RootedTree make_caterpillar12();

// Plain line graph on n vertices.
FileGraph make_path(int n);

using ExampleGraph = std::variant<FileGraph, SparseHamiltonianGraph, RootedTree>;

// String-dispatch generator used by the CLI. Known names: cycle_odd(n),
// rainbow(k,n), long_arc(k,n), example1(N), example2(N), example1j, tree2,
// tree16, caterpillar12, path(n). Throws std::invalid_argument on unknown
// names or bad parameters.
ExampleGraph gen_example(const std::string& name, const std::vector<int>& params);

FileGraph example_file_graph(const ExampleGraph& g);

}  // namespace dedup_layout
