#pragma once

#include <vector>

#include "dedup_layout/graph.hpp"
#include "dedup_layout/store.hpp"

namespace dedup_layout {

// Partition of a rooted tree's vertices into upward paths, each listed
// bottom (deepest) to top (shallowest).
struct UPathDecomposition {
    std::vector<std::vector<int>> paths;
};

// Throws std::invalid_argument unless d partitions the tree's vertices into
// child->parent chains.
void validate_decomposition(const UPathDecomposition& d, const RootedTree& tree);

struct DecompositionResult {
    UPathDecomposition decomposition;
    int uf = 0;  // max fragment count over upward paths, minimized
};

// Bottom-up optimal partition: every vertex extends the child path whose
// subtree needs the most fragments (ties to the smallest child label), so
// the worst upward path crosses as few partition paths as possible.
DecompositionResult min_max_decomposition(const RootedTree& tree);

// Number of maximal blocks of p's vertices that stay inside one
// decomposition path.
int fragment_count(const UPathDecomposition& d, const RootedTree& tree, const Path& p);

// Max fragment_count over all upward (vertex-to-ancestor) paths.
int max_unidirectional_fragments(const UPathDecomposition& d, const RootedTree& tree);

// Max over upward paths of the store's run count on that path's chunk set.
int max_unidirectional_min_jump(const UncodedStore& s, const RootedTree& tree);

// Concatenates the decomposition's paths bottom-to-top, ordered by smallest
// contained vertex. Each tree path then splits across at most two partition
// paths' worth of runs beyond its fragment count.
UncodedStore linearize_decomposition(const UPathDecomposition& d);

// Reads a permutation store back into a decomposition whose worst upward
// fragment count is at most twice the store's worst upward run count: cut
// the store where its prefix stops fitting one upward chain, span each piece
// by the chain between its deepest and shallowest vertex, then peel shared
// tops until the chains are disjoint.
UPathDecomposition decomposition_from_store(const RootedTree& tree, const UncodedStore& s);

// True iff g is a tree whose branching vertices (degree >= 3) all lie on one
// simple path.
bool is_caterpillar(const FileGraph& g);

// Hairs first (by attachment along the body, then smallest label), each tip
// inward, then the body; every tree path splits into at most 3 runs.
UncodedStore caterpillar_layout(const RootedTree& tree);

// Specialized order for a tree with exactly one degree-3 vertex c: first
// limb into c, then the other two limbs outward; achieves 2 runs per path.
UncodedStore two_hair_layout(const RootedTree& tree);

}  // namespace dedup_layout
