#pragma once

#include <utility>
#include <vector>

#include "dedup_layout/graph.hpp"
#include "dedup_layout/store.hpp"

namespace dedup_layout {

struct ZeroFragResult {
    UncodedStore store;
    // Closed-form length guarantee the construction is measured against:
    // per component, edges + 1 + half the odd-degree vertices (rounded up).
    int formula_upper_bound = 0;
    // Virtual edges inserted to make each component's walk single-stroke.
    std::vector<std::pair<int, int>> added_edges;
};

// Stretch-1 store for adjacent-pair access: pads each component with virtual
// edges between consecutive odd-degree vertices until one open walk covers
// everything, then records that walk. Isolated vertices become singleton
// chunks. Every vertex and every edge of g then appears contiguously.
ZeroFragResult zero_frag_t2(const FileGraph& g);

// Stretch-1 store for access windows of up to t chunks: concatenates every
// simple path of at most t vertices, longest first, skipping paths that
// already appear contiguously (in either direction) inside a kept one.
UncodedStore zero_frag_general(const FileGraph& g, int t);

// Rewrites a stretch-1 coded store for adjacent-pair access into an uncoded
// store of the same quality and no greater length: columns mixing more than
// two chunks are dropped (no two-chunk window ever uses them), and each
// two-chunk column is resolved against an adjacent single-chunk column or
// dropped once no window needs it.
UncodedStore decode_zero_frag_coded_t2(const CodedStore& c, const FileGraph& g);

}  // namespace dedup_layout
