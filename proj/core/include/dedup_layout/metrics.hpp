#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dedup_layout/graph.hpp"
#include "dedup_layout/rational.hpp"
#include "dedup_layout/store.hpp"

namespace dedup_layout {

// Bitmask of the chunks a path touches.
Gf2Vec path_mask(const Path& p);

// True iff the columns at `positions` (1-based) span e_i for every chunk i
// set in `chunks`, i.e. reading exactly those positions recovers the file.
bool can_reconstruct(const CodedStore& c, const std::vector<int>& positions, Gf2Vec chunks);

// A contiguous block of store positions.
struct Window {
    int lo = 0, hi = 0;
    int span() const { return hi - lo + 1; }
};

// Smallest window whose columns recover every chunk in `chunks`; among
// minimal spans the leftmost. nullopt when even the full store cannot.
std::optional<Window> min_recovery_window(const CodedStore& c, Gf2Vec chunks);

// Minimum over recovery sets R of (max R - min R + 1) / len, where len is
// the file's chunk count. nullopt when the chunks are irrecoverable. If
// `witness` is non-null it receives an inclusion-minimal recovery set inside
// the leftmost optimal window (its span is exactly the optimal one).
std::optional<Rational> min_stretch(const CodedStore& c, Gf2Vec chunks, int len,
                                    RecoverySet* witness = nullptr);

// Minimum over recovery sets R with |R| = popcount(chunks) — reads matched
// one-to-one to the file's chunks — of the number of contiguous runs of R.
// nullopt when no such R exists (the metric is infinite for this file). If
// `witness` is non-null it receives an optimal R.
std::optional<int> min_jump(const CodedStore& c, Gf2Vec chunks, RecoverySet* witness = nullptr);

struct PathMetrics {
    Path path;
    Rational stretch;
    std::optional<int> jump;  // nullopt = no size-matched recovery set
    RecoverySet stretch_witness;
    RecoverySet jump_witness;  // empty when jump is nullopt
};

struct MetricReport {
    int t = 0;
    Rational stretch_metric;            // max of per-path stretch
    std::optional<int> jump_metric;     // max of per-path jump; nullopt if any path is infinite
    std::size_t worst_stretch_index = 0;
    std::optional<std::size_t> worst_jump_index;
    std::vector<PathMetrics> per_path;  // in enumerate_paths order
};

// Evaluates the store against every file in P(g, <= t). The store must be
// lossless for g.n() chunks (throws std::invalid_argument otherwise). Jump
// evaluation can be skipped with with_jump = false (jump fields left empty).
MetricReport evaluate(const CodedStore& c, const FileGraph& g, int t, bool with_jump = true);

MetricReport evaluate(const UncodedStore& u, const FileGraph& g, int t, bool with_jump = true);

}  // namespace dedup_layout
