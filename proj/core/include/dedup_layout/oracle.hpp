#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dedup_layout/graph.hpp"
#include "dedup_layout/rational.hpp"
#include "dedup_layout/store.hpp"

namespace dedup_layout {

// Brute-force ground truth at desk scale. Every search is exact within its
// size guard; guards throw OracleGuardError instead of silently truncating.
// Setting the environment variable DEDUP_LAYOUT_GUARD_OVERRIDE=1 lifts the
// guards (searches then run however long they run).

class OracleGuardError : public std::runtime_error {
  public:
    explicit OracleGuardError(const std::string& what) : std::runtime_error(what) {}
};

struct BandwidthResult {
    int bandwidth = 0;
    UncodedStore arrangement;  // a permutation achieving it
};

// Minimum over all vertex arrangements of the maximum edge displacement.
// Guard: n <= 10. DFS over slots with partial-max pruning; by reversal
// symmetry vertex 1 is only placed in the first ceil(n/2) slots.
BandwidthResult exact_bandwidth(const FileGraph& g);

enum class DecisionStatus {
    kFound,      // arrangement with max displacement <= bound exists
    kNotExists,  // exhaustive search proved none exists
    kUnknown,    // node cap hit before the search concluded
};

struct BandwidthDecision {
    DecisionStatus status = DecisionStatus::kUnknown;
    UncodedStore arrangement;  // filled iff status == kFound
    long long nodes = 0;       // search nodes visited
};

// Decision form: is there an arrangement with max edge displacement <=
// bound? No size guard; instead a node cap keeps the search bounded, and an
// inconclusive search is reported as kUnknown rather than guessed.
BandwidthDecision find_arrangement_with_bandwidth(const FileGraph& g, int bound,
                                                  long long node_cap = 20'000'000);

struct StretchOracleResult {
    Rational value;
    UncodedStore store;
};

struct JumpOracleResult {
    int value = 0;
    UncodedStore store;
};

// Exact best-achievable stretch (resp. jump) metric over all lossless
// uncoded stores of length m, for files of up to t chunks. Guards: n <= 8
// and n <= m <= n+1. The store space is enumerated as duplicate-chunk choice
// x distinct permutations; `jobs` > 1 splits the space by duplicate choice
// and first element, with a deterministic min-combine (value, then earlier
// duplicate choice, then lexicographically smaller store), so results are
// identical to the sequential scan.
StretchOracleResult exact_stretch(const FileGraph& g, int t, int m, int jobs = 1);
JumpOracleResult exact_jump(const FileGraph& g, int t, int m, int jobs = 1);

// Smallest store length m such that some uncoded store of length m has
// stretch metric exactly 1 for files of up to t chunks. Guard: n <= 6.
// Increasing-m search over chunk sequences with coverage pruning.
int exact_zero_frag_length(const FileGraph& g, int t);

// Exact minimum over all partitions of a rooted tree into upward paths of
// the maximum, over root-to-leaf walks, of the number of distinct parts the
// walk meets. Guard: n <= 8. Enumerates every partition via each vertex's
// choice of which child's part continues through it.
int exact_min_max_uf(const RootedTree& tree);

}  // namespace dedup_layout
