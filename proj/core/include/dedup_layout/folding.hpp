#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dedup_layout/graph.hpp"
#include "dedup_layout/store.hpp"

namespace dedup_layout {

// A folding of the line 1..n: integer heights h(1..n) moving by exactly +-1
// per step. Arc alignment (equal heights at both feet) lets the fold be cut
// into few monotone segments whose level-order linearization has small
// displacement.
struct Folding {
    std::vector<int> h;  // 1-based; h[0] unused

    Folding() = default;
    explicit Folding(std::vector<int> heights) : h(std::move(heights)) {}

    int n() const { return static_cast<int>(h.size()) - 1; }
    int height(int v) const { return h[static_cast<std::size_t>(v)]; }
    // Every consecutive step is exactly +-1.
    bool unit_steps() const;
    // Both feet of every arc sit at equal height.
    bool aligns(const SparseHamiltonianGraph& g) const;
    // Max number of vertices sharing one height.
    int thickness() const;
    // Number of maximal monotone runs (requires unit_steps()).
    int segment_count() const;
};

// Raised when a fold plan cannot satisfy its structural constraints; the
// message names the violated constraint.
class PlanInfeasible : public std::runtime_error {
  public:
    explicit PlanInfeasible(const std::string& what) : std::runtime_error(what) {}
};

// Anchors and breakpoints of a planned folding: group i occupies the i-th
// monotone piece, anchored at r[i-1]; piece boundaries are d (midpoints of
// consecutive anchors).
struct FoldPlan {
    std::vector<std::vector<int>> groups;  // sorted feet per group, by leftmost foot
    std::vector<int> r;                    // strictly increasing anchors, one per group
    std::vector<int> d;                    // |groups| - 1 breakpoints
};

// Partitions the arc feet into adjacent pairs and singletons: repeatedly
// pair the closest adjacent non-arc feet (ties: smallest left foot), then
// drop from consideration every adjacent pair that the new pair's arcs make
// unusable. Feet must share one parity (split the line first otherwise).
std::vector<std::vector<int>> group_arc_feet(const SparseHamiltonianGraph& g);

// Derives anchors r and breakpoints d from a grouping so that both feet of
// every arc land at equal fold height, then validates the full structure
// (anchor order, breakpoint integrality, group membership, arc alignment).
// Throws PlanInfeasible naming the violated constraint otherwise.
FoldPlan compute_fold_plan(const SparseHamiltonianGraph& g,
                           const std::vector<std::vector<int>>& groups);

// Materializes the plan on vertices 1..n: height alternates direction piece
// by piece, anchored so all anchors share the minimum height 1 of their
// piece pattern. An empty plan yields the identity folding.
Folding plan_to_folding(const FoldPlan& plan, int n);

// Concatenates height levels bottom-up, each level in increasing vertex
// order. For a valid folding of g (unit steps + arc alignment) the result's
// max edge displacement is at most segment_count(), which is asserted.
UncodedStore linearize_from_folding(const Folding& f, const SparseHamiltonianGraph& g);

// Max |pos(u) - pos(v)| over edges of g; s must be a permutation of 1..n.
int max_edge_displacement(const UncodedStore& s, const FileGraph& g);

// Keeps odd-labeled vertices in order and relabels v -> (v+1)/2, undoing
// double_graph's vertex split.
UncodedStore undouble_store(const UncodedStore& s_doubled);

// floor((9k+1)/5): the displacement guarantee for a k-arc graph.
int sham_displacement_bound(int k);

struct ShamLayout {
    UncodedStore store;
    int displacement = 0;  // on the input graph
    std::string strategy;  // which candidate produced the store
    bool used_decision_search = false;
};

// End-to-end layout for sparse Hamiltonian graphs. Tries the grouped plan,
// then each single-pair plan, then the always-valid one-foot-per-piece plan
// (splitting the line first when foot parities are mixed), keeps the best
// linearization, and falls back to a bounded exact decision search when the
// best still exceeds sham_displacement_bound(k). Never fails; the result
// reports the realized displacement honestly.
ShamLayout layout_sham(const SparseHamiltonianGraph& g);

// Builds a folding of the split-line graph g_doubled out of any permutation
// store s of the original graph with max edge displacement B, by cutting s
// into length-B blocks and regrouping them so arc partners share a level
// band: thickness <= 3B, and undoubling its linearization keeps the
// original graph's displacement <= 6B. Certifies that good stores and good
// foldings are interchangeable.
Folding fold_from_store(const SparseHamiltonianGraph& g_doubled, const UncodedStore& s);

// Valley fold for the odd cycle 1..n (arc {1,n}): thickness 2.
Folding fold_cycle_odd(int n);

// Fold for nested arcs {i, 2k+2-i} on a line of n >= 2k+2: thickness 2.
Folding fold_nested(int k, int n);

}  // namespace dedup_layout
