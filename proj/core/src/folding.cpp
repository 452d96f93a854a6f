#include "dedup_layout/folding.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>

#include "dedup_layout/oracle.hpp"

namespace dedup_layout {

bool Folding::unit_steps() const {
    for (int v = 1; v + 1 <= n(); ++v)
        if (std::abs(h[static_cast<std::size_t>(v) + 1] - h[static_cast<std::size_t>(v)]) != 1)
            return false;
    return true;
}

bool Folding::aligns(const SparseHamiltonianGraph& g) const {
    if (g.n() != n()) return false;
    for (const auto& a : g.arcs())
        if (height(a.first) != height(a.second)) return false;
    return true;
}

int Folding::thickness() const {
    std::map<int, int> count;
    int best = 0;
    for (int v = 1; v <= n(); ++v) best = std::max(best, ++count[height(v)]);
    return best;
}

int Folding::segment_count() const {
    int segments = 0;
    int direction = 0;
    for (int v = 1; v + 1 <= n(); ++v) {
        const int step = height(v + 1) > height(v) ? 1 : -1;
        if (step != direction) {
            ++segments;
            direction = step;
        }
    }
    return std::max(segments, n() >= 1 ? 1 : 0);
}

std::vector<std::vector<int>> group_arc_feet(const SparseHamiltonianGraph& g) {
    const std::vector<int> feet = g.arc_feet();
    std::vector<std::vector<int>> groups;
    if (feet.empty()) return groups;
    for (int v : feet)
        if (((v ^ feet[0]) & 1) != 0)
            throw std::invalid_argument(
                "group_arc_feet: arc feet must share one parity; split the line first");

    const int nf = static_cast<int>(feet.size());
    std::map<int, int> index_of;
    for (int i = 0; i < nf; ++i) index_of[feet[i]] = i;
    std::vector<int> partner_idx(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i)
        partner_idx[static_cast<std::size_t>(i)] = index_of.at(*g.arc_partner(feet[i]));

    // Candidate i means pairing feet[i] with feet[i+1]; arcs are not candidates.
    std::vector<bool> candidate(static_cast<std::size_t>(std::max(nf - 1, 0)));
    for (int i = 0; i + 1 < nf; ++i)
        candidate[static_cast<std::size_t>(i)] = (partner_idx[static_cast<std::size_t>(i)] != i + 1);
    std::vector<int> mate(static_cast<std::size_t>(nf), -1);

    auto drop = [&](int left) {
        if (left >= 0 && left + 1 < nf) candidate[static_cast<std::size_t>(left)] = false;
    };
    while (true) {
        int pick = -1;
        for (int i = 0; i + 1 < nf; ++i) {
            if (!candidate[static_cast<std::size_t>(i)]) continue;
            if (pick < 0 || feet[i + 1] - feet[i] < feet[pick + 1] - feet[pick]) pick = i;
        }
        if (pick < 0) break;
        const int e = pick, f = pick + 1;
        mate[static_cast<std::size_t>(e)] = f;
        mate[static_cast<std::size_t>(f)] = e;
        drop(e - 1);
        drop(e);
        drop(f);
        // The first foot's partner must keep height 1, so it may only lead a
        // later pair; the second foot's partner absorbs the pair's offset and
        // must stay single.
        const int p = partner_idx[static_cast<std::size_t>(e)];
        drop(p - 1);
        const int q = partner_idx[static_cast<std::size_t>(f)];
        drop(q - 1);
        drop(q);
    }
    for (int i = 0; i < nf; ++i) {
        if (mate[static_cast<std::size_t>(i)] == i - 1) continue;
        if (mate[static_cast<std::size_t>(i)] == i + 1)
            groups.push_back({feet[i], feet[i + 1]});
        else
            groups.push_back({feet[i]});
    }
    return groups;
}

FoldPlan compute_fold_plan(const SparseHamiltonianGraph& g,
                           const std::vector<std::vector<int>>& groups) {
    FoldPlan plan;
    plan.groups = groups;
    const int L = static_cast<int>(groups.size());
    if (L == 0) {
        if (!g.arcs().empty()) throw PlanInfeasible("empty grouping for a graph with arcs");
        return plan;
    }

    std::vector<int> flat;
    for (const auto& grp : groups) {
        if (grp.empty() || grp.size() > 2) throw PlanInfeasible("group sizes must be 1 or 2");
        if (grp.size() == 2 && grp[0] >= grp[1]) throw PlanInfeasible("group feet out of order");
        if (!flat.empty() && flat.back() >= grp[0]) throw PlanInfeasible("groups out of order");
        for (int v : grp) flat.push_back(v);
    }
    if (flat != g.arc_feet()) throw PlanInfeasible("groups must partition the arc feet");
    for (int v : flat)
        if (((v ^ flat[0]) & 1) != 0) throw PlanInfeasible("arc feet must share one parity");

    std::map<int, int> group_of;
    for (int i = 0; i < L; ++i)
        for (int v : groups[static_cast<std::size_t>(i)]) group_of[v] = i;

    std::vector<int> r(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
        const auto& grp = groups[static_cast<std::size_t>(i)];
        if (grp.size() == 2) {
            r[static_cast<std::size_t>(i)] = grp[0];
            continue;
        }
        const int x = grp[0];
        const int partner = *g.arc_partner(x);
        const int gp = group_of.at(partner);
        const auto& pgrp = groups[static_cast<std::size_t>(gp)];
        if (pgrp.size() == 2 && pgrp[1] == partner) {
            // x must land at the height its partner reaches as a pair's
            // second foot: offset the anchor by the pair's width, with the
            // sign set by whether the two pieces slope the same way.
            const int gap = pgrp[1] - pgrp[0];
            r[static_cast<std::size_t>(i)] = ((i - gp) % 2 == 0) ? x - gap : x + gap;
        } else {
            r[static_cast<std::size_t>(i)] = x;
        }
    }

    for (int i = 0; i + 1 < L; ++i)
        if (r[static_cast<std::size_t>(i)] >= r[static_cast<std::size_t>(i) + 1])
            throw PlanInfeasible("anchors must strictly increase");
    for (int v : r)
        if (v < 1 || v > g.n()) throw PlanInfeasible("anchor falls outside the line");

    std::vector<int> d(static_cast<std::size_t>(L - 1));
    for (int i = 0; i + 1 < L; ++i) {
        const int sum = r[static_cast<std::size_t>(i)] + r[static_cast<std::size_t>(i) + 1];
        if (sum % 2 != 0) throw PlanInfeasible("breakpoint between anchors is not an integer");
        d[static_cast<std::size_t>(i)] = sum / 2;
    }
    for (int i = 0; i < L; ++i) {
        const auto& grp = groups[static_cast<std::size_t>(i)];
        const int lo = (i == 0) ? 1 : d[static_cast<std::size_t>(i) - 1];
        if (grp.front() < lo) throw PlanInfeasible("group feet leave their monotone piece");
        if (i + 1 < L && grp.back() >= d[static_cast<std::size_t>(i)])
            throw PlanInfeasible("group feet leave their monotone piece");
    }

    plan.r = std::move(r);
    plan.d = std::move(d);
    const Folding fold = plan_to_folding(plan, g.n());
    if (!fold.aligns(g)) throw PlanInfeasible("an arc's feet land at different heights");
    return plan;
}

Folding plan_to_folding(const FoldPlan& plan, int n) {
    if (n < 1) throw std::invalid_argument("plan_to_folding: need at least one vertex");
    std::vector<int> h(static_cast<std::size_t>(n) + 1, 0);
    const int L = static_cast<int>(plan.r.size());
    if (L == 0) {
        std::iota(h.begin() + 1, h.end(), 1);
        return Folding(std::move(h));
    }
    if (static_cast<int>(plan.d.size()) != L - 1)
        throw std::invalid_argument("plan_to_folding: breakpoint count must be one less than the piece count");
    int piece = 0;
    int lowest = 0;
    for (int x = 1; x <= n; ++x) {
        while (piece + 1 < L && x >= plan.d[static_cast<std::size_t>(piece)]) ++piece;
        const int sigma = (piece % 2 == 0) ? 1 : -1;
        h[static_cast<std::size_t>(x)] = sigma * (x - plan.r[static_cast<std::size_t>(piece)]);
        lowest = std::min(lowest, h[static_cast<std::size_t>(x)]);
    }
    const int shift = 1 - lowest;
    for (int x = 1; x <= n; ++x) h[static_cast<std::size_t>(x)] += shift;
    return Folding(std::move(h));
}

UncodedStore linearize_from_folding(const Folding& f, const SparseHamiltonianGraph& g) {
    if (f.n() != g.n() || f.n() < 1)
        throw std::invalid_argument("linearize_from_folding: folding and graph sizes differ");
    if (!f.unit_steps())
        throw std::invalid_argument("linearize_from_folding: folding must move by exactly one per step");
    if (!f.aligns(g))
        throw std::invalid_argument("linearize_from_folding: folding must align every arc's feet");
    int lo = f.height(1), hi = f.height(1);
    for (int v = 1; v <= f.n(); ++v) {
        lo = std::min(lo, f.height(v));
        hi = std::max(hi, f.height(v));
    }
    std::vector<std::vector<int>> level(static_cast<std::size_t>(hi - lo + 1));
    for (int v = 1; v <= f.n(); ++v) level[static_cast<std::size_t>(f.height(v) - lo)].push_back(v);
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(f.n()));
    for (const auto& bucket : level) seq.insert(seq.end(), bucket.begin(), bucket.end());
    UncodedStore s{std::move(seq)};
    if (max_edge_displacement(s, g.to_file_graph()) > f.segment_count())
        throw std::logic_error("linearize_from_folding: displacement exceeded the segment count");
    return s;
}

int max_edge_displacement(const UncodedStore& s, const FileGraph& g) {
    if (!s.is_permutation(g.n()))
        throw std::invalid_argument("max_edge_displacement: store must be a permutation of the vertices");
    std::vector<int> pos(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int i = 1; i <= s.m(); ++i) pos[static_cast<std::size_t>(s.chunk_at(i))] = i;
    int best = 0;
    for (const auto& e : g.edges())
        best = std::max(best, std::abs(pos[static_cast<std::size_t>(e.first)] -
                                       pos[static_cast<std::size_t>(e.second)]));
    return best;
}

UncodedStore undouble_store(const UncodedStore& s_doubled) {
    std::vector<int> seq;
    seq.reserve((s_doubled.sequence.size() + 1) / 2);
    for (int v : s_doubled.sequence)
        if (v % 2 == 1) seq.push_back((v + 1) / 2);
    return UncodedStore{std::move(seq)};
}

int sham_displacement_bound(int k) {
    if (k < 0) throw std::invalid_argument("sham_displacement_bound: negative arc count");
    return std::max(1, (9 * k + 1) / 5);
}

namespace {

struct PlanCandidate {
    std::string strategy;
    std::vector<std::vector<int>> groups;
};

std::vector<PlanCandidate> plan_candidates(const SparseHamiltonianGraph& g) {
    std::vector<PlanCandidate> out;
    out.push_back({"grouped-plan", group_arc_feet(g)});
    const std::vector<int> feet = g.arc_feet();
    const int nf = static_cast<int>(feet.size());
    std::vector<int> pair_lefts;
    for (int i = 0; i + 1 < nf; ++i)
        if (g.arc_partner(feet[i]) != feet[i + 1]) pair_lefts.push_back(i);
    std::stable_sort(pair_lefts.begin(), pair_lefts.end(), [&](int a, int b) {
        return feet[a + 1] - feet[a] < feet[b + 1] - feet[b];
    });
    for (int left : pair_lefts) {
        PlanCandidate cand;
        cand.strategy = "pair-plan";
        for (int i = 0; i < nf; ++i) {
            if (i == left) {
                cand.groups.push_back({feet[i], feet[i + 1]});
                ++i;
            } else {
                cand.groups.push_back({feet[i]});
            }
        }
        out.push_back(std::move(cand));
    }
    PlanCandidate single;
    single.strategy = "singleton-plan";
    for (int v : feet) single.groups.push_back({v});
    out.push_back(std::move(single));
    return out;
}

}  // namespace

ShamLayout layout_sham(const SparseHamiltonianGraph& g) {
    ShamLayout best;
    const FileGraph fg = g.to_file_graph();
    if (g.arcs().empty()) {
        best.store = identity_store(g.n());
        best.displacement = max_edge_displacement(best.store, fg);
        best.strategy = "identity";
        return best;
    }

    const std::vector<int> feet = g.arc_feet();
    bool uniform = true;
    for (int v : feet)
        if (((v ^ feet[0]) & 1) != 0) uniform = false;

    bool have = false;
    auto consider = [&](UncodedStore s, const std::string& strategy) {
        const int disp = max_edge_displacement(s, fg);
        if (!have || disp < best.displacement) {
            best.store = std::move(s);
            best.displacement = disp;
            best.strategy = strategy;
            have = true;
        }
    };

    if (uniform) {
        for (const auto& cand : plan_candidates(g)) {
            try {
                const FoldPlan plan = compute_fold_plan(g, cand.groups);
                consider(linearize_from_folding(plan_to_folding(plan, g.n()), g), cand.strategy);
            } catch (const PlanInfeasible&) {
            }
        }
    } else {
        const SparseHamiltonianGraph doubled = double_graph(g);
        for (const auto& cand : plan_candidates(doubled)) {
            try {
                const FoldPlan plan = compute_fold_plan(doubled, cand.groups);
                consider(undouble_store(
                             linearize_from_folding(plan_to_folding(plan, doubled.n()), doubled)),
                         cand.strategy + "+split-line");
            } catch (const PlanInfeasible&) {
            }
        }
    }
    // The one-foot-per-piece plan always validates, so a store exists here.
    if (!have) throw std::logic_error("layout_sham: no plan candidate validated");

    const int bound = sham_displacement_bound(g.arc_count());
    if (best.displacement > bound) {
        const BandwidthDecision decision = find_arrangement_with_bandwidth(fg, bound);
        if (decision.status == DecisionStatus::kFound) {
            UncodedStore s{decision.arrangement};
            best.displacement = max_edge_displacement(s, fg);
            best.store = std::move(s);
            best.strategy = "decision-search";
            best.used_decision_search = true;
        }
    }
    return best;
}

Folding fold_from_store(const SparseHamiltonianGraph& g_doubled, const UncodedStore& s) {
    const int nd = g_doubled.n();
    if (nd % 2 == 0)
        throw std::invalid_argument("fold_from_store: expected a split line with an odd vertex count");
    for (const auto& a : g_doubled.arcs())
        if (a.first % 2 == 0 || a.second % 2 == 0)
            throw std::invalid_argument("fold_from_store: split-line arcs must join odd vertices");
    const int n = (nd + 1) / 2;
    if (!s.is_permutation(n))
        throw std::invalid_argument("fold_from_store: store must be a permutation of the original vertices");

    std::vector<int> h(static_cast<std::size_t>(nd) + 1, 0);
    if (g_doubled.arcs().empty()) {
        std::iota(h.begin() + 1, h.end(), 1);
        return Folding(std::move(h));
    }

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g_doubled.arcs().size());
    for (const auto& a : g_doubled.arcs())
        arcs.emplace_back((a.first + 1) / 2, (a.second + 1) / 2);

    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(s.chunk_at(i))] = i;
    int bandwidth = 1;
    for (int u = 1; u + 1 <= n; ++u)
        bandwidth = std::max(bandwidth, std::abs(pos[static_cast<std::size_t>(u)] -
                                                 pos[static_cast<std::size_t>(u) + 1]));
    for (const auto& a : arcs)
        bandwidth = std::max(bandwidth, std::abs(pos[static_cast<std::size_t>(a.first)] -
                                                 pos[static_cast<std::size_t>(a.second)]));

    std::vector<int> blk(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        blk[static_cast<std::size_t>(s.chunk_at(i))] = (i - 1) / bandwidth + 1;
    std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& a : arcs) {
        partner[static_cast<std::size_t>(a.first)] = a.second;
        partner[static_cast<std::size_t>(a.second)] = a.first;
    }

    // Merge length-B blocks of the store pairwise, pulling each vertex whose
    // arc partner sits in a later block forward into the next band so both
    // feet share a band.
    auto band_of = [&](int u) {
        const int j = blk[static_cast<std::size_t>(u)];
        if (j % 2 == 1) return (j + 1) / 2;
        const int p = partner[static_cast<std::size_t>(u)];
        const bool forward = (p != 0 && blk[static_cast<std::size_t>(p)] > j);
        return forward ? j / 2 + 1 : j / 2;
    };

    std::vector<int> band(static_cast<std::size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u) band[static_cast<std::size_t>(u)] = band_of(u);
    for (int u = 1; u + 1 <= n; ++u)
        if (std::abs(band[static_cast<std::size_t>(u)] - band[static_cast<std::size_t>(u) + 1]) > 1)
            throw std::logic_error("fold_from_store: adjacent vertices left non-adjacent bands");
    for (const auto& a : arcs)
        if (band[static_cast<std::size_t>(a.first)] != band[static_cast<std::size_t>(a.second)])
            throw std::logic_error("fold_from_store: arc feet split across bands");

    for (int u = 1; u <= n; ++u)
        h[static_cast<std::size_t>(2 * u - 1)] = 2 * band[static_cast<std::size_t>(u)] - 1;
    for (int u = 1; u + 1 <= n; ++u) {
        const int a = band[static_cast<std::size_t>(u)];
        const int b = band[static_cast<std::size_t>(u) + 1];
        h[static_cast<std::size_t>(2 * u)] = (a == b) ? 2 * a : a + b - 1;
    }
    Folding fold(std::move(h));
    if (!fold.unit_steps())
        throw std::logic_error("fold_from_store: produced a non-unit step");
    if (fold.thickness() > 3 * bandwidth)
        throw std::logic_error("fold_from_store: thickness exceeded three times the displacement");
    return fold;
}

Folding fold_cycle_odd(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("fold_cycle_odd: need an odd cycle length of at least 3");
    std::vector<int> h(static_cast<std::size_t>(n) + 1, 0);
    const int q = (n - 1) / 2;
    for (int u = 1; u <= n; ++u)
        h[static_cast<std::size_t>(u)] = (u <= q + 1) ? u : 2 * (q + 1) - u;
    return Folding(std::move(h));
}

Folding fold_nested(int k, int n) {
    if (k < 1 || n < 2 * k + 2)
        throw std::invalid_argument("fold_nested: need n >= 2k+2 nested arcs");
    std::vector<int> h(static_cast<std::size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u)
        h[static_cast<std::size_t>(u)] = (u <= k + 1) ? k + 2 - u : u - k;
    return Folding(std::move(h));
}

}  // namespace dedup_layout
