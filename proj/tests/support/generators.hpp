#pragma once

// Deterministic instance generators shared by the unit and acceptance
// suites. All randomness flows through the caller's engine, so a fixed seed
// pins an entire sweep.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dedup_layout/coded_design.hpp"
#include "dedup_layout/gf2.hpp"
#include "dedup_layout/graph.hpp"
#include "dedup_layout/metrics.hpp"
#include "dedup_layout/store.hpp"
#include "dedup_layout/zero_frag.hpp"

namespace testgen {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random attachment tree with shuffled labels: vertex #v hangs under a
// uniformly random earlier vertex.
inline std::vector<std::pair<int, int>> random_tree_edges(Rng& rng, int n) {
    std::vector<int> label(static_cast<std::size_t>(n) + 1);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin() + 1, label.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) {
        edges.emplace_back(label[static_cast<std::size_t>(pick(rng, 1, v - 1))],
                           label[static_cast<std::size_t>(v)]);
    }
    return edges;
}

// Random spanning tree plus independent extra edges.
inline dedup_layout::FileGraph random_connected_graph(Rng& rng, int n, double extra_prob = 0.25) {
    auto edges = random_tree_edges(rng, n);
    std::bernoulli_distribution extra(extra_prob);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (extra(rng)) edges.emplace_back(u, v);
        }
    }
    return dedup_layout::FileGraph(n, std::move(edges));
}

inline dedup_layout::RootedTree random_rooted_tree(Rng& rng, int n) {
    std::vector<int> label(static_cast<std::size_t>(n) + 1);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin() + 1, label.end(), rng);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 2; v <= n; ++v) {
        parent[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] =
            label[static_cast<std::size_t>(pick(rng, 1, v - 1))];
    }
    return dedup_layout::RootedTree(n, label[1], std::move(parent));
}

// Up to max_arcs disjoint arcs drawn from a shuffled foot pool.
inline dedup_layout::SparseHamiltonianGraph random_sham(Rng& rng, int n, int max_arcs) {
    const int want = pick(rng, 0, max_arcs);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t i = 0; i < pool.size() && static_cast<int>(arcs.size()) < want; ++i) {
        if (used[static_cast<std::size_t>(pool[i])]) continue;
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (used[static_cast<std::size_t>(pool[j])]) continue;
            const int u = std::min(pool[i], pool[j]);
            const int v = std::max(pool[i], pool[j]);
            if (v - u <= 1) continue;
            arcs.emplace_back(u, v);
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
            break;
        }
    }
    return dedup_layout::SparseHamiltonianGraph(n, std::move(arcs));
}

inline dedup_layout::UncodedStore random_permutation_store(Rng& rng, int n) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    std::shuffle(seq.begin(), seq.end(), rng);
    return dedup_layout::UncodedStore(std::move(seq));
}

// Square full-rank coded store over n chunks (rejection sampling).
inline dedup_layout::CodedStore random_full_rank_square(Rng& rng, int n) {
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    std::uniform_int_distribution<std::uint64_t> bits(1, top);
    for (;;) {
        std::vector<dedup_layout::Gf2Vec> cols(static_cast<std::size_t>(n));
        for (auto& c : cols) c = bits(rng);
        dedup_layout::CodedStore store(n, std::move(cols));
        if (store.is_lossless()) return store;
    }
}

// Full-rank one-redundant code whose parity row mixes at least two positions.
inline dedup_layout::HKCode random_hk_code(Rng& rng, int n) {
    const int m = n + 1;
    const std::uint64_t top = (std::uint64_t{1} << m) - 1;
    std::uniform_int_distribution<std::uint64_t> bits(1, top);
    for (;;) {
        std::vector<dedup_layout::Gf2Vec> rows(static_cast<std::size_t>(m));
        dedup_layout::Gf2Basis basis;
        bool independent = true;
        for (auto& r : rows) {
            r = bits(rng);
            if (!basis.insert(r)) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        if (dedup_layout::gf2_weight(rows[0]) < 2) continue;
        return dedup_layout::HKCode{rows[0], {rows.begin() + 1, rows.end()}};
    }
}

// Random xor-chain shape: the chunk set splits into plain chunks and a chain,
// and the chain columns land on a random increasing position set.
inline dedup_layout::XorChainStore random_xor_chain(Rng& rng, int n) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 1);
    std::shuffle(ids.begin(), ids.end(), rng);
    const int nb = pick(rng, 1, n - 1);
    dedup_layout::XorChainStore x;
    x.b_seq.assign(ids.begin(), ids.begin() + nb);
    x.a_seq.assign(ids.begin() + nb, ids.end());
    const int m = n + 1;
    std::vector<int> positions(static_cast<std::size_t>(m));
    std::iota(positions.begin(), positions.end(), 1);
    std::shuffle(positions.begin(), positions.end(), rng);
    x.interleave.assign(positions.begin(), positions.begin() + nb + 1);
    std::sort(x.interleave.begin(), x.interleave.end());
    return x;
}

// Permutation store plus one extra column: either an xor of 2+ chunks or a
// plain duplicate.
inline dedup_layout::CodedStore random_one_coded_column(Rng& rng, int n) {
    const dedup_layout::UncodedStore perm = random_permutation_store(rng, n);
    std::vector<dedup_layout::Gf2Vec> cols;
    for (int c : perm.sequence) cols.push_back(dedup_layout::gf2_unit(c));
    dedup_layout::Gf2Vec extra = 0;
    if (n >= 2 && pick(rng, 0, 3) != 0) {
        const int w = pick(rng, 2, std::min(4, n));
        std::vector<int> ids(static_cast<std::size_t>(n));
        std::iota(ids.begin(), ids.end(), 1);
        std::shuffle(ids.begin(), ids.end(), rng);
        for (int i = 0; i < w; ++i) extra ^= dedup_layout::gf2_unit(ids[static_cast<std::size_t>(i)]);
    } else {
        extra = dedup_layout::gf2_unit(pick(rng, 1, n));
    }
    cols.insert(cols.begin() + pick(rng, 0, static_cast<int>(cols.size())), extra);
    return dedup_layout::CodedStore(n, std::move(cols));
}

// Stretch-1 coded store for adjacent-pair access: start from the single-stroke
// walk store and apply random pair codings, keeping only mutations that leave
// the stretch metric at exactly 1.
inline dedup_layout::CodedStore random_zero_frag_coded(Rng& rng, const dedup_layout::FileGraph& g) {
    using namespace dedup_layout;
    CodedStore c = as_coded(zero_frag_t2(g).store, g.n());
    const Rational one{1};
    for (int tries = 0; tries < 3 * c.m(); ++tries) {
        if (c.m() < 2) break;
        const std::size_t j = static_cast<std::size_t>(pick(rng, 1, c.m() - 1));
        const Gf2Vec a = c.columns[j - 1];
        const Gf2Vec b = c.columns[j];
        if (gf2_weight(a) != 1 || gf2_weight(b) != 1 || a == b) continue;
        CodedStore cand = c;
        cand.columns[pick(rng, 0, 1) ? j - 1 : j] = a ^ b;
        if (evaluate(cand, g, 2, false).stretch_metric == one) c = cand;
    }
    return c;
}

// Exhaustive connected graphs on n <= 5 vertices, one representative per
// isomorphism class (canonical form: min edge bitmask over all relabelings).
inline std::vector<dedup_layout::FileGraph> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    }
    const int e = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> idx(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
    for (int i = 0; i < e; ++i) {
        idx[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].first)]
           [static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].second)] = i;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::uint64_t> seen;
    std::vector<dedup_layout::FileGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < e; ++i) {
            if (mask >> i & 1) edges.push_back(pairs[static_cast<std::size_t>(i)]);
        }
        dedup_layout::FileGraph g(n, edges);
        if (!g.is_connected()) continue;
        std::uint64_t canon = mask;
        std::vector<int> p = perm;
        while (std::next_permutation(p.begin(), p.end())) {
            std::uint64_t relabeled = 0;
            for (const auto& [u, v] : edges) {
                int a = p[static_cast<std::size_t>(u - 1)];
                int b = p[static_cast<std::size_t>(v - 1)];
                if (a > b) std::swap(a, b);
                relabeled |= std::uint64_t{1}
                             << idx[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            }
            canon = std::min(canon, relabeled);
        }
        if (seen.insert(canon).second) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace testgen
