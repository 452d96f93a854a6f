// Acceptance suite: fifteen oracle-backed criteria at exact integer/rational
// tolerances. Runs everything by default; `--only N` runs one criterion.
// Exit code 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>
#include <vector>

#include "dedup_layout/coded_design.hpp"
#include "dedup_layout/examples.hpp"
#include "dedup_layout/folding.hpp"
#include "dedup_layout/gf2.hpp"
#include "dedup_layout/graph.hpp"
#include "dedup_layout/jump_tree.hpp"
#include "dedup_layout/metrics.hpp"
#include "dedup_layout/oracle.hpp"
#include "dedup_layout/rational.hpp"
#include "dedup_layout/store.hpp"
#include "dedup_layout/zero_frag.hpp"
#include "support/generators.hpp"

using namespace dedup_layout;

// Fails the enclosing criterion with the offending expression and line.
#define REQUIRE_AC(cond)                                                             \
    do {                                                                             \
        if (!(cond)) {                                                               \
            std::printf("       assertion failed: %s (line %d)\n", #cond, __LINE__); \
            return false;                                                            \
        }                                                                            \
    } while (0)

namespace {

Rational stretch_of(const StoreVariant& s, const FileGraph& g, int t) {
    if (std::holds_alternative<CodedStore>(s)) {
        return evaluate(std::get<CodedStore>(s), g, t, false).stretch_metric;
    }
    return evaluate(std::get<UncodedStore>(s), g, t, false).stretch_metric;
}

// ---------------------------------------------------------------- criterion 1
bool ac1_example1_stretch() {
    for (int N = 1; N <= 3; ++N) {
        const FileGraph g = make_example1(N);
        const Rational coded_expect(2 * N + 2, 2);
        const Rational perm_expect(3 * N + 2, 2);
        REQUIRE_AC(stretch_of(build_example_store("example1_coded", N), g, 2) == coded_expect);
        REQUIRE_AC(stretch_of(build_example_store("example1_uncoded_2dup", N), g, 2) ==
                   coded_expect);
        REQUIRE_AC(stretch_of(build_example_store("example1_mn", N), g, 2) == perm_expect);
    }
    return true;
}

// ---------------------------------------------------------------- criterion 2
bool ac2_example2_stretch_and_identities() {
    for (int N = 1; N <= 3; ++N) {
        const FileGraph g = make_example2(N);
        REQUIRE_AC(stretch_of(build_example_store("example2_coded", N), g, 2) ==
                   Rational(2 * N + 1, 2));
        // Both chain readouts recover every chained chunk.
        const XorChainStore x = example_xor_chain("example2_coded", N);
        const CodedStore c = build_xor_chain(x);
        const int chain = static_cast<int>(x.interleave.size());
        for (int i = 1; i <= static_cast<int>(x.b_seq.size()); ++i) {
            Gf2Vec prefix = 0;
            Gf2Vec suffix = 0;
            for (int j = 1; j <= chain; ++j) {
                const Gf2Vec col = c.column(x.interleave[static_cast<std::size_t>(j - 1)]);
                (j <= i ? prefix : suffix) ^= col;
            }
            const Gf2Vec target = gf2_unit(x.b_seq[static_cast<std::size_t>(i - 1)]);
            REQUIRE_AC(prefix == target);
            REQUIRE_AC(suffix == target);
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 3
bool ac3_example1j_jump() {
    const RootedTree tree = make_example1j();
    const FileGraph g = tree.to_file_graph();
    const auto coded = std::get<CodedStore>(build_example_store("example1j_coded", 1));
    const MetricReport r = evaluate(coded, g, 8);
    REQUIRE_AC(r.jump_metric.has_value());
    REQUIRE_AC(*r.jump_metric == 2);
    // No uncoded store of length n+1 gets below 3 on this tree.
    REQUIRE_AC(exact_jump(g, 8, 9).value >= 3);
    return true;
}

// ---------------------------------------------------------------- criterion 4
bool ac4_folding_fixtures() {
    const FileGraph c5 = make_cycle_odd(5).to_file_graph();
    REQUIRE_AC(exact_bandwidth(c5).bandwidth == 2);
    const ShamLayout zigzag = layout_sham(make_cycle_odd(5));
    REQUIRE_AC(zigzag.store.sequence == (std::vector<int>{1, 5, 2, 4, 3}));
    REQUIRE_AC(zigzag.displacement == 2);

    const SparseHamiltonianGraph fig(16, {{2, 10}, {4, 12}, {8, 16}});
    const FoldPlan plan = compute_fold_plan(fig, group_arc_feet(fig));
    REQUIRE_AC(plan.r == (std::vector<int>{2, 8, 10, 14, 16}));
    REQUIRE_AC(plan.d == (std::vector<int>{5, 9, 12, 15}));
    REQUIRE_AC(layout_sham(fig).displacement <= 5);
    return true;
}

// ---------------------------------------------------------------- criterion 5
bool ac5_layout_bound_sweep() {
    testgen::Rng rng(1105);
    int oracle_checked = 0;
    int fallbacks = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const int n = testgen::pick(rng, 3, 24);
        const SparseHamiltonianGraph g = testgen::random_sham(rng, n, 4);
        const ShamLayout out = layout_sham(g);
        REQUIRE_AC(out.store.is_permutation(n));
        REQUIRE_AC(max_edge_displacement(out.store, g.to_file_graph()) == out.displacement);
        REQUIRE_AC(out.displacement <= sham_displacement_bound(g.arc_count()));
        if (out.used_decision_search) ++fallbacks;
        if (n <= 9) {
            ++oracle_checked;
            REQUIRE_AC(exact_bandwidth(g.to_file_graph()).bandwidth <= out.displacement);
        }
    }
    std::printf("       %d instances cross-checked against the exact search, %d used the "
                "decision fallback\n",
                oracle_checked, fallbacks);
    return true;
}

// ---------------------------------------------------------------- criterion 6
bool ac6_linearization_within_segments() {
    std::vector<std::pair<Folding, SparseHamiltonianGraph>> produced;
    for (int n = 3; n <= 11; n += 2) {
        produced.emplace_back(fold_cycle_odd(n), make_cycle_odd(n));
    }
    for (int k = 1; k <= 4; ++k) {
        for (int n = 2 * k + 2; n <= 2 * k + 5; ++n) {
            produced.emplace_back(fold_nested(k, n), make_rainbow(k, n));
        }
    }
    testgen::Rng rng(1106);
    int planned = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const int n = testgen::pick(rng, 3, 20);
        const SparseHamiltonianGraph g = testgen::random_sham(rng, n, 4);
        // Planned fold of the graph itself when its feet share a parity, of
        // its split-line double otherwise.
        const auto feet = g.arc_feet();
        bool uniform = true;
        for (int f : feet) uniform = uniform && ((f & 1) == (feet[0] & 1));
        const SparseHamiltonianGraph target = (feet.empty() || uniform) ? g : double_graph(g);
        try {
            const FoldPlan plan = compute_fold_plan(target, group_arc_feet(target));
            produced.emplace_back(plan_to_folding(plan, target.n()), target);
            ++planned;
        } catch (const PlanInfeasible&) {
            // Degenerate grouping; the end-to-end layout covers these cases.
        }
        if (rep % 4 == 0) {
            const SparseHamiltonianGraph doubled = double_graph(g);
            produced.emplace_back(fold_from_store(doubled, layout_sham(g).store), doubled);
        }
    }
    REQUIRE_AC(produced.size() > 35);
    REQUIRE_AC(planned > 0);
    for (const auto& [f, g] : produced) {
        REQUIRE_AC(f.unit_steps());
        REQUIRE_AC(f.aligns(g));
        const UncodedStore lin = linearize_from_folding(f, g);
        REQUIRE_AC(max_edge_displacement(lin, g.to_file_graph()) <= f.segment_count());
    }
    std::printf("       %zu foldings checked (%d from feasible grouped plans)\n",
                produced.size(), planned);
    return true;
}

// ---------------------------------------------------------------- criterion 7
bool ac7_zero_frag_exact_and_envelope() {
    const int expected_classes[] = {0, 1, 1, 2, 6, 21};  // connected graphs up to isomorphism
    for (int n = 1; n <= 5; ++n) {
        const auto graphs = testgen::connected_graphs_up_to_iso(n);
        REQUIRE_AC(static_cast<int>(graphs.size()) == expected_classes[n]);
        for (const FileGraph& g : graphs) {
            const ZeroFragResult r = zero_frag_t2(g);
            REQUIRE_AC(r.store.m() == exact_zero_frag_length(g, 2));
            const MetricReport rep = evaluate(r.store, g, 2);
            REQUIRE_AC(rep.stretch_metric == Rational(1));
            REQUIRE_AC(rep.jump_metric.has_value() && *rep.jump_metric == 1);
        }
    }
    testgen::Rng rng(1107);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = testgen::pick(rng, 2, 6);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.3);
        const int t = testgen::pick(rng, 2, 4);
        const UncodedStore s = zero_frag_general(g, t);
        const int files = static_cast<int>(enumerate_paths(g, t).size());
        REQUIRE_AC(s.m() * t >= files);
        REQUIRE_AC(s.m() <= t * files);
        REQUIRE_AC(evaluate(s, g, t, false).stretch_metric == Rational(1));
    }
    return true;
}

// ---------------------------------------------------------------- criterion 8
bool ac8_matching_dominates() {
    testgen::Rng rng(1108);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = testgen::pick(rng, 2, 7);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.3);
        const int t = testgen::pick(rng, 2, 3);
        const CodedStore c = testgen::random_full_rank_square(rng, n);
        const UncodedStore u = coded_to_uncoded_matching(c);
        REQUIRE_AC(u.is_permutation(n));
        const MetricReport coded = evaluate(c, g, t);
        const MetricReport plain = evaluate(u, g, t);
        REQUIRE_AC(coded.per_path.size() == plain.per_path.size());
        for (std::size_t i = 0; i < coded.per_path.size(); ++i) {
            REQUIRE_AC(plain.per_path[i].stretch <= coded.per_path[i].stretch);
            REQUIRE_AC(plain.per_path[i].jump.has_value());
            if (coded.per_path[i].jump.has_value()) {
                REQUIRE_AC(*plain.per_path[i].jump <= *coded.per_path[i].jump);
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 9
bool ac9_canonicalization() {
    const HKCode figure{0b110010, {0b000001, 0b000010, 0b100001, 0b001100, 0b111000}};
    const CodedStore canon_store = hk_to_generator(reduce_hk_canonical(figure));
    const std::vector<Gf2Vec> expected = {gf2_unit(1), gf2_unit(2), gf2_unit(4), gf2_unit(5),
                                          gf2_unit(2) ^ gf2_unit(3), gf2_unit(3)};
    REQUIRE_AC(canon_store.columns == expected);

    testgen::Rng rng(1109);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = testgen::pick(rng, 2, 8);
        const HKCode code = testgen::random_hk_code(rng, n);
        const HKCode canon = reduce_hk_canonical(code);
        REQUIRE_AC(hk_full_rank(canon));
        const CodedStore store = hk_to_generator(canon);
        for (int p = 1; p <= store.m(); ++p) REQUIRE_AC(store.column_weight(p) <= 2);
        // Interval domination, audited directly over each chunk's two recovery
        // vectors (the decoding row and its parity complement).
        for (int i = 0; i < n; ++i) {
            const Gf2Vec before[2] = {code.K[static_cast<std::size_t>(i)],
                                      code.K[static_cast<std::size_t>(i)] ^ code.H};
            const Gf2Vec after[2] = {canon.K[static_cast<std::size_t>(i)],
                                     canon.K[static_cast<std::size_t>(i)] ^ canon.H};
            for (const Gf2Vec b : before) {
                bool dominated = false;
                for (const Gf2Vec a : after) {
                    dominated = dominated || (gf2_min_support(a) >= gf2_min_support(b) &&
                                              gf2_max_support(a) <= gf2_max_support(b));
                }
                REQUIRE_AC(dominated);
            }
        }
        REQUIRE_AC(hk_interval_domination(code, canon));
    }
    return true;
}

// --------------------------------------------------------------- criterion 10
bool ac10_chain_trim_strictly_beats_double() {
    testgen::Rng rng(1110);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = testgen::pick(rng, 2, 10);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.3);
        const XorChainStore x = testgen::random_xor_chain(rng, n);
        const Rational coded = evaluate(build_xor_chain(x), g, 2, false).stretch_metric;
        const UncodedStore u = coded_to_uncoded_2approx(x, g, 2);
        REQUIRE_AC(u.is_permutation(n));
        REQUIRE_AC(evaluate(u, g, 2, false).stretch_metric < coded * Rational(2));
    }
    return true;
}

// --------------------------------------------------------------- criterion 11
bool ac11_removal_costs_two_runs() {
    testgen::Rng rng(1111);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = testgen::pick(rng, 2, 8);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.25);
        const CodedStore c = testgen::random_one_coded_column(rng, n);
        const UncodedStore u = remove_coded_chunk_jump(c);
        REQUIRE_AC(u.is_permutation(n));
        const int t = testgen::pick(rng, 2, std::min(n, 4));
        const MetricReport coded = evaluate(c, g, t);
        const MetricReport plain = evaluate(u, g, t);
        REQUIRE_AC(coded.per_path.size() == plain.per_path.size());
        for (std::size_t i = 0; i < coded.per_path.size(); ++i) {
            if (!coded.per_path[i].jump.has_value()) continue;
            REQUIRE_AC(plain.per_path[i].jump.has_value());
            REQUIRE_AC(*plain.per_path[i].jump <= *coded.per_path[i].jump + 2);
        }
    }
    return true;
}

// --------------------------------------------------------------- criterion 12
bool ac12_tree_jump_approximation() {
    // The n = 9 store-space searches sit one vertex past the default guard.
    setenv("DEDUP_LAYOUT_GUARD_OVERRIDE", "1", 1);
    testgen::Rng rng(1112);
    bool ok = true;
    for (int rep = 0; ok && rep < 200; ++rep) {
        const int n = testgen::pick(rng, 2, 9);
        const RootedTree tree = testgen::random_rooted_tree(rng, n);
        const FileGraph g = tree.to_file_graph();
        const DecompositionResult dec = min_max_decomposition(tree);
        const UncodedStore lin = linearize_decomposition(dec.decomposition);
        const MetricReport r = evaluate(lin, g, n);
        const int best = exact_jump(g, n, n).value;
        ok = ok && r.jump_metric.has_value() && *r.jump_metric <= 4 * best;
        if (n <= 8) ok = ok && dec.uf == exact_min_max_uf(tree);
    }
    unsetenv("DEDUP_LAYOUT_GUARD_OVERRIDE");
    REQUIRE_AC(ok);

    for (int rep = 0; rep < 200; ++rep) {
        const int n = testgen::pick(rng, 2, 10);
        const RootedTree tree = testgen::random_rooted_tree(rng, n);
        const UncodedStore s = testgen::random_permutation_store(rng, n);
        const UPathDecomposition d = decomposition_from_store(tree, s);
        validate_decomposition(d, tree);
        REQUIRE_AC(max_unidirectional_fragments(d, tree) <=
                   2 * max_unidirectional_min_jump(s, tree));
    }
    return true;
}

// --------------------------------------------------------------- criterion 13
bool ac13_caterpillar_layouts() {
    const RootedTree cat = make_caterpillar12();
    const UncodedStore hairs_first = caterpillar_layout(cat);
    const MetricReport rc = evaluate(hairs_first, cat.to_file_graph(), cat.n());
    REQUIRE_AC(rc.jump_metric.has_value());
    REQUIRE_AC(*rc.jump_metric <= 3);

    const RootedTree t2 = make_tree2();
    const MetricReport r2 = evaluate(two_hair_layout(t2), t2.to_file_graph(), t2.n());
    REQUIRE_AC(r2.jump_metric.has_value());
    REQUIRE_AC(*r2.jump_metric == 2);
    return true;
}

// --------------------------------------------------------------- criterion 14
bool ac14_zero_frag_decoding() {
    testgen::Rng rng(1114);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = testgen::pick(rng, 2, 6);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.3);
        const CodedStore c = testgen::random_zero_frag_coded(rng, g);
        REQUIRE_AC(evaluate(c, g, 2, false).stretch_metric == Rational(1));
        const UncodedStore u = decode_zero_frag_coded_t2(c, g);
        REQUIRE_AC(u.m() == c.m());
        REQUIRE_AC(u.is_lossless(n));
        REQUIRE_AC(evaluate(u, g, 2, false).stretch_metric == Rational(1));
    }
    return true;
}

// --------------------------------------------------------------- criterion 15
bool ac15_documented_discrepancies() {
    // (a) Pair-window stretch: the exact search lands on (B+1)/2 on every
    // instance, so the B/2 form is off by 1/2 whenever any edge exists.
    testgen::Rng rng(1115);
    bool differs_somewhere = false;
    for (int rep = 0; rep < 12; ++rep) {
        const int n = testgen::pick(rng, 2, 6);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.3);
        const int b = exact_bandwidth(g).bandwidth;
        const Rational s = exact_stretch(g, 2, n).value;
        REQUIRE_AC(s == Rational(b + 1, 2));
        differs_somewhere = differs_somewhere || s != Rational(b, 2);
    }
    const FileGraph c5 = make_cycle_odd(5).to_file_graph();
    REQUIRE_AC(exact_stretch(c5, 2, 5).value == Rational(3, 2));
    REQUIRE_AC(Rational(3, 2) != Rational(2, 2));
    REQUIRE_AC(differs_somewhere);
    std::printf(
        "       [NOTE] pair-window stretch of a permutation store is (B+1)/2, "
        "not B/2: the 5-cycle reaches 3/2, never 1\n");

    // (b) The closed-form length bound |E| + 1 + ceil(|V_odd|/2) counts one
    // extra position for every component whose covering walk is open.
    int overcounted = 0;
    int tight = 0;
    for (int n = 2; n <= 4; ++n) {
        for (const FileGraph& g : testgen::connected_graphs_up_to_iso(n)) {
            const ZeroFragResult r = zero_frag_t2(g);
            REQUIRE_AC(r.store.m() == exact_zero_frag_length(g, 2));
            int odd = 0;
            for (int v = 1; v <= n; ++v) {
                if (g.degree(v) % 2 == 1) ++odd;
            }
            const int gap = r.formula_upper_bound - r.store.m();
            REQUIRE_AC(gap == (odd > 0 ? 1 : 0));
            (gap > 0 ? overcounted : tight) += 1;
        }
    }
    REQUIRE_AC(overcounted > 0);
    REQUIRE_AC(tight > 0);
    std::printf(
        "       [NOTE] the closed-form zero-fragmentation length overcounts by "
        "one on every component with odd-degree vertices (open walk); the "
        "construction and the exact search agree on the true minimum\n");
    return true;
}

struct Criterion {
    int id;
    const char* label;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "example1 stores hit their exact stretch values (N = 1..3)", ac1_example1_stretch},
    {2, "example2 stretch and chain readout identities (N = 1..3)",
     ac2_example2_stretch_and_identities},
    {3, "example1j coded jump is 2; every length-9 plain store needs 3", ac3_example1j_jump},
    {4, "folding fixtures: cycle, zig-zag layout, figure fold plan", ac4_folding_fixtures},
    {5, "200 random layouts stay within the arc-count displacement bound",
     ac5_layout_bound_sweep},
    {6, "every produced folding linearizes within its segment count",
     ac6_linearization_within_segments},
    {7, "single-stroke stores are length-optimal; general-t envelope holds",
     ac7_zero_frag_exact_and_envelope},
    {8, "matching de-coding dominates square coded stores per path", ac8_matching_dominates},
    {9, "canonical codes: figure byte-exact, pair columns, interval domination",
     ac9_canonicalization},
    {10, "chain trimming lands strictly below twice the coded stretch",
     ac10_chain_trim_strictly_beats_double},
    {11, "dropping the redundant column costs at most two runs", ac11_removal_costs_two_runs},
    {12, "tree layouts within 4x of exact jump; partition optimality; factor 2",
     ac12_tree_jump_approximation},
    {13, "caterpillar layouts: 12-hair within 3, two-hair exactly 2", ac13_caterpillar_layouts},
    {14, "stretch-1 coded stores decode to equal-length plain stores",
     ac14_zero_frag_decoding},
    {15, "documented formula discrepancies are detected, not patched",
     ac15_documented_discrepancies},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
            if (only < 1 || only > 15) {
                std::fprintf(stderr, "error: --only expects a criterion number in [1,15]\n");
                return 2;
            }
        } else {
            std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
            return 2;
        }
    }
    unsetenv("DEDUP_LAYOUT_GUARD_OVERRIDE");  // criteria lift guards themselves when needed
    int passed = 0;
    int ran = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        const bool ok = c.run();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("[%s] %2d  %-68s (%lld ms)\n", ok ? "PASS" : "FAIL", c.id, c.label,
                    static_cast<long long>(ms));
        if (ok) ++passed;
    }
    std::printf("%d/%d acceptance criteria passed\n", passed, ran);
    return passed == ran ? 0 : 1;
}
