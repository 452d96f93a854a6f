#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "dedup_layout/examples.hpp"
#include "dedup_layout/graph.hpp"
#include "dedup_layout/metrics.hpp"
#include "dedup_layout/rational.hpp"
#include "dedup_layout/store.hpp"
#include "support/generators.hpp"

using namespace dedup_layout;

TEST_SUITE_BEGIN("store");

TEST_CASE("uncoded store basics") {
    const UncodedStore s({2, 1, 3, 1});
    CHECK(s.m() == 4);
    CHECK(s.chunk_at(1) == 2);
    CHECK(s.chunk_at(4) == 1);
    CHECK(s.is_lossless(3));
    CHECK_FALSE(s.is_lossless(4));
    CHECK_FALSE(s.is_permutation(3));
    CHECK(identity_store(3).is_permutation(3));
    CHECK(identity_store(3).sequence == std::vector<int>{1, 2, 3});
}

TEST_CASE("coded store rank and losslessness") {
    const CodedStore c(3, {0b001, 0b011, 0b110});
    CHECK(c.m() == 3);
    CHECK(c.rank() == 3);
    CHECK(c.is_lossless());
    CHECK(c.column_weight(2) == 2);
    CHECK(CodedStore(3, {0b001, 0b010}).rank() == 2);
    CHECK_FALSE(CodedStore(3, {0b001, 0b010}).is_lossless());
    CHECK_THROWS_AS(CodedStore(2, {0b100}), std::invalid_argument);  // chunk 3 beyond n
}

TEST_CASE("coded/uncoded conversions") {
    const UncodedStore u({3, 1, 2, 1});
    const CodedStore c = as_coded(u, 3);
    CHECK(c.m() == 4);
    CHECK(c.column(1) == gf2_unit(3));
    CHECK(as_uncoded(c).sequence == u.sequence);
    CHECK(as_coded(u).n == 3);  // n inferred from the largest id
    CHECK_THROWS_AS(as_uncoded(CodedStore(2, {0b11})), std::invalid_argument);
}

TEST_CASE("recovery sets sort, dedupe, and count runs") {
    const RecoverySet r({7, 3, 4, 3, 9});
    CHECK(r.positions == std::vector<int>{3, 4, 7, 9});
    CHECK(r.min() == 3);
    CHECK(r.max() == 9);
    CHECK(r.span() == 7);
    CHECK(r.runs() == 3);  // {3,4}, {7}, {9}
    CHECK(RecoverySet({1, 2, 3}).runs() == 1);
    CHECK(RecoverySet(std::vector<int>{}).span() == 0);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("metrics");

TEST_CASE("reconstruction from position subsets") {
    // Store over 3 chunks: (x1, x1^x2, x3).
    const CodedStore c(3, {0b001, 0b011, 0b100});
    CHECK(can_reconstruct(c, {1, 2}, gf2_unit(2)));
    CHECK(can_reconstruct(c, {1, 2, 3}, 0b111));
    CHECK_FALSE(can_reconstruct(c, {2, 3}, gf2_unit(2)));
    CHECK(can_reconstruct(c, {3}, gf2_unit(3)));
    CHECK_THROWS_AS(can_reconstruct(c, {4}, gf2_unit(1)), std::invalid_argument);
}

TEST_CASE("minimal recovery window is leftmost among minimal spans") {
    // x2 recoverable at span 2 from (1,2) and from (3,4); leftmost wins.
    const CodedStore c(2, {0b01, 0b11, 0b11, 0b01});
    const auto w = min_recovery_window(c, gf2_unit(2));
    REQUIRE(w.has_value());
    CHECK(w->lo == 1);
    CHECK(w->hi == 2);
    CHECK(w->span() == 2);
    CHECK_FALSE(min_recovery_window(CodedStore(2, {0b01}), gf2_unit(2)).has_value());
}

TEST_CASE("stretch and jump on a duplicated-chunk store") {
    // Store (1, 2, 1): chunk 1 twice.
    const CodedStore c = as_coded(UncodedStore({1, 2, 1}), 2);
    RecoverySet w;
    const auto s = min_stretch(c, 0b11, 2, &w);
    REQUIRE(s.has_value());
    CHECK(*s == Rational(1));  // window (1,2) covers both chunks
    CHECK(w.span() == 2);
    const auto j = min_jump(c, 0b11, &w);
    REQUIRE(j.has_value());
    CHECK(*j == 1);
    CHECK(w.runs() == 1);
}

TEST_CASE("jump demands size-matched recovery sets") {
    // (x1^x2, x1, x1^x2): file {2} has no size-1 recovery set.
    const CodedStore c(2, {0b11, 0b01, 0b11});
    CHECK_FALSE(min_jump(c, gf2_unit(2)).has_value());
    CHECK(min_stretch(c, gf2_unit(2), 1).has_value());  // span 2 still recovers it
    CHECK(min_jump(c, gf2_unit(1)).has_value());
}

TEST_CASE("evaluate rejects lossy stores and reports per path") {
    const FileGraph g = make_path(3);
    CHECK_THROWS_AS(evaluate(UncodedStore({1, 2}), g, 2), std::invalid_argument);
    const MetricReport r = evaluate(identity_store(3), g, 2);
    CHECK(r.t == 2);
    CHECK(r.per_path.size() == enumerate_paths(g, 2).size());
    CHECK(r.stretch_metric == Rational(1));
    REQUIRE(r.jump_metric.has_value());
    CHECK(*r.jump_metric == 1);
    const MetricReport nj = evaluate(identity_store(3), g, 2, false);
    CHECK_FALSE(nj.jump_metric.has_value());
    for (const auto& pm : nj.per_path) CHECK_FALSE(pm.jump.has_value());
}

TEST_CASE("metric ranges, witnesses, and worst-index consistency") {
    testgen::Rng rng(201);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = testgen::pick(rng, 2, 6);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.3);
        const int t = testgen::pick(rng, 1, n);
        // Random lossless store: permutation plus a few random extra copies.
        std::vector<int> seq = testgen::random_permutation_store(rng, n).sequence;
        for (int extra = testgen::pick(rng, 0, 2); extra > 0; --extra) {
            seq.insert(seq.begin() + testgen::pick(rng, 0, static_cast<int>(seq.size())),
                       testgen::pick(rng, 1, n));
        }
        const UncodedStore s(std::move(seq));
        const CodedStore c = as_coded(s, n);
        const MetricReport r = evaluate(s, g, t);
        REQUIRE(r.per_path.size() == enumerate_paths(g, t).size());
        Rational worst_stretch(0);
        int worst_jump = 0;
        for (const auto& pm : r.per_path) {
            const int len = pm.path.length();
            CHECK(pm.stretch >= Rational(1));
            worst_stretch = std::max(worst_stretch, pm.stretch);
            REQUIRE(pm.jump.has_value());  // uncoded lossless: always size-matched
            CHECK(*pm.jump >= 1);
            CHECK(*pm.jump <= len);
            worst_jump = std::max(worst_jump, *pm.jump);
            // Witnesses realize their values.
            CHECK(Rational(pm.stretch_witness.span(), len) == pm.stretch);
            CHECK(pm.jump_witness.runs() == *pm.jump);
            CHECK(can_reconstruct(c, pm.stretch_witness.positions, path_mask(pm.path)));
            CHECK(can_reconstruct(c, pm.jump_witness.positions, path_mask(pm.path)));
            CHECK(static_cast<int>(pm.jump_witness.positions.size()) == len);
        }
        CHECK(r.stretch_metric == worst_stretch);
        CHECK(r.per_path[r.worst_stretch_index].stretch == worst_stretch);
        REQUIRE(r.jump_metric.has_value());
        CHECK(*r.jump_metric == worst_jump);
        REQUIRE(r.worst_jump_index.has_value());
        CHECK(*r.per_path[*r.worst_jump_index].jump == worst_jump);
    }
}

TEST_CASE("permutation stretch is bounded by accumulated position gaps") {
    testgen::Rng rng(202);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = testgen::pick(rng, 2, 7);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.3);
        const UncodedStore s = testgen::random_permutation_store(rng, n);
        std::vector<int> pos(static_cast<std::size_t>(n) + 1);
        for (int p = 1; p <= n; ++p) pos[static_cast<std::size_t>(s.chunk_at(p))] = p;
        const MetricReport r = evaluate(s, g, std::min(n, 4), false);
        for (const auto& pm : r.per_path) {
            int gaps = 0;
            for (std::size_t i = 0; i + 1 < pm.path.vertices.size(); ++i) {
                gaps += std::abs(pos[static_cast<std::size_t>(pm.path.vertices[i])] -
                                 pos[static_cast<std::size_t>(pm.path.vertices[i + 1])]);
            }
            CHECK(pm.stretch <= Rational(1 + gaps, pm.path.length()));
        }
    }
}

TEST_CASE("appending a chunk copy never worsens any path metric") {
    testgen::Rng rng(203);
    for (int rep = 0; rep < 15; ++rep) {
        const int n = testgen::pick(rng, 2, 6);
        const FileGraph g = testgen::random_connected_graph(rng, n, 0.3);
        const UncodedStore base = testgen::random_permutation_store(rng, n);
        UncodedStore extended = base;
        extended.sequence.push_back(testgen::pick(rng, 1, n));
        const MetricReport before = evaluate(base, g, std::min(n, 4));
        const MetricReport after = evaluate(extended, g, std::min(n, 4));
        REQUIRE(before.per_path.size() == after.per_path.size());
        for (std::size_t i = 0; i < before.per_path.size(); ++i) {
            CHECK(after.per_path[i].stretch <= before.per_path[i].stretch);
            REQUIRE(after.per_path[i].jump.has_value());
            CHECK(*after.per_path[i].jump <= *before.per_path[i].jump);
        }
    }
}

TEST_SUITE_END();
