#include "dedup_layout/coded_design.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace dedup_layout {

bool hk_full_rank(const HKCode& code) {
    Gf2Basis basis;
    if (!basis.insert(code.H)) return false;
    for (Gf2Vec row : code.K)
        if (!basis.insert(row)) return false;
    return basis.rank() == code.m();
}

CodedStore hk_to_generator(const HKCode& code) {
    if (code.n() < 1 || code.n() > 63)
        throw std::invalid_argument("hk_to_generator: need 1 <= n <= 63");
    if (!hk_full_rank(code))
        throw std::invalid_argument("hk_to_generator: [H;K] must have full rank");
    std::vector<Gf2Vec> stacked;
    stacked.reserve(static_cast<std::size_t>(code.m()));
    stacked.push_back(code.H);
    stacked.insert(stacked.end(), code.K.begin(), code.K.end());
    // Columns of the stacked transpose are the rows themselves; the wanted
    // generator solves G [H;K]^T = [0 | I], i.e. its columns are the inverse
    // columns with the parity coordinate dropped.
    const std::vector<Gf2Vec> inverse = gf2_invert(stacked);
    std::vector<Gf2Vec> columns;
    columns.reserve(inverse.size());
    for (Gf2Vec col : inverse) columns.push_back(col >> 1);
    return CodedStore(code.n(), std::move(columns));
}

CodedStore build_xor_chain(const XorChainStore& x) {
    const int chain = static_cast<int>(x.b_seq.size());
    if (chain < 1) throw std::invalid_argument("build_xor_chain: chain must not be empty");
    const int n = static_cast<int>(x.a_seq.size()) + chain;
    if (n > 63) throw std::invalid_argument("build_xor_chain: at most 63 chunks");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int id : x.a_seq) {
        if (id < 1 || id > n || seen[static_cast<std::size_t>(id)])
            throw std::invalid_argument("build_xor_chain: plain chunks must partition [1,n]");
        seen[static_cast<std::size_t>(id)] = true;
    }
    for (int id : x.b_seq) {
        if (id < 1 || id > n || seen[static_cast<std::size_t>(id)])
            throw std::invalid_argument("build_xor_chain: chained chunks must partition [1,n]");
        seen[static_cast<std::size_t>(id)] = true;
    }
    const int m = n + 1;
    if (static_cast<int>(x.interleave.size()) != chain + 1)
        throw std::invalid_argument("build_xor_chain: need one position per chain column");
    for (std::size_t i = 0; i < x.interleave.size(); ++i) {
        if (x.interleave[i] < 1 || x.interleave[i] > m)
            throw std::invalid_argument("build_xor_chain: chain position out of range");
        if (i > 0 && x.interleave[i] <= x.interleave[i - 1])
            throw std::invalid_argument("build_xor_chain: chain positions must strictly increase");
    }

    std::vector<Gf2Vec> columns(static_cast<std::size_t>(m), 0);
    for (int i = 0; i <= chain; ++i) {
        Gf2Vec col;
        if (i == 0)
            col = gf2_unit(x.b_seq.front());
        else if (i == chain)
            col = gf2_unit(x.b_seq.back());
        else
            col = gf2_unit(x.b_seq[static_cast<std::size_t>(i) - 1]) ^
                  gf2_unit(x.b_seq[static_cast<std::size_t>(i)]);
        columns[static_cast<std::size_t>(x.interleave[static_cast<std::size_t>(i)]) - 1] = col;
    }
    std::size_t next_plain = 0;
    for (auto& col : columns) {
        if (col != 0) continue;
        if (next_plain >= x.a_seq.size())
            throw std::invalid_argument("build_xor_chain: positions and chunks disagree");
        col = gf2_unit(x.a_seq[next_plain++]);
    }
    return CodedStore(n, std::move(columns));
}

namespace {

// Positions of the set bits, ascending.
std::vector<int> support_of(Gf2Vec v) {
    std::vector<int> out;
    for (Gf2Vec rest = v; rest != 0; rest &= rest - 1) out.push_back(gf2_min_support(rest));
    return out;
}

// max over the recovery coset {row, row^H} of the first used position.
int coset_min(Gf2Vec row, Gf2Vec h) {
    return std::max(gf2_min_support(row), gf2_min_support(row ^ h));
}

// min over the recovery coset of the last used position.
int coset_max(Gf2Vec row, Gf2Vec h) {
    return std::min(gf2_max_support(row), gf2_max_support(row ^ h));
}

// True iff the ones of `row` are exactly the first (from_front) or last
// `count` ones of `h`.
bool is_interval_of(Gf2Vec row, Gf2Vec h, bool from_front) {
    const std::vector<int> hs = support_of(h);
    const std::vector<int> rs = support_of(row);
    if (rs.empty() || rs.size() > hs.size()) return false;
    if (from_front) return std::equal(rs.begin(), rs.end(), hs.begin());
    return std::equal(rs.rbegin(), rs.rend(), hs.rbegin());
}

}  // namespace

HKCode reduce_hk_canonical(const HKCode& code) {
    const int n = code.n();
    if (n < 1 || n > 63) throw std::invalid_argument("reduce_hk_canonical: need 1 <= n <= 63");
    if (!hk_full_rank(code))
        throw std::invalid_argument("reduce_hk_canonical: [H;K] must have full rank");
    if (gf2_weight(code.H) < 2)
        throw std::invalid_argument("reduce_hk_canonical: parity row must use at least two positions");

    Gf2Vec H = code.H;
    std::vector<Gf2Vec> K = code.K;

    // Walk each decoding row toward the front of the store: swap it for a
    // fresh unit column when one is independent of the rest, otherwise clear
    // its first used position, which strictly advances the recovery window.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            const Gf2Vec row = K[static_cast<std::size_t>(i)];
            if (gf2_weight(row) == 1) continue;
            if (coset_min(row, H) > coset_max(row, H)) continue;
            const Gf2Vec rep =
                gf2_min_support(row) >= gf2_min_support(row ^ H) ? row : row ^ H;
            const Gf2Vec unit = gf2_unit(gf2_min_support(rep));
            Gf2Basis rest;
            rest.insert(H);
            for (int j = 0; j < n; ++j)
                if (j != i) rest.insert(K[static_cast<std::size_t>(j)]);
            const Gf2Vec next = rest.contains(unit) ? rep ^ unit : unit;
            if (gf2_weight(next) != 1 && coset_min(next, H) <= coset_min(row, H))
                throw std::logic_error("reduce_hk_canonical: replacement failed to advance");
            K[static_cast<std::size_t>(i)] = next;
            changed = true;
        }
    }

    // Fold rows sitting on the tail of H's support onto the front side.
    for (auto& row : K)
        if (is_interval_of(row, H, /*from_front=*/false)) row ^= H;

    // Clear stray columns: a unit row away from H's ends owns its position.
    changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            const Gf2Vec unit = K[static_cast<std::size_t>(i)];
            if (gf2_weight(unit) != 1) continue;
            const int j = gf2_min_support(unit);
            if (j == gf2_min_support(H) || j == gf2_max_support(H)) continue;
            if ((H & unit) != 0) {
                H ^= unit;
                changed = true;
            }
            for (int j2 = 0; j2 < n; ++j2) {
                if (j2 == i || (K[static_cast<std::size_t>(j2)] & unit) == 0) continue;
                K[static_cast<std::size_t>(j2)] ^= unit;
                changed = true;
            }
        }
    }

    HKCode out;
    out.H = H;
    out.K = std::move(K);
    if (!hk_full_rank(out)) throw std::logic_error("reduce_hk_canonical: rank was not preserved");
    for (Gf2Vec row : out.K)
        if (gf2_weight(row) != 1 && !is_interval_of(row, out.H, /*from_front=*/true))
            throw std::logic_error("reduce_hk_canonical: a row is neither a unit nor a front interval of the parity");
    return out;
}

bool hk_interval_domination(const HKCode& before, const HKCode& after) {
    if (before.n() != after.n()) return false;
    for (int i = 0; i < before.n(); ++i) {
        const Gf2Vec options_b[2] = {before.K[static_cast<std::size_t>(i)],
                                     before.K[static_cast<std::size_t>(i)] ^ before.H};
        const Gf2Vec options_a[2] = {after.K[static_cast<std::size_t>(i)],
                                     after.K[static_cast<std::size_t>(i)] ^ after.H};
        for (Gf2Vec d_b : options_b) {
            bool dominated = false;
            for (Gf2Vec d_a : options_a)
                if (gf2_min_support(d_a) >= gf2_min_support(d_b) &&
                    gf2_max_support(d_a) <= gf2_max_support(d_b))
                    dominated = true;
            if (!dominated) return false;
        }
    }
    return true;
}

UncodedStore coded_to_uncoded_2approx(const XorChainStore& x, const FileGraph& g, int t) {
    CodedStore coded = build_xor_chain(x);
    if (coded.n != g.n())
        throw std::invalid_argument("coded_to_uncoded_2approx: store and graph chunk counts differ");
    const Rational s0 = evaluate(coded, g, t, /*with_jump=*/false).stretch_metric;

    std::vector<Gf2Vec> cols = coded.columns;
    std::vector<int> q = x.interleave;  // positions of the chain columns
    std::vector<int> b = x.b_seq;

    // A chain-end chunk whose far recovery set already spans the store's own
    // stretch can only ever be read from its near side, so pin it in place
    // and shorten the chain.
    while (b.size() >= 2) {
        const std::size_t last = q.size() - 1;
        if (Rational(q[last] - q[1]) >= s0) {
            cols[static_cast<std::size_t>(q[1]) - 1] = gf2_unit(b[1]);
            q.erase(q.begin());
            b.erase(b.begin());
        } else if (Rational(q[last - 1] - q[0]) >= s0) {
            cols[static_cast<std::size_t>(q[last - 1]) - 1] = gf2_unit(b[b.size() - 2]);
            q.pop_back();
            b.pop_back();
        } else {
            break;
        }
    }

    for (std::size_t i = 0; i < b.size(); ++i)
        cols[static_cast<std::size_t>(q[i]) - 1] = gf2_unit(b[i]);
    cols.erase(cols.begin() + (q.back() - 1));

    std::vector<int> seq;
    seq.reserve(cols.size());
    for (Gf2Vec col : cols) {
        if (gf2_weight(col) != 1)
            throw std::logic_error("coded_to_uncoded_2approx: a mixed column survived");
        seq.push_back(gf2_min_support(col));
    }
    UncodedStore out{std::move(seq)};
    if (!out.is_permutation(g.n()))
        throw std::logic_error("coded_to_uncoded_2approx: result is not a permutation");
    const Rational s1 = evaluate(out, g, t, /*with_jump=*/false).stretch_metric;
    if (!(s1 < Rational(2) * s0))
        throw std::logic_error("coded_to_uncoded_2approx: factor-2 guarantee failed");
    return out;
}

UncodedStore coded_to_uncoded_matching(const CodedStore& c) {
    const int n = c.n;
    if (c.m() != n)
        throw std::invalid_argument("coded_to_uncoded_matching: store length must equal the chunk count");
    if (!c.is_lossless())
        throw std::invalid_argument("coded_to_uncoded_matching: store must be lossless");

    std::vector<std::vector<int>> options(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        const auto sol = gf2_solve(c.columns, gf2_unit(i));
        if (!sol || !sol->null_basis.empty())
            throw std::logic_error("coded_to_uncoded_matching: recovery sets are not unique");
        options[static_cast<std::size_t>(i)] = support_of(sol->particular);
    }

    std::vector<int> match_pos(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> match_chunk(static_cast<std::size_t>(n) + 1, 0);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int i, std::vector<bool>& seen) {
        for (int p : options[static_cast<std::size_t>(i)]) {
            if (seen[static_cast<std::size_t>(p)]) continue;
            seen[static_cast<std::size_t>(p)] = true;
            if (match_chunk[static_cast<std::size_t>(p)] == 0 ||
                augment(match_chunk[static_cast<std::size_t>(p)], seen)) {
                match_chunk[static_cast<std::size_t>(p)] = i;
                match_pos[static_cast<std::size_t>(i)] = p;
                return true;
            }
        }
        return false;
    };
    for (int i = 1; i <= n; ++i) {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        if (!augment(i, seen))
            throw std::logic_error(
                "coded_to_uncoded_matching: no perfect matching despite losslessness");
    }

    std::vector<int> seq(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) seq[static_cast<std::size_t>(match_pos[static_cast<std::size_t>(i)]) - 1] = i;
    return UncodedStore{std::move(seq)};
}

UncodedStore remove_coded_chunk_jump(const CodedStore& c) {
    const int n = c.n;
    if (c.m() != n + 1)
        throw std::invalid_argument("remove_coded_chunk_jump: store must have exactly one extra column");
    int mixed = -1;
    for (int p = 1; p <= c.m(); ++p) {
        if (gf2_weight(c.column(p)) == 1) continue;
        if (mixed != -1)
            throw std::invalid_argument("remove_coded_chunk_jump: more than one mixed column");
        mixed = p;
    }
    int drop = mixed;
    if (drop == -1) {
        std::vector<int> first(static_cast<std::size_t>(n) + 1, 0);
        for (int p = 1; p <= c.m() && drop == -1; ++p) {
            const int id = gf2_min_support(c.column(p));
            if (first[static_cast<std::size_t>(id)] != 0) drop = p;
            first[static_cast<std::size_t>(id)] = p;
        }
        if (drop == -1)
            throw std::invalid_argument("remove_coded_chunk_jump: no duplicate to remove");
    }
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n));
    for (int p = 1; p <= c.m(); ++p) {
        if (p == drop) continue;
        seq.push_back(gf2_min_support(c.column(p)));
    }
    UncodedStore out{std::move(seq)};
    if (!out.is_permutation(n))
        throw std::invalid_argument("remove_coded_chunk_jump: removal does not leave a permutation");
    return out;
}

namespace {

std::vector<int> range(int lo, int hi) {  // inclusive, empty when hi < lo
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

}  // namespace

XorChainStore example_xor_chain(const std::string& which, int N) {
    if (N < 1) throw std::invalid_argument("example_xor_chain: N must be at least 1");
    XorChainStore x;
    if (which == "example1_coded") {
        x.a_seq = range(1, 8 * N);
        x.b_seq = {8 * N + 1, 8 * N + 2};
        x.interleave = {2 * N + 1, 4 * N + 2, 6 * N + 3};
        return x;
    }
    if (which == "example2_coded") {
        x.a_seq = range(1, 5 * N);
        x.b_seq = range(5 * N + 1, 6 * N);
        for (int i = 1; i <= N + 1; ++i) x.interleave.push_back(2 * N + 2 * i - 1);
        return x;
    }
    if (which == "example1j_coded") {
        x.a_seq = {1, 2, 3, 4, 5, 6};
        x.b_seq = {7, 8};
        x.interleave = {2, 5, 8};
        return x;
    }
    throw std::invalid_argument("example_xor_chain: no xor-chain fixture named '" + which + "'");
}

StoreVariant build_example_store(const std::string& which, int N) {
    if (which == "example1_coded" || which == "example2_coded" || which == "example1j_coded")
        return build_xor_chain(example_xor_chain(which, N));
    if (which == "example1_uncoded_2dup" || which == "example1_mn") {
        if (N < 1) throw std::invalid_argument("build_example_store: N must be at least 1");
        const int a = 8 * N + 1, b = 8 * N + 2;
        if (which == "example1_uncoded_2dup") {
            std::vector<int> seq = range(1, 2 * N);
            seq.push_back(a);
            seq.push_back(b);
            for (int v : range(2 * N + 1, 6 * N)) seq.push_back(v);
            seq.push_back(a);
            seq.push_back(b);
            for (int v : range(6 * N + 1, 8 * N)) seq.push_back(v);
            return UncodedStore{std::move(seq)};
        }
        std::vector<int> seq = range(1, 3 * N);
        seq.push_back(a);
        for (int v : range(3 * N + 1, 5 * N)) seq.push_back(v);
        seq.push_back(b);
        for (int v : range(5 * N + 1, 8 * N)) seq.push_back(v);
        return UncodedStore{std::move(seq)};
    }
    throw std::invalid_argument("build_example_store: unknown example id");
}

}  // namespace dedup_layout
