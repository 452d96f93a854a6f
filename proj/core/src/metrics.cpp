#include "dedup_layout/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dedup_layout {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// True iff every unit e_i with bit i set in `chunks` lies in the span of
// `basis`.
bool covers_all(const Gf2Basis& basis, Gf2Vec chunks) {
    for (Gf2Vec rest = chunks; rest;) {
        const int i = gf2_min_support(rest);
        rest &= rest - 1;
        if (!basis.contains(gf2_unit(i))) return false;
    }
    return true;
}

}  // namespace

Gf2Vec path_mask(const Path& p) {
    Gf2Vec m = 0;
    for (int v : p.vertices) m |= gf2_unit(v);
    return m;
}

bool can_reconstruct(const CodedStore& c, const std::vector<int>& positions, Gf2Vec chunks) {
    Gf2Basis basis;
    for (int q : positions) {
        if (q < 1 || q > c.m()) throw std::invalid_argument("can_reconstruct: position out of range");
        basis.insert(c.column(q));
    }
    return covers_all(basis, chunks);
}

std::optional<Window> min_recovery_window(const CodedStore& c, Gf2Vec chunks) {
    const int m = c.m();
    if (chunks == 0) return m >= 1 ? std::optional<Window>(Window{1, 1}) : std::nullopt;
    std::optional<Window> best;
    for (int lo = 1; lo <= m; ++lo) {
        Gf2Basis basis;
        for (int hi = lo; hi <= m; ++hi) {
            if (best && hi - lo + 1 >= best->span()) break;  // keep the leftmost optimum
            // Coverage can only change when the span grows.
            if (basis.insert(c.column(hi)) && covers_all(basis, chunks)) {
                best = Window{lo, hi};
                break;
            }
        }
    }
    return best;
}

std::optional<Rational> min_stretch(const CodedStore& c, Gf2Vec chunks, int len,
                                    RecoverySet* witness) {
    if (len <= 0) throw std::invalid_argument("min_stretch: need len >= 1");
    auto w = min_recovery_window(c, chunks);
    if (!w) return std::nullopt;
    if (witness) {
        // Shrink the window to an inclusion-minimal recovery set, dropping
        // positions from the right end first. The two window endpoints always
        // survive: a recovery set strictly inside the window would contradict
        // the window's minimality.
        std::vector<char> removed(static_cast<std::size_t>(w->hi - w->lo + 1), 0);
        auto remaining = [&]() {
            std::vector<int> pos;
            for (int q = w->lo; q <= w->hi; ++q)
                if (!removed[static_cast<std::size_t>(q - w->lo)]) pos.push_back(q);
            return pos;
        };
        for (int q = w->hi; q >= w->lo; --q) {
            removed[static_cast<std::size_t>(q - w->lo)] = 1;
            if (!can_reconstruct(c, remaining(), chunks))
                removed[static_cast<std::size_t>(q - w->lo)] = 0;
        }
        *witness = RecoverySet(remaining());
    }
    return Rational(w->span(), len);
}

namespace {

// Exact-size jump search for stores whose eligible columns are all unit
// vectors: pick one occurrence of every chunk so the chosen positions form
// as few runs as possible. DP over (set of multi-occurrence chunks already
// picked, index of last picked position).
std::optional<int> min_jump_uncoded(const std::vector<std::pair<int, int>>& elig, Gf2Vec chunks,
                                    RecoverySet* witness) {
    const int s = static_cast<int>(elig.size());
    // Occurrence counts; a chunk with none is irrecoverable at matched size.
    std::vector<int> chunk_ids;
    for (Gf2Vec rest = chunks; rest;) {
        chunk_ids.push_back(gf2_min_support(rest));
        rest &= rest - 1;
    }
    std::vector<int> count(65, 0);
    for (const auto& [pos, ch] : elig) ++count[ch];
    for (int ch : chunk_ids)
        if (count[ch] == 0) return std::nullopt;

    const bool all_single =
        std::all_of(chunk_ids.begin(), chunk_ids.end(), [&](int ch) { return count[ch] == 1; });
    if (all_single) {
        std::vector<int> pos;
        for (const auto& [q, ch] : elig) pos.push_back(q);
        RecoverySet r(pos);
        if (witness) *witness = r;
        return r.runs();
    }

    // Bit index per multi-occurrence chunk.
    std::vector<int> dup_bit(65, -1);
    int dups = 0;
    for (int ch : chunk_ids)
        if (count[ch] > 1) dup_bit[ch] = dups++;
    if (dups > 16)
        throw std::runtime_error(
            "min_jump: more than 16 duplicated chunks along one file; out of supported scale");
    const int full = (1 << dups) - 1;

    std::vector<char> forced(static_cast<std::size_t>(s), 0);
    for (int j = 0; j < s; ++j) forced[static_cast<std::size_t>(j)] = count[elig[j].second] == 1;
    // first_forced[j] = smallest forced index >= j (s when none): a picked
    // position may only be followed by picks up to and including it.
    std::vector<int> first_forced(static_cast<std::size_t>(s) + 1, s);
    for (int j = s - 1; j >= 0; --j)
        first_forced[static_cast<std::size_t>(j)] =
            forced[static_cast<std::size_t>(j)] ? j : first_forced[static_cast<std::size_t>(j) + 1];

    const auto states = static_cast<std::size_t>(full + 1) * static_cast<std::size_t>(s);
    std::vector<int> dp(states, kInf);
    std::vector<int> parent(states, -2);  // -1 = start of chain
    auto id = [&](int mask, int j) {
        return static_cast<std::size_t>(mask) * static_cast<std::size_t>(s) +
               static_cast<std::size_t>(j);
    };
    auto start_mask = [&](int j) {
        const int b = dup_bit[elig[static_cast<std::size_t>(j)].second];
        return b >= 0 ? (1 << b) : 0;
    };
    // Valid starts: nothing forced before j.
    for (int j = 0; j <= first_forced[0] && j < s; ++j) {
        const auto k = id(start_mask(j), j);
        dp[k] = 1;
        parent[k] = -1;
    }
    int best = kInf;
    int best_state = -1;
    for (int j = 0; j < s; ++j) {
        for (int mask = 0; mask <= full; ++mask) {
            const int cur = dp[id(mask, j)];
            if (cur >= kInf) continue;
            if (mask == full && first_forced[static_cast<std::size_t>(j) + 1] == s && cur < best) {
                best = cur;
                best_state = static_cast<int>(id(mask, j));
            }
            const int limit = std::min(first_forced[static_cast<std::size_t>(j) + 1], s - 1);
            for (int j2 = j + 1; j2 <= limit; ++j2) {
                const int ch = elig[static_cast<std::size_t>(j2)].second;
                const int b = dup_bit[ch];
                if (b >= 0 && (mask >> b & 1)) continue;  // chunk already picked
                const int mask2 = b >= 0 ? mask | (1 << b) : mask;
                const int add = elig[static_cast<std::size_t>(j2)].first ==
                                        elig[static_cast<std::size_t>(j)].first + 1
                                    ? 0
                                    : 1;
                auto k2 = id(mask2, j2);
                if (cur + add < dp[k2]) {
                    dp[k2] = cur + add;
                    parent[k2] = static_cast<int>(id(mask, j));
                }
            }
        }
    }
    if (best >= kInf) return std::nullopt;
    if (witness) {
        std::vector<int> pos;
        for (int st = best_state; st != -1; st = parent[static_cast<std::size_t>(st)])
            pos.push_back(elig[static_cast<std::size_t>(st) % static_cast<std::size_t>(s)].first);
        *witness = RecoverySet(std::move(pos));
    }
    return best;
}

struct CodedJumpSearch {
    const std::vector<std::pair<int, Gf2Vec>>& elig;  // ascending positions
    int target_rank;
    int best = kInf;
    std::vector<int> chosen;
    std::vector<int> best_chosen;

    void dfs(std::size_t idx, const Gf2Basis& basis, int runs, int last_pos) {
        const int cnt = basis.rank();
        if (cnt == target_rank) {
            if (runs < best) {
                best = runs;
                best_chosen = chosen;
            }
            return;
        }
        if (idx >= elig.size()) return;
        if (runs >= best) return;
        if (cnt + static_cast<int>(elig.size() - idx) < target_rank) return;
        // Take elig[idx] if it is independent of the picks so far.
        Gf2Basis grown = basis;
        if (grown.insert(elig[idx].second)) {
            const int pos = elig[idx].first;
            const int new_runs = cnt == 0 ? 1 : runs + (pos == last_pos + 1 ? 0 : 1);
            if (new_runs < best) {
                chosen.push_back(pos);
                dfs(idx + 1, grown, new_runs, pos);
                chosen.pop_back();
            }
        }
        dfs(idx + 1, basis, runs, last_pos);
    }
};

}  // namespace

std::optional<int> min_jump(const CodedStore& c, Gf2Vec chunks, RecoverySet* witness) {
    if (witness) *witness = RecoverySet{};
    if (chunks == 0) return 0;
    // Only columns built purely from the file's chunks can sit in a recovery
    // set of matched size: |R| columns must span the full |R|-dimensional
    // coordinate subspace, leaving no room for foreign coordinates.
    std::vector<std::pair<int, Gf2Vec>> elig;
    for (int q = 1; q <= c.m(); ++q) {
        const Gf2Vec col = c.column(q);
        if (col != 0 && (col & ~chunks) == 0) elig.emplace_back(q, col);
    }
    const int L = gf2_weight(chunks);
    if (static_cast<int>(elig.size()) < L) return std::nullopt;

    const bool all_unit = std::all_of(elig.begin(), elig.end(),
                                      [](const auto& e) { return gf2_weight(e.second) == 1; });
    if (all_unit) {
        std::vector<std::pair<int, int>> unit_elig;
        unit_elig.reserve(elig.size());
        for (const auto& [q, col] : elig) unit_elig.emplace_back(q, gf2_min_support(col));
        return min_jump_uncoded(unit_elig, chunks, witness);
    }

    Gf2Basis all;
    for (const auto& [q, col] : elig) all.insert(col);
    if (all.rank() < L) return std::nullopt;

    CodedJumpSearch search{elig, L};
    search.dfs(0, Gf2Basis{}, 0, -2);
    if (search.best >= kInf) return std::nullopt;
    if (witness) *witness = RecoverySet(search.best_chosen);
    return search.best;
}

MetricReport evaluate(const CodedStore& c, const FileGraph& g, int t, bool with_jump) {
    if (c.n != g.n())
        throw std::invalid_argument("evaluate: store chunk count differs from graph order");
    if (!c.is_lossless()) throw std::invalid_argument("evaluate: store cannot recover all chunks");
    MetricReport report;
    report.t = t;
    report.stretch_metric = Rational(0);
    bool any_infinite = false;
    int worst_jump = -1;
    for (const Path& p : enumerate_paths(g, t)) {
        PathMetrics pm;
        pm.path = p;
        const Gf2Vec mask = path_mask(p);
        auto st = min_stretch(c, mask, p.length(), &pm.stretch_witness);
        if (!st) throw std::logic_error("evaluate: lossless store failed to recover a file");
        pm.stretch = *st;
        if (with_jump) pm.jump = min_jump(c, mask, &pm.jump_witness);
        report.per_path.push_back(std::move(pm));
        const auto idx = report.per_path.size() - 1;
        const PathMetrics& back = report.per_path.back();
        if (back.stretch > report.stretch_metric) {
            report.stretch_metric = back.stretch;
            report.worst_stretch_index = idx;
        }
        if (with_jump && !any_infinite) {
            if (!back.jump) {
                any_infinite = true;
                report.worst_jump_index = idx;
            } else if (*back.jump > worst_jump) {
                worst_jump = *back.jump;
                report.worst_jump_index = idx;
            }
        }
    }
    if (with_jump && !any_infinite && worst_jump >= 0) report.jump_metric = worst_jump;
    return report;
}

MetricReport evaluate(const UncodedStore& u, const FileGraph& g, int t, bool with_jump) {
    return evaluate(as_coded(u, g.n()), g, t, with_jump);
}

}  // namespace dedup_layout
