#include "dedup_layout/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

namespace dedup_layout {

namespace {

bool guards_lifted() {
    const char* v = std::getenv("DEDUP_LAYOUT_GUARD_OVERRIDE");
    return v != nullptr && std::string(v) == "1";
}

void check_guard(bool ok, const std::string& msg) {
    if (!ok && !guards_lifted()) throw OracleGuardError(msg);
}

struct BandwidthSearch {
    const FileGraph& g;
    int n;
    int half;                    // reversal symmetry: vertex 1 in slots 1..half
    std::vector<int> slot_of;    // vertex -> slot, 0 = unplaced
    std::vector<int> vertex_at;  // slot -> vertex
    int best;
    std::vector<int> best_arrangement;

    explicit BandwidthSearch(const FileGraph& graph)
        : g(graph),
          n(graph.n()),
          half((graph.n() + 1) / 2),
          slot_of(static_cast<std::size_t>(graph.n()) + 1, 0),
          vertex_at(static_cast<std::size_t>(graph.n()) + 1, 0),
          best(graph.n()) {}

    void dfs(int slot, int partial_max) {
        if (slot > n) {
            best = partial_max;
            best_arrangement.assign(vertex_at.begin() + 1, vertex_at.end());
            return;
        }
        if (slot_of[1] == 0 && slot > half) return;
        for (int v = 1; v <= n; ++v) {
            if (slot_of[v] != 0) continue;
            if (v == 1 && slot > half) continue;
            int disp = 0;
            for (int u : g.neighbors(v))
                if (slot_of[u] != 0) disp = std::max(disp, slot - slot_of[u]);
            const int new_max = std::max(partial_max, disp);
            if (new_max >= best) continue;
            slot_of[v] = slot;
            vertex_at[slot] = v;
            dfs(slot + 1, new_max);
            slot_of[v] = 0;
        }
    }
};

}  // namespace

BandwidthResult exact_bandwidth(const FileGraph& g) {
    check_guard(g.n() <= 10, "exact_bandwidth: guard n <= 10 exceeded (n = " +
                                 std::to_string(g.n()) + ")");
    if (g.n() < 1) throw std::invalid_argument("exact_bandwidth: empty graph");
    BandwidthSearch search(g);
    search.dfs(1, 0);
    return BandwidthResult{search.best, UncodedStore(std::move(search.best_arrangement))};
}

namespace {

struct DecisionSearch {
    const FileGraph& g;
    int n;
    int half;
    int bound;
    long long cap;
    long long nodes = 0;
    bool capped = false;
    std::vector<int> slot_of;
    std::vector<int> vertex_at;
    std::vector<int> unplaced_nb;  // per placed vertex: neighbors not yet placed

    DecisionSearch(const FileGraph& graph, int b, long long node_cap)
        : g(graph),
          n(graph.n()),
          half((graph.n() + 1) / 2),
          bound(b),
          cap(node_cap),
          slot_of(static_cast<std::size_t>(graph.n()) + 1, 0),
          vertex_at(static_cast<std::size_t>(graph.n()) + 1, 0),
          unplaced_nb(static_cast<std::size_t>(graph.n()) + 1, 0) {
        for (int v = 1; v <= n; ++v) unplaced_nb[static_cast<std::size_t>(v)] = graph.degree(v);
    }

    bool dfs(int slot) {
        if (slot > n) return true;
        if (capped || ++nodes > cap) {
            capped = true;
            return false;
        }
        if (slot_of[1] == 0 && slot > half) return false;
        // A placed vertex still waiting on a neighbor forces that neighbor
        // into slots <= its own slot + bound.
        for (int u = 1; u <= n; ++u)
            if (slot_of[u] != 0 && unplaced_nb[u] > 0 && slot_of[u] + bound < slot) return false;
        for (int v = 1; v <= n; ++v) {
            if (slot_of[v] != 0) continue;
            if (v == 1 && slot > half) continue;
            bool ok = true;
            for (int u : g.neighbors(v))
                if (slot_of[u] != 0 && slot - slot_of[u] > bound) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            slot_of[v] = slot;
            vertex_at[slot] = v;
            for (int u : g.neighbors(v)) --unplaced_nb[u];
            if (dfs(slot + 1)) return true;
            for (int u : g.neighbors(v)) ++unplaced_nb[u];
            slot_of[v] = 0;
        }
        return false;
    }
};

}  // namespace

BandwidthDecision find_arrangement_with_bandwidth(const FileGraph& g, int bound,
                                                  long long node_cap) {
    if (g.n() < 1) throw std::invalid_argument("find_arrangement_with_bandwidth: empty graph");
    if (bound < 0) return BandwidthDecision{DecisionStatus::kNotExists, UncodedStore{}, 0};
    DecisionSearch search(g, bound, node_cap);
    if (search.dfs(1)) {
        return BandwidthDecision{
            DecisionStatus::kFound,
            UncodedStore(std::vector<int>(search.vertex_at.begin() + 1, search.vertex_at.end())),
            search.nodes};
    }
    return BandwidthDecision{search.capped ? DecisionStatus::kUnknown : DecisionStatus::kNotExists,
                             UncodedStore{}, search.nodes};
}

namespace {

enum class StoreMetric { kStretch, kJump };

// Max over paths of span/len, abandoning as soon as the partial max reaches
// `abandon_num/abandon_den` (nothing smaller can come out). Values are
// returned as a pair (num, den) without reduction; comparisons
// cross-multiply. Jump values use den == 1.
struct MetricValue {
    long long num = 0;
    long long den = 1;
};

bool value_less(const MetricValue& a, const MetricValue& b) {
    return a.num * b.den < b.num * a.den;
}

// Minimal covering window span for the chunk set `mask` (popcount = len).
int min_window_span_uncoded(const std::vector<int>& seq, std::uint64_t mask, int len,
                            std::vector<int>& cnt_scratch) {
    const int m = static_cast<int>(seq.size());
    std::fill(cnt_scratch.begin(), cnt_scratch.end(), 0);
    int have = 0;
    int best = std::numeric_limits<int>::max();
    for (int r = 0, l = 0; r < m; ++r) {
        const int c = seq[static_cast<std::size_t>(r)];
        if (mask >> (c - 1) & 1) {
            if (cnt_scratch[static_cast<std::size_t>(c)]++ == 0) ++have;
        }
        while (have == len) {
            best = std::min(best, r - l + 1);
            const int cl = seq[static_cast<std::size_t>(l)];
            if ((mask >> (cl - 1) & 1) && --cnt_scratch[static_cast<std::size_t>(cl)] == 0) --have;
            ++l;
        }
    }
    return best;  // INT_MAX if some chunk is absent
}

int runs_of_sorted(const std::vector<int>& pos) {
    int r = pos.empty() ? 0 : 1;
    for (std::size_t i = 1; i < pos.size(); ++i)
        if (pos[i] != pos[i - 1] + 1) ++r;
    return r;
}

struct PreparedPaths {
    std::vector<std::vector<int>> vertices;
    std::vector<std::uint64_t> masks;
};

// Evaluates one store against all paths; returns nullopt once the partial
// max reaches `abandon` (the store cannot beat the incumbent).
std::optional<MetricValue> eval_store(const std::vector<int>& seq, const PreparedPaths& paths,
                                      int n, StoreMetric metric,
                                      const std::optional<MetricValue>& abandon,
                                      std::vector<int>& cnt_scratch) {
    MetricValue worst{0, 1};
    if (metric == StoreMetric::kJump) {
        // Occurrence positions; lossless m <= n+1 stores have at most two.
        static thread_local std::vector<int> pos1, pos2;
        pos1.assign(static_cast<std::size_t>(n) + 1, 0);
        pos2.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int q = 1; q <= static_cast<int>(seq.size()); ++q) {
            const int c = seq[static_cast<std::size_t>(q - 1)];
            (pos1[static_cast<std::size_t>(c)] == 0 ? pos1 : pos2)[static_cast<std::size_t>(c)] = q;
        }
        for (const auto& pv : paths.vertices) {
            int dup_chunk = 0;
            std::vector<int> base;
            base.reserve(pv.size());
            for (int v : pv) {
                if (pos2[static_cast<std::size_t>(v)] != 0) {
                    dup_chunk = v;
                } else {
                    base.push_back(pos1[static_cast<std::size_t>(v)]);
                }
            }
            int best_runs = std::numeric_limits<int>::max();
            const int variants = dup_chunk == 0 ? 1 : 2;
            for (int variant = 0; variant < variants; ++variant) {
                std::vector<int> all = base;
                if (dup_chunk != 0) {
                    all.push_back(variant == 0 ? pos1[static_cast<std::size_t>(dup_chunk)]
                                               : pos2[static_cast<std::size_t>(dup_chunk)]);
                }
                std::sort(all.begin(), all.end());
                best_runs = std::min(best_runs, runs_of_sorted(all));
            }
            if (static_cast<long long>(best_runs) > worst.num) {
                worst.num = best_runs;
                if (abandon && !value_less(worst, *abandon)) return std::nullopt;
            }
        }
        return worst;
    }
    for (std::size_t i = 0; i < paths.vertices.size(); ++i) {
        const int len = static_cast<int>(paths.vertices[i].size());
        const int span = min_window_span_uncoded(seq, paths.masks[i], len, cnt_scratch);
        const MetricValue v{span, len};
        if (value_less(worst, v)) {
            worst = v;
            if (abandon && !value_less(worst, *abandon)) return std::nullopt;
        }
    }
    return worst;
}

struct ScanTask {
    int dup;    // 0 = plain permutation, else duplicated chunk id
    int first;  // fixed first element
};

struct ScanResult {
    bool has = false;
    MetricValue value;
    std::vector<int> seq;
};

void scan_task(const FileGraph& g, const PreparedPaths& paths, StoreMetric metric,
               const ScanTask& task, ScanResult& out) {
    const int n = g.n();
    std::vector<int> tail;
    for (int c = 1; c <= n; ++c)
        if (c != task.first) tail.push_back(c);
    if (task.dup != 0) tail.push_back(task.dup);
    std::sort(tail.begin(), tail.end());
    std::vector<int> seq(tail.size() + 1);
    seq[0] = task.first;
    std::vector<int> cnt_scratch(static_cast<std::size_t>(n) + 1, 0);
    do {
        std::copy(tail.begin(), tail.end(), seq.begin() + 1);
        std::optional<MetricValue> abandon;
        if (out.has) abandon = out.value;
        auto v = eval_store(seq, paths, n, metric, abandon, cnt_scratch);
        if (v && (!out.has || value_less(*v, out.value))) {
            out.has = true;
            out.value = *v;
            out.seq = seq;
        }
    } while (std::next_permutation(tail.begin(), tail.end()));
}

ScanResult exact_layout_scan(const FileGraph& g, int t, int m, int jobs, StoreMetric metric) {
    const int n = g.n();
    check_guard(n <= 8, "store-space oracle: guard n <= 8 exceeded (n = " + std::to_string(n) + ")");
    check_guard(m - n <= 1,
                "store-space oracle: guard m <= n+1 exceeded (m = " + std::to_string(m) + ")");
    if (n < 1) throw std::invalid_argument("store-space oracle: empty graph");
    if (m < n)
        throw std::invalid_argument("store-space oracle: m < n admits no lossless uncoded store");

    PreparedPaths paths;
    for (const Path& p : enumerate_paths(g, t)) {
        paths.vertices.push_back(p.vertices);
        std::uint64_t mask = 0;
        for (int v : p.vertices) mask |= std::uint64_t{1} << (v - 1);
        paths.masks.push_back(mask);
    }

    std::vector<ScanTask> tasks;
    if (m == n) {
        for (int f = 1; f <= n; ++f) tasks.push_back({0, f});
    } else {
        for (int dup = 1; dup <= n; ++dup)
            for (int f = 1; f <= n; ++f) tasks.push_back({dup, f});
    }
    std::vector<ScanResult> results(tasks.size());

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            scan_task(g, paths, metric, tasks[i], results[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                scan_task(g, paths, metric, tasks[i], results[i]);
            }
        };
        std::vector<std::thread> pool;
        const int nthreads = std::min<int>(jobs, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Deterministic combine: strictly better value wins; ties keep the
    // earliest task (and within a task the scan kept the first optimum), so
    // the outcome matches the sequential left-to-right scan exactly.
    ScanResult best;
    for (const auto& r : results) {
        if (!r.has) continue;
        if (!best.has || value_less(r.value, best.value)) best = r;
    }
    if (!best.has) throw std::logic_error("store-space oracle: empty store space");
    return best;
}

}  // namespace

StretchOracleResult exact_stretch(const FileGraph& g, int t, int m, int jobs) {
    ScanResult r = exact_layout_scan(g, t, m, jobs, StoreMetric::kStretch);
    return StretchOracleResult{Rational(r.value.num, r.value.den), UncodedStore(std::move(r.seq))};
}

JumpOracleResult exact_jump(const FileGraph& g, int t, int m, int jobs) {
    ScanResult r = exact_layout_scan(g, t, m, jobs, StoreMetric::kJump);
    return JumpOracleResult{static_cast<int>(r.value.num), UncodedStore(std::move(r.seq))};
}

namespace {

struct ZeroFragSearch {
    int n;
    int m;
    int t_eff;
    std::vector<char> required;   // by chunk-set mask
    std::vector<char> covered;    // by chunk-set mask
    std::vector<int> missing_by_len;
    int missing_total = 0;
    std::vector<int> seq;

    bool dfs() {
        const int idx = static_cast<int>(seq.size());
        if (idx == m) return missing_total == 0;
        const int rem = m - idx - 1;  // positions after the one being placed
        for (int c = 1; c <= n; ++c) {
            if (idx > 0 && seq[static_cast<std::size_t>(idx - 1)] == c) continue;
            seq.push_back(c);
            // Cover the chunk-set of every all-distinct window ending here.
            std::vector<int> newly;
            std::uint64_t mask = 0;
            for (int j = idx; j >= 0 && idx - j + 1 <= t_eff; --j) {
                mask |= std::uint64_t{1} << (seq[static_cast<std::size_t>(j)] - 1);
                const int size = idx - j + 1;
                if (std::popcount(mask) != size) break;  // duplicate; longer windows too
                if (required[mask] && !covered[mask]) {
                    covered[mask] = 1;
                    --missing_by_len[static_cast<std::size_t>(size)];
                    --missing_total;
                    newly.push_back(static_cast<int>(mask));
                }
            }
            // Each future position completes at most one window of each size.
            bool ok = true;
            for (int len = 1; len <= t_eff; ++len)
                if (missing_by_len[static_cast<std::size_t>(len)] > rem) {
                    ok = false;
                    break;
                }
            if (ok && dfs()) return true;
            for (int mk : newly) {
                covered[static_cast<std::size_t>(mk)] = 0;
                ++missing_by_len[static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mk)))];
                ++missing_total;
            }
            seq.pop_back();
        }
        return false;
    }
};

}  // namespace

int exact_zero_frag_length(const FileGraph& g, int t) {
    const int n = g.n();
    check_guard(n <= 6, "exact_zero_frag_length: guard n <= 6 exceeded (n = " +
                            std::to_string(n) + ")");
    if (n < 1) throw std::invalid_argument("exact_zero_frag_length: empty graph");
    if (t < 1) throw std::invalid_argument("exact_zero_frag_length: need t >= 1");
    const int t_eff = std::min(t, n);

    std::vector<char> required(std::size_t{1} << n, 0);
    for (const Path& p : enumerate_paths(g, t)) {
        std::uint64_t mask = 0;
        for (int v : p.vertices) mask |= std::uint64_t{1} << (v - 1);
        required[mask] = 1;
    }
    std::vector<int> req_by_len(static_cast<std::size_t>(t_eff) + 1, 0);
    int req_total = 0;
    for (std::size_t mk = 1; mk < required.size(); ++mk)
        if (required[mk]) {
            ++req_by_len[static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mk)))];
            ++req_total;
        }

    // Each position completes at most one all-distinct window per size.
    int m0 = n;
    for (int len = 1; len <= t_eff; ++len)
        m0 = std::max(m0, req_by_len[static_cast<std::size_t>(len)] + len - 1);
    // Concatenating every required set (at most t chunks each) always works.
    const int m_cap = req_total * t_eff + n;

    for (int m = m0; m <= m_cap; ++m) {
        ZeroFragSearch search;
        search.n = n;
        search.m = m;
        search.t_eff = t_eff;
        search.required = required;
        search.covered.assign(required.size(), 0);
        search.missing_by_len = req_by_len;
        search.missing_total = req_total;
        search.seq.reserve(static_cast<std::size_t>(m));
        if (search.dfs()) return m;
    }
    throw std::logic_error("exact_zero_frag_length: search exceeded its upper bound");
}

int exact_min_max_uf(const RootedTree& tree) {
    const int n = tree.n();
    check_guard(n <= 8,
                "exact_min_max_uf: guard n <= 8 exceeded (n = " + std::to_string(n) + ")");
    // Top-down order (parents before children).
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(tree.root());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : tree.children(order[i])) order.push_back(c);

    std::vector<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (tree.children(v).empty()) leaves.push_back(v);

    // choice[v] = 0 keeps v the deepest vertex of its part; choice[v] = i
    // continues child i's part through v.
    std::vector<int> choice(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> part(static_cast<std::size_t>(n) + 1, 0);
    int best = std::numeric_limits<int>::max();
    while (true) {
        for (int v : order) {
            part[static_cast<std::size_t>(v)] = v;
            if (v != tree.root()) {
                const int p = tree.parent(v);
                const auto& cs = tree.children(p);
                const int pc = choice[static_cast<std::size_t>(p)];
                if (pc > 0 && cs[static_cast<std::size_t>(pc - 1)] == v)
                    part[static_cast<std::size_t>(v)] = part[static_cast<std::size_t>(p)];
            }
        }
        int worst = 0;
        for (int leaf : leaves) {
            int count = 1;
            for (int v = leaf; v != tree.root(); v = tree.parent(v))
                if (part[static_cast<std::size_t>(v)] !=
                    part[static_cast<std::size_t>(tree.parent(v))])
                    ++count;
            worst = std::max(worst, count);
        }
        best = std::min(best, worst);
        // Next assignment (mixed-radix odometer over vertices).
        int i = 1;
        for (; i <= n; ++i) {
            if (choice[static_cast<std::size_t>(i)] <
                static_cast<int>(tree.children(i).size())) {
                ++choice[static_cast<std::size_t>(i)];
                break;
            }
            choice[static_cast<std::size_t>(i)] = 0;
        }
        if (i > n) break;
    }
    return best;
}

}  // namespace dedup_layout
