#include "dedup_layout/zero_frag.hpp"

#include <algorithm>
#include <stdexcept>

#include "dedup_layout/gf2.hpp"
#include "dedup_layout/metrics.hpp"

namespace dedup_layout {

namespace {

// Open/closed walk over a multigraph, consuming every edge exactly once;
// ties broken toward the smallest neighbor.
std::vector<int> euler_walk(int start,
                            std::vector<std::vector<std::pair<int, int>>>& adj,
                            std::vector<bool>& used) {
    std::vector<std::size_t> next(adj.size(), 0);
    std::vector<int> stack{start};
    std::vector<int> walk;
    while (!stack.empty()) {
        const int v = stack.back();
        auto& cursor = next[static_cast<std::size_t>(v)];
        const auto& out = adj[static_cast<std::size_t>(v)];
        while (cursor < out.size() && used[static_cast<std::size_t>(out[cursor].second)]) ++cursor;
        if (cursor == out.size()) {
            walk.push_back(v);
            stack.pop_back();
        } else {
            used[static_cast<std::size_t>(out[cursor].second)] = true;
            stack.push_back(out[cursor].first);
        }
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

}  // namespace

ZeroFragResult zero_frag_t2(const FileGraph& g) {
    ZeroFragResult result;
    std::vector<std::vector<int>> components = g.connected_components();
    std::sort(components.begin(), components.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });

    std::vector<int> sequence;
    for (const auto& comp : components) {
        std::vector<std::pair<int, int>> comp_edges;
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (v < w) comp_edges.emplace_back(v, w);

        std::vector<int> odd;
        for (int v : comp)
            if (g.degree(v) % 2 == 1) odd.push_back(v);
        std::sort(odd.begin(), odd.end());
        const int half_odd = static_cast<int>(odd.size()) / 2;
        result.formula_upper_bound += static_cast<int>(comp_edges.size()) + 1 + half_odd;

        if (comp_edges.empty()) {
            sequence.push_back(comp.front());
            continue;
        }

        std::vector<std::pair<int, int>> walk_edges = comp_edges;
        for (int i = 1; i + 1 < static_cast<int>(odd.size()); i += 2) {
            walk_edges.emplace_back(odd[static_cast<std::size_t>(i)],
                                    odd[static_cast<std::size_t>(i) + 1]);
            result.added_edges.push_back(walk_edges.back());
        }

        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.n()) + 1);
        for (int id = 0; id < static_cast<int>(walk_edges.size()); ++id) {
            const auto& e = walk_edges[static_cast<std::size_t>(id)];
            adj[static_cast<std::size_t>(e.first)].emplace_back(e.second, id);
            adj[static_cast<std::size_t>(e.second)].emplace_back(e.first, id);
        }
        for (auto& out : adj) std::sort(out.begin(), out.end());

        const int start = odd.empty() ? comp.front() : odd.front();
        std::vector<bool> used(walk_edges.size(), false);
        const std::vector<int> walk = euler_walk(start, adj, used);
        if (walk.size() != walk_edges.size() + 1)
            throw std::logic_error("zero_frag_t2: walk failed to cover its component");
        sequence.insert(sequence.end(), walk.begin(), walk.end());
    }
    result.store = UncodedStore{std::move(sequence)};
    return result;
}

UncodedStore zero_frag_general(const FileGraph& g, int t) {
    if (t < 1) throw std::invalid_argument("zero_frag_general: window size must be positive");
    std::vector<Path> paths = enumerate_paths(g, t);
    std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
        return a.length() > b.length();
    });

    auto contains_contiguous = [](const std::vector<int>& host, const std::vector<int>& part) {
        if (part.size() > host.size()) return false;
        for (std::size_t at = 0; at + part.size() <= host.size(); ++at) {
            if (std::equal(part.begin(), part.end(), host.begin() + static_cast<std::ptrdiff_t>(at)))
                return true;
            if (std::equal(part.rbegin(), part.rend(), host.begin() + static_cast<std::ptrdiff_t>(at)))
                return true;
        }
        return false;
    };

    std::vector<const Path*> kept;
    for (const Path& p : paths) {
        bool subsumed = false;
        for (const Path* k : kept)
            if (contains_contiguous(k->vertices, p.vertices)) {
                subsumed = true;
                break;
            }
        if (!subsumed) kept.push_back(&p);
    }
    std::vector<int> sequence;
    for (const Path* k : kept) sequence.insert(sequence.end(), k->vertices.begin(), k->vertices.end());
    return UncodedStore{std::move(sequence)};
}

UncodedStore decode_zero_frag_coded_t2(const CodedStore& c, const FileGraph& g) {
    if (c.n != g.n())
        throw std::invalid_argument("decode_zero_frag_coded_t2: store and graph chunk counts differ");
    const MetricReport before = evaluate(c, g, 2, false);
    if (!(before.stretch_metric == Rational(1)))
        throw std::invalid_argument("decode_zero_frag_coded_t2: input store must have stretch 1");

    std::vector<Gf2Vec> cols;
    cols.reserve(c.columns.size());
    for (Gf2Vec col : c.columns) {
        const int w = gf2_weight(col);
        if (w == 1 || w == 2) cols.push_back(col);
    }

    while (true) {
        bool any_pair = false;
        bool changed = false;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (gf2_weight(cols[i]) != 2) continue;
            Gf2Vec unit = 0;
            if (i > 0 && gf2_weight(cols[i - 1]) == 1 && (cols[i] & cols[i - 1]) != 0)
                unit = cols[i - 1];
            else if (i + 1 < cols.size() && gf2_weight(cols[i + 1]) == 1 && (cols[i] & cols[i + 1]) != 0)
                unit = cols[i + 1];
            if (unit != 0) {
                cols[i] ^= unit;
                changed = true;
            } else {
                any_pair = true;
            }
        }
        if (!any_pair) break;
        if (!changed) {
            // No adjacent-pair window can use a stranded two-chunk column.
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (gf2_weight(cols[i]) == 2) {
                    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
                    break;
                }
        }
    }

    std::vector<int> sequence;
    sequence.reserve(cols.size());
    for (Gf2Vec col : cols) sequence.push_back(gf2_min_support(col));
    UncodedStore out{std::move(sequence)};
    if (!out.is_lossless(g.n()))
        throw std::logic_error("decode_zero_frag_coded_t2: rewrite lost a chunk");
    const MetricReport after = evaluate(out, g, 2, false);
    if (!(after.stretch_metric == Rational(1)))
        throw std::logic_error("decode_zero_frag_coded_t2: rewrite broke stretch 1");
    return out;
}

}  // namespace dedup_layout
