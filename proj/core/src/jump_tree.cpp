#include "dedup_layout/jump_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dedup_layout {

void validate_decomposition(const UPathDecomposition& d, const RootedTree& tree) {
    std::vector<bool> seen(static_cast<std::size_t>(tree.n()) + 1, false);
    int covered = 0;
    for (const auto& path : d.paths) {
        if (path.empty()) throw std::invalid_argument("decomposition contains an empty path");
        for (std::size_t i = 0; i < path.size(); ++i) {
            const int v = path[i];
            if (v < 1 || v > tree.n() || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("decomposition paths must partition the vertices");
            seen[static_cast<std::size_t>(v)] = true;
            ++covered;
            if (i + 1 < path.size() && tree.parent(v) != path[i + 1])
                throw std::invalid_argument("decomposition path is not an upward chain");
        }
    }
    if (covered != tree.n())
        throw std::invalid_argument("decomposition paths must cover every vertex");
}

DecompositionResult min_max_decomposition(const RootedTree& tree) {
    const int n = tree.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return tree.depth(a) > tree.depth(b); });

    std::vector<int> uf(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> path_id(static_cast<std::size_t>(n) + 1, -1);
    std::vector<std::vector<int>> paths;
    for (int v : order) {
        std::vector<int> kids = tree.children(v);
        if (kids.empty()) {
            uf[static_cast<std::size_t>(v)] = 1;
            path_id[static_cast<std::size_t>(v)] = static_cast<int>(paths.size());
            paths.push_back({v});
            continue;
        }
        std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
            return uf[static_cast<std::size_t>(a)] > uf[static_cast<std::size_t>(b)];
        });
        const int lead = uf[static_cast<std::size_t>(kids[0])];
        uf[static_cast<std::size_t>(v)] =
            kids.size() == 1 ? lead : std::max(lead, uf[static_cast<std::size_t>(kids[1])] + 1);
        path_id[static_cast<std::size_t>(v)] = path_id[static_cast<std::size_t>(kids[0])];
        paths[static_cast<std::size_t>(path_id[static_cast<std::size_t>(v)])].push_back(v);
    }

    DecompositionResult result;
    result.decomposition.paths = std::move(paths);
    result.uf = uf[static_cast<std::size_t>(tree.root())];
    validate_decomposition(result.decomposition, tree);
    return result;
}

namespace {

std::vector<int> path_ids_of(const UPathDecomposition& d, int n) {
    std::vector<int> id(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t k = 0; k < d.paths.size(); ++k)
        for (int v : d.paths[k]) {
            if (v < 1 || v > n || id[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("decomposition paths must partition the vertices");
            id[static_cast<std::size_t>(v)] = static_cast<int>(k);
        }
    return id;
}

int runs_of_sorted_positions(std::vector<int>& pos) {
    std::sort(pos.begin(), pos.end());
    int runs = pos.empty() ? 0 : 1;
    for (std::size_t i = 1; i < pos.size(); ++i)
        if (pos[i] != pos[i - 1] + 1) ++runs;
    return runs;
}

}  // namespace

int fragment_count(const UPathDecomposition& d, const RootedTree& tree, const Path& p) {
    const std::vector<int> id = path_ids_of(d, tree.n());
    int fragments = 0;
    int current = -1;
    for (int v : p.vertices) {
        const int k = id[static_cast<std::size_t>(v)];
        if (k < 0) throw std::invalid_argument("path vertex missing from the decomposition");
        if (k != current) {
            ++fragments;
            current = k;
        }
    }
    return fragments;
}

int max_unidirectional_fragments(const UPathDecomposition& d, const RootedTree& tree) {
    const std::vector<int> id = path_ids_of(d, tree.n());
    int best = 0;
    for (int v = 1; v <= tree.n(); ++v) {
        if (!tree.children(v).empty()) continue;
        int fragments = 0;
        int current = -1;
        for (int u = v;; u = tree.parent(u)) {
            const int k = id[static_cast<std::size_t>(u)];
            if (k != current) {
                ++fragments;
                current = k;
            }
            if (u == tree.root()) break;
        }
        best = std::max(best, fragments);
    }
    return best;
}

int max_unidirectional_min_jump(const UncodedStore& s, const RootedTree& tree) {
    if (!s.is_permutation(tree.n()))
        throw std::invalid_argument("max_unidirectional_min_jump: store must be a permutation");
    std::vector<int> pos(static_cast<std::size_t>(tree.n()) + 1, 0);
    for (int i = 1; i <= s.m(); ++i) pos[static_cast<std::size_t>(s.chunk_at(i))] = i;
    int best = 0;
    for (int v = 1; v <= tree.n(); ++v) {
        std::vector<int> window;
        for (int u = v;; u = tree.parent(u)) {
            window.push_back(pos[static_cast<std::size_t>(u)]);
            std::vector<int> copy = window;
            best = std::max(best, runs_of_sorted_positions(copy));
            if (u == tree.root()) break;
        }
    }
    return best;
}

UncodedStore linearize_decomposition(const UPathDecomposition& d) {
    std::vector<std::vector<int>> paths = d.paths;
    std::stable_sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    std::vector<int> seq;
    for (const auto& path : paths) seq.insert(seq.end(), path.begin(), path.end());
    return UncodedStore{std::move(seq)};
}

UPathDecomposition decomposition_from_store(const RootedTree& tree, const UncodedStore& s) {
    if (!s.is_permutation(tree.n()))
        throw std::invalid_argument("decomposition_from_store: store must be a permutation");
    auto comparable = [&](int a, int b) { return tree.is_ancestor(a, b) || tree.is_ancestor(b, a); };

    std::vector<std::vector<int>> chains;
    int deepest = 0, shallowest = 0;
    auto flush = [&]() {
        if (deepest == 0) return;
        chains.push_back(tree.tree_path(deepest, shallowest).vertices);
    };
    for (int i = 1; i <= s.m(); ++i) {
        const int v = s.chunk_at(i);
        if (deepest != 0 && comparable(v, deepest)) {
            if (tree.depth(v) > tree.depth(deepest)) deepest = v;
            if (tree.depth(v) < tree.depth(shallowest)) shallowest = v;
            continue;
        }
        flush();
        deepest = shallowest = v;
    }
    flush();

    // Peel shared tops until the chains are disjoint: the shallowest shared
    // vertex is always the top of one of the two chains involved.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < chains.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < chains.size() && !changed; ++j) {
                int top = 0;
                for (int v : chains[i])
                    if (std::find(chains[j].begin(), chains[j].end(), v) != chains[j].end())
                        if (top == 0 || tree.depth(v) < tree.depth(top)) top = v;
                if (top == 0) continue;
                std::size_t loser;
                if (chains[i].back() == top && chains[j].back() == top)
                    loser = chains[i].front() > chains[j].front() ? i : j;
                else if (chains[i].back() == top)
                    loser = i;
                else if (chains[j].back() == top)
                    loser = j;
                else
                    throw std::logic_error(
                        "decomposition_from_store: shared vertex is no chain's top");
                chains[loser].pop_back();
                if (chains[loser].empty())
                    chains.erase(chains.begin() + static_cast<std::ptrdiff_t>(loser));
                changed = true;
            }
        }
    }

    UPathDecomposition d;
    d.paths = std::move(chains);
    validate_decomposition(d, tree);
    return d;
}

namespace {

// BFS distances and parents from src over the graph.
void bfs(const FileGraph& g, int src, std::vector<int>& dist, std::vector<int>& from) {
    dist.assign(static_cast<std::size_t>(g.n()) + 1, -1);
    from.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                from[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
    }
}

std::vector<int> bfs_path(const FileGraph& g, int src, int dst) {
    std::vector<int> dist, from;
    bfs(g, src, dist, from);
    std::vector<int> path{dst};
    while (path.back() != src) path.push_back(from[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Orders a path component so it ends at the vertex adjacent to `attachment`.
std::vector<int> orient_hair(const FileGraph& g, const std::vector<int>& component,
                             int attachment) {
    std::vector<bool> inside(static_cast<std::size_t>(g.n()) + 1, false);
    for (int v : component) inside[static_cast<std::size_t>(v)] = true;
    int near = 0;
    for (int v : component)
        if (g.has_edge(v, attachment)) {
            if (near != 0) throw std::invalid_argument("hair attaches to its body twice");
            near = v;
        }
    if (near == 0) throw std::logic_error("hair lost its attachment");
    std::vector<int> ordered{near};
    int prev = attachment;
    while (true) {
        int next = 0;
        for (int w : g.neighbors(ordered.back())) {
            if (w == prev || !inside[static_cast<std::size_t>(w)]) continue;
            if (next != 0) throw std::invalid_argument("hair is not a simple path");
            next = w;
        }
        if (next == 0) break;
        prev = ordered.back();
        ordered.push_back(next);
    }
    if (ordered.size() != component.size())
        throw std::invalid_argument("hair is not a simple path");
    std::reverse(ordered.begin(), ordered.end());  // tip first, attachment-adjacent last
    return ordered;
}

std::vector<std::vector<int>> components_without(const FileGraph& g,
                                                 const std::vector<bool>& removed) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen = removed;
    for (int v = 1; v <= g.n(); ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        std::vector<int> comp{v};
        seen[static_cast<std::size_t>(v)] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

bool is_caterpillar(const FileGraph& g) {
    if (!g.is_tree()) return false;
    std::vector<int> branch;
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) >= 3) branch.push_back(v);
    if (branch.size() <= 1) return true;
    // All branching vertices must lie on the path between the farthest two.
    int best_u = branch[0], best_v = branch[0], best = -1;
    for (int u : branch) {
        std::vector<int> dist, from;
        bfs(g, u, dist, from);
        for (int v : branch)
            if (dist[static_cast<std::size_t>(v)] > best) {
                best = dist[static_cast<std::size_t>(v)];
                best_u = u;
                best_v = v;
            }
    }
    const std::vector<int> spine = bfs_path(g, best_u, best_v);
    for (int b : branch)
        if (std::find(spine.begin(), spine.end(), b) == spine.end()) return false;
    return true;
}

UncodedStore caterpillar_layout(const RootedTree& tree) {
    const FileGraph g = tree.to_file_graph();
    if (!is_caterpillar(g)) throw std::invalid_argument("caterpillar_layout: not a caterpillar");

    std::vector<int> branch;
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) >= 3) branch.push_back(v);

    std::vector<int> body;
    if (branch.empty()) {
        // Bare path: lay it out end to end.
        int end = 1;
        for (int v = 1; v <= g.n(); ++v)
            if (g.degree(v) <= 1) {
                end = v;
                break;
            }
        std::vector<int> dist, from;
        bfs(g, end, dist, from);
        int far = end;
        for (int v = 1; v <= g.n(); ++v)
            if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(far)]) far = v;
        return UncodedStore{bfs_path(g, end, far)};
    }
    if (branch.size() == 1) {
        body = {branch[0]};
    } else {
        int best_u = branch[0], best_v = branch[0], best = -1;
        for (int u : branch) {
            std::vector<int> dist, from;
            bfs(g, u, dist, from);
            for (int v : branch)
                if (dist[static_cast<std::size_t>(v)] > best) {
                    best = dist[static_cast<std::size_t>(v)];
                    best_u = u;
                    best_v = v;
                }
        }
        body = bfs_path(g, std::min(best_u, best_v), std::max(best_u, best_v));
    }

    std::vector<bool> on_body(static_cast<std::size_t>(g.n()) + 1, false);
    std::vector<int> body_index(static_cast<std::size_t>(g.n()) + 1, -1);
    for (std::size_t i = 0; i < body.size(); ++i) {
        on_body[static_cast<std::size_t>(body[i])] = true;
        body_index[static_cast<std::size_t>(body[i])] = static_cast<int>(i);
    }

    struct Hair {
        int attach_at;
        int label;
        std::vector<int> ordered;
    };
    std::vector<Hair> hairs;
    for (const auto& comp : components_without(g, on_body)) {
        int attachment = 0;
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (on_body[static_cast<std::size_t>(w)]) {
                    if (attachment != 0 && attachment != w)
                        throw std::invalid_argument("caterpillar_layout: hair touches two body vertices");
                    attachment = w;
                }
        if (attachment == 0) throw std::logic_error("caterpillar_layout: detached hair");
        Hair h;
        h.attach_at = body_index[static_cast<std::size_t>(attachment)];
        h.label = comp.front();
        h.ordered = orient_hair(g, comp, attachment);
        hairs.push_back(std::move(h));
    }
    std::stable_sort(hairs.begin(), hairs.end(), [](const Hair& a, const Hair& b) {
        if (a.attach_at != b.attach_at) return a.attach_at < b.attach_at;
        return a.label < b.label;
    });

    std::vector<int> seq;
    for (const Hair& h : hairs) seq.insert(seq.end(), h.ordered.begin(), h.ordered.end());
    seq.insert(seq.end(), body.begin(), body.end());
    return UncodedStore{std::move(seq)};
}

UncodedStore two_hair_layout(const RootedTree& tree) {
    const FileGraph g = tree.to_file_graph();
    int center = 0;
    for (int v = 1; v <= g.n(); ++v) {
        if (g.degree(v) >= 4)
            throw std::invalid_argument("two_hair_layout: a vertex has more than three limbs");
        if (g.degree(v) == 3) {
            if (center != 0)
                throw std::invalid_argument("two_hair_layout: more than one branching vertex");
            center = v;
        }
    }
    if (center == 0)
        throw std::invalid_argument("two_hair_layout: no degree-3 vertex");

    std::vector<bool> removed(static_cast<std::size_t>(g.n()) + 1, false);
    removed[static_cast<std::size_t>(center)] = true;
    std::vector<std::vector<int>> limbs = components_without(g, removed);
    if (limbs.size() != 3) throw std::logic_error("two_hair_layout: center did not split in three");
    std::sort(limbs.begin(), limbs.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<int> seq = orient_hair(g, limbs[0], center);  // tip .. adjacent
    seq.push_back(center);
    for (int k = 1; k < 3; ++k) {
        std::vector<int> outward = orient_hair(g, limbs[static_cast<std::size_t>(k)], center);
        std::reverse(outward.begin(), outward.end());  // adjacent .. tip
        seq.insert(seq.end(), outward.begin(), outward.end());
    }
    return UncodedStore{std::move(seq)};
}

}  // namespace dedup_layout
