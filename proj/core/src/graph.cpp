#include "dedup_layout/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dedup_layout {

Path Path::canonical() const {
    if (is_canonical()) return *this;
    Path r(*this);
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

std::string to_string(const Path& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) os << ',';
        os << p.vertices[i];
    }
    os << ')';
    return os.str();
}

FileGraph::FileGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("FileGraph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("FileGraph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("FileGraph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_ + 1, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool FileGraph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& FileGraph::neighbors(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("FileGraph: vertex out of range");
    return adj_[v];
}

std::vector<std::vector<int>> FileGraph::connected_components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_ + 1, 0);
    for (int s = 1; s <= n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool FileGraph::is_connected() const { return n_ <= 1 || connected_components().size() == 1; }

bool FileGraph::is_tree() const {
    return n_ >= 1 && edge_count() == n_ - 1 && is_connected();
}

SparseHamiltonianGraph::SparseHamiltonianGraph(int n, std::vector<std::pair<int, int>> arcs)
    : n_(n) {
    if (n < 1) throw std::invalid_argument("SparseHamiltonianGraph: need n >= 1");
    std::vector<char> used(n + 1, 0);
    for (auto& [u, v] : arcs) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("SparseHamiltonianGraph: arc endpoint out of range");
        if (u > v) std::swap(u, v);
        if (v - u <= 1)
            throw std::invalid_argument("SparseHamiltonianGraph: arc must skip at least one vertex");
        if (used[u] || used[v])
            throw std::invalid_argument("SparseHamiltonianGraph: two arcs share a foot");
        used[u] = used[v] = 1;
    }
    std::sort(arcs.begin(), arcs.end());
    arcs_ = std::move(arcs);
}

std::vector<int> SparseHamiltonianGraph::arc_feet() const {
    std::vector<int> feet;
    feet.reserve(2 * arcs_.size());
    for (const auto& [u, v] : arcs_) {
        feet.push_back(u);
        feet.push_back(v);
    }
    std::sort(feet.begin(), feet.end());
    return feet;
}

std::optional<int> SparseHamiltonianGraph::arc_partner(int foot) const {
    for (const auto& [u, v] : arcs_) {
        if (u == foot) return v;
        if (v == foot) return u;
    }
    return std::nullopt;
}

FileGraph SparseHamiltonianGraph::to_file_graph() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n_ - 1 + arcs_.size());
    for (int i = 1; i < n_; ++i) edges.emplace_back(i, i + 1);
    for (const auto& a : arcs_) edges.push_back(a);
    return FileGraph(n_, std::move(edges));
}

RootedTree::RootedTree(int n, int root, std::vector<int> parent) : n_(n), root_(root) {
    if (n < 1) throw std::invalid_argument("RootedTree: need n >= 1");
    if (root < 1 || root > n) throw std::invalid_argument("RootedTree: root out of range");
    if (static_cast<int>(parent.size()) != n + 1)
        throw std::invalid_argument("RootedTree: parent vector must have size n+1 (1-based)");
    if (parent[root] != 0) throw std::invalid_argument("RootedTree: root must have parent 0");
    for (int v = 1; v <= n; ++v) {
        if (v == root) continue;
        if (parent[v] < 1 || parent[v] > n || parent[v] == v)
            throw std::invalid_argument("RootedTree: bad parent entry");
    }
    parent_ = std::move(parent);
    children_.assign(n + 1, {});
    for (int v = 1; v <= n; ++v)
        if (v != root_) children_[parent_[v]].push_back(v);
    for (auto& cs : children_) std::sort(cs.begin(), cs.end());
    // Depths via BFS from the root; also verifies acyclicity + connectivity.
    depth_.assign(n + 1, -1);
    depth_[root_] = 0;
    std::vector<int> queue{root_};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int c : children_[v]) {
            depth_[c] = depth_[v] + 1;
            queue.push_back(c);
        }
    }
    if (static_cast<int>(queue.size()) != n)
        throw std::invalid_argument("RootedTree: parent map is cyclic or disconnected");
}

bool RootedTree::is_ancestor(int a, int d) const {
    while (depth_[d] > depth_[a]) d = parent_[d];
    return d == a;
}

int RootedTree::lca(int u, int v) const {
    while (depth_[u] > depth_[v]) u = parent_[u];
    while (depth_[v] > depth_[u]) v = parent_[v];
    while (u != v) {
        u = parent_[u];
        v = parent_[v];
    }
    return u;
}

Path RootedTree::tree_path(int u, int v) const {
    int z = lca(u, v);
    std::vector<int> up, down;
    for (int x = u; x != z; x = parent_[x]) up.push_back(x);
    up.push_back(z);
    for (int x = v; x != z; x = parent_[x]) down.push_back(x);
    up.insert(up.end(), down.rbegin(), down.rend());
    return Path(std::move(up));
}

FileGraph RootedTree::to_file_graph() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n_ - 1);
    for (int v = 1; v <= n_; ++v)
        if (v != root_) edges.emplace_back(v, parent_[v]);
    return FileGraph(n_, std::move(edges));
}

namespace {

void enumerate_from(const FileGraph& g, int t, std::vector<int>& cur, std::vector<char>& used,
                    std::vector<Path>& out) {
    // Pre-order emission with ascending-neighbor extension yields global
    // lexicographic order; the canonicality filter keeps each undirected
    // path exactly once.
    if (cur.size() == 1 || cur.front() < cur.back()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == t) return;
    for (int w : g.neighbors(cur.back())) {
        if (used[w]) continue;
        used[w] = 1;
        cur.push_back(w);
        enumerate_from(g, t, cur, used, out);
        cur.pop_back();
        used[w] = 0;
    }
}

}  // namespace

std::vector<Path> enumerate_paths(const FileGraph& g, int t) {
    if (t < 1) throw std::invalid_argument("enumerate_paths: need t >= 1");
    std::vector<Path> out;
    std::vector<char> used(g.n() + 1, 0);
    std::vector<int> cur;
    for (int s = 1; s <= g.n(); ++s) {
        used[s] = 1;
        cur.push_back(s);
        enumerate_from(g, t, cur, used, out);
        cur.pop_back();
        used[s] = 0;
    }
    return out;
}

SparseHamiltonianGraph double_graph(const SparseHamiltonianGraph& g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.arcs().size());
    for (const auto& [u, v] : g.arcs()) arcs.emplace_back(2 * u - 1, 2 * v - 1);
    return SparseHamiltonianGraph(2 * g.n() - 1, std::move(arcs));
}

std::pair<Path, Path> split_unidirectional(const RootedTree& tree, const Path& p) {
    if (p.vertices.empty()) throw std::invalid_argument("split_unidirectional: empty path");
    // Validate p as a simple path of the tree.
    std::vector<char> seen(tree.n() + 1, 0);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (v < 1 || v > tree.n() || seen[v])
            throw std::invalid_argument("split_unidirectional: not a simple vertex sequence");
        seen[v] = 1;
        if (i > 0) {
            int u = p.vertices[i - 1];
            if (tree.parent(u) != v && tree.parent(v) != u)
                throw std::invalid_argument("split_unidirectional: consecutive vertices not adjacent");
        }
    }
    int z = tree.lca(p.front(), p.back());
    auto zpos = std::find(p.vertices.begin(), p.vertices.end(), z);
    if (zpos == p.vertices.end())
        throw std::invalid_argument("split_unidirectional: path does not contain the LCA");
    Path first(std::vector<int>(p.vertices.begin(), zpos + 1));
    Path second(std::vector<int>(p.vertices.rbegin(),
                                 p.vertices.rbegin() + (p.vertices.end() - zpos)));
    // Both halves must climb child->parent at each step.
    for (const Path* half : {&first, &second})
        for (std::size_t i = 0; i + 1 < half->vertices.size(); ++i)
            if (tree.parent(half->vertices[i]) != half->vertices[i + 1])
                throw std::invalid_argument("split_unidirectional: half is not child->parent");
    return {std::move(first), std::move(second)};
}

}  // namespace dedup_layout
