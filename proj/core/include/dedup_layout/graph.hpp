#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dedup_layout {

// A file is a self-avoiding path in the chunk graph. Paths are undirected;
// the canonical orientation puts the smaller endpoint label first.
struct Path {
    std::vector<int> vertices;

    Path() = default;
    explicit Path(std::vector<int> vs) : vertices(std::move(vs)) {}

    int length() const { return static_cast<int>(vertices.size()); }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }

    bool is_canonical() const {
        return vertices.size() <= 1 || vertices.front() < vertices.back();
    }
    // Returns the canonical orientation (reverses if back < front).
    Path canonical() const;

    bool operator==(const Path& o) const { return vertices == o.vertices; }
    bool operator<(const Path& o) const { return vertices < o.vertices; }
};

std::string to_string(const Path& p);

// Undirected simple graph on vertices 1..n. Chunks are vertices; files are
// simple paths.
class FileGraph {
  public:
    FileGraph() : n_(0) {}
    // Edges may be listed in any order/orientation; normalized to u < v,
    // sorted, deduplicated. Throws std::invalid_argument on loops or
    // out-of-range endpoints.
    FileGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    // Neighbors in ascending order.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    // Vertex sets of connected components, each sorted, ordered by smallest
    // member.
    std::vector<std::vector<int>> connected_components() const;
    bool is_connected() const;
    // True iff acyclic and connected.
    bool is_tree() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;  // 1-based; adj_[0] unused
};

// A Hamiltonian line 1-2-...-n plus disjoint "arcs": extra edges {u,v} with
// |u-v| > 1, no two arcs sharing an endpoint (a "foot").
class SparseHamiltonianGraph {
  public:
    SparseHamiltonianGraph() : n_(0) {}
    SparseHamiltonianGraph(int n, std::vector<std::pair<int, int>> arcs);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    // Sorted list of all arc endpoints.
    std::vector<int> arc_feet() const;
    // The other endpoint of foot's arc, or nullopt if foot is not on an arc.
    std::optional<int> arc_partner(int foot) const;
    FileGraph to_file_graph() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> arcs_;  // normalized u < v, sorted
};

// Rooted tree on vertices 1..n given by a child->parent map.
class RootedTree {
  public:
    RootedTree() : n_(0), root_(0) {}
    // parent[v] = parent of v, parent[root] = 0. 1-based, parent[0] unused.
    RootedTree(int n, int root, std::vector<int> parent);

    int n() const { return n_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[v]; }
    // Children in ascending order.
    const std::vector<int>& children(int v) const { return children_[v]; }
    int depth(int v) const { return depth_[v]; }  // depth(root) == 0
    bool is_ancestor(int a, int d) const;         // reflexive
    int lca(int u, int v) const;
    // The unique simple path from u to v (inclusive).
    Path tree_path(int u, int v) const;
    FileGraph to_file_graph() const;

  private:
    int n_;
    int root_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
};

// All canonical simple paths with 1..t vertices, in lexicographic order of
// their vertex sequences. Exponential in t by nature; intended for
// desk-scale graphs.
std::vector<Path> enumerate_paths(const FileGraph& g, int t);

// Splits each line edge {i,i+1} in two by inserting a midpoint: the result
// has 2n-1 vertices and maps arc {u,v} to {2u-1, 2v-1}, so all arc feet are
// odd and every arc span is even.
SparseHamiltonianGraph double_graph(const SparseHamiltonianGraph& g);

// Splits a tree path p into its two child->parent halves meeting at the
// lowest common ancestor z of p's endpoints: returns (front..z, back..z),
// both walked bottom-up, sharing only z. Throws std::invalid_argument if p
// is not a path of the tree.
std::pair<Path, Path> split_unidirectional(const RootedTree& tree, const Path& p);

}  // namespace dedup_layout
