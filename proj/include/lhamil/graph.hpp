#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lhamil {

using VertexMask = std::uint64_t;
using Count = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

/// Unordered vertex pair, stored with u < v. Ordering is lexicographic on
/// (u, v), which is the edge order used everywhere in the library.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64, one bitset row per
/// vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    VertexMask all_vertices() const { return n_ == 64 ? ~VertexMask{0} : bit(n_) - 1; }
    VertexMask neighbors(int v) const { return adj_[v]; }
    bool has_edge(int a, int b) const { return (adj_[a] >> b) & 1U; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int min_degree() const;
    int edge_count() const;

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;
    /// Non-adjacent pairs in lexicographic order.
    std::vector<Edge> non_edges() const;

    void add_edge(int a, int b);
    void remove_edge(int a, int b);
    Graph with_edge(int a, int b) const;

    /// True iff every edge of this graph is an edge of `other` (same order).
    bool is_subgraph_of(const Graph& other) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::array<VertexMask, kMaxOrder> adj_{};
};

/// Builds a graph from an edge list; duplicate pairs collapse.
/// Throws ParameterError on n outside 1..64, endpoints out of range, or a loop.
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

/// Degrees sorted non-increasing.
std::vector<int> degree_sequence(const Graph& g);

/// Vertex-disjoint union of paths, as a lexicographically sorted edge set.
class LinearForest {
public:
    LinearForest() = default;
    /// Sorts and deduplicates. Does not validate shape; see is_linear_forest.
    explicit LinearForest(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    bool contains(const Edge& e) const;

    friend bool operator==(const LinearForest&, const LinearForest&) = default;
    friend auto operator<=>(const LinearForest&, const LinearForest&) = default;

private:
    std::vector<Edge> edges_;
};

/// True iff all edges belong to g, every vertex has forest degree <= 2, and
/// the edges contain no cycle.
bool is_linear_forest(const Graph& g, std::span<const Edge> edges);
inline bool is_linear_forest(const Graph& g, const LinearForest& f) {
    return is_linear_forest(g, f.edges());
}

/// Visits every ell-edge linear forest of g exactly once, in lexicographic
/// order of the sorted edge lists. The visitor returns false to stop early.
/// Returns false iff the visitor stopped the enumeration.
bool for_each_linear_forest(const Graph& g, int ell,
                            const std::function<bool(const LinearForest&)>& visit);

std::vector<LinearForest> enumerate_linear_forests(const Graph& g, int ell);

/// Exact number of r-vertex complete subgraphs.
Count count_cliques(const Graph& g, int r);

}  // namespace lhamil
