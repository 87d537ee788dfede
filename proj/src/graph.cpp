#include "lhamil/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lhamil/error.hpp"

namespace lhamil {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder) {
        throw ParameterError("graph order must satisfy 1 <= n <= 64 (got n=" + std::to_string(n) + ")");
    }
}

int Graph::min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::edge_count() const {
    int sum = 0;
    for (int v = 0; v < n_; ++v) sum += degree(v);
    return sum / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < n_; ++a) {
        VertexMask later = adj_[a] & ~((bit(a) << 1) - 1);
        while (later) {
            int b = std::countr_zero(later);
            later &= later - 1;
            out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
            if (!has_edge(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

void Graph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
        throw ParameterError("vertex out of range: edge " + std::to_string(a) + "-" + std::to_string(b) +
                             " requires 0 <= v < n=" + std::to_string(n_));
    }
    if (a == b) throw ParameterError("self-loop at vertex " + std::to_string(a));
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
}

void Graph::remove_edge(int a, int b) {
    adj_[a] &= ~bit(b);
    adj_[b] &= ~bit(a);
}

Graph Graph::with_edge(int a, int b) const {
    Graph g = *this;
    g.add_edge(a, b);
    return g;
}

bool Graph::is_subgraph_of(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v) {
        if (adj_[v] & ~other.adj_[v]) return false;
    }
    return true;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> seq(g.order());
    for (int v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

LinearForest::LinearForest(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool LinearForest::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

namespace {

// Union-find over at most 64 vertices, copied by value during enumeration.
struct PathComponents {
    std::array<std::int8_t, kMaxOrder> parent{};
    std::array<std::int8_t, kMaxOrder> forest_degree{};

    explicit PathComponents(int n) {
        for (int v = 0; v < n; ++v) parent[v] = static_cast<std::int8_t>(v);
    }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // Adds a-b if the result is still a linear forest.
    bool try_join(int a, int b) {
        if (forest_degree[a] >= 2 || forest_degree[b] >= 2) return false;
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return false;
        parent[ra] = static_cast<std::int8_t>(rb);
        ++forest_degree[a];
        ++forest_degree[b];
        return true;
    }
};

}  // namespace

bool is_linear_forest(const Graph& g, std::span<const Edge> edges) {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    PathComponents comps(g.order());
    for (const Edge& e : sorted) {
        if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) return false;
        if (!comps.try_join(e.u, e.v)) return false;
    }
    return true;
}

namespace {

struct ForestWalker {
    const std::vector<Edge>& all;
    int ell;
    const std::function<bool(const LinearForest&)>& visit;
    std::vector<Edge> chosen;

    // Returns false when the visitor asked to stop.
    bool descend(std::size_t start, const PathComponents& comps) {
        if (static_cast<int>(chosen.size()) == ell) return visit(LinearForest(chosen));
        std::size_t needed = static_cast<std::size_t>(ell) - chosen.size();
        for (std::size_t i = start; i + needed <= all.size(); ++i) {
            PathComponents next = comps;
            if (!next.try_join(all[i].u, all[i].v)) continue;
            chosen.push_back(all[i]);
            bool go_on = descend(i + 1, next);
            chosen.pop_back();
            if (!go_on) return false;
        }
        return true;
    }
};

}  // namespace

bool for_each_linear_forest(const Graph& g, int ell,
                            const std::function<bool(const LinearForest&)>& visit) {
    if (ell < 0) throw ParameterError("forest size must satisfy ell >= 0");
    std::vector<Edge> all = g.edges();
    ForestWalker walker{all, ell, visit, {}};
    walker.chosen.reserve(static_cast<std::size_t>(ell));
    return walker.descend(0, PathComponents(g.order()));
}

std::vector<LinearForest> enumerate_linear_forests(const Graph& g, int ell) {
    std::vector<LinearForest> out;
    for_each_linear_forest(g, ell, [&](const LinearForest& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

namespace {

Count count_cliques_in(const Graph& g, VertexMask candidates, int remaining) {
    if (remaining == 0) return 1;
    if (remaining == 1) return static_cast<Count>(std::popcount(candidates));
    if (std::popcount(candidates) < remaining) return 0;
    Count total = 0;
    while (candidates) {
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        // Only extend with higher-labelled vertices so each clique is counted once.
        total += count_cliques_in(g, candidates & g.neighbors(v), remaining - 1);
    }
    return total;
}

}  // namespace

Count count_cliques(const Graph& g, int r) {
    if (r < 1) throw ParameterError("clique size must satisfy r >= 1");
    if (r > g.order()) return 0;
    return count_cliques_in(g, g.all_vertices(), r);
}

}  // namespace lhamil
