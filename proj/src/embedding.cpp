#include "lhamil/embedding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "lhamil/error.hpp"

namespace lhamil {

namespace {

std::vector<int> members(VertexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Visits size-k subsets of `pool` in lexicographic order; `admit(chosen, v)`
// prunes extensions. Stops when `visit` returns true.
bool find_subset(VertexMask pool, int k, VertexMask chosen,
                 const std::function<bool(VertexMask, int)>& admit,
                 const std::function<bool(VertexMask)>& visit) {
    if (k == 0) return visit(chosen);
    while (std::popcount(pool) >= k) {
        int v = std::countr_zero(pool);
        pool &= pool - 1;
        if (!admit(chosen, v)) continue;
        if (find_subset(pool, k - 1, chosen | bit(v), admit, visit)) return true;
    }
    return false;
}

void check_window(const Graph& g, int d, int ell) {
    ExtremalParams{g.order(), d, ell, {}}.validate();
}

}  // namespace

std::optional<ExtremalWitness> embeds_into_H(const Graph& g, int d, int ell) {
    check_window(g, d, ell);
    const VertexMask all = g.all_vertices();
    std::optional<ExtremalWitness> found;
    find_subset(
        all, d - ell, 0,
        [&](VertexMask chosen, int v) { return (g.neighbors(v) & chosen) == 0; },
        [&](VertexMask low) {
            VertexMask hub = 0;
            for (int v : members(low)) hub |= g.neighbors(v);
            if (std::popcount(hub) > d) return false;
            VertexMask spare = all & ~low & ~hub;
            while (std::popcount(hub) < d) {
                hub |= spare & -spare;
                spare &= spare - 1;
            }
            found = ExtremalWitness{Family::H, members(low), members(hub), {}};
            return true;
        });
    return found;
}

std::optional<ExtremalWitness> embeds_into_Hprime(const Graph& g, int d, int ell) {
    check_window(g, d, ell);
    const int n = g.order();
    const int z_size = n - d - 1;
    const VertexMask all = g.all_vertices();
    std::optional<ExtremalWitness> found;
    find_subset(
        all, d - ell, 0, [](VertexMask, int) { return true; },
        [&](VertexMask x) {
            VertexMask closed = x;
            for (int v : members(x)) closed |= g.neighbors(v);
            VertexMask free = all & ~closed;
            if (std::popcount(free) < z_size) return false;
            VertexMask z = 0;
            for (int i = 0; i < z_size; ++i) {
                z |= free & -free;
                free &= free - 1;
            }
            found = ExtremalWitness{Family::HPrime, members(x), members(all & ~x & ~z), members(z)};
            return true;
        });
    return found;
}

namespace {

class SpanningEmbedder {
public:
    SpanningEmbedder(const Graph& g, const Graph& host) : g_(g), host_(host), n_(g.order()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        image_.assign(n_, -1);
    }

    std::optional<std::vector<int>> run() {
        if (g_.edge_count() > host_.edge_count()) return std::nullopt;
        std::vector<int> g_deg = degree_sequence(g_);
        std::vector<int> h_deg = degree_sequence(host_);
        for (int i = 0; i < n_; ++i) {
            if (g_deg[i] > h_deg[i]) return std::nullopt;
        }
        if (place(0, 0)) return image_;
        return std::nullopt;
    }

private:
    bool place(int depth, VertexMask used) {
        if (depth == n_) return true;
        const int v = order_[depth];
        VertexMask options = host_.all_vertices() & ~used;
        for (int i = 0; i < depth; ++i) {
            int p = order_[i];
            if (g_.has_edge(v, p)) options &= host_.neighbors(image_[p]);
        }
        while (options) {
            int h = std::countr_zero(options);
            options &= options - 1;
            if (host_.degree(h) < g_.degree(v)) continue;
            image_[v] = h;
            if (place(depth + 1, used | bit(h))) return true;
        }
        image_[v] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& host_;
    int n_;
    std::vector<int> order_;
    std::vector<int> image_;
};

}  // namespace

std::optional<std::vector<int>> generic_spanning_embedding(const Graph& g, const Graph& host) {
    if (g.order() != host.order()) {
        throw ParameterError("spanning embedding requires equal orders (got " + std::to_string(g.order()) + " and " +
                             std::to_string(host.order()) + ")");
    }
    return SpanningEmbedder(g, host).run();
}

}  // namespace lhamil
