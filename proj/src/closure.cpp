#include "lhamil/closure.hpp"

#include <string>

#include "lhamil/error.hpp"
#include "lhamil/extremal.hpp"
#include "lhamil/hamiltonicity.hpp"

namespace lhamil {

Graph k_closure(const Graph& g, int k) {
    std::vector<Edge> order;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) order.emplace_back(a, b);
    return k_closure_in_order(g, k, order);
}

Graph k_closure_in_order(const Graph& g, int k, std::span<const Edge> order) {
    Graph h = g;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Edge& e : order) {
            if (e.u == e.v || h.has_edge(e.u, e.v)) continue;
            if (h.degree(e.u) + h.degree(e.v) >= k) {
                h.add_edge(e.u, e.v);
                changed = true;
            }
        }
    }
    return h;
}

bool degree_sum_check(const Graph& g, int ell) {
    const int n = g.order();
    for (const Edge& e : g.non_edges()) {
        if (g.degree(e.u) + g.degree(e.v) < n + ell) return false;
    }
    return true;
}

bool posa_kronk_check(const Graph& g, int ell) {
    const int n = g.order();
    if (ell < 0 || ell > n - 2) {
        throw ParameterError("degree-sequence test requires 0 <= ell <= n-2 (got ell=" + std::to_string(ell) +
                             ", n=" + std::to_string(n) + ")");
    }
    auto at_most = [&](int cap) {
        int count = 0;
        for (int v = 0; v < n; ++v) count += g.degree(v) <= cap ? 1 : 0;
        return count;
    };
    // ell < k < (n+ell-1)/2  <=>  2k < n+ell-1
    for (int k = ell + 1; 2 * k < n + ell - 1; ++k) {
        if (at_most(k) >= k - ell) return false;
    }
    // count <= (n-ell-1)/2 compared on the real value
    return 2 * at_most((n + ell - 1) / 2) <= n - ell - 1;
}

Count clique_upper_bound(int n, const DegreeClassBound& b) {
    if (b.s < 0 || b.s > n) throw ParameterError("degree-class bound requires 0 <= s <= n");
    if (b.t < 0) throw ParameterError("degree-class bound requires t >= 0");
    if (b.r < 2) throw ParameterError("degree-class bound requires r >= 2");
    return binomial(n - b.s, b.r) + static_cast<Count>(b.s) * binomial(b.t, b.r - 1);
}

bool is_l_saturated(const Graph& g, int ell) {
    if (g.order() < 3) throw ParameterError("saturation requires n >= 3");
    std::optional<LinearForest> probe;
    if (decide_l_hamiltonian(g, ell, probe)) return false;
    for (const Edge& e : g.non_edges()) {
        std::optional<LinearForest> none;
        if (!decide_l_hamiltonian(g.with_edge(e.u, e.v), ell, none)) return false;
    }
    return true;
}

Graph saturate(const Graph& g, int ell) {
    std::optional<LinearForest> probe;
    if (decide_l_hamiltonian(g, ell, probe)) {
        throw ParameterError("saturation requires a graph that is not ell-hamiltonian");
    }
    Graph h = g;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Edge& e : h.non_edges()) {
            Graph candidate = h.with_edge(e.u, e.v);
            std::optional<LinearForest> trial = probe;
            if (!decide_l_hamiltonian(candidate, ell, trial)) {
                h = candidate;
                probe = trial;
                changed = true;
            }
        }
    }
    return h;
}

bool check_saturated_degree_sums(const Graph& g, int ell) {
    const int n = g.order();
    for (const Edge& e : g.non_edges()) {
        if (g.degree(e.u) + g.degree(e.v) > n - 1 + ell) return false;
    }
    return true;
}

}  // namespace lhamil
