#pragma once

#include <span>

#include "lhamil/graph.hpp"

namespace lhamil {

/// Bounds N(G, K_r) for a graph with s vertices of degree at most t:
/// C(n-s, r) + s C(t, r-1).
struct DegreeClassBound {
    int s = 0;
    int t = 0;
    int r = 2;
};

/// The k-closure: repeatedly joins non-adjacent pairs whose degree sum is at
/// least k until no such pair remains.
Graph k_closure(const Graph& g, int k);

/// Same fixed point, scanning candidate pairs in the given order on every
/// pass. Pairs that are already edges are ignored.
Graph k_closure_in_order(const Graph& g, int k, std::span<const Edge> order);

/// deg(u) + deg(v) >= n + ell for every non-edge uv.
bool degree_sum_check(const Graph& g, int ell);

/// Both degree-sequence conditions:
///  - for every integer k with ell < k < (n+ell-1)/2, fewer than k-ell
///    vertices have degree <= k;
///  - at most (n-ell-1)/2 vertices have degree <= (n+ell-1)/2.
/// Requires 0 <= ell <= n-2.
bool posa_kronk_check(const Graph& g, int ell);

Count clique_upper_bound(int n, const DegreeClassBound& bound);
inline Count clique_upper_bound(int n, int s, int t, int r) { return clique_upper_bound(n, DegreeClassBound{s, t, r}); }

/// Not ell-hamiltonian, and every single-edge addition is ell-hamiltonian.
bool is_l_saturated(const Graph& g, int ell);

/// Canonical ell-saturated supergraph: full lexicographic passes over the
/// non-edges, adding a pair iff the result stays non-ell-hamiltonian, until
/// a pass adds nothing. Throws ParameterError if g is ell-hamiltonian.
Graph saturate(const Graph& g, int ell);

/// deg(u) + deg(v) <= n - 1 + ell for every non-edge uv.
bool check_saturated_degree_sums(const Graph& g, int ell);

}  // namespace lhamil
