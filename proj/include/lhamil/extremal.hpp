#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lhamil/graph.hpp"

namespace lhamil {

/// (n, d, ell[, r]) with 0 <= ell < d <= floor((n+ell-1)/2), n >= 3 and,
/// where a clique size is involved, r >= 2. All checks live in validate().
struct ExtremalParams {
    int n = 0;
    int d = 0;
    int ell = 0;
    std::optional<int> r;

    /// floor((n+ell-1)/2), the top of the degree window.
    int top() const { return (n + ell - 1) / 2; }

    /// Throws ParameterError naming the first violated inequality.
    void validate() const;
    bool valid() const;
};

enum class Family { H, HPrime };

const char* family_name(Family f);

/// Structural certificate for H_{n,d,ell} (low = D, hub = B) or for
/// H'_{n,d,ell} (low = X, hub = Y, rest = Z). Vertex lists are sorted.
struct ExtremalWitness {
    Family family = Family::H;
    std::vector<int> low;
    std::vector<int> hub;
    std::vector<int> rest;

    friend bool operator==(const ExtremalWitness&, const ExtremalWitness&) = default;
};

/// K_{n-d+ell} on A = {0..n-d+ell-1} plus D = {n-d+ell..n-1}, every vertex
/// of D joined to B = {0..d-1}.
std::pair<Graph, ExtremalWitness> build_H(int n, int d, int ell);

/// K_{n-d+ell} on Y u Z and K_{d+1} on Y u X glued along Y = {0..ell};
/// Z = {ell+1..n-d+ell-1}, X = {n-d+ell..n-1}.
std::pair<Graph, ExtremalWitness> build_Hprime(int n, int d, int ell);

/// Exact binomial coefficient; zero when k < 0 or k > n. Throws
/// std::overflow_error past 64 bits.
Count binomial(long long n, long long k);

/// Truncated falling-factorial binomial over real x:
/// x(x-1)...(x-p+1)/p! for x >= p-1, zero below.
double gen_binom(double x, int p);

/// C(n-d+ell, 2) + (d-ell) d, window-checked.
Count h_edges(int n, int d, int ell);

/// C(n-d+ell, r) + (d-ell) C(d, r-1), window-checked.
Count h_r_value(int n, int d, int ell, int r);

/// Same closed form without the window check. Requires 0 <= ell <= d <= n+ell
/// and r >= 1; used for interval scans and the d+1 branch of the stability
/// threshold.
Count h_r_formula(int n, int d, int ell, int r);

/// max{h_r(n,d,ell), h_r(n,top,ell)}.
Count pp_bound(int n, int d, int ell, int r);

/// max{h_r(n,d+1,ell), h_r(n,top,ell)}. The first branch is evaluated by
/// formula even when d+1 > top.
Count stability_bound(int n, int d, int ell, int r);

/// True iff every integer k in [lo, hi] has
/// h_r(n,k,ell) <= max{h_r(n,lo,ell), h_r(n,hi,ell)}.
/// Requires ell <= lo <= hi <= floor((n+ell-1)/2).
bool check_endpoint_convexity(int n, int ell, int r, int lo, int hi);

}  // namespace lhamil
