#include "lhamil/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lhamil/error.hpp"

namespace lhamil {

namespace {

std::string describe(const ExtremalParams& p) {
    std::string s = "(n=" + std::to_string(p.n) + ", d=" + std::to_string(p.d) + ", ell=" + std::to_string(p.ell);
    if (p.r) s += ", r=" + std::to_string(*p.r);
    return s + ")";
}

void require_clique_size(int r) {
    if (r < 2) throw ParameterError("clique size must satisfy r >= 2 (got r=" + std::to_string(r) + ")");
}

std::vector<int> range(int first, int last) {
    std::vector<int> v;
    for (int i = first; i < last; ++i) v.push_back(i);
    return v;
}

}  // namespace

void ExtremalParams::validate() const {
    if (n < 3) throw ParameterError("parameter window requires n >= 3 " + describe(*this));
    if (ell < 0) throw ParameterError("parameter window requires 0 <= ell " + describe(*this));
    if (ell >= d) throw ParameterError("parameter window requires ell < d " + describe(*this));
    if (d > top()) throw ParameterError("parameter window requires d <= floor((n+ell-1)/2) " + describe(*this));
    if (r && *r < 2) throw ParameterError("parameter window requires r >= 2 " + describe(*this));
}

bool ExtremalParams::valid() const {
    try {
        validate();
        return true;
    } catch (const ParameterError&) {
        return false;
    }
}

const char* family_name(Family f) { return f == Family::H ? "H" : "Hprime"; }

std::pair<Graph, ExtremalWitness> build_H(int n, int d, int ell) {
    ExtremalParams{n, d, ell, {}}.validate();
    const int clique = n - d + ell;
    Graph g(n);
    for (int a = 0; a < clique; ++a)
        for (int b = a + 1; b < clique; ++b) g.add_edge(a, b);
    for (int x = clique; x < n; ++x)
        for (int b = 0; b < d; ++b) g.add_edge(x, b);
    return {g, ExtremalWitness{Family::H, range(clique, n), range(0, d), {}}};
}

std::pair<Graph, ExtremalWitness> build_Hprime(int n, int d, int ell) {
    ExtremalParams{n, d, ell, {}}.validate();
    const int big = n - d + ell;  // Y u Z
    Graph g(n);
    for (int a = 0; a < big; ++a)
        for (int b = a + 1; b < big; ++b) g.add_edge(a, b);
    // X u Y spans K_{d+1}.
    std::vector<int> small = range(0, ell + 1);
    for (int x = big; x < n; ++x) small.push_back(x);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) g.add_edge(small[i], small[j]);
    return {g, ExtremalWitness{Family::HPrime, range(big, n), range(0, ell + 1), range(ell + 1, big)}};
}

Count binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= k; ++i) {
        // acc * (n-k+i) / i stays integral at every step.
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX)) throw std::overflow_error("binomial exceeds 64 bits");
    }
    return static_cast<Count>(acc);
}

double gen_binom(double x, int p) {
    if (p < 1) throw ParameterError("gen_binom requires p >= 1");
    if (x < p - 1) return 0.0;
    double value = 1.0;
    for (int i = 0; i < p; ++i) value *= (x - i) / (i + 1);
    return value;
}

Count h_r_formula(int n, int d, int ell, int r) {
    if (r < 1 || ell < 0 || d < ell || d > n + ell) {
        throw ParameterError("h_r closed form requires r >= 1 and 0 <= ell <= d <= n+ell");
    }
    Count tail = binomial(d, r - 1);
    unsigned __int128 value = static_cast<unsigned __int128>(binomial(n - d + ell, r)) +
                              static_cast<unsigned __int128>(d - ell) * tail;
    if (value > static_cast<unsigned __int128>(UINT64_MAX)) throw std::overflow_error("h_r exceeds 64 bits");
    return static_cast<Count>(value);
}

Count h_edges(int n, int d, int ell) {
    ExtremalParams{n, d, ell, {}}.validate();
    return h_r_formula(n, d, ell, 2);
}

Count h_r_value(int n, int d, int ell, int r) {
    ExtremalParams{n, d, ell, r}.validate();
    return h_r_formula(n, d, ell, r);
}

Count pp_bound(int n, int d, int ell, int r) {
    ExtremalParams p{n, d, ell, r};
    p.validate();
    return std::max(h_r_formula(n, d, ell, r), h_r_formula(n, p.top(), ell, r));
}

Count stability_bound(int n, int d, int ell, int r) {
    ExtremalParams p{n, d, ell, r};
    p.validate();
    return std::max(h_r_formula(n, d + 1, ell, r), h_r_formula(n, p.top(), ell, r));
}

bool check_endpoint_convexity(int n, int ell, int r, int lo, int hi) {
    require_clique_size(r);
    const int top = (n + ell - 1) / 2;
    if (ell < 0 || lo < ell) throw ParameterError("convexity interval requires 0 <= ell <= lo");
    if (lo > hi) throw ParameterError("convexity interval requires lo <= hi");
    if (hi > top) throw ParameterError("convexity interval requires hi <= floor((n+ell-1)/2)");
    const Count cap = std::max(h_r_formula(n, lo, ell, r), h_r_formula(n, hi, ell, r));
    for (int k = lo; k <= hi; ++k) {
        if (h_r_formula(n, k, ell, r) > cap) return false;
    }
    return true;
}

}  // namespace lhamil
