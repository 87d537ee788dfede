#include "lhamil/hamiltonicity.hpp"

#include <algorithm>
#include <string>

#include "lhamil/error.hpp"

namespace lhamil {

namespace {

using ForcedRows = std::array<VertexMask, kMaxOrder>;

void require_oracle_order(const Graph& g) {
    if (g.order() < 3) throw ParameterError("hamiltonicity requires n >= 3 (got n=" + std::to_string(g.order()) + ")");
    if (g.order() > kMaxOracleOrder) {
        throw ParameterError("hamiltonicity oracle supports n <= " + std::to_string(kMaxOracleOrder) +
                             " (got n=" + std::to_string(g.order()) + ")");
    }
}

ForcedRows forced_rows(const LinearForest& f) {
    ForcedRows rows{};
    for (const Edge& e : f.edges()) {
        rows[e.u] |= bit(e.v);
        rows[e.v] |= bit(e.u);
    }
    return rows;
}

// Held-Karp over paths that start at vertex 0. reach[mask] holds the
// possible end vertices of a path covering `mask`. A forced edge must be a
// path edge or the closing edge into 0, so when w is appended after v every
// forced neighbour of w already on the path must be v (or 0, if w is last).
class ForcedCycleSearch {
public:
    ForcedCycleSearch(const Graph& g, const ForcedRows& forced)
        : g_(g), forced_(forced), n_(g.order()), full_(g.all_vertices()) {}

    std::optional<Cycle> run() {
        for (int v = 0; v < n_; ++v) {
            if (g_.degree(v) < 2) return std::nullopt;
        }
        thread_local std::vector<std::uint32_t> reach;
        reach.assign(std::size_t{1} << n_, 0);
        reach[1] = 1;
        for (VertexMask mask = 1; mask < full_; mask += 2) {
            std::uint32_t ends = reach[mask];
            while (ends) {
                int v = std::countr_zero(ends);
                ends &= ends - 1;
                VertexMask next = g_.neighbors(v) & ~mask;
                if (v != 0) {
                    // v becomes interior: a pending forced neighbour must come next.
                    VertexMask pending = forced_[v] & ~mask;
                    if (std::popcount(pending) > 1) continue;
                    if (pending) next &= pending;
                }
                while (next) {
                    int w = std::countr_zero(next);
                    next &= next - 1;
                    if (step_ok(mask, v, w)) reach[mask | bit(w)] |= std::uint32_t{1} << w;
                }
            }
        }
        std::uint32_t last_ends = reach[full_] & static_cast<std::uint32_t>(g_.neighbors(0));
        if (!last_ends) return std::nullopt;
        return rebuild(std::countr_zero(last_ends), reach);
    }

private:
    bool step_ok(VertexMask mask, int v, int w) const {
        VertexMask allowed = bit(v);
        if ((mask | bit(w)) == full_) allowed |= bit(0);
        if (forced_[w] & mask & ~allowed) return false;
        if (v != 0 && (forced_[v] & ~mask & ~bit(w))) return false;
        return true;
    }

    Cycle rebuild(int last, const std::vector<std::uint32_t>& reach) const {
        Cycle reversed{last};
        VertexMask mask = full_;
        int cur = last;
        while (mask != 1) {
            VertexMask prev_mask = mask & ~bit(cur);
            std::uint32_t options = reach[prev_mask] & static_cast<std::uint32_t>(g_.neighbors(cur));
            int chosen = -1;
            while (options) {
                int u = std::countr_zero(options);
                options &= options - 1;
                if (step_ok(prev_mask, u, cur)) {
                    chosen = u;
                    break;
                }
            }
            if (chosen < 0) throw InternalContradiction("hamiltonian cycle reconstruction failed");
            reversed.push_back(chosen);
            mask = prev_mask;
            cur = chosen;
        }
        return Cycle(reversed.rbegin(), reversed.rend());
    }

    const Graph& g_;
    const ForcedRows& forced_;
    int n_;
    VertexMask full_;
};

// Cached cycle as per-vertex masks of its two cycle neighbours.
using CycleRows = std::vector<VertexMask>;

CycleRows cycle_rows(const Cycle& c) {
    CycleRows rows(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i];
        int b = c[(i + 1) % c.size()];
        rows[a] |= bit(b);
        rows[b] |= bit(a);
    }
    return rows;
}

bool covers(const CycleRows& rows, const LinearForest& f) {
    return std::all_of(f.edges().begin(), f.edges().end(),
                       [&](const Edge& e) { return (rows[e.u] >> e.v) & 1U; });
}

void require_forest_size(const Graph& g, int ell) {
    if (ell < 0 || ell >= g.order()) {
        throw ParameterError("ell-hamiltonicity requires 0 <= ell < n (got ell=" + std::to_string(ell) +
                             ", n=" + std::to_string(g.order()) + ")");
    }
}

// Scans forests in lexicographic order; cycles found along the way are
// reused to cover later forests.
HamVerdict scan_forests(const Graph& g, int ell) {
    HamVerdict verdict;
    auto any_cycle = find_hamiltonian_cycle(g);
    if (ell == 0) {
        verdict.is_l_hamiltonian = any_cycle.has_value();
        verdict.witness_cycle = any_cycle;
        if (!any_cycle) verdict.witness_forest = LinearForest{};
        return verdict;
    }

    std::vector<CycleRows> cache;
    if (any_cycle) cache.push_back(cycle_rows(*any_cycle));
    bool first = true;
    for_each_linear_forest(g, ell, [&](const LinearForest& f) {
        const bool is_first = std::exchange(first, false);
        if (!any_cycle) {
            verdict.witness_forest = f;
            return false;
        }
        auto hit = std::find_if(cache.begin(), cache.end(), [&](const CycleRows& c) { return covers(c, f); });
        if (hit != cache.end() && !is_first) return true;
        auto cycle = find_hamiltonian_cycle_through(g, f);
        if (!cycle) {
            verdict.witness_forest = f;
            return false;
        }
        if (is_first) verdict.witness_cycle = cycle;
        if (hit == cache.end()) cache.push_back(cycle_rows(*cycle));
        return true;
    });
    verdict.is_l_hamiltonian = !verdict.witness_forest.has_value();
    if (!verdict.is_l_hamiltonian) verdict.witness_cycle.reset();
    return verdict;
}

}  // namespace

bool is_hamiltonian_cycle(const Graph& g, std::span<const int> cycle, const LinearForest& forced) {
    const int n = g.order();
    if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
    VertexMask seen = 0;
    for (int v : cycle) {
        if (v < 0 || v >= n || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int a = cycle[i];
        int b = cycle[(i + 1) % n];
        if (!g.has_edge(a, b)) return false;
        rows[a] |= bit(b);
        rows[b] |= bit(a);
    }
    return covers(rows, forced);
}

std::optional<Cycle> find_hamiltonian_cycle(const Graph& g) {
    require_oracle_order(g);
    ForcedRows none{};
    return ForcedCycleSearch(g, none).run();
}

std::optional<Cycle> find_hamiltonian_cycle_through(const Graph& g, const LinearForest& forced) {
    require_oracle_order(g);
    if (!is_linear_forest(g, forced)) throw ParameterError("forced edge set is not a linear forest of the graph");
    ForcedRows rows = forced_rows(forced);
    return ForcedCycleSearch(g, rows).run();
}

HamVerdict is_l_hamiltonian(const Graph& g, int ell) {
    require_oracle_order(g);
    require_forest_size(g, ell);
    return scan_forests(g, ell);
}

bool decide_l_hamiltonian(const Graph& g, int ell, std::optional<LinearForest>& probe) {
    require_oracle_order(g);
    require_forest_size(g, ell);
    if (probe && probe->size() == ell && is_linear_forest(g, *probe) && !find_hamiltonian_cycle_through(g, *probe)) {
        return false;
    }
    HamVerdict v = scan_forests(g, ell);
    probe = v.witness_forest;
    return v.is_l_hamiltonian;
}

Cycle rotation_close(const Graph& g, std::span<const int> path, const LinearForest& forced, int ell) {
    const int n = g.order();
    if (n < 3) throw ParameterError("rotation requires n >= 3");
    if (static_cast<int>(path.size()) != n) throw ParameterError("rotation requires a path through all n vertices");
    VertexMask seen = 0;
    for (int v : path) {
        if (v < 0 || v >= n || (seen & bit(v))) throw ParameterError("rotation path must visit every vertex once");
        seen |= bit(v);
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (!g.has_edge(path[i], path[i + 1])) throw ParameterError("rotation path uses a non-edge");
    }
    if (!is_linear_forest(g, forced)) throw ParameterError("forced edge set is not a linear forest of the graph");
    if (forced.size() > ell) throw ParameterError("rotation requires |F| <= ell");
    for (const Edge& e : forced.edges()) {
        bool on_path = false;
        for (int i = 0; i + 1 < n && !on_path; ++i) on_path = Edge(path[i], path[i + 1]) == e;
        if (!on_path) throw ParameterError("rotation path must contain every forced edge");
    }

    const int u = path.front();
    const int v = path.back();
    if (g.has_edge(u, v)) return Cycle(path.begin(), path.end());
    if (g.degree(u) + g.degree(v) < n + ell) {
        throw ParameterError("rotation requires deg(w_1) + deg(w_n) >= n + ell");
    }
    for (int j = 1; j < n; ++j) {
        if (g.has_edge(u, path[j]) && g.has_edge(path[j - 1], v) && !forced.contains(Edge(path[j - 1], path[j]))) {
            Cycle out(path.begin(), path.begin() + j);
            for (int i = n - 1; i >= j; --i) out.push_back(path[i]);
            return out;
        }
    }
    throw InternalContradiction("no rotation index exists although deg(w_1) + deg(w_n) >= n + ell");
}

}  // namespace lhamil
