#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lhamil/graph.hpp"

namespace lhamil {

/// Vertex cyclic order, starting at vertex 0 for oracle results.
using Cycle = std::vector<int>;

/// The exact oracle keeps a 2^n table; larger orders are rejected.
inline constexpr int kMaxOracleOrder = 20;

struct HamVerdict {
    bool is_l_hamiltonian = false;
    /// Lexicographically first ell-edge linear forest that no hamiltonian
    /// cycle contains. Present iff the verdict is false.
    std::optional<LinearForest> witness_forest;
    /// A hamiltonian cycle through the lexicographically first forest, when
    /// one was found.
    std::optional<Cycle> witness_cycle;
};

/// True iff `cycle` visits every vertex once, consecutive vertices (and the
/// closing pair) are adjacent in g, and every edge of `forced` is used.
bool is_hamiltonian_cycle(const Graph& g, std::span<const int> cycle, const LinearForest& forced = {});

/// Exhaustive; absent iff g has no hamiltonian cycle. Requires 3 <= n <= 20.
std::optional<Cycle> find_hamiltonian_cycle(const Graph& g);

/// Hamiltonian cycle using every edge of `forced`, if any exists.
/// Throws ParameterError when `forced` is not a linear forest of g.
std::optional<Cycle> find_hamiltonian_cycle_through(const Graph& g, const LinearForest& forced);

/// Every ell-edge linear forest of g extends to a hamiltonian cycle.
/// Vacuously true when g has no ell-edge linear forest.
/// Requires 3 <= n <= 20 and 0 <= ell < n.
HamVerdict is_l_hamiltonian(const Graph& g, int ell);

/// Verdict-only variant for repeated queries on related graphs. When `probe`
/// holds a forest of g that does not extend, returns false without scanning
/// further; otherwise runs the full scan and leaves the failing forest (if
/// any) in `probe`.
bool decide_l_hamiltonian(const Graph& g, int ell, std::optional<LinearForest>& probe);

/// Closes a hamiltonian path w_1..w_n (containing `forced`) into a
/// hamiltonian cycle containing `forced`, by the rotation at an index j with
/// w_{j-1} adjacent to w_n, w_j adjacent to w_1 and w_{j-1}w_j not forced.
/// If w_1w_n is an edge the path closes directly. Otherwise requires
/// deg(w_1) + deg(w_n) >= n + ell and |forced| <= ell.
/// Throws ParameterError on a violated precondition and InternalContradiction
/// if no rotation index exists.
Cycle rotation_close(const Graph& g, std::span<const int> path, const LinearForest& forced, int ell);

}  // namespace lhamil
