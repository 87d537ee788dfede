#pragma once

#include <optional>
#include <vector>

#include "lhamil/extremal.hpp"
#include "lhamil/graph.hpp"

namespace lhamil {

/// G is a spanning subgraph of H_{n,d,ell} up to relabelling iff some
/// independent set D of size d-ell has |N(D)| <= d. The witness pads N(D)
/// to B with the smallest remaining labels. First D in lexicographic order.
std::optional<ExtremalWitness> embeds_into_H(const Graph& g, int d, int ell);

/// G is a spanning subgraph of H'_{n,d,ell} up to relabelling iff V(G)
/// splits into X (d-ell), Y (ell+1), Z (n-d-1) with no X-Z edge. First X in
/// lexicographic order, Z the smallest admissible labels.
std::optional<ExtremalWitness> embeds_into_Hprime(const Graph& g, int d, int ell);

/// Bijection phi (indexed by vertices of g) with phi(a)phi(b) an edge of
/// host for every edge ab of g. Backtracking with degree pruning.
std::optional<std::vector<int>> generic_spanning_embedding(const Graph& g, const Graph& host);

}  // namespace lhamil
