#pragma once

#include "vnum/graph.hpp"

#include <optional>
#include <vector>

namespace vnum {

// Constructive witness: D is stable with N(D) a minimal vertex cover,
// P_prime is an induced matching meeting D once per edge, |D| = |P_prime|.
struct WitnessPair {
    std::vector<int> D;
    Matching P_prime;
    std::optional<std::vector<int>> simplicial_roots; // simplicial-partition case
};

// Induction over the perfect matching of a very well-covered graph.
WitnessPair vwc_witness(const Graph& g, const Matching& P);

bool is_simplicial_vertex(const Graph& g, int v);
std::vector<int> simplicial_vertices(const Graph& g);
// Every vertex simplicial or adjacent to a simplicial one.
bool is_simplicial_graph(const Graph& g);

// Simplexes whose vertex sets partition V(G), if any; parts ordered by
// their least vertex.
std::optional<std::vector<std::vector<int>>> find_simplicial_partition(const Graph& g);

// Induction over a simplicial partition, peeling the last simplex.
WitnessPair simplex_partition_witness(const Graph& g,
                                      const std::vector<std::vector<int>>& partition);

} // namespace vnum
