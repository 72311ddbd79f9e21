#pragma once

#include "vnum/graph.hpp"
#include "vnum/monomial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vnum {

MonomialIdeal edge_ideal(const Graph& g);

// Mask-level primitives, shared by the invariant searches and the tests.
std::uint64_t neighbors_of_set(const Graph& g, std::uint64_t mask);
bool is_stable(const Graph& g, std::uint64_t mask);
bool is_vertex_cover(const Graph& g, std::uint64_t mask);
bool is_minimal_vertex_cover(const Graph& g, std::uint64_t mask);

// Membership in A_G: A stable with N(A) a minimal vertex cover. Stability
// plus the cover property suffices; minimality comes for free.
bool in_A_G(const Graph& g, const std::vector<int>& A);
bool in_A_G_mask(const Graph& g, std::uint64_t amask);

// All maximal stable sets (the family F_G), sorted ascending as masks.
std::vector<std::uint64_t> maximal_stable_sets(const Graph& g);

// Every stable subset of `restrict_mask` (including the empty set); fn may
// return true to stop early. Returns whether it stopped.
bool for_each_stable_subset(const Graph& g, std::uint64_t restrict_mask,
                            const std::function<bool(std::uint64_t)>& fn);

struct VGraphResult {
    int v;
    std::vector<int> witness;
};
// min |A| over A_G, witness lexicographically least at that size.
VGraphResult v_graph(const Graph& g);

struct BasicInvariants {
    int beta0;
    int alpha0;
    int beta1;
    int im;
    int idom;
};
BasicInvariants basic_invariants(const Graph& g);

int max_stable_size(const Graph& g);
int max_induced_matching_size(const Graph& g);
// One maximum matching, deterministic; .first is its size.
std::pair<int, std::vector<std::pair<int, int>>> max_matching(const Graph& g);

struct CoverageClass {
    bool well_covered;
    bool very_well_covered;
    std::optional<Matching> property_P_witness;
};
CoverageClass coverage_class(const Graph& g);

bool has_property_P(const Graph& g, const Matching& P);

Graph whisker(const Graph& g);

struct SheddingReport {
    bool all_shedding;
    std::vector<int> failures;
};
SheddingReport shedding_all(const Graph& g);

bool is_W2(const Graph& g);

enum class FinbowClass { C7, T10, FamilyF, NotWellCovered, OutOfScope };
std::string to_string(FinbowClass c);
FinbowClass finbow_class(const Graph& g);

bool has_cycle_of_length(const Graph& g, int len); // subgraph cycles, len in {4,5} mainly
bool graphs_isomorphic(const Graph& a, const Graph& b);

struct CycleInvariants {
    int v;
    int im;     // floor(s/3)
    int reg;    // floor((s+1)/3)
    bool holds; // v <= im
    std::vector<int> A;
    Matching P;
};
CycleInvariants cycle_invariants(int s);

} // namespace vnum
