#pragma once

#include "vnum/bigint.hpp"
#include "vnum/monomial.hpp"

#include <cstdint>
#include <vector>

namespace vnum {

// Simplicial complex on vertices 1..n, stored by its facets (maximal faces)
// as bitmasks. No facets at all is the void complex; the empty complex,
// whose only face is the empty set, has the single facet 0.
class SimplicialComplex {
public:
    SimplicialComplex(int num_vertices, std::vector<std::uint64_t> facets);
    static SimplicialComplex void_complex(int num_vertices);
    static SimplicialComplex empty_complex(int num_vertices);

    int num_vertices() const { return n_; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

    // faces grouped by cardinality: result[k] holds the k-element faces
    // (so result[0] = {emptyset} unless void). Guarded by the face cap.
    std::vector<std::vector<std::uint64_t>> faces_by_card() const;

private:
    int n_;
    std::vector<std::uint64_t> facets_;
};

// Faces of the Stanley-Reisner complex of a squarefree proper ideal are the
// subsets of variables whose product avoids I; facets are complements of
// the minimal hitting sets of the generator supports.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I);

// Reduced rational homology ranks, indexed from dimension -1 upward
// (entry 0 is dim H~_{-1}). The void complex yields an empty list.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& K);

// Shared core: faces[k] = k-element faces of a complex closed under taking
// subsets; returns the reduced homology ranks as above.
std::vector<long long> homology_from_faces(const std::vector<std::vector<std::uint64_t>>& faces);

// Rank over Q by fraction-free Bareiss elimination. Destroys its argument.
long long bareiss_rank(std::vector<std::vector<BigInt>> M);

} // namespace vnum
