#pragma once

#include "vnum/monomial.hpp"

#include <vector>

namespace vnum {

// (I : m), minimal generators.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);

// (I : J) = intersection of (I : m) over the generators m of J.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

// Minimal generators of I ∩ J via pairwise lcm.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// Irredundant irreducible decomposition of a proper nonzero monomial ideal,
// by recursive generator splitting. Deterministically ordered.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

// Supports of the irredundant irreducible components = Ass(I).
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I);

// Maximal elements of Ass(I) under inclusion.
std::vector<PrimeSupport> max_primes(const MonomialIdeal& I);

struct HeightDim {
    int height;
    int dim;
};
HeightDim height_and_dim(const MonomialIdeal& I);

struct Polarization {
    MonomialIdeal ideal; // squarefree, in total_vars variables
    int total_vars;
    // new_var holds the index of the variable standing in for copy `copy`
    // (>= 2) of t_{orig_var}; original variables keep indices 1..s.
    struct VarCopy {
        int orig_var;
        long long copy;
        int new_var;
    };
    std::vector<VarCopy> var_map;
};

// Squarefree polarization: t_i^{c} maps to t_i when the ambient maximum
// gamma_i is 1, to the copies t_{i,2}..t_{i,c+1} when c < gamma_i, and to
// t_{i,2}..t_{i,gamma_i}*t_i when c = gamma_i.
Polarization polarize(const MonomialIdeal& I);

} // namespace vnum
