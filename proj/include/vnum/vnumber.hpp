#pragma once

#include "vnum/ideal_ops.hpp"
#include "vnum/monomial.hpp"

#include <optional>
#include <vector>

namespace vnum {

// Per-prime slice of the v-number computation: the minimal generators of
// (I : p)/I, their least degree alpha, and the least degree of a generator
// g with (I : g) = p together with that witness.
struct LocalVReport {
    PrimeSupport prime;
    std::vector<Monomial> module_min_gens;
    BigInt alpha;
    std::optional<BigInt> v_local;
    std::optional<Monomial> witness;
};

// Minimal monomial generators of the module (I : p)/I, i.e. the minimal
// generators of the colon ideal that do not lie in I. Throws invalid_prime
// when p is not an associated prime.
std::vector<Monomial> quotient_module_min_gens(const MonomialIdeal& I, const PrimeSupport& p);

BigInt alpha_module(const MonomialIdeal& I, const PrimeSupport& p);

LocalVReport v_local(const MonomialIdeal& I, const PrimeSupport& p);

struct VNumberResult {
    BigInt v;
    std::vector<LocalVReport> per_prime; // sorted by prime support
};

VNumberResult v_number(const MonomialIdeal& I);

// Definitional oracle: the least d <= degree_cap such that some monomial f
// of degree d outside I has (I : f) a monomial prime. Exhaustive over
// exponent vectors; throws cap_exceeded past the cap.
long long v_oracle(const MonomialIdeal& I, long long degree_cap);

// Zero-dimensional I only: true iff the minimal generators are exactly one
// pure power per variable.
bool is_complete_intersection(const MonomialIdeal& I);

} // namespace vnum
