#pragma once

#include "vnum/bigint.hpp"
#include "vnum/monomial.hpp"

#include <map>
#include <string>
#include <utility>

namespace vnum {

// Graded Betti numbers b_{i,j} of S/I for i >= 1 (b_{0,0} = 1 is implicit).
class BettiTable {
public:
    void add(int i, int j, long long rank);
    long long entry(int i, int j) const;
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
    int reg() const; // max(j - i), at least 0
    int pd() const;  // max i, 0 for the trivial table
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, long long> entries_;
};

// Full table via Hochster's formula. Non-squarefree ideals are polarized
// first; polarization preserves the graded Betti numbers, so the returned
// table is the table of S/I itself.
BettiTable betti_table(const MonomialIdeal& I);

int regularity(const MonomialIdeal& I);
int proj_dim(const MonomialIdeal& I);

struct RegDimBound {
    BigInt lhs; // reg(S/I)
    BigInt rhs; // dim(S/I) + sum_i (gamma_i - 1)
    bool ok;
};
RegDimBound reg_dim_bound_check(const MonomialIdeal& I);

} // namespace vnum
