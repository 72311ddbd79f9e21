#include "vnum/vnumber.hpp"

#include "vnum/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace vnum {

namespace {

void require_associated(const MonomialIdeal& I, const PrimeSupport& p) {
    auto ass = associated_primes(I);
    if (std::find(ass.begin(), ass.end(), p) == ass.end())
        throw invalid_prime(p.to_string() + " is not an associated prime of " + I.to_string());
}

std::vector<Monomial> module_min_gens_unchecked(const MonomialIdeal& I, const PrimeSupport& p) {
    MonomialIdeal q = colon(I, MonomialIdeal::prime(I.num_vars(), p));
    std::vector<Monomial> out;
    for (const auto& g : q.generators()) {
        if (!I.contains(g)) out.push_back(g);
    }
    return out; // already lex sorted, inherited from the colon's generators
}

LocalVReport v_local_unchecked(const MonomialIdeal& I, const PrimeSupport& p) {
    LocalVReport rep;
    rep.prime = p;
    rep.module_min_gens = module_min_gens_unchecked(I, p);

    rep.alpha = BigInt(0);
    bool first = true;
    for (const auto& g : rep.module_min_gens) {
        BigInt d = g.degree();
        if (first || d < rep.alpha) rep.alpha = d;
        first = false;
    }

    const MonomialIdeal prime_ideal = MonomialIdeal::prime(I.num_vars(), p);
    for (const auto& g : rep.module_min_gens) {
        if (!(colon(I, g) == prime_ideal)) continue;
        BigInt d = g.degree();
        if (!rep.v_local || d < *rep.v_local) {
            rep.v_local = d;
            rep.witness = g; // gens are lex sorted, so first at each degree wins
        }
    }
    if (!rep.v_local)
        throw std::logic_error("v_local: no module generator g with (I:g) = p at an "
                               "associated prime");
    return rep;
}

} // namespace

std::vector<Monomial> quotient_module_min_gens(const MonomialIdeal& I, const PrimeSupport& p) {
    require_associated(I, p);
    return module_min_gens_unchecked(I, p);
}

BigInt alpha_module(const MonomialIdeal& I, const PrimeSupport& p) {
    auto gens = quotient_module_min_gens(I, p);
    BigInt best(0);
    bool first = true;
    for (const auto& g : gens) {
        BigInt d = g.degree();
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

LocalVReport v_local(const MonomialIdeal& I, const PrimeSupport& p) {
    require_associated(I, p);
    return v_local_unchecked(I, p);
}

VNumberResult v_number(const MonomialIdeal& I) {
    auto ass = associated_primes(I); // sorted by support
    auto maxp = max_primes(I);

    VNumberResult res;
    bool first = true;
    for (const auto& p : ass) {
        LocalVReport rep = v_local_unchecked(I, p);
        if (!rep.v_local || *rep.v_local < rep.alpha)
            throw std::logic_error("v_number: local v-number below alpha at " + p.to_string());
        bool is_max = std::find(maxp.begin(), maxp.end(), p) != maxp.end();
        if (is_max && *rep.v_local != rep.alpha)
            throw std::logic_error("v_number: expected equality with alpha at the maximal prime " +
                                   p.to_string());
        if (first || *rep.v_local < res.v) res.v = *rep.v_local;
        first = false;
        res.per_prime.push_back(std::move(rep));
    }
    return res;
}

namespace {

// Enumerate exponent vectors of total degree d in lexicographic order.
template <typename Fn>
bool for_each_monomial_of_degree(int num_vars, long long d, Fn&& fn) {
    std::vector<long long> exps(static_cast<std::size_t>(num_vars), 0);
    auto rec = [&](auto&& self, int var, long long remaining) -> bool {
        if (var == num_vars) {
            if (remaining != 0) return false;
            return fn(exps);
        }
        if (var == num_vars - 1) {
            exps[static_cast<std::size_t>(var)] = remaining;
            bool stop = fn(exps);
            exps[static_cast<std::size_t>(var)] = 0;
            return stop;
        }
        for (long long e = remaining; e >= 0; --e) {
            exps[static_cast<std::size_t>(var)] = e;
            if (self(self, var + 1, remaining - e)) {
                exps[static_cast<std::size_t>(var)] = 0;
                return true;
            }
        }
        exps[static_cast<std::size_t>(var)] = 0;
        return false;
    };
    if (num_vars == 0) return d == 0 ? fn(exps) : false;
    return rec(rec, 0, d);
}

} // namespace

long long v_oracle(const MonomialIdeal& I, long long degree_cap) {
    if (I.is_zero() || I.is_unit_ideal())
        throw undefined_input("v_oracle: proper nonzero ideal required");
    for (long long d = 0; d <= degree_cap; ++d) {
        bool found = for_each_monomial_of_degree(I.num_vars(), d, [&](const auto& exps) {
            Monomial f = Monomial::from_ints(exps);
            if (I.contains(f)) return false;
            return colon(I, f).is_monomial_prime();
        });
        if (found) return d;
    }
    throw cap_exceeded("v_oracle: no colon-prime monomial up to degree " +
                       std::to_string(degree_cap));
}

bool is_complete_intersection(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit_ideal())
        throw undefined_input("is_complete_intersection: proper nonzero ideal required");
    if (height_and_dim(I).dim != 0)
        throw precondition_error("is_complete_intersection: ideal is not zero-dimensional");
    if (static_cast<int>(I.generators().size()) != I.num_vars()) return false;
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [](const Monomial& g) { return g.is_pure_power(); });
}

} // namespace vnum
