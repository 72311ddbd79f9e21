#include "vnum/ideal_ops.hpp"

#include "vnum/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace vnum {

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
    if (m.num_vars() != I.num_vars())
        throw dimension_mismatch("colon: monomial in a different ambient ring");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.colon(m));
    return MonomialIdeal(I.num_vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    if (J.is_zero()) throw undefined_input("colon by the zero ideal");
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::zero(I.num_vars());
    for (const auto& m : J.generators()) {
        MonomialIdeal part = colon(I, m);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.num_vars());
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& g : I.generators())
        for (const auto& h : J.generators()) gens.push_back(g.lcm(h));
    return MonomialIdeal(I.num_vars(), std::move(gens));
}

namespace {

void require_proper_nonzero(const MonomialIdeal& I, const char* op) {
    if (I.is_zero()) throw undefined_input(std::string(op) + ": zero ideal");
    if (I.is_unit_ideal()) throw undefined_input(std::string(op) + ": unit ideal");
}

IrreducibleComponent component_of(const MonomialIdeal& I) {
    IrreducibleComponent c;
    for (const auto& g : I.generators()) {
        int v = g.support().front();
        c.pure_powers.emplace_back(v, g.exp(v));
    }
    std::sort(c.pure_powers.begin(), c.pure_powers.end());
    return c;
}

void decompose(const MonomialIdeal& I, std::map<std::string, std::vector<IrreducibleComponent>>& memo,
               std::set<IrreducibleComponent>& out) {
    std::string k = I.key();
    if (auto it = memo.find(k); it != memo.end()) {
        out.insert(it->second.begin(), it->second.end());
        return;
    }
    // Find a generator mixing at least two variables; none means irreducible.
    const Monomial* split = nullptr;
    for (const auto& g : I.generators()) {
        if (!g.is_pure_power()) {
            split = &g;
            break;
        }
    }
    std::set<IrreducibleComponent> local;
    if (split == nullptr) {
        local.insert(component_of(I));
    } else {
        int v = split->support().front();
        std::vector<BigInt> ue(static_cast<std::size_t>(I.num_vars()));
        ue[static_cast<std::size_t>(v - 1)] = split->exp(v);
        Monomial u(std::move(ue));
        Monomial w = split->colon(u); // the coprime complement

        for (const Monomial& extra : {u, w}) {
            std::vector<Monomial> gens = I.generators();
            gens.push_back(extra);
            decompose(MonomialIdeal(I.num_vars(), std::move(gens)), memo, local);
        }
    }
    memo.emplace(std::move(k), std::vector<IrreducibleComponent>(local.begin(), local.end()));
    out.insert(local.begin(), local.end());
}

// Q' ⊆ Q for irreducible ideals: every support variable of Q' appears in Q
// with exponent at most the one in Q'.
bool component_contained_in(const IrreducibleComponent& inner, const IrreducibleComponent& outer) {
    for (const auto& [v, e] : inner.pure_powers) {
        auto it = std::find_if(outer.pure_powers.begin(), outer.pure_powers.end(),
                               [v = v](const auto& p) { return p.first == v; });
        if (it == outer.pure_powers.end() || it->second > e) return false;
    }
    return true;
}

} // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
    require_proper_nonzero(I, "irreducible_decomposition");
    std::map<std::string, std::vector<IrreducibleComponent>> memo;
    std::set<IrreducibleComponent> collected;
    decompose(I, memo, collected);

    std::vector<IrreducibleComponent> comps(collected.begin(), collected.end());

    // Pairwise pruning: drop any component containing a strictly smaller one.
    std::vector<IrreducibleComponent> pruned;
    for (const auto& q : comps) {
        bool redundant = false;
        for (const auto& p : comps) {
            if (!(p == q) && component_contained_in(p, q)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) pruned.push_back(q);
    }

    // Full irredundancy pass: remove components containing the intersection
    // of the others, until stable.
    bool changed = true;
    while (changed && pruned.size() > 1) {
        changed = false;
        for (std::size_t k = 0; k < pruned.size(); ++k) {
            MonomialIdeal rest = MonomialIdeal::unit_ideal(I.num_vars());
            for (std::size_t j = 0; j < pruned.size(); ++j) {
                if (j == k) continue;
                rest = intersect(rest, pruned[j].to_ideal(I.num_vars()));
            }
            if (pruned[k].to_ideal(I.num_vars()).contains_ideal(rest)) {
                pruned.erase(pruned.begin() + static_cast<std::ptrdiff_t>(k));
                changed = true;
                break;
            }
        }
    }
    return pruned;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I) {
    auto comps = irreducible_decomposition(I);
    std::set<PrimeSupport> primes;
    for (const auto& c : comps) primes.insert(c.support());
    return {primes.begin(), primes.end()};
}

std::vector<PrimeSupport> max_primes(const MonomialIdeal& I) {
    auto ass = associated_primes(I);
    std::vector<PrimeSupport> out;
    for (const auto& p : ass) {
        bool maximal = true;
        for (const auto& q : ass) {
            if (!(p == q) && q.contains(p)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(p);
    }
    return out;
}

HeightDim height_and_dim(const MonomialIdeal& I) {
    auto ass = associated_primes(I);
    int height = I.num_vars();
    for (const auto& p : ass) height = std::min(height, p.size());
    return {height, I.num_vars() - height};
}

Polarization polarize(const MonomialIdeal& I) {
    require_proper_nonzero(I, "polarize");
    const int s = I.num_vars();

    std::vector<long long> gamma(static_cast<std::size_t>(s), 0);
    for (const auto& g : I.generators()) {
        for (int i = 1; i <= s; ++i) {
            const BigInt& e = g.exp(i);
            if (e.is_zero()) continue;
            long long v = e.to_long_long(); // capacity_error if absurdly large
            gamma[static_cast<std::size_t>(i - 1)] =
                std::max(gamma[static_cast<std::size_t>(i - 1)], v);
        }
    }

    Polarization out{MonomialIdeal::zero(0), 0, {}};
    // Copy t_{i,c} (c >= 2) lives at index s + offset, blocks ordered by i.
    std::vector<std::vector<int>> copy_index(static_cast<std::size_t>(s));
    int next = s;
    for (int i = 1; i <= s; ++i) {
        for (long long c = 2; c <= gamma[static_cast<std::size_t>(i - 1)]; ++c) {
            ++next;
            copy_index[static_cast<std::size_t>(i - 1)].push_back(next);
            out.var_map.push_back({i, c, next});
        }
    }
    out.total_vars = next;

    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        std::vector<BigInt> e(static_cast<std::size_t>(out.total_vars));
        for (int i = 1; i <= s; ++i) {
            const BigInt& ci_big = g.exp(i);
            if (ci_big.is_zero()) continue;
            long long ci = ci_big.to_long_long();
            long long gi = gamma[static_cast<std::size_t>(i - 1)];
            const auto& copies = copy_index[static_cast<std::size_t>(i - 1)];
            if (gi == 1) {
                e[static_cast<std::size_t>(i - 1)] = 1;
            } else if (ci < gi) {
                // t_{i,2} .. t_{i,ci+1}
                for (long long c = 2; c <= ci + 1; ++c)
                    e[static_cast<std::size_t>(copies[static_cast<std::size_t>(c - 2)] - 1)] = 1;
            } else {
                // t_{i,2} .. t_{i,gamma_i} * t_i
                for (long long c = 2; c <= gi; ++c)
                    e[static_cast<std::size_t>(copies[static_cast<std::size_t>(c - 2)] - 1)] = 1;
                e[static_cast<std::size_t>(i - 1)] = 1;
            }
        }
        gens.emplace_back(std::move(e));
    }
    out.ideal = MonomialIdeal(out.total_vars, std::move(gens));
    return out;
}

} // namespace vnum
