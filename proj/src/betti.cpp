#include "vnum/betti.hpp"

#include "vnum/config.hpp"
#include "vnum/errors.hpp"
#include "vnum/homology.hpp"
#include "vnum/ideal_ops.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace vnum {

void BettiTable::add(int i, int j, long long rank) {
    if (rank == 0) return;
    if (i < 1) throw std::logic_error("betti table rows start at homological degree 1");
    entries_[{i, j}] += rank;
}

long long BettiTable::entry(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::reg() const {
    int r = 0;
    for (const auto& [ij, rank] : entries_) r = std::max(r, ij.second - ij.first);
    return r;
}

int BettiTable::pd() const {
    int g = 0;
    for (const auto& [ij, rank] : entries_) g = std::max(g, ij.first);
    return g;
}

std::string BettiTable::to_string() const {
    std::string out;
    for (const auto& [ij, rank] : entries_) {
        out += "b(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
               ") = " + std::to_string(rank) + "\n";
    }
    return out;
}

namespace {

// Faces of the restriction Delta_W of the Stanley-Reisner complex, i.e.
// subsets of W containing no generator support. Returns false on blowup.
bool faces_of_restriction(std::uint64_t W, const std::vector<std::uint64_t>& supports,
                          long long face_cap, std::vector<std::vector<std::uint64_t>>& out) {
    out.clear();
    out.resize(static_cast<std::size_t>(std::popcount(W)) + 1);
    long long count = 0;
    std::vector<int> verts;
    {
        std::uint64_t m = W;
        while (m) {
            verts.push_back(std::countr_zero(m) + 1);
            m &= m - 1;
        }
    }
    std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t idx,
                                                              std::uint64_t cur) -> bool {
        out[static_cast<std::size_t>(std::popcount(cur))].push_back(cur);
        if (++count > face_cap) return false;
        for (std::size_t k = idx; k < verts.size(); ++k) {
            std::uint64_t next = cur | (1ULL << (verts[k] - 1));
            bool is_face = true;
            for (auto A : supports) {
                if ((A & ~next) == 0) {
                    is_face = false;
                    break;
                }
            }
            if (is_face && !rec(k + 1, next)) return false;
        }
        return true;
    };
    if (!rec(0, 0)) return false;
    for (auto& level : out) std::sort(level.begin(), level.end());
    while (!out.empty() && out.back().empty()) out.pop_back();
    return true;
}

// Nerve of the cover of the Alexander dual of Delta_W by the simplices
// W \ A_i: a subset sigma of the generators is a face iff the union of its
// supports is a proper subset of W. Combinatorial Alexander duality turns
// dim H~_{k}(nerve) into the Hochster summand b_{k+2,|W|}.
bool nerve_faces(std::uint64_t W, const std::vector<std::uint64_t>& gens, long long face_cap,
                 std::vector<std::vector<std::uint64_t>>& out) {
    out.clear();
    out.resize(gens.size() + 1);
    long long count = 0;
    std::function<bool(std::size_t, std::uint64_t, std::uint64_t)> rec =
        [&](std::size_t idx, std::uint64_t sigma, std::uint64_t uni) -> bool {
        out[static_cast<std::size_t>(std::popcount(sigma))].push_back(sigma);
        if (++count > face_cap) return false;
        for (std::size_t k = idx; k < gens.size(); ++k) {
            std::uint64_t u2 = uni | gens[k];
            if (u2 == W) continue; // sigma + k covers W: a non-face, as is every superset
            if (!rec(k + 1, sigma | (1ULL << k), u2)) return false;
        }
        return true;
    };
    if (!rec(0, 0, 0)) return false;
    for (auto& level : out) std::sort(level.begin(), level.end());
    while (!out.empty() && out.back().empty()) out.pop_back();
    return true;
}

} // namespace

BettiTable betti_table(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit_ideal())
        throw undefined_input("betti_table: proper nonzero ideal required");

    const MonomialIdeal J = I.is_squarefree() ? I : polarize(I).ideal;
    if (J.num_vars() > config::max_betti_vars())
        throw capacity_error("betti_table: " + std::to_string(J.num_vars()) +
                             " variables exceed the cap (" +
                             std::to_string(config::max_betti_vars()) +
                             "); raise VNUM_MAX_BETTI_VARS to override");

    std::vector<std::uint64_t> supports;
    for (const auto& g : J.generators()) {
        std::uint64_t m = 0;
        for (int v : g.support()) m |= 1ULL << (v - 1);
        supports.push_back(m);
    }
    std::uint64_t union_mask = 0;
    for (auto s : supports) union_mask |= s;

    BettiTable table;
    // Subsets W outside the union, or with a vertex not covered by a support
    // inside W, restrict to cones and contribute nothing.
    std::uint64_t W = union_mask;
    while (true) {
        if (W != 0) {
            std::vector<std::uint64_t> inside;
            std::uint64_t covered = 0;
            for (auto s : supports) {
                if ((s & ~W) == 0) {
                    inside.push_back(s);
                    covered |= s;
                }
            }
            if (covered == W && !inside.empty()) {
                const int j = std::popcount(W);
                std::vector<std::vector<std::uint64_t>> faces;
                bool via_nerve;
                if (inside.size() <= 6) {
                    via_nerve = true;
                    nerve_faces(W, inside, 1LL << 7, faces);
                } else if (faces_of_restriction(W, inside, 1LL << 14, faces)) {
                    via_nerve = false;
                } else if (inside.size() <= 20 &&
                           nerve_faces(W, inside, config::max_complex_faces(), faces)) {
                    via_nerve = true;
                } else {
                    throw capacity_error("betti_table: restriction on " + std::to_string(j) +
                                         " vertices too large for either homology route");
                }
                auto ranks = homology_from_faces(faces);
                for (std::size_t k = 0; k < ranks.size(); ++k) {
                    if (ranks[k] <= 0) continue;
                    // Direct route: ranks[k] = dim H~_{k-1}(Delta_W), index j-k.
                    // Nerve route: ranks[k] = dim H~_{k-1}(dual nerve), index k+1.
                    int i = via_nerve ? static_cast<int>(k) + 1 : j - static_cast<int>(k);
                    table.add(i, j, ranks[k]);
                }
            }
        }
        if (W == 0) break;
        W = (W - 1) & union_mask;
    }
    return table;
}

int regularity(const MonomialIdeal& I) { return betti_table(I).reg(); }

int proj_dim(const MonomialIdeal& I) { return betti_table(I).pd(); }

RegDimBound reg_dim_bound_check(const MonomialIdeal& I) {
    RegDimBound out{BigInt(regularity(I)), BigInt(0), false};
    BigInt extras(0);
    for (int i = 1; i <= I.num_vars(); ++i) {
        BigInt gamma(0);
        for (const auto& g : I.generators()) gamma = std::max(gamma, g.exp(i));
        if (!gamma.is_zero()) extras += gamma - BigInt(1);
    }
    out.rhs = BigInt(height_and_dim(I).dim) + extras;
    out.ok = out.lhs <= out.rhs;
    return out;
}

} // namespace vnum
