#include "vnum/homology.hpp"

#include "vnum/config.hpp"
#include "vnum/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace vnum {

SimplicialComplex::SimplicialComplex(int num_vertices, std::vector<std::uint64_t> facets)
    : n_(num_vertices) {
    if (n_ < 0 || n_ > 64) throw capacity_error("complex vertex count out of range");
    std::uint64_t full = n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto f : facets) {
        if (f & ~full) throw validation_error("facet mentions a vertex outside the complex");
    }
    // Drop faces contained in another facet.
    for (auto f : facets) {
        bool maximal = true;
        for (auto g : facets) {
            if (f != g && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets_.push_back(f);
    }
}

SimplicialComplex SimplicialComplex::void_complex(int num_vertices) {
    return SimplicialComplex(num_vertices, {});
}

SimplicialComplex SimplicialComplex::empty_complex(int num_vertices) {
    return SimplicialComplex(num_vertices, {0});
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces_by_card() const {
    std::vector<std::vector<std::uint64_t>> out;
    if (is_void()) return out;
    std::set<std::uint64_t> seen;
    long long cap = config::max_complex_faces();
    for (auto facet : facets_) {
        // All subsets of the facet.
        std::uint64_t sub = facet;
        while (true) {
            seen.insert(sub);
            if (static_cast<long long>(seen.size()) > cap)
                throw capacity_error("complex has too many faces to enumerate");
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
    }
    for (auto f : seen) {
        std::size_t k = static_cast<std::size_t>(std::popcount(f));
        if (out.size() <= k) out.resize(k + 1);
        out[k].push_back(f);
    }
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I) {
    if (!I.is_squarefree())
        throw precondition_error("stanley_reisner_complex: ideal is not squarefree; polarize first");
    if (I.is_unit_ideal())
        throw precondition_error("stanley_reisner_complex: ideal is the unit ideal");
    const int n = I.num_vars();
    if (n > 64) throw capacity_error("too many variables for bitmask faces");
    std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;

    if (I.is_zero()) return SimplicialComplex(n, {full});

    std::vector<std::uint64_t> supports;
    for (const auto& g : I.generators()) {
        std::uint64_t m = 0;
        for (int v : g.support()) m |= 1ULL << (v - 1);
        supports.push_back(m);
    }

    // Minimal hitting sets of the supports; facets are their complements.
    std::vector<std::uint64_t> hitting;
    std::vector<std::uint64_t> stack;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t idx, std::uint64_t cur) {
        while (idx < supports.size() && (supports[idx] & cur)) ++idx;
        if (idx == supports.size()) {
            hitting.push_back(cur);
            return;
        }
        std::uint64_t choices = supports[idx];
        while (choices) {
            int v = std::countr_zero(choices) + 1;
            choices &= choices - 1;
            rec(idx + 1, cur | (1ULL << (v - 1)));
        }
    };
    rec(0, 0);

    std::sort(hitting.begin(), hitting.end());
    hitting.erase(std::unique(hitting.begin(), hitting.end()), hitting.end());
    std::vector<std::uint64_t> facets;
    for (auto h : hitting) {
        bool minimal = true;
        for (auto h2 : hitting) {
            if (h2 != h && (h2 & ~h) == 0) {
                minimal = false;
                break;
            }
        }
        if (minimal) facets.push_back(full & ~h);
    }
    return SimplicialComplex(n, std::move(facets));
}

long long bareiss_rank(std::vector<std::vector<BigInt>> M) {
    if (M.empty() || M[0].empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t rank = 0;
    BigInt prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && M[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[pivot], M[rank]);
        const BigInt& p = M[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                M[i][j] = BigInt::divexact(p * M[i][j] - M[i][col] * M[rank][j], prev);
            }
            M[i][col] = BigInt(0);
        }
        prev = p;
        ++rank;
    }
    return static_cast<long long>(rank);
}

std::vector<long long> homology_from_faces(const std::vector<std::vector<std::uint64_t>>& faces) {
    std::vector<long long> ranks;
    if (faces.empty() || faces[0].empty()) return ranks; // void complex

    const std::size_t levels = faces.size();
    // boundary_rank[k] = rank of the map from k-element faces to (k-1)-element ones.
    std::vector<long long> boundary_rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        const auto& lower = faces[k - 1];
        const auto& upper = faces[k];
        if (upper.empty() || lower.empty()) continue;
        std::vector<std::vector<BigInt>> M(lower.size(), std::vector<BigInt>(upper.size()));
        for (std::size_t c = 0; c < upper.size(); ++c) {
            std::uint64_t f = upper[c];
            int sign = 1;
            std::uint64_t m = f;
            while (m) {
                int v = std::countr_zero(m) + 1;
                m &= m - 1;
                std::uint64_t sub = f & ~(1ULL << (v - 1));
                auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                if (it == lower.end() || *it != sub)
                    throw std::logic_error("homology_from_faces: complex not subset-closed");
                M[static_cast<std::size_t>(it - lower.begin())][c] = BigInt(sign);
                sign = -sign;
            }
        }
        boundary_rank[k] = bareiss_rank(std::move(M));
    }

    ranks.assign(levels, 0);
    for (std::size_t k = 0; k < levels; ++k) {
        long long n_k = static_cast<long long>(faces[k].size());
        long long up = k + 1 <= levels ? boundary_rank[k + 1] : 0;
        ranks[k] = n_k - boundary_rank[k] - up;
        if (ranks[k] < 0) throw std::logic_error("homology_from_faces: negative Betti rank");
    }
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return ranks;
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& K) {
    return homology_from_faces(K.faces_by_card());
}

} // namespace vnum
