#include "vnum/graph_invariants.hpp"

#include "vnum/config.hpp"
#include "vnum/errors.hpp"
#include "vnum/io.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace vnum {

namespace {

void check_cap(const Graph& g, const char* op) {
    if (g.num_vertices() > config::max_graph_vertices())
        throw capacity_error(std::string(op) + ": graph exceeds the vertex cap (" +
                             std::to_string(config::max_graph_vertices()) +
                             "); raise VNUM_MAX_VERTICES to override");
}

int popcount(std::uint64_t m) { return std::popcount(m); }

} // namespace

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    gens.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        std::vector<BigInt> e(static_cast<std::size_t>(g.num_vertices()));
        e[static_cast<std::size_t>(u - 1)] = 1;
        e[static_cast<std::size_t>(v - 1)] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(g.num_vertices(), std::move(gens));
}

std::uint64_t neighbors_of_set(const Graph& g, std::uint64_t mask) {
    std::uint64_t nb = 0;
    std::uint64_t m = mask;
    while (m) {
        int v = std::countr_zero(m) + 1;
        m &= m - 1;
        nb |= g.adj_mask(v);
    }
    return nb;
}

bool is_stable(const Graph& g, std::uint64_t mask) {
    std::uint64_t m = mask;
    while (m) {
        int v = std::countr_zero(m) + 1;
        m &= m - 1;
        if (g.adj_mask(v) & mask) return false;
    }
    return true;
}

bool is_vertex_cover(const Graph& g, std::uint64_t mask) {
    for (auto [u, v] : g.edges()) {
        if (!((Graph::bit(u) | Graph::bit(v)) & mask)) return false;
    }
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, std::uint64_t mask) {
    if (!is_vertex_cover(g, mask)) return false;
    std::uint64_t m = mask;
    while (m) {
        int v = std::countr_zero(m) + 1;
        m &= m - 1;
        if (is_vertex_cover(g, mask & ~Graph::bit(v))) return false;
    }
    return true;
}

bool in_A_G_mask(const Graph& g, std::uint64_t amask) {
    if (!is_stable(g, amask)) return false;
    return is_vertex_cover(g, neighbors_of_set(g, amask));
}

bool in_A_G(const Graph& g, const std::vector<int>& A) {
    return in_A_G_mask(g, vertices_to_mask(g, A));
}

bool for_each_stable_subset(const Graph& g, std::uint64_t restrict_mask,
                            const std::function<bool(std::uint64_t)>& fn) {
    // DFS adding vertices in ascending order keeps each stable set unique.
    std::function<bool(std::uint64_t, std::uint64_t)> rec =
        [&](std::uint64_t cur, std::uint64_t candidates) -> bool {
        if (fn(cur)) return true;
        std::uint64_t c = candidates;
        while (c) {
            int v = std::countr_zero(c) + 1;
            c &= c - 1;
            std::uint64_t higher = ~(Graph::bit(v) | (Graph::bit(v) - 1));
            if (rec(cur | Graph::bit(v), candidates & higher & ~g.adj_mask(v))) return true;
        }
        return false;
    };
    return rec(0, restrict_mask);
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph.
void bk_maximal_stable(const Graph& g, std::uint64_t R, std::uint64_t P, std::uint64_t X,
                       std::vector<std::uint64_t>& out) {
    if (P == 0 && X == 0) {
        out.push_back(R);
        return;
    }
    auto cnb = [&](int v) { return g.full_mask() & ~g.adj_mask(v) & ~Graph::bit(v); };
    std::uint64_t px = P | X;
    int pivot = 0, best = -1;
    std::uint64_t m = px;
    while (m) {
        int v = std::countr_zero(m) + 1;
        m &= m - 1;
        int score = popcount(P & cnb(v));
        if (score > best) {
            best = score;
            pivot = v;
        }
    }
    std::uint64_t ext = P & ~cnb(pivot);
    while (ext) {
        int v = std::countr_zero(ext) + 1;
        ext &= ext - 1;
        bk_maximal_stable(g, R | Graph::bit(v), P & cnb(v), X & cnb(v), out);
        P &= ~Graph::bit(v);
        X |= Graph::bit(v);
    }
}

} // namespace

std::vector<std::uint64_t> maximal_stable_sets(const Graph& g) {
    check_cap(g, "maximal_stable_sets");
    std::vector<std::uint64_t> out;
    bk_maximal_stable(g, 0, g.full_mask(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void mis_go(const Graph& g, std::uint64_t avail, int cur, int& best) {
    if (cur + popcount(avail) <= best) return;
    if (avail == 0) {
        best = std::max(best, cur);
        return;
    }
    int pick = 0, deg = -1;
    std::uint64_t m = avail;
    while (m) {
        int v = std::countr_zero(m) + 1;
        m &= m - 1;
        int d = popcount(g.adj_mask(v) & avail);
        if (d > deg) {
            deg = d;
            pick = v;
        }
    }
    if (deg == 0) {
        best = std::max(best, cur + popcount(avail));
        return;
    }
    mis_go(g, avail & ~g.closed_mask(pick), cur + 1, best);
    mis_go(g, avail & ~Graph::bit(pick), cur, best);
}

} // namespace

int max_stable_size(const Graph& g) {
    check_cap(g, "max_stable_size");
    int best = 0;
    mis_go(g, g.full_mask(), 0, best);
    return best;
}

namespace {

void matching_go(const Graph& g, std::uint64_t used, int cur,
                 std::vector<std::pair<int, int>>& cur_edges, int& best,
                 std::vector<std::pair<int, int>>& best_edges) {
    std::uint64_t free = g.full_mask() & ~used;
    if (best >= 0 && cur + popcount(free) / 2 <= best) return;
    if (free == 0) {
        best = cur;
        best_edges = cur_edges;
        return;
    }
    int v = std::countr_zero(free) + 1;
    std::uint64_t partners = g.adj_mask(v) & free;
    std::uint64_t m = partners;
    while (m) {
        int u = std::countr_zero(m) + 1;
        m &= m - 1;
        cur_edges.emplace_back(v, u);
        matching_go(g, used | Graph::bit(v) | Graph::bit(u), cur + 1, cur_edges, best, best_edges);
        cur_edges.pop_back();
    }
    matching_go(g, used | Graph::bit(v), cur, cur_edges, best, best_edges);
}

} // namespace

std::pair<int, std::vector<std::pair<int, int>>> max_matching(const Graph& g) {
    check_cap(g, "max_matching");
    int best = -1;
    std::vector<std::pair<int, int>> cur, best_edges;
    matching_go(g, 0, 0, cur, best, best_edges);
    for (auto& [u, v] : best_edges)
        if (u > v) std::swap(u, v);
    return {best, best_edges};
}

namespace {

void im_go(const Graph& g, std::size_t idx, std::uint64_t chosen, int cur, int& best) {
    best = std::max(best, cur);
    std::uint64_t blocked = chosen | neighbors_of_set(g, chosen);
    if (cur + popcount(g.full_mask() & ~blocked) / 2 <= best) return;
    const auto& edges = g.edges();
    for (std::size_t i = idx; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        std::uint64_t reach = Graph::bit(u) | Graph::bit(v) | g.adj_mask(u) | g.adj_mask(v);
        if (reach & chosen) continue;
        im_go(g, i + 1, chosen | Graph::bit(u) | Graph::bit(v), cur + 1, best);
    }
}

} // namespace

int max_induced_matching_size(const Graph& g) {
    check_cap(g, "max_induced_matching_size");
    int best = 0;
    im_go(g, 0, 0, 0, best);
    return best;
}

namespace {

bool is_maximal_stable_in(const Graph& g, std::uint64_t amask, std::uint64_t universe) {
    std::uint64_t outside = universe & ~amask;
    while (outside) {
        int u = std::countr_zero(outside) + 1;
        outside &= outside - 1;
        if ((g.adj_mask(u) & amask) == 0) return false;
    }
    return true;
}

// Lexicographically ordered k-subsets of 1..n.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
        if (depth == k) return fn(pick);
        for (int v = start; v <= n - (k - depth - 1); ++v) {
            pick[static_cast<std::size_t>(depth)] = v;
            if (rec(v + 1, depth + 1)) return true;
        }
        return false;
    };
    return rec(1, 0);
}

} // namespace

VGraphResult v_graph(const Graph& g) {
    check_cap(g, "v_graph");
    if (g.edges().empty()) throw precondition_error("v_graph: graph has no edges");
    if (g.has_isolated_vertex()) throw precondition_error("v_graph: graph has isolated vertices");
    VGraphResult res{0, {}};
    for (int k = 1; k <= g.num_vertices(); ++k) {
        bool found = for_each_combination(g.num_vertices(), k, [&](const std::vector<int>& A) {
            if (!in_A_G_mask(g, vertices_to_mask(g, A))) return false;
            res = {k, A};
            return true;
        });
        if (found) return res;
    }
    throw std::logic_error("v_graph: A_G is empty, contradicting F_G != {}");
}

BasicInvariants basic_invariants(const Graph& g) {
    check_cap(g, "basic_invariants");
    BasicInvariants inv{};
    inv.beta0 = max_stable_size(g);
    inv.alpha0 = g.num_vertices() - inv.beta0;
    inv.beta1 = max_matching(g).first;
    inv.im = max_induced_matching_size(g);
    inv.idom = 0;
    for (int k = 0; k <= g.num_vertices(); ++k) {
        bool found = for_each_combination(g.num_vertices(), k, [&](const std::vector<int>& A) {
            std::uint64_t m = vertices_to_mask(g, A);
            return is_stable(g, m) && is_maximal_stable_in(g, m, g.full_mask());
        });
        if (found) {
            inv.idom = k;
            break;
        }
    }
    return inv;
}

CoverageClass coverage_class(const Graph& g) {
    check_cap(g, "coverage_class");
    auto maxs = maximal_stable_sets(g);
    int beta0 = 0;
    for (auto m : maxs) beta0 = std::max(beta0, popcount(m));
    bool wc = std::all_of(maxs.begin(), maxs.end(),
                          [&](std::uint64_t m) { return popcount(m) == beta0; });

    CoverageClass out{wc, false, std::nullopt};
    if (!wc || g.has_isolated_vertex()) return out;

    auto [beta1, medges] = max_matching(g);
    int alpha0 = g.num_vertices() - beta0;
    if (beta1 != alpha0) return out;

    out.very_well_covered = true;
    Matching pm = Matching::of(g, medges);
    if (!pm.perfect)
        throw std::logic_error("coverage_class: maximum matching not perfect on a very "
                               "well-covered graph");
    if (!has_property_P(g, pm))
        throw std::logic_error("coverage_class: perfect matching lacks property (P) on a very "
                               "well-covered graph");
    out.property_P_witness = std::move(pm);
    return out;
}

bool has_property_P(const Graph& g, const Matching& P) {
    Matching checked = Matching::of(g, P.edges); // revalidates against this host
    if (!checked.perfect)
        throw precondition_error("has_property_P: matching is not perfect");
    for (auto [b, bp] : checked.edges) {
        for (int swap = 0; swap < 2; ++swap) {
            int x = swap ? bp : b, y = swap ? b : bp;
            // every neighbor a of x and a' of y (outside the edge) must be adjacent
            std::uint64_t as = g.adj_mask(x) & ~Graph::bit(y);
            std::uint64_t m1 = as;
            while (m1) {
                int a = std::countr_zero(m1) + 1;
                m1 &= m1 - 1;
                std::uint64_t aps = g.adj_mask(y) & ~Graph::bit(x);
                std::uint64_t m2 = aps;
                while (m2) {
                    int ap = std::countr_zero(m2) + 1;
                    m2 &= m2 - 1;
                    if (a == ap || !g.adjacent(a, ap)) return false;
                }
            }
        }
    }
    // Property (P) forbids triangles through matching edges; cheap recheck.
    for (auto [b, bp] : checked.edges) {
        if (g.adj_mask(b) & g.adj_mask(bp))
            throw std::logic_error("has_property_P: triangle through a matching edge slipped by");
    }
    return true;
}

Graph whisker(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 1; v <= n; ++v) edges.emplace_back(v, n + v);
    return Graph(2 * n, std::move(edges));
}

SheddingReport shedding_all(const Graph& g) {
    check_cap(g, "shedding_all");
    SheddingReport rep{true, {}};
    for (int v = 1; v <= g.num_vertices(); ++v) {
        std::uint64_t away = g.full_mask() & ~g.closed_mask(v);
        std::uint64_t minus_v = g.full_mask() & ~Graph::bit(v);
        bool counterexample = for_each_stable_subset(g, away, [&](std::uint64_t A) {
            return is_maximal_stable_in(g, A, minus_v);
        });
        if (counterexample) {
            rep.all_shedding = false;
            rep.failures.push_back(v);
        }
    }
    return rep;
}

bool is_W2(const Graph& g) {
    check_cap(g, "is_W2");
    if (g.num_vertices() < 2) throw precondition_error("is_W2: need at least two vertices");
    if (g.has_isolated_vertex()) throw precondition_error("is_W2: isolated vertices present");

    std::vector<std::uint64_t> stables;
    for_each_stable_subset(g, g.full_mask(), [&](std::uint64_t m) {
        stables.push_back(m);
        return false;
    });
    int beta0 = 0;
    for (auto m : stables) beta0 = std::max(beta0, popcount(m));
    std::vector<std::uint64_t> maximum;
    for (auto m : stables)
        if (popcount(m) == beta0) maximum.push_back(m);

    for (std::size_t i = 0; i < stables.size(); ++i) {
        for (std::size_t j = i; j < stables.size(); ++j) {
            std::uint64_t a1 = stables[i], a2 = stables[j];
            if (a1 & a2) continue;
            bool ok = false;
            for (auto b1 : maximum) {
                if ((b1 & a1) != a1 || (b1 & a2)) continue;
                for (auto b2 : maximum) {
                    if ((b2 & a2) == a2 && (b1 & b2) == 0) {
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
            if (!ok) return false;
        }
    }
    return true;
}

std::string to_string(FinbowClass c) {
    switch (c) {
    case FinbowClass::C7: return "C7";
    case FinbowClass::T10: return "T10";
    case FinbowClass::FamilyF: return "FamilyF";
    case FinbowClass::NotWellCovered: return "NotWellCovered";
    case FinbowClass::OutOfScope: return "OutOfScope";
    }
    return "?";
}

bool has_cycle_of_length(const Graph& g, int len) {
    if (len == 3) {
        for (auto [u, v] : g.edges())
            if (g.adj_mask(u) & g.adj_mask(v)) return true;
        return false;
    }
    if (len == 4) {
        for (int u = 1; u <= g.num_vertices(); ++u) {
            for (int v = u + 1; v <= g.num_vertices(); ++v) {
                std::uint64_t common =
                    g.adj_mask(u) & g.adj_mask(v) & ~Graph::bit(u) & ~Graph::bit(v);
                if (popcount(common) >= 2) return true;
            }
        }
        return false;
    }
    // Walk-based search for short cycles of the given length.
    std::function<bool(int, int, std::uint64_t, int)> rec = [&](int start, int cur,
                                                                std::uint64_t seen,
                                                                int remaining) -> bool {
        if (remaining == 0) return g.adjacent(cur, start);
        std::uint64_t next = g.adj_mask(cur) & ~seen;
        while (next) {
            int w = std::countr_zero(next) + 1;
            next &= next - 1;
            if (rec(start, w, seen | Graph::bit(w), remaining - 1)) return true;
        }
        return false;
    };
    for (int s = 1; s <= g.num_vertices(); ++s) {
        if (rec(s, s, Graph::bit(s), len - 1)) return true;
    }
    return false;
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map, int v,
                   std::uint64_t used) {
    int n = a.num_vertices();
    if (v > n) return true;
    for (int w = 1; w <= n; ++w) {
        if (used & Graph::bit(w)) continue;
        if (a.degree(v) != b.degree(w)) continue;
        bool fits = true;
        for (int u = 1; u < v && fits; ++u) {
            if (a.adjacent(u, v) != b.adjacent(map[static_cast<std::size_t>(u)], w)) fits = false;
        }
        if (!fits) continue;
        map[static_cast<std::size_t>(v)] = w;
        if (iso_backtrack(a, b, map, v + 1, used | Graph::bit(w))) return true;
    }
    return false;
}

} // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> da, db;
    for (int v = 1; v <= a.num_vertices(); ++v) da.push_back(a.degree(v));
    for (int v = 1; v <= b.num_vertices(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(static_cast<std::size_t>(a.num_vertices()) + 1, 0);
    return iso_backtrack(a, b, map, 1, 0);
}

namespace {

bool in_family_F(const Graph& g) {
    std::vector<std::uint64_t> candidates;
    for (int x = 1; x <= g.num_vertices(); ++x) {
        std::uint64_t closed = g.closed_mask(x);
        if (popcount(closed) > 3) continue;
        bool clique = true;
        std::uint64_t m = closed;
        while (m && clique) {
            int u = std::countr_zero(m) + 1;
            m &= m - 1;
            if ((g.closed_mask(u) & closed) != closed) clique = false;
        }
        if (clique) candidates.push_back(closed);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::function<bool(std::uint64_t)> cover = [&](std::uint64_t covered) -> bool {
        if (covered == g.full_mask()) return true;
        int v = std::countr_zero(~covered) + 1;
        for (auto cand : candidates) {
            if ((cand & Graph::bit(v)) && (cand & covered) == 0) {
                if (cover(covered | cand)) return true;
            }
        }
        return false;
    };
    return cover(0);
}

} // namespace

FinbowClass finbow_class(const Graph& g) {
    check_cap(g, "finbow_class");
    if (!g.is_connected() || has_cycle_of_length(g, 4) || has_cycle_of_length(g, 5))
        return FinbowClass::OutOfScope;

    FinbowClass cls = FinbowClass::NotWellCovered;
    if (g.num_vertices() == 7 && graphs_isomorphic(g, cycle_graph(7))) {
        cls = FinbowClass::C7;
    } else if (g.num_vertices() == 10 && graphs_isomorphic(g, t10_graph())) {
        cls = FinbowClass::T10;
    } else if (in_family_F(g)) {
        cls = FinbowClass::FamilyF;
    }

    bool wc = coverage_class(g).well_covered;
    if (wc != (cls != FinbowClass::NotWellCovered))
        throw std::logic_error("finbow_class: classification disagrees with well-coveredness");
    return cls;
}

CycleInvariants cycle_invariants(int s) {
    if (s < 3) throw precondition_error("cycle_invariants: cycles need s >= 3");
    Graph c = cycle_graph(s);
    check_cap(c, "cycle_invariants");

    CycleInvariants out{0, s / 3, (s + 1) / 3, false, {}, Matching{}};
    out.v = v_graph(c).v;
    out.holds = out.v <= out.im;

    // The explicit stable set from the case split on s = 4l + r.
    int l = s / 4, r = s % 4;
    int last = (r == 0) ? 4 * l - 2 : (r == 1 ? 4 * l - 2 : 4 * l + 2);
    for (int t = 2; t <= last; t += 4) out.A.push_back(t);
    if (r == 1) out.A.push_back(4 * l);
    if (!in_A_G(c, out.A))
        throw std::logic_error("cycle_invariants: stable-set witness failed validation");

    std::vector<std::pair<int, int>> pedges;
    for (int i = 1; i <= 3 * out.im - 2; i += 3) pedges.emplace_back(i, i + 1);
    out.P = Matching::of(c, pedges);
    if (!out.P.induced || static_cast<int>(out.P.edges.size()) != out.im)
        throw std::logic_error("cycle_invariants: induced-matching witness failed validation");
    return out;
}

} // namespace vnum
