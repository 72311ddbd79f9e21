#include "vnum/witness.hpp"

#include "vnum/config.hpp"
#include "vnum/errors.hpp"
#include "vnum/graph_invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace vnum {

namespace {

void validate_witness(const Graph& g, const WitnessPair& w, const char* who) {
    std::uint64_t dmask = vertices_to_mask(g, w.D);
    std::uint64_t pmask = w.P_prime.vertex_mask();
    if (!in_A_G_mask(g, dmask))
        throw std::logic_error(std::string(who) + ": D is not in A_G");
    if (!w.P_prime.induced)
        throw std::logic_error(std::string(who) + ": P' is not an induced matching");
    if (dmask & ~pmask)
        throw std::logic_error(std::string(who) + ": D is not inside V(P')");
    for (auto [u, v] : w.P_prime.edges) {
        if (std::popcount((Graph::bit(u) | Graph::bit(v)) & dmask) != 1)
            throw std::logic_error(std::string(who) + ": an edge of P' does not meet D once");
    }
    if (w.D.size() != w.P_prime.edges.size())
        throw std::logic_error(std::string(who) + ": |D| != |P'|");
    if (static_cast<int>(w.P_prime.edges.size()) > max_induced_matching_size(g))
        throw std::logic_error(std::string(who) + ": witness larger than im(G)");
}

struct VwcState {
    std::vector<std::pair<int, int>> Pp;
    std::uint64_t D = 0;
};

// Induction of the very-well-covered witness: peel the last matching edge,
// recurse, then either keep (D1, P1') or splice in the peeled edge.
VwcState vwc_rec(const Graph& g, const std::vector<std::pair<int, int>>& pedges, std::size_t r) {
    if (r == 1) {
        auto [x, y] = pedges[0];
        return {{pedges[0]}, Graph::bit(std::min(x, y))};
    }
    VwcState st = vwc_rec(g, pedges, r - 1);
    auto [x, xp] = pedges[r - 1];
    std::uint64_t er = Graph::bit(x) | Graph::bit(xp);

    std::uint64_t nd1 = neighbors_of_set(g, st.D);
    if (er & nd1) return st; // covered endpoint: D1 already works one level up

    std::uint64_t vp1 = 0;
    for (auto [u, v] : st.Pp) vp1 |= Graph::bit(u) | Graph::bit(v);
    std::uint64_t d2 = vp1 & ~st.D;
    std::uint64_t nd2 = neighbors_of_set(g, d2);

    bool x_hit = (nd2 & Graph::bit(x)) != 0;
    bool xp_hit = (nd2 & Graph::bit(xp)) != 0;
    if (x_hit && xp_hit)
        throw std::logic_error("vwc_witness: both endpoints meet N(D2); property (P) violated");
    if (xp_hit) std::swap(x, xp);

    std::uint64_t a2 = d2 & g.adj_mask(x);
    VwcState next;
    for (auto e : st.Pp) {
        if (((Graph::bit(e.first) | Graph::bit(e.second)) & a2) == 0) next.Pp.push_back(e);
    }
    std::uint64_t vq = 0;
    for (auto [u, v] : next.Pp) vq |= Graph::bit(u) | Graph::bit(v);
    next.Pp.emplace_back(std::min(x, xp), std::max(x, xp));
    next.D = (st.D & vq) | Graph::bit(x);
    return next;
}

} // namespace

WitnessPair vwc_witness(const Graph& g, const Matching& P) {
    Matching pm = Matching::of(g, P.edges);
    if (!pm.perfect) throw precondition_error("vwc_witness: matching is not perfect");
    if (!coverage_class(g).very_well_covered)
        throw precondition_error("vwc_witness: graph is not very well-covered");

    VwcState st = vwc_rec(g, pm.edges, pm.edges.size());
    WitnessPair out;
    out.D = mask_to_vertices(st.D);
    out.P_prime = Matching::of(g, st.Pp);
    validate_witness(g, out, "vwc_witness");
    return out;
}

bool is_simplicial_vertex(const Graph& g, int v) {
    std::uint64_t closed = g.closed_mask(v);
    std::uint64_t m = closed;
    while (m) {
        int u = std::countr_zero(m) + 1;
        m &= m - 1;
        if ((g.closed_mask(u) & closed) != closed) return false;
    }
    return true;
}

std::vector<int> simplicial_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (is_simplicial_vertex(g, v)) out.push_back(v);
    return out;
}

bool is_simplicial_graph(const Graph& g) {
    std::uint64_t good = 0;
    for (int v : simplicial_vertices(g)) good |= g.closed_mask(v);
    return good == g.full_mask();
}

std::optional<std::vector<std::vector<int>>> find_simplicial_partition(const Graph& g) {
    auto roots = simplicial_vertices(g);
    std::vector<std::uint64_t> candidates;
    for (int v : roots) candidates.push_back(g.closed_mask(v));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) return std::nullopt;

    std::optional<std::vector<std::uint64_t>> parts;

    // Well-covered simplicial graphs: closed neighborhoods of simplicial
    // vertices are equal or disjoint, so greedy selection suffices.
    if (is_simplicial_graph(g) && coverage_class(g).well_covered) {
        std::vector<std::uint64_t> greedy;
        std::uint64_t covered = 0;
        for (int v : roots) {
            std::uint64_t c = g.closed_mask(v);
            if ((c & covered) == 0) {
                greedy.push_back(c);
                covered |= c;
            }
        }
        if (covered == g.full_mask()) parts = std::move(greedy);
    }

    if (!parts) {
        // Exact cover over the distinct simplexes.
        std::vector<std::uint64_t> chosen;
        std::function<bool(std::uint64_t)> rec = [&](std::uint64_t covered) -> bool {
            if (covered == g.full_mask()) return true;
            int v = std::countr_zero(~covered) + 1;
            for (auto cand : candidates) {
                if ((cand & Graph::bit(v)) && (cand & covered) == 0) {
                    chosen.push_back(cand);
                    if (rec(covered | cand)) return true;
                    chosen.pop_back();
                }
            }
            return false;
        };
        if (rec(0)) parts = std::move(chosen);
    }

    if (!parts) return std::nullopt;
    std::sort(parts->begin(), parts->end(),
              [](std::uint64_t a, std::uint64_t b) {
                  return std::countr_zero(a) < std::countr_zero(b);
              });
    std::vector<std::vector<int>> out;
    for (auto p : *parts) out.push_back(mask_to_vertices(p));
    return out;
}

namespace {

struct SimplexState {
    std::vector<std::pair<int, int>> P; // (root, partner), root first
    std::uint64_t D = 0;
    std::vector<int> roots;
};

SimplexState simplex_rec(const Graph& g, const std::vector<std::uint64_t>& parts,
                         const std::vector<int>& part_roots, std::size_t r) {
    std::uint64_t part = parts[r - 1];
    int x = part_roots[r - 1];
    if (r == 1) {
        std::uint64_t others = part & ~Graph::bit(x);
        int y = std::countr_zero(others) + 1;
        return {{{x, y}}, Graph::bit(y), {x}};
    }
    SimplexState st = simplex_rec(g, parts, part_roots, r - 1);
    std::uint64_t nd1 = neighbors_of_set(g, st.D);
    std::uint64_t rest = part & ~Graph::bit(x);
    if ((rest & ~nd1) == 0) return st; // every other simplex vertex already dominated

    int y = std::countr_zero(rest & ~nd1) + 1;
    st.P.emplace_back(x, y);
    st.D |= Graph::bit(y);
    st.roots.push_back(x);
    return st;
}

} // namespace

WitnessPair simplex_partition_witness(const Graph& g,
                                      const std::vector<std::vector<int>>& partition) {
    if (g.has_isolated_vertex())
        throw validation_error("simplex_partition_witness: graph has isolated vertices");
    if (partition.empty()) throw validation_error("simplex_partition_witness: empty partition");

    std::vector<std::uint64_t> parts;
    std::vector<int> part_roots;
    std::uint64_t covered = 0;
    for (const auto& part : partition) {
        std::uint64_t m = vertices_to_mask(g, part);
        if (m == 0) throw validation_error("simplex_partition_witness: empty part");
        if (m & covered) throw validation_error("simplex_partition_witness: parts overlap");
        covered |= m;
        int root = 0;
        std::uint64_t scan = m;
        while (scan) {
            int v = std::countr_zero(scan) + 1;
            scan &= scan - 1;
            if (g.closed_mask(v) == m && is_simplicial_vertex(g, v)) {
                root = v;
                break;
            }
        }
        if (root == 0)
            throw validation_error("simplex_partition_witness: part " + mask_to_string(m) +
                                   " is not the closed neighborhood of a simplicial vertex");
        parts.push_back(m);
        part_roots.push_back(root);
    }
    if (covered != g.full_mask())
        throw validation_error("simplex_partition_witness: parts do not cover the graph");

    SimplexState st = simplex_rec(g, parts, part_roots, parts.size());

    WitnessPair out;
    out.D = mask_to_vertices(st.D);
    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : st.P) edges.emplace_back(std::min(x, y), std::max(x, y));
    out.P_prime = Matching::of(g, edges);
    out.simplicial_roots = st.roots;
    validate_witness(g, out, "simplex_partition_witness");
    for (int x : st.roots) {
        if (!is_simplicial_vertex(g, x))
            throw std::logic_error("simplex_partition_witness: non-simplicial root");
    }
    return out;
}

} // namespace vnum
