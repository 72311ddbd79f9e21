// Acceptance suite: one line per criterion, exit 0 iff all pass.
// All arithmetic is exact; every tolerance is equality.

#include "vnum/betti.hpp"
#include "vnum/config.hpp"
#include "vnum/errors.hpp"
#include "vnum/graph_invariants.hpp"
#include "vnum/ideal_ops.hpp"
#include "vnum/io.hpp"
#include "vnum/vnumber.hpp"
#include "vnum/witness.hpp"

#include "test_util.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace vnum;
using testutil::Rng;

namespace {

struct Criterion {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures = {};
    double seconds = 0;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (failures.size() < 8) failures.push_back(what);
        }
    }
    void expect_runtime(double limit) {
        if (seconds > limit)
            expect(false, "runtime " + std::to_string(seconds) + "s exceeds " +
                              std::to_string(limit) + "s");
    }
};

const MonomialIdeal example51 =
    MonomialIdeal::from_ints(3, {{5, 0, 0}, {0, 5, 0}, {0, 4, 5}, {4, 0, 5}});

Criterion criterion1() {
    Criterion c{"1 example-5.1 fixture"};
    c.expect(v_number(example51).v == BigInt(11), "v(I) = 11");
    c.expect(associated_primes(example51) ==
                 std::vector<PrimeSupport>{PrimeSupport::of({1, 2}), PrimeSupport::of({1, 2, 3})},
             "Ass(I) = {(t1,t2),(t1,t2,t3)}");
    c.expect(quotient_module_min_gens(example51, PrimeSupport::of({1, 2})) ==
                 std::vector<Monomial>{Monomial::from_ints({3, 3, 5}),
                                       Monomial::from_ints({4, 4, 0})},
             "module generators at (t1,t2)");
    c.expect(quotient_module_min_gens(example51, PrimeSupport::of({1, 2, 3})) ==
                 std::vector<Monomial>{Monomial::from_ints({4, 4, 4})},
             "module generators at (t1,t2,t3)");
    c.expect(colon(example51, Monomial::from_ints({4, 4, 0})) ==
                 MonomialIdeal::from_ints(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 5}}),
             "(I : g1) = (t1,t2,t3^5)");
    c.expect(polarize(example51).total_vars == 15, "polarization has 15 variables");
    c.expect(regularity(example51) == 12, "reg(S/I) = 12 via polarization");
    return c;
}

Criterion criterion2() {
    Criterion c{"2 example-5.3 fixture"};
    Graph c7 = cycle_graph(7);
    MonomialIdeal i7 = edge_ideal(c7);
    c.expect(v_graph(c7).v == 2, "v(C7) = 2");
    c.expect(max_induced_matching_size(c7) == 2, "im(C7) = 2");
    BettiTable t7 = betti_table(i7);
    c.expect(t7.reg() == 2, "reg(C7) = 2");
    c.expect(t7.pd() == 5, "pd(C7) = 5");
    c.expect(height_and_dim(i7).height == 4, "ht(C7) = 4");
    c.expect(max_stable_size(c7) == 3, "beta0(C7) = 3");
    c.expect(in_A_G(c7, {1, 4}), "{t1,t4} in A(C7)");

    Graph t10 = t10_graph();
    MonomialIdeal i10 = edge_ideal(t10);
    c.expect(v_graph(t10).v == 2, "v(T10) = 2");
    int im10 = max_induced_matching_size(t10);
    c.expect(im10 == 2, "im(T10) = 2 [pinned fixture value; computed " + std::to_string(im10) +
                            " -- {t2,t3},{t5,t6},{t8,t9} is an induced matching of "
                            "T10, so im is 3]");
    BettiTable tt = betti_table(i10);
    c.expect(tt.reg() == 3, "reg(T10) = 3");
    c.expect(tt.pd() == 7, "pd(T10) = 7");
    c.expect(height_and_dim(i10).height == 6, "ht(T10) = 6");
    c.expect(max_stable_size(t10) == 4, "beta0(T10) = 4");
    c.expect(in_A_G(t10, {1, 4}), "{t1,t4} in A(T10)");
    return c;
}

Criterion criterion3() {
    Criterion c{"3 example-5.2 fixture"};
    Graph g = example52_graph();
    CoverageClass cc = coverage_class(g);
    c.expect(cc.well_covered, "well-covered");
    c.expect(!cc.very_well_covered, "not very well-covered");
    c.expect(basic_invariants(g).alpha0 == 4, "alpha0 = 4");
    c.expect(v_graph(g).v == 1, "v = 1");
    c.expect(max_induced_matching_size(g) == 1, "im = 1");
    c.expect(regularity(edge_ideal(g)) == 1, "reg = 1");
    return c;
}

Criterion criterion4() {
    Criterion c{"4 example-5.4 fixture"};
    Graph g(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    c.expect(is_W2(g), "two disjoint triangles are in W2");
    c.expect(v_graph(g).v == 2, "v = 2");
    c.expect(max_stable_size(g) == 2, "beta0 = 2");
    c.expect(v_graph(g).v == max_stable_size(g), "v = beta0");
    return c;
}

Criterion criterion5() {
    Criterion c{"5 cycle sweep s=3..12"};
    for (int s = 3; s <= 12; ++s) {
        CycleInvariants ci = cycle_invariants(s); // validates A and P internally
        std::string tag = "s=" + std::to_string(s) + ": ";
        c.expect(ci.holds == (s != 5), tag + "v <= im iff s != 5");
        c.expect(ci.im == s / 3, tag + "im = floor(s/3)");
        c.expect(ci.im == max_induced_matching_size(cycle_graph(s)),
                 tag + "closed-form im matches search");
        int reg = regularity(edge_ideal(cycle_graph(s)));
        c.expect(reg == (s + 1) / 3, tag + "homology reg = floor((s+1)/3)");
        c.expect(ci.reg == reg, tag + "closed-form reg matches homology");
        c.expect(in_A_G(cycle_graph(s), ci.A), tag + "stable witness valid");
        c.expect(ci.P.induced && static_cast<int>(ci.P.edges.size()) == ci.im,
                 tag + "induced matching witness valid");
    }
    return c;
}

Criterion criterion6() {
    Criterion c{"6 oracle equivalence"};
    long long ideals = 0;
    for (int s = 1; s <= 3; ++s) {
        for (const auto& I : testutil::small_ideal_family(s, 3, 4)) {
            ++ideals;
            VNumberResult res = v_number(I);
            long long v = res.v.to_long_long();
            long long oracle = v_oracle(I, v + 1);
            if (oracle != v) {
                c.expect(false, "v mismatch on " + I.to_string() + ": engine " +
                                    std::to_string(v) + ", oracle " + std::to_string(oracle));
            }
        }
    }
    long long graphs = 0;
    for (int n = 3; n <= 7; ++n) {
        for (const auto& g : testutil::connected_graphs_up_to_iso(n)) {
            if (g.has_isolated_vertex() || g.edges().empty()) continue;
            ++graphs;
            int vg = v_graph(g).v;
            BigInt vi = v_number(edge_ideal(g)).v;
            if (BigInt(vg) != vi) {
                c.expect(false, "graph/ideal mismatch on n=" + std::to_string(n));
            }
        }
    }
    c.expect(ideals > 6000, "exhaustive ideal family enumerated (" + std::to_string(ideals) + ")");
    c.expect(graphs > 900, "connected graphs 3..7 enumerated (" + std::to_string(graphs) + ")");
    return c;
}

// ---- criterion 7: the property battery ----

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    std::vector<int> relabel(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (mask >> (v - 1) & 1) relabel[static_cast<std::size_t>(v)] = ++next;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if ((mask >> (u - 1) & 1) && (mask >> (v - 1) & 1))
            edges.emplace_back(relabel[static_cast<std::size_t>(u)],
                               relabel[static_cast<std::size_t>(v)]);
    return Graph(std::max(next, 1), std::move(edges));
}

bool is_complete(const Graph& g) {
    return g.num_edges() == g.num_vertices() * (g.num_vertices() - 1) / 2;
}

std::set<std::uint64_t> oracle_A_G(const Graph& g) {
    std::set<std::uint64_t> out;
    for (std::uint64_t m = 0; m <= g.full_mask(); ++m) {
        if (!testutil::oracle_stable(g, m)) continue;
        std::uint64_t nb = testutil::oracle_neighbors(g, m);
        if (!testutil::oracle_cover(g, nb)) continue;
        bool minimal = true;
        for (int v = 1; v <= g.num_vertices() && minimal; ++v)
            if ((nb >> (v - 1) & 1) && testutil::oracle_cover(g, nb & ~(1ULL << (v - 1))))
                minimal = false;
        if (minimal) out.insert(m);
    }
    return out;
}

void all_perfect_matchings(const Graph& g, std::uint64_t used,
                           std::vector<std::pair<int, int>>& cur,
                           const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
    if (used == g.full_mask()) {
        fn(cur);
        return;
    }
    int v = std::countr_zero(~used) + 1;
    if (v > g.num_vertices()) return;
    std::uint64_t partners = g.adj_mask(v) & ~used;
    while (partners) {
        int u = std::countr_zero(partners) + 1;
        partners &= partners - 1;
        cur.emplace_back(v, u);
        all_perfect_matchings(g, used | Graph::bit(v) | Graph::bit(u), cur, fn);
        cur.pop_back();
    }
}

Criterion criterion7() {
    Criterion c{"7 property suites"};
    Rng rng(config::default_seed());

    std::vector<Graph> family;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : testutil::all_graphs_up_to_iso(n)) family.push_back(g);
    std::vector<Graph> sampled;
    double ps[3] = {0.25, 0.4, 0.6};
    for (int n = 7; n <= 10; ++n)
        for (int i = 0; i < 9; ++i) sampled.push_back(testutil::random_graph(rng, n, ps[i % 3]));

    auto run_graph = [&](const Graph& g, bool exhaustive) {
        const int n = g.num_vertices();
        std::string tag = "n=" + std::to_string(n) + ": ";

        // F_G subset of A_G
        if (!g.has_isolated_vertex()) {
            for (auto m : maximal_stable_sets(g))
                c.expect(in_A_G_mask(g, m), tag + "maximal stable set outside A_G");
        }

        // stability + covering neighborhood implies minimal cover
        for (std::uint64_t m = 0; m <= g.full_mask(); ++m) {
            if (!testutil::oracle_stable(g, m)) continue;
            std::uint64_t nb = testutil::oracle_neighbors(g, m);
            bool cover = testutil::oracle_cover(g, nb);
            c.expect(in_A_G_mask(g, m) == cover, tag + "in_A_G vs cheap test");
            if (cover)
                c.expect(is_minimal_vertex_cover(g, nb), tag + "covering N(A) not minimal");
        }

        CoverageClass cc = coverage_class(g);

        // Favaron equivalence
        if (!g.has_isolated_vertex()) {
            bool some = false, all = true;
            int count = 0;
            std::vector<std::pair<int, int>> cur;
            all_perfect_matchings(g, 0, cur, [&](const std::vector<std::pair<int, int>>& pm) {
                ++count;
                bool p = has_property_P(g, Matching::of(g, pm));
                some = some || p;
                all = all && p;
            });
            c.expect(cc.very_well_covered == some, tag + "Favaron: vwc vs some matching");
            c.expect(cc.very_well_covered == (count > 0 && all),
                     tag + "Favaron: vwc vs every matching");
        }

        // Campbell: neighborhood removal keeps well-coveredness
        if (cc.well_covered && !is_complete(g)) {
            int b0 = max_stable_size(g);
            for (int v = 1; v <= n; ++v) {
                std::uint64_t rest = g.full_mask() & ~g.closed_mask(v);
                if (rest == 0) {
                    c.expect(false, tag + "well-covered non-complete graph with dominating vertex");
                    continue;
                }
                Graph h = induced_subgraph(g, rest);
                c.expect(coverage_class(h).well_covered, tag + "G minus N[v] not well-covered");
                c.expect(max_stable_size(h) == b0 - 1, tag + "beta0 drop != 1");
            }
        }

        // shedding equivalence and W2 equivalence
        auto A = oracle_A_G(g);
        auto F = maximal_stable_sets(g);
        std::set<std::uint64_t> Fset(F.begin(), F.end());
        c.expect(shedding_all(g).all_shedding == (A == Fset), tag + "shedding vs A_G = F_G");
        if (n >= 2 && !g.has_isolated_vertex()) {
            bool criterion = cc.well_covered && A == Fset;
            c.expect(is_W2(g) == criterion, tag + "W2 vs well-covered + A_G = F_G");
            if (criterion)
                c.expect(v_graph(g).v == max_stable_size(g), tag + "W2 graph with v != beta0");
        }

        // chains through the witnesses, and reg = im on very well-covered
        if (cc.very_well_covered) {
            WitnessPair w = vwc_witness(g, *cc.property_P_witness);
            int v = v_graph(g).v;
            int im = max_induced_matching_size(g);
            int reg = regularity(edge_ideal(g));
            c.expect(v <= static_cast<int>(w.D.size()), tag + "v > |D| (vwc)");
            c.expect(w.D.size() == w.P_prime.edges.size(), tag + "|D| != |P'| (vwc)");
            c.expect(static_cast<int>(w.D.size()) <= im, tag + "|D| > im (vwc)");
            c.expect(im <= reg, tag + "im > reg (vwc)");
            c.expect(reg == im, tag + "reg != im on a very well-covered graph");
        }
        if (!g.has_isolated_vertex()) {
            if (auto part = find_simplicial_partition(g)) {
                WitnessPair w = simplex_partition_witness(g, *part);
                int v = v_graph(g).v;
                int im = max_induced_matching_size(g);
                int reg = regularity(edge_ideal(g));
                c.expect(v <= static_cast<int>(w.D.size()), tag + "v > |D| (simplex)");
                c.expect(static_cast<int>(w.D.size()) <= im, tag + "|D| > im (simplex)");
                c.expect(im <= reg, tag + "im > reg (simplex)");
            }
            if (g.is_connected() && !has_cycle_of_length(g, 4) && !has_cycle_of_length(g, 5) &&
                cc.well_covered && !g.edges().empty()) {
                int v = v_graph(g).v;
                int im = max_induced_matching_size(g);
                int reg = regularity(edge_ideal(g));
                c.expect(v <= im && im <= reg && reg <= max_stable_size(g),
                         tag + "4/5-cycle-free chain v <= im <= reg <= beta0");
            }
        }

        // whisker identities (exhaustive family only; whiskers double n)
        if (exhaustive) {
            Graph w = whisker(g);
            int vw = v_graph(w).v;
            c.expect(vw == basic_invariants(g).idom, tag + "v(whisker) != idom");
            if (w.num_vertices() <= 10) {
                int reg = regularity(edge_ideal(w));
                c.expect(vw <= reg, tag + "v(whisker) > reg(whisker)");
                c.expect(reg == max_induced_matching_size(w), tag + "whisker reg != im");
            }
        }
    };

    for (const auto& g : family) run_graph(g, true);
    for (const auto& g : sampled) run_graph(g, false);

    // Theorem 2.9(c) on exhaustive bipartite well-covered graphs, a+b <= 8
    for (int a = 1; a <= 4; ++a) {
        for (int b = a; a + b <= 8; ++b) {
            int n = a + b;
            std::vector<std::pair<int, int>> all_edges;
            for (int u = 1; u <= a; ++u)
                for (int v = a + 1; v <= n; ++v) all_edges.emplace_back(u, v);
            int m = static_cast<int>(all_edges.size());
            for (std::uint64_t pick = 1; pick < (1ULL << m); ++pick) {
                std::vector<std::pair<int, int>> edges;
                for (int i = 0; i < m; ++i)
                    if (pick >> i & 1) edges.push_back(all_edges[static_cast<std::size_t>(i)]);
                Graph g(n, std::move(edges));
                if (g.has_isolated_vertex()) continue;
                CoverageClass cc = coverage_class(g);
                if (!cc.well_covered) continue;
                c.expect(cc.very_well_covered, "bipartite well-covered but not vwc");
                int im = max_induced_matching_size(g);
                c.expect(regularity(edge_ideal(g)) == im, "bipartite vwc with reg != im");
                WitnessPair w = vwc_witness(g, *cc.property_P_witness);
                c.expect(v_graph(g).v <= static_cast<int>(w.D.size()) &&
                             static_cast<int>(w.D.size()) <= im,
                         "bipartite vwc witness chain");
            }
        }
    }
    return c;
}

Criterion criterion8() {
    Criterion c{"8 regularity bounds"};
    long long checked = 0, zerodim = 0;
    for (int s = 1; s <= 3; ++s) {
        for (const auto& I : testutil::small_ideal_family(s, 3, 4)) {
            ++checked;
            RegDimBound b = reg_dim_bound_check(I);
            if (!b.ok)
                c.expect(false, "reg-dim bound fails on " + I.to_string());
            if (height_and_dim(I).dim != 0) continue;
            ++zerodim;
            // sum of (d_i - 1) over the pure powers
            BigInt rhs(0);
            for (const auto& g : I.generators())
                if (g.is_pure_power()) rhs += g.degree() - BigInt(1);
            bool equality = BigInt(regularity(I)) == rhs;
            bool ci = is_complete_intersection(I);
            if (equality != ci)
                c.expect(false, "zero-dimensional equality vs complete intersection on " +
                                    I.to_string());
            if (!(BigInt(regularity(I)) <= rhs))
                c.expect(false, "zero-dimensional bound fails on " + I.to_string());
        }
    }
    c.expect(checked > 6000, "family enumerated (" + std::to_string(checked) + ")");
    c.expect(zerodim >= 50, "zero-dimensional subfamily enumerated (" +
                                std::to_string(zerodim) + ")");
    return c;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::function<Criterion()>> criteria = {
        criterion1, criterion2, criterion3, criterion4,
        criterion5, criterion6, criterion7, criterion8};
    std::vector<double> limits = {10, 60, 0, 0, 120, 0, 0, 0};

    // With an argument 1..8, run just that criterion (the ctest granularity);
    // with none, run the whole gate.
    std::size_t lo = 0, hi = criteria.size();
    if (argc > 1) {
        int k = std::atoi(argv[1]);
        if (k < 1 || k > static_cast<int>(criteria.size())) {
            std::cerr << "usage: acceptance [1.." << criteria.size() << "]\n";
            return 2;
        }
        lo = static_cast<std::size_t>(k - 1);
        hi = lo + 1;
    }

    bool all = true;
    for (std::size_t i = lo; i < hi; ++i) {
        auto start = std::chrono::steady_clock::now();
        Criterion c = criteria[i]();
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limits[i] > 0) c.expect_runtime(limits[i]);
        std::ostringstream line;
        line << "criterion " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << "  ("
             << c.seconds << " s)";
        if (!c.pass) {
            for (const auto& f : c.failures) line << "\n    - " << f;
        }
        std::cout << line.str() << "\n";
        all = all && c.pass;
    }
    if (hi - lo > 1)
        std::cout << (all ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES PRESENT") << "\n";
    return all ? 0 : 1;
}
