#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vnum/errors.hpp"
#include "vnum/graph_invariants.hpp"
#include "vnum/io.hpp"
#include "vnum/witness.hpp"

#include "test_util.hpp"

using namespace vnum;

namespace {

void check_witness_chain(const Graph& g, const WitnessPair& w) {
    // v <= |D| = |P'| <= im  (the witness self-validates its A_G membership)
    int v = v_graph(g).v;
    int im = max_induced_matching_size(g);
    CHECK(v <= static_cast<int>(w.D.size()));
    CHECK(w.D.size() == w.P_prime.edges.size());
    CHECK(static_cast<int>(w.P_prime.edges.size()) <= im);
    CHECK(in_A_G(g, w.D));
}

} // namespace

TEST_CASE("vwc witness on a single edge") {
    Graph k2(2, {{1, 2}});
    WitnessPair w = vwc_witness(k2, Matching::of(k2, {{1, 2}}));
    CHECK(w.D == std::vector<int>{1});
    CHECK(w.P_prime.edges == std::vector<std::pair<int, int>>{{1, 2}});
    check_witness_chain(k2, w);
}

TEST_CASE("vwc witness on C4") {
    Graph c4 = cycle_graph(4);
    WitnessPair w = vwc_witness(c4, Matching::of(c4, {{1, 2}, {3, 4}}));
    CHECK(w.D.size() == 1);
    check_witness_chain(c4, w);
}

TEST_CASE("vwc witness on whiskers") {
    for (int base = 3; base <= 6; ++base) {
        Graph g = whisker(cycle_graph(base));
        std::vector<std::pair<int, int>> pm;
        for (int v = 1; v <= base; ++v) pm.emplace_back(v, base + v);
        WitnessPair w = vwc_witness(g, Matching::of(g, pm));
        check_witness_chain(g, w);
    }
    // whisker(C3) with the pendant matching: one pendant edge suffices
    Graph w3 = whisker(complete_graph(3));
    WitnessPair w = vwc_witness(w3, Matching::of(w3, {{1, 4}, {2, 5}, {3, 6}}));
    CHECK(w.D.size() == 1);
}

TEST_CASE("vwc witness depends on matching order but always validates") {
    Graph c4 = cycle_graph(4);
    WitnessPair a = vwc_witness(c4, Matching::of(c4, {{1, 2}, {3, 4}}));
    WitnessPair b = vwc_witness(c4, Matching::of(c4, {{3, 4}, {1, 2}}));
    check_witness_chain(c4, a);
    check_witness_chain(c4, b);
}

TEST_CASE("vwc witness preconditions") {
    Graph c5 = cycle_graph(5);
    CHECK_THROWS_AS((void)vwc_witness(c5, Matching::of(c5, {{1, 2}})), precondition_error);
    Graph c6 = cycle_graph(6); // well-covered? no: beta0 alternates
    CHECK_THROWS_AS((void)vwc_witness(c6, Matching::of(c6, {{1, 2}, {3, 4}, {5, 6}})),
                    precondition_error);
}

TEST_CASE("vwc witness across all very well-covered graphs up to 7 vertices") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& g : testutil::all_graphs_up_to_iso(n)) {
            CoverageClass cc = coverage_class(g);
            if (!cc.very_well_covered) continue;
            WitnessPair w = vwc_witness(g, *cc.property_P_witness);
            check_witness_chain(g, w);
        }
    }
}

TEST_CASE("simplicial vertices") {
    CHECK(is_simplicial_vertex(complete_graph(4), 1));
    CHECK_FALSE(is_simplicial_vertex(cycle_graph(4), 1));
    CHECK(simplicial_vertices(whisker(complete_graph(3))) == std::vector<int>{4, 5, 6});
    CHECK(simplicial_vertices(cycle_graph(7)).empty());
    CHECK(is_simplicial_graph(whisker(complete_graph(3))));
    CHECK_FALSE(is_simplicial_graph(cycle_graph(7)));
}

TEST_CASE("finding simplicial partitions") {
    auto part = find_simplicial_partition(whisker(complete_graph(3)));
    REQUIRE(part.has_value());
    CHECK(*part == std::vector<std::vector<int>>{{1, 4}, {2, 5}, {3, 6}});

    CHECK_FALSE(find_simplicial_partition(cycle_graph(7)).has_value());

    auto k4 = find_simplicial_partition(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(*k4 == std::vector<std::vector<int>>{{1, 2, 3, 4}});

    // two disjoint triangles: two simplexes
    Graph tt(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    auto p = find_simplicial_partition(tt);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});

    // non-well-covered fallback path: P3 has no partition, P4 does
    CHECK_FALSE(find_simplicial_partition(path_graph(3)).has_value());
    auto p4 = find_simplicial_partition(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(*p4 == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
}

TEST_CASE("simplex partition witness") {
    Graph k2(2, {{1, 2}});
    WitnessPair w = simplex_partition_witness(k2, {{1, 2}});
    CHECK(w.D.size() == 1);
    CHECK(w.P_prime.edges == std::vector<std::pair<int, int>>{{1, 2}});
    REQUIRE(w.simplicial_roots.has_value());
    check_witness_chain(k2, w);

    Graph tt(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    WitnessPair wt = simplex_partition_witness(tt, {{1, 2, 3}, {4, 5, 6}});
    CHECK(wt.D.size() == 2);
    CHECK(wt.P_prime.edges.size() == 2);
    check_witness_chain(tt, wt);

    Graph w3 = whisker(complete_graph(3));
    WitnessPair ww = simplex_partition_witness(w3, {{1, 4}, {2, 5}, {3, 6}});
    check_witness_chain(w3, ww);
    for (int x : *ww.simplicial_roots) CHECK(is_simplicial_vertex(w3, x));

    CHECK_THROWS_AS((void)simplex_partition_witness(tt, {{1, 2, 3}}), validation_error);
    CHECK_THROWS_AS((void)simplex_partition_witness(tt, {{1, 2, 3}, {4, 5}, {6}}),
                    validation_error);
    Graph iso(3, {{1, 2}});
    CHECK_THROWS_AS((void)simplex_partition_witness(iso, {{1, 2}, {3}}), validation_error);
    // a part that is not a simplex
    CHECK_THROWS_AS((void)simplex_partition_witness(cycle_graph(4), {{1, 2, 3, 4}}),
                    validation_error);
}

TEST_CASE("simplex partition witness across all partitionable graphs up to 7 vertices") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& g : testutil::all_graphs_up_to_iso(n)) {
            if (g.has_isolated_vertex()) continue;
            auto part = find_simplicial_partition(g);
            if (!part) continue;
            WitnessPair w = simplex_partition_witness(g, *part);
            check_witness_chain(g, w);
            REQUIRE(w.simplicial_roots.has_value());
            for (int x : *w.simplicial_roots) CHECK(is_simplicial_vertex(g, x));
        }
    }
}
