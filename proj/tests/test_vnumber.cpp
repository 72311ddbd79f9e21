#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vnum/errors.hpp"
#include "vnum/graph_invariants.hpp"
#include "vnum/io.hpp"
#include "vnum/vnumber.hpp"

#include "test_util.hpp"

using namespace vnum;

namespace {
const MonomialIdeal example51 =
    MonomialIdeal::from_ints(3, {{5, 0, 0}, {0, 5, 0}, {0, 4, 5}, {4, 0, 5}});
const PrimeSupport p1 = PrimeSupport::of({1, 2});
const PrimeSupport p2 = PrimeSupport::of({1, 2, 3});
} // namespace

TEST_CASE("module generators of the worked example") {
    auto mg1 = quotient_module_min_gens(example51, p1);
    CHECK(mg1 == std::vector<Monomial>{Monomial::from_ints({3, 3, 5}),
                                       Monomial::from_ints({4, 4, 0})});
    auto mg2 = quotient_module_min_gens(example51, p2);
    CHECK(mg2 == std::vector<Monomial>{Monomial::from_ints({4, 4, 4})});

    CHECK(quotient_module_min_gens(MonomialIdeal::from_ints(2, {{1, 1}}),
                                   PrimeSupport::of({1})) ==
          std::vector<Monomial>{Monomial::from_ints({0, 1})});

    CHECK_THROWS_AS((void)quotient_module_min_gens(example51, PrimeSupport::of({1})),
                    invalid_prime);
}

TEST_CASE("alpha of the quotient modules") {
    CHECK(alpha_module(example51, p1) == BigInt(8));  // deg t1^4 t2^4
    CHECK(alpha_module(example51, p2) == BigInt(12)); // deg t1^4 t2^4 t3^4
    CHECK(alpha_module(MonomialIdeal::from_ints(2, {{1, 1}}), PrimeSupport::of({1})) ==
          BigInt(1));
}

TEST_CASE("local v-numbers of the worked example") {
    LocalVReport r1 = v_local(example51, p1);
    REQUIRE(r1.v_local.has_value());
    CHECK(*r1.v_local == BigInt(11));
    CHECK(*r1.witness == Monomial::from_ints({3, 3, 5}));
    CHECK(r1.alpha == BigInt(8));

    LocalVReport r2 = v_local(example51, p2);
    CHECK(*r2.v_local == BigInt(12));
    CHECK(*r2.witness == Monomial::from_ints({4, 4, 4}));

    LocalVReport r3 = v_local(MonomialIdeal::from_ints(2, {{1, 1}}), PrimeSupport::of({1}));
    CHECK(*r3.v_local == BigInt(1));
    CHECK(*r3.witness == Monomial::from_ints({0, 1}));
}

TEST_CASE("v-number") {
    VNumberResult res = v_number(example51);
    CHECK(res.v == BigInt(11));
    REQUIRE(res.per_prime.size() == 2);
    CHECK(res.per_prime[0].prime == p1);
    CHECK(res.per_prime[1].prime == p2);

    CHECK(v_number(edge_ideal(cycle_graph(5))).v == BigInt(2));
    CHECK(v_number(edge_ideal(cycle_graph(7))).v == BigInt(2));

    // prime ideals have v = 0 (f = 1 works)
    CHECK(v_number(MonomialIdeal::from_ints(2, {{1, 0}})).v == BigInt(0));
}

TEST_CASE("local v-numbers respect alpha, with equality at maximal primes") {
    for (const auto& I : testutil::small_ideal_family(2, 3, 3)) {
        auto maxp = max_primes(I);
        for (const auto& rep : v_number(I).per_prime) {
            REQUIRE(rep.v_local.has_value());
            CHECK(*rep.v_local >= rep.alpha);
            if (std::find(maxp.begin(), maxp.end(), rep.prime) != maxp.end())
                CHECK(*rep.v_local == rep.alpha);
        }
    }
}

TEST_CASE("v_oracle") {
    CHECK(v_oracle(example51, 12) == 11);
    CHECK(v_oracle(MonomialIdeal::from_ints(1, {{1}}), 1) == 0);
    CHECK(v_oracle(edge_ideal(path_graph(4)), 3) == 1);
    CHECK_THROWS_AS((void)v_oracle(example51, 5), cap_exceeded);
    CHECK_THROWS_AS((void)v_oracle(MonomialIdeal::zero(2), 3), undefined_input);
}

TEST_CASE("v_number equals v_oracle on a sampled slice of the family") {
    // the full exhaustive run is in the acceptance suite
    auto family = testutil::small_ideal_family(2, 3, 4);
    for (const auto& I : family) {
        VNumberResult res = v_number(I);
        long long v = res.v.to_long_long();
        CHECK(v_oracle(I, v + 1) == v);
    }
}

TEST_CASE("complete intersection recognition") {
    CHECK(is_complete_intersection(MonomialIdeal::from_ints(2, {{2, 0}, {0, 3}})));
    CHECK_FALSE(is_complete_intersection(
        MonomialIdeal::from_ints(2, {{2, 0}, {0, 2}, {1, 1}})));
    CHECK_THROWS_AS((void)is_complete_intersection(example51), precondition_error);
    CHECK_THROWS_AS((void)is_complete_intersection(MonomialIdeal::zero(2)), undefined_input);
}

TEST_CASE("v-number with huge exponents stays exact") {
    // (t1^(2^64)) has v = 2^64 - 1; machine words would overflow
    BigInt huge = BigInt(1LL << 62) * BigInt(4);
    std::vector<BigInt> e = {huge};
    MonomialIdeal I(1, {Monomial(e)});
    VNumberResult res = v_number(I);
    CHECK(res.v == huge - BigInt(1));
}
