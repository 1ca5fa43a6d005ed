#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adem/cup.hpp"
#include "adem/fixtures.hpp"

using namespace adem;

TEST_CASE("cup_0 equals the direct front/back formula on Delta^4") {
    const SimplicialSet K = delta(4);
    CupCalculator<ZRing> calc(K);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n + m <= 4; ++n) {
            const auto c = random_cochain<ZRing>(K, m, 31 * m + n);
            const auto cp = random_cochain<ZRing>(K, n, 57 * n + m);
            CHECK(calc.cup(c, cp, 0) == cup_direct(c, cp));
        }
}

TEST_CASE("cup of 1-cochains on a 2-simplex") {
    const SimplicialSet K = delta(2);
    CupCalculator<Z2Ring> calc(K);
    const auto c = random_cochain<Z2Ring>(K, 1, 3);
    const auto cp = random_cochain<Z2Ring>(K, 1, 4);
    const Simplex x{0, 1, 2};
    CHECK(calc.cup_value(c, cp, 0, x) ==
          Z2Ring::mul(c(Simplex{0, 1}), cp(Simplex{1, 2})));
}

TEST_CASE("cup-nullity for cocycles") {
    const SimplicialSet K = boundary_delta(3);
    CupCalculator<Z2Ring> calc(K);
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto c = random_cocycle<Z2Ring>(K, 1, s);
        const auto cp = random_cocycle<Z2Ring>(K, 2, s + 100);
        // r exceeds deg c
        CHECK(calc.cup(c, cp, 2).is_zero());
        CHECK(calc.cup(cp, c, 2).is_zero());
        CHECK(calc.cup(c, c, 2).is_zero());
    }
}

TEST_CASE("cup_q of a q-cocycle with itself is the pointwise square mod 2") {
    for (int q = 0; q <= 2; ++q) {
        const SimplicialSet K = delta(q + 1);
        CupCalculator<Z2Ring> calc(K);
        for (std::uint64_t s = 0; s < 8; ++s) {
            const auto c = random_cocycle<Z2Ring>(K, q, s);
            for (const auto& x : K.simplices(q))
                CHECK(calc.cup_value(c, c, q, x) == Z2Ring::mul(c(x), c(x)));
        }
    }
}

TEST_CASE("negative cup index is rejected") {
    const SimplicialSet K = delta(2);
    CupCalculator<Z2Ring> calc(K);
    const auto c = random_cochain<Z2Ring>(K, 1, 1);
    CHECK_THROWS_AS(calc.cup(c, c, -1), std::invalid_argument);
}

TEST_CASE("degree bookkeeping") {
    const SimplicialSet K = delta(5);
    CupCalculator<Z2Ring> calc(K);
    const auto c = random_cochain<Z2Ring>(K, 2, 9);
    const auto cp = random_cochain<Z2Ring>(K, 3, 10);
    for (int i = 0; i <= 4; ++i)
        CHECK(calc.cup(c, cp, i).degree() == 5 - i);
}

TEST_CASE("eq1 residual vanishes") {
    const SimplicialSet K = boundary_delta(3);
    CupCalculator<Z2Ring> calc(K);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto c = random_cochain<Z2Ring>(K, 1, s);
        const auto cp = random_cochain<Z2Ring>(K, 1, s + 50);
        CHECK(eq1_residual(calc, c, cp, 1).is_zero());
    }
    // cocycle specialization: delta(c u_i c') = c u_{i-1} c' + c' u_{i-1} c
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto c = random_cocycle<Z2Ring>(K, 1, s);
        const auto cp = random_cocycle<Z2Ring>(K, 1, s + 9);
        Cochain<Z2Ring> lhs = coboundary(calc.cup(c, cp, 1));
        Cochain<Z2Ring> rhs = calc.cup(c, cp, 0);
        rhs += calc.cup(cp, c, 0);
        CHECK(lhs == rhs);
    }
    // out-of-range specialization: only the delta terms remain
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto c = random_cochain<Z2Ring>(K, 1, s + 3);
        const auto cp = random_cochain<Z2Ring>(K, 1, s + 77);
        const int i = 3;  // both cup_{i-1} terms out of range for 1-cochains
        Cochain<Z2Ring> r = coboundary(calc.cup(c, cp, i));
        r += calc.cup(coboundary(c), cp, i);
        r += calc.cup(c, coboundary(cp), i);
        CHECK(r.is_zero());
    }
    CHECK_THROWS_AS(eq1_residual(calc, random_cochain<Z2Ring>(K, 1, 0),
                                 random_cochain<Z2Ring>(K, 1, 1), 0),
                    std::invalid_argument);
}

TEST_CASE("sq_cochain") {
    const SimplicialSet K = boundary_delta(3);
    CupCalculator<Z2Ring> calc(K);
    const auto c = random_cocycle<Z2Ring>(K, 2, 4);
    // i = j: the cup square
    CHECK(sq_cochain(calc, 2, c) == calc.cup(c, c, 0));
    // i > j: zero by cup-nullity
    CHECK(sq_cochain(calc, 3, c).is_zero());
    // non-cocycles are rejected
    const SimplicialSet K4 = delta(4);
    CupCalculator<Z2Ring> calc4(K4);
    Cochain<Z2Ring> bad(K4, 1);
    bad.at(0) = 1;
    REQUIRE_FALSE(coboundary(bad).is_zero());
    CHECK_THROWS_AS(sq_cochain(calc4, 1, bad), std::invalid_argument);
}

TEST_CASE("iterated cup") {
    const SimplicialSet K = delta(5);
    CupCalculator<Z2Ring> calc(K);
    const auto c = random_cocycle<Z2Ring>(K, 2, 12);
    // degrees: q = 2, indices [0,1,2] -> q+3
    const auto w = calc.iterated_cup(c, {0, 1, 2});
    CHECK(w.degree() == 5);
    // the grouping is (c u_0 c) u_1 (c u_2 c)
    CHECK(w == calc.cup(calc.cup(c, c, 0), calc.cup(c, c, 2), 1));
    // any out-of-range stage gives the zero cochain of the bookkept degree
    const auto z = calc.iterated_cup(c, {0, 1, 3});
    CHECK(z.degree() == 4);
    CHECK(z.is_zero());
    // zero cochain in, zero out
    const Cochain<Z2Ring> nil(K, 2);
    CHECK(calc.iterated_cup(nil, {0, 1, 2}).is_zero());
}
