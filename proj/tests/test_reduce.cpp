#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adem/fixtures.hpp"
#include "adem/reduce.hpp"

using namespace adem;

namespace {

template <class R>
void require_contraction_identities(const ContractionT<R>& r) {
    const int D = r.top_dim();
    for (int n = 0; n <= D; ++n) {
        const std::size_t m = r.f[n].cols();
        CHECK(r.f[n] * r.g[n] == Mat<R>::identity(r.betti(n)));
        Mat<R> h(m, m);
        if (n >= 1) h = h + r.phi[n - 1] * r.d[n];
        if (n + 1 <= D) h = h + r.d[n + 1] * r.phi[n];
        CHECK(h == r.g[n] * r.f[n] - Mat<R>::identity(m));
        CHECK((r.phi[n] * r.g[n]).is_zero());
        if (n + 1 <= D) CHECK((r.f[n + 1] * r.phi[n]).is_zero());
        if (n + 1 <= D) CHECK((r.phi[n + 1] * r.phi[n]).is_zero());
    }
}

}  // namespace

TEST_CASE("smith normal form basics") {
    IntMatrix a(1, 1);
    a(0, 0) = 2;
    SnfResult sa = smith_normal_form(a);
    CHECK(sa.S(0, 0) == 2);
    CHECK(sa.rank == 1);

    IntMatrix b(2, 2);
    b(0, 0) = 1;
    SnfResult sb = smith_normal_form(b);
    CHECK(sb.S == b);
    CHECK(sb.rank == 1);

    // UAV = S and the tracked inverses really invert
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) = static_cast<long>(rng() % 9) - 4;
        SnfResult s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.S);
        CHECK(s.U * s.Uinv == IntMatrix::identity(3));
        CHECK(s.V * s.Vinv == IntMatrix::identity(4));
        for (std::size_t t = 1; t < s.rank; ++t)
            CHECK(s.S(t, t) % s.S(t - 1, t - 1) == 0);
    }
}

TEST_CASE("boundary matrix of the hollow triangle") {
    const SimplicialSet K = build_complex("hollow", {{0, 1}, {0, 2}, {1, 2}});
    const IntMatrix d1 = boundary_matrix<ZRing>(K, 1);
    const SnfResult s = smith_normal_form(d1);
    CHECK(s.rank == 2);
    for (std::size_t t = 0; t < s.rank; ++t) CHECK(s.S(t, t) == 1);
}

TEST_CASE("homology fixtures via SNF") {
    const HomologySummary s2 = homology(boundary_delta(3), false);
    CHECK(s2.betti == std::vector<std::size_t>{1, 0, 1});
    const HomologySummary d3 = homology(delta(3), false);
    CHECK(d3.betti == std::vector<std::size_t>{1, 0, 0, 0});
    const HomologySummary rp = homology(rp2_6(), false);
    CHECK(rp.betti == std::vector<std::size_t>{1, 0, 0});
    REQUIRE(rp.torsion[1].size() == 1);
    CHECK(rp.torsion[1][0] == 2);
    CHECK(homology(rp2_6(), true).betti == std::vector<std::size_t>{1, 1, 1});
    CHECK(homology(torus_7(), false).betti == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("contraction identities and betti ranks") {
    for (const SimplicialSet& K :
         {delta(2), boundary_delta(3), torus_7()}) {
        const auto rz = contraction<ZRing>(K);
        require_contraction_identities(rz);
        const auto h = homology(K, false);
        for (int n = 0; n <= rz.top_dim(); ++n) CHECK(rz.betti(n) == h.betti[n]);
        require_contraction_identities(contraction<Z2Ring>(K));
    }
}

TEST_CASE("fundamental cycle of the 2-sphere") {
    const SimplicialSet K = boundary_delta(3);
    const auto r = contraction<ZRing>(K);
    REQUIRE(r.betti(2) == 1);
    // g maps the generator to a cycle hitting all four triangles with +-1
    CHECK((r.d[2] * r.g[2]).is_zero());
    for (std::size_t x = 0; x < 4; ++x)
        CHECK((r.g[2](x, 0) == 1 || r.g[2](x, 0) == -1));
}

TEST_CASE("torsion aborts the integral contraction") {
    bool caught = false;
    try {
        contraction<ZRing>(rp2_6());
    } catch (const TorsionError& e) {
        caught = true;
        CHECK(e.degree() == 1);
        CHECK(e.coefficient() == 2);
    }
    CHECK(caught);
}

TEST_CASE("dual contraction properties") {
    const SimplicialSet K = delta(4);
    const auto r = contraction<ZRing>(K);
    std::mt19937_64 rng(17);
    for (int s = 0; s < 100; ++s) {
        const int n = static_cast<int>(rng() % 4);
        const auto b = random_cochain<ZRing>(K, n, rng());
        const auto c = coboundary(b);
        CHECK(coboundary(phi_star(r, c)) == c);  // c = delta phi*(c)
        for (const auto& coord : f_star(r, c)) CHECK(coord == 0);
    }
    // homotopy identity on cochains: phi* delta + delta phi* = 1 - g* f*
    for (int n = 0; n <= 4; ++n) {
        const auto c = random_cochain<ZRing>(K, n, 1000 + n);
        Cochain<ZRing> lhs = phi_star(r, coboundary(c));
        if (n >= 1) lhs += coboundary(phi_star(r, c));
        Cochain<ZRing> rhs = c;
        const auto gf = g_star(r, n, f_star(r, c));
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs.at(k) -= gf.at(k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sq matrix basics") {
    // contractible: empty domain
    Reducer rd(delta(3));
    const Mod2Matrix m = rd.sq_matrix(2, 2, true);
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 0);

    // S^2 x S^2: Sq^2 on H^2 is the cup-square pairing, which vanishes mod 2
    // for the hyperbolic form; cross-checked against the direct cup matrix.
    Reducer rs(s2_x_s2());
    const Mod2Matrix sq = rs.sq_matrix(2, 2, true);
    REQUIRE(sq.cols() == 2);
    CHECK(sq.is_zero());
    Mod2Matrix direct(rs.ctr2().betti(4), rs.ctr2().betti(2));
    for (std::size_t j = 0; j < 2; ++j) {
        const auto c = g_star_generator(rs.ctr2(), 2, j);
        const auto col = f_star(rs.ctr2(), cup_direct(c, c));
        for (std::size_t rr = 0; rr < col.size(); ++rr) direct(rr, j) = col[rr];
    }
    CHECK(sq == direct);
    // but the mixed cup pairing on H^2 x H^2 is nonsingular
    Mod2Matrix pairing(rs.ctr2().betti(4), 0);
    (void)pairing;
    const auto c0 = g_star_generator(rs.ctr2(), 2, 0);
    const auto c1 = g_star_generator(rs.ctr2(), 2, 1);
    const auto mixed = f_star(rs.ctr2(), cup_direct(c0, c1));
    bool nonzero = false;
    for (const auto& v : mixed) nonzero |= (v != 0);
    CHECK(nonzero);
}

TEST_CASE("kernel generators over Z/2") {
    Mod2Matrix zero(2, 3);
    CHECK(mod2_kernel_basis(zero).size() == 3);
    CHECK(mod2_kernel_basis(Mod2Matrix::identity(3)).empty());
    Mod2Matrix row(1, 2);
    row(0, 0) = 1;
    row(0, 1) = 1;
    const auto k = mod2_kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("psi basics") {
    // H^2 = 0: empty result
    Reducer rd(delta(4));
    const AdemResult empty = rd.psi(2);
    CHECK(empty.hq_rank == 0);
    CHECK(empty.kernel.empty());
    CHECK(empty.classes.empty());

    CHECK_THROWS_AS(rd.psi(1), std::invalid_argument);

    // torus: Sq^2 = 0 on H^2, kernel is everything, w lives in C^5 = 0
    Reducer rt(torus_9());
    const AdemResult t = rt.psi(2);
    CHECK(t.hq_rank == 1);
    CHECK(t.kernel.size() == 1);
    REQUIRE(t.w.size() == 1);
    CHECK(t.w[0].degree() == 5);
    for (const auto& w : t.w) CHECK(coboundary(w).is_zero());

    // deterministic across fresh pipelines
    Reducer rt2(torus_9());
    const AdemResult t2 = rt2.psi(2);
    CHECK(t.kernel == t2.kernel);
    CHECK(t.classes == t2.classes);
    CHECK(t.indeterminacy == t2.indeterminacy);

    // torsion propagates
    Reducer rp(rp2_6());
    CHECK_THROWS_AS(rp.psi(2), TorsionError);
}
