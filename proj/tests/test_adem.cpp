#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adem/adem_ops.hpp"
#include "adem/fixtures.hpp"

using namespace adem;

namespace {
std::size_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

TEST_CASE("semidirect product structure") {
    // a1 a1 = identity (chi fixes nothing to twist on (0,0))
    CHECK((kA1 * kA1).is_identity());
    // a1 a2 = ((0,1), 1): the chi-swap turns (1,0) into (0,1)
    const GroupElement a1a2 = kA1 * kA2;
    CHECK(a1a2.a == 0);
    CHECK(a1a2.b == 1);
    CHECK(a1a2.eps == 1);
    // a2 a3 = a3 a2 (the normal part is abelian, no twist without eps)
    CHECK(kA2 * kA3 == kA3 * kA2);
    // conjugation by a1 swaps a2 and a3
    CHECK(kA1 * kA2 * kA1 == kA3);
    CHECK(kA1 * kA3 * kA1 == kA2);
    // associativity spot checks
    const GroupElement g[3] = {kA1, kA2, kA3};
    for (const auto& x : g)
        for (const auto& y : g)
            for (const auto& z : g) CHECK((x * y) * z == x * (y * z));
}

TEST_CASE("letter actions") {
    CHECK(letter_perm(kA1) == Perm4::z);
    CHECK(letter_perm(kA2) == Perm4::t2);
    CHECK(letter_perm(kA3) == Perm4::t);
    const GroupElement bad{1, 1, 0};
    CHECK_THROWS_AS(letter_perm(bad), std::invalid_argument);
}

TEST_CASE("bar words for i = 0") {
    const auto words = bar_words(0, 0);
    REQUIRE(words.size() == 3);
    CHECK(words[0] == BarWord{kA1, kA3, kA3});
    CHECK(words[1] == BarWord{kA2, kA1, kA3});
    CHECK(words[2] == BarWord{kA2, kA2, kA1});
}

TEST_CASE("bar word counting and normalization") {
    for (int i = 0; i <= 2; ++i)
        for (int ell = 0; ell <= 3 * i + 2; ++ell) {
            const auto words = bar_words(i, ell);
            CHECK(words.size() == binom(3 * i + 2, ell) * (3 * i + 3));
            for (const auto& w : words) {
                CHECK(w.size() == static_cast<std::size_t>(3 * i + 3));
                std::size_t a1s = 0;
                for (const auto& g : w) {
                    CHECK_FALSE(g.is_identity());
                    if (g == kA1) ++a1s;
                }
                CHECK(a1s == 1);
            }
        }
    CHECK_THROWS_AS(bar_words(1, 6), std::out_of_range);
}

TEST_CASE("parity case table") {
    using V = std::vector<int>;
    CHECK(e_cases(0) == V{0});
    CHECK(e_cases(1) == V{1});
    CHECK(e_cases(2) == V{2, 1});
    CHECK(e_cases(3) == V{3});
    CHECK(e_cases(4) == V{4, 3});
    CHECK(e_cases(5) == V{5});
    CHECK(e_cases(6) == V{6, 5, 4});
    CHECK(e_cases(7) == V{7});
    CHECK(e_cases(8) == V{8, 7, 6});
    CHECK(e_cases(9) == V{9, 7});
    CHECK(e_cases(11) == V{11});
    CHECK(e_cases(13) == V{13, 11});
}

TEST_CASE("cup-term lists") {
    using T = std::array<int, 3>;
    CHECK(e_cup_terms(0) == std::vector<T>{{0, 1, 2}});
    CHECK(e_cup_terms(5) == std::vector<T>{{5, 6, 7}, {4, 9, 5}, {4, 11, 3}});
    CHECK(e_cup_terms(3).size() == 3);
    // index sums equal 3i+3 in every case
    for (int i = 0; i <= 12; ++i)
        for (const auto& t : e_cup_terms(i)) CHECK(t[0] + t[1] + t[2] == 3 * i + 3);
    // even i >= 6 splits on (i-6)/2, odd i >= 7 always carries four terms
    CHECK(e_cup_terms(8).size() == 1);   // (8-6)/2 odd
    CHECK(e_cup_terms(10).size() == 2);  // (10-6)/2 even
    CHECK(e_cup_terms(7).size() == 4);
}

TEST_CASE("tilde_E pinned value and errors") {
    const SimplicialSet K = delta(5);
    AdemEvaluator ev(K);
    const auto one = constant_cochain<ZRing>(K, 2, 1);
    const Simplex top{0, 1, 2, 3, 4, 5};
    // frozen after the first computation: a single surviving tensor term
    CHECK(ev.tilde_E(0, 0, one, top) == 1);
    CHECK(ev.tilde_tensor(0, 0, top).size() == 1);

    const auto wrong_deg = constant_cochain<ZRing>(K, 1, 1);
    CHECK_THROWS_AS(ev.tilde_E(0, 0, wrong_deg, top), std::invalid_argument);
    const Simplex low{0, 1, 2};
    CHECK_THROWS_AS(ev.tilde_E(0, 0, one, low), std::invalid_argument);
    Cochain<ZRing> not_cocycle(K, 2);
    not_cocycle.at(0) = 1;
    REQUIRE_FALSE(coboundary(not_cocycle).is_zero());
    CHECK_THROWS_AS(ev.tilde_E(0, 0, not_cocycle, top), std::invalid_argument);
}

TEST_CASE("dropping degenerate summands early does not change values") {
    const SimplicialSet K = delta(3);
    AdemEvaluator keep(K, true, /*drop_early=*/false);
    AdemEvaluator drop(K, true, /*drop_early=*/true);
    const std::vector<std::vector<Perm4>> words = {{Perm4::t2, Perm4::t}};
    for (std::uint64_t s = 0; s < 6; ++s) {
        const auto c = random_cochain<Z2Ring>(K, 1, s);
        for (const auto& x : K.simplices(2))
            CHECK(keep.word_sum(words, c, x) == drop.word_sum(words, c, x));
    }
}

TEST_CASE("normalized E_3 formula") {
    const SimplicialSet K = delta(5);
    const Simplex top{0, 1, 2, 3, 4, 5};
    // constant cochain: all five summands are 1, so the sum is 1 mod 2
    CHECK(AdemEvaluator::e3_normalized(constant_cochain<ZRing>(K, 2, 1), top) == 1);
    const Cochain<Z2Ring> zero(K, 2);
    CHECK(AdemEvaluator::e3_normalized(zero, top) == 0);
}

TEST_CASE("normalized E_3 equals the composition formula on Delta^5") {
    const SimplicialSet K = delta(5);
    AdemEvaluator ev(K);
    const Simplex top{0, 1, 2, 3, 4, 5};
    for (std::uint64_t s = 1; s <= 6; ++s) {
        const auto c = random_cocycle<ZRing>(K, 2, s);
        CHECK(ev.adem_E(0, c, top) == AdemEvaluator::e3_normalized(c, top));
    }
}

TEST_CASE("Adem relation residual on Delta^6") {
    const SimplicialSet K = delta(6);
    AdemEvaluator ev(K);
    const auto one = constant_cochain<ZRing>(K, 2, 1);
    ResidualReport r = ev.adem_relation_residual(one, 0);
    CHECK(r.simplices == 1);
    CHECK(r.disagreements == 0);
    for (std::uint64_t s = 1; s <= 3; ++s) {
        const auto c = random_cocycle<ZRing>(K, 2, s);
        r = ev.adem_relation_residual(c, 0);
        CHECK(r.disagreements == 0);
    }
    // the zero cocycle is trivially fine
    r = ev.adem_relation_residual(Cochain<ZRing>(K, 2), 0);
    CHECK(r.disagreements == 0);
    // vacuous when the complex has no (q+4)-simplices
    const SimplicialSet K3 = delta(3);
    AdemEvaluator ev3(K3);
    r = ev3.adem_relation_residual(Cochain<ZRing>(K3, 2), 0);
    CHECK(r.simplices == 0);
}
