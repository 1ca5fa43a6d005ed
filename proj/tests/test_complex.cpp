#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adem/fixtures.hpp"
#include "adem/simplex.hpp"
#include "adem/words.hpp"

using namespace adem;

TEST_CASE("face closure counts") {
    const SimplicialSet K = build_complex("t", {{0, 1, 2}});
    CHECK(K.n_simplices(0) == 3);
    CHECK(K.n_simplices(1) == 3);
    CHECK(K.n_simplices(2) == 1);

    const SimplicialSet hollow = build_complex("h", {{0, 1}, {1, 2}, {0, 2}});
    CHECK(hollow.n_simplices(0) == 3);
    CHECK(hollow.n_simplices(1) == 3);
    CHECK(hollow.n_simplices(2) == 0);
    CHECK(hollow.dim() == 1);

    const SimplicialSet d3 = delta(3);
    CHECK(d3.n_simplices(0) == 4);
    CHECK(d3.n_simplices(1) == 6);
    CHECK(d3.n_simplices(2) == 4);
    CHECK(d3.n_simplices(3) == 1);
}

TEST_CASE("complex input validation") {
    const std::vector<std::vector<int>> decreasing = {{1, 0}};
    const std::vector<std::vector<int>> repeated = {{0, 0, 1}};
    const std::vector<std::vector<int>> empty_list = {};
    const std::vector<std::vector<int>> empty_simplex = {{}};
    CHECK_THROWS_AS(build_complex("bad", decreasing), std::invalid_argument);
    CHECK_THROWS_AS(build_complex("bad", repeated), std::invalid_argument);
    CHECK_THROWS_AS(build_complex("bad", empty_list), std::invalid_argument);
    CHECK_THROWS_AS(build_complex("bad", empty_simplex), std::invalid_argument);
}

TEST_CASE("face and degeneracy on tuples") {
    CHECK(Simplex{0, 1, 2}.face(1) == Simplex{0, 2});
    CHECK(Simplex{0, 0, 1}.face(0) == Simplex{0, 1});
    CHECK(Simplex{0, 1}.face(1) == Simplex{0});
    CHECK(Simplex{0, 1}.degeneracy(0) == Simplex{0, 0, 1});
    CHECK(Simplex{0, 1}.degeneracy(1) == Simplex{0, 1, 1});
    const Simplex edge{0, 1};
    CHECK_THROWS_AS(edge.face(2), std::out_of_range);
    CHECK_THROWS_AS(edge.degeneracy(-1), std::out_of_range);
    CHECK(Simplex{0, 1, 1}.is_degenerate());
    CHECK_FALSE(Simplex{0, 1, 2}.is_degenerate());

    // d_j s_j = 1 = d_{j+1} s_j
    const Simplex s{0, 2, 5};
    for (int j = 0; j <= s.dim(); ++j) {
        CHECK(s.degeneracy(j).face(j) == s);
        CHECK(s.degeneracy(j).face(j + 1) == s);
    }
}

TEST_CASE("simplicial identities hold on all simplices of Delta^5") {
    const SimplicialSet K = delta(5);
    for (int d = 1; d <= 5; ++d) {
        for (const auto& x : K.simplices(d)) {
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j) {
                    if (i < j && d >= 2)
                        CHECK(x.face(j).face(i) == x.face(i).face(j - 1));
                    if (i <= j)
                        CHECK(x.degeneracy(j).degeneracy(i) ==
                              x.degeneracy(i).degeneracy(j + 1));
                    if (i < j && d >= 1)
                        CHECK(x.degeneracy(j).face(i) == x.face(i).degeneracy(j - 1));
                    if (i > j + 1)
                        CHECK(x.degeneracy(j).face(i) == x.face(i - 1).degeneracy(j));
                }
        }
    }
}

TEST_CASE("product cells") {
    const P2 nd(Simplex{0, 0, 1}, Simplex{0, 1, 1});
    CHECK_FALSE(nd.is_degenerate());
    const P2 dg(Simplex{0, 0, 1}, Simplex{2, 2, 3});
    CHECK(dg.is_degenerate());
    CHECK(P2(Simplex{0, 1}, Simplex{2, 3}).face(0) == P2(Simplex{1}, Simplex{3}));
    auto mismatched = [] { return P2(Simplex{0, 1}, Simplex{0}); };
    CHECK_THROWS_AS(mismatched(), std::invalid_argument);
}

TEST_CASE("word normalization examples") {
    // d1 s1 -> id
    const OperatorWord w1({OpSymbol::fc(1), OpSymbol::dg(1)});
    CHECK(normalize_word(w1).is_identity());
    // d2 s0 -> s0 d1
    const OperatorWord w2({OpSymbol::fc(2), OpSymbol::dg(0)});
    CHECK(normalize_word(w2) == OperatorWord({OpSymbol::dg(0), OpSymbol::fc(1)}));
    // d1 d0 -> d0 d2, checked by action on (0,1,2,3)
    const OperatorWord w3({OpSymbol::fc(1), OpSymbol::fc(0)});
    const OperatorWord n3 = normalize_word(w3);
    CHECK(n3 == OperatorWord({OpSymbol::fc(0), OpSymbol::fc(2)}));
    const Simplex x{0, 1, 2, 3};
    CHECK(w3.apply(x) == n3.apply(x));
}

TEST_CASE("normal form predicate") {
    CHECK(OperatorWord({OpSymbol::dg(3), OpSymbol::dg(1), OpSymbol::fc(0),
                        OpSymbol::fc(2)})
              .is_normal_form());
    CHECK_FALSE(OperatorWord({OpSymbol::dg(1), OpSymbol::dg(1)}).is_normal_form());
    CHECK_FALSE(OperatorWord({OpSymbol::fc(0), OpSymbol::dg(0)}).is_normal_form());
    CHECK_FALSE(OperatorWord({OpSymbol::fc(2), OpSymbol::fc(1)}).is_normal_form());
}

TEST_CASE("membership in the monotone-map model") {
    const SimplicialSet hollow = build_complex("h", {{0, 1}, {1, 2}, {0, 2}});
    CHECK(hollow.contains(Simplex{0, 0, 1, 1}));   // degenerate edge
    CHECK_FALSE(hollow.contains(Simplex{0, 1, 2}));
    CHECK(hollow.contains(Simplex{2}));
}
