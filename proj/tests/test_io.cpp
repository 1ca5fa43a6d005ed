#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "adem/fixtures.hpp"
#include "adem/io.hpp"

using namespace adem;

TEST_CASE("parse and serialize round-trip") {
    const ComplexFile f{"two triangles", {{0, 1, 2}, {1, 2, 3}}};
    const std::string text = serialize_complex_file(f);
    std::istringstream in(text);
    CHECK(parse_complex_file(in) == f);
    // canonical text survives a second trip bit-exactly
    std::istringstream in2(text);
    CHECK(serialize_complex_file(parse_complex_file(in2)) == text);
}

TEST_CASE("fixture files round-trip") {
    for (const char* name : {"rp2", "torus", "torus9", "s2xs2"}) {
        const ComplexFile f = to_file(fixture(name));
        std::istringstream in(serialize_complex_file(f));
        const ComplexFile g = parse_complex_file(in);
        CHECK(f == g);
        CHECK(to_complex(g).total_simplices() == fixture(name).total_simplices());
    }
}

TEST_CASE("parse errors") {
    auto expect_fail = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_complex_file(in), ParseError);
    };
    expect_fail("");
    expect_fail("simplex 0 1\n");                    // missing header
    expect_fail("complex\n");                        // nameless
    expect_fail("complex k\n");                      // no simplices
    expect_fail("complex k\nsimplex\n");             // empty simplex
    expect_fail("complex k\nsimplex 1 0\n");         // not increasing
    expect_fail("complex k\nsimplex 0 0\n");         // repeated vertex
    expect_fail("complex k\nsimplex -1 2\n");        // negative id
    expect_fail("complex k\nsimplex 0 x\n");         // non-integer
    expect_fail("complex k\ntriangle 0 1 2\n");      // unknown tag
    CHECK_THROWS_AS(load_complex_file("/nonexistent/path.cplx"), ParseError);
}

TEST_CASE("whitespace and blank lines are tolerated") {
    std::istringstream in("\ncomplex sphere\n\nsimplex 0 1 2\nsimplex 0 1 3\n"
                          "simplex 0 2 3\nsimplex 1 2 3\n");
    const ComplexFile f = parse_complex_file(in);
    CHECK(f.name == "sphere");
    CHECK(f.maximal_simplices.size() == 4);
    CHECK(to_complex(f).n_simplices(2) == 4);
}
