#include <doctest.h>

#include "contactlab/errors.hpp"
#include "contactlab/homog.hpp"
#include "contactlab/multipoly.hpp"
#include "contactlab/poly_io.hpp"

using namespace contactlab;

TEST_CASE("parse and canonical serialization") {
    CHECK(parse_poly("x0^2 + x1^2 - x2^2").str() == "x0^2 + x1^2 - x2^2");
    CHECK(parse_poly("x1 + x0^2").str() == "x0^2 + x1");
    CHECK(parse_poly("2*x0*x1 - 3").str() == "2*x0*x1 - 3");
    CHECK(parse_poly("1/2*x0 + 1/2*x0").str() == "x0");
    CHECK(parse_poly("(x0 + x1)^2").str() == "x0^2 + 2*x0*x1 + x1^2");
    CHECK(parse_poly("x0 - x0").str() == "0");
    CHECK(parse_poly("-x0 + 3/4").str() == "-x0 + 3/4");
    // round trip through the canonical form
    MultiPoly p = parse_poly("x1^2*x2 - x0^3 - x0^2*x2");
    CHECK(parse_poly(p.str()) == p);
}

TEST_CASE("parse errors carry 1-based offsets") {
    try {
        parse_poly("x0^2 +");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 7);
    }
    CHECK_THROWS_AS(parse_poly("z9 + 1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 ^ x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("(x0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("3/0"), ParseError);
}

TEST_CASE("equality ignores construction route") {
    MultiPoly a = parse_poly("x0 + x2");
    MultiPoly b = parse_poly("x0 + x1 + x2") - parse_poly("x1");
    CHECK(a == b);
    CHECK(MultiPoly(Rat(0)) == MultiPoly());
}

TEST_CASE("arithmetic basics") {
    MultiPoly x = MultiPoly::variable("x0");
    MultiPoly y = MultiPoly::variable("x1");
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(3) == x.pow(3) + Rat(3) * x.pow(2) * y + Rat(3) * x * y.pow(2) + y.pow(3));
    CHECK((x * Rat(0)).is_zero());
    CHECK(x.total_degree() == 1);
    CHECK(MultiPoly().total_degree() == -1);
}

TEST_CASE("derivative and substitution") {
    MultiPoly f = parse_poly("x0^3 + x0*x1^2");
    CHECK(f.derivative("x0") == parse_poly("3*x0^2 + x1^2"));
    CHECK(f.derivative("x1") == parse_poly("2*x0*x1"));
    CHECK(f.derivative("x2").is_zero());
    CHECK(f.substitute("x0", parse_poly("x1")) == parse_poly("x1^3 + x1^3"));
    CHECK(f.evaluate({{"x0", Rat(2)}, {"x1", Rat(3)}}) == Rat(8 + 2 * 9));
}

TEST_CASE("univariate views") {
    MultiPoly f = parse_poly("x0^2*x1 + x0*x1 + 3");
    auto c = f.coeffs_in("x0");
    REQUIRE(c.size() == 3);
    CHECK(c[0] == parse_poly("3"));
    CHECK(c[1] == parse_poly("x1"));
    CHECK(c[2] == parse_poly("x1"));
    CHECK(MultiPoly::from_coeffs_in("x0", c) == f);
}

TEST_CASE("content and normalization") {
    MultiPoly f = parse_poly("4*x0^2 - 6*x1^2");
    CHECK(f.content() == Rat(2));
    CHECK(f.primitive_normalized() == parse_poly("2*x0^2 - 3*x1^2"));
    CHECK((-f).primitive_normalized() == parse_poly("2*x0^2 - 3*x1^2"));
    CHECK(parse_poly("1/2*x0 + 1/3*x1").content() == Rat(1, 6));
}

TEST_CASE("proportionality") {
    CHECK(proportional(parse_poly("2*x0 + 2*x1"), parse_poly("3*x0 + 3*x1")));
    CHECK(proportional(parse_poly("-x0"), parse_poly("x0")));
    CHECK_FALSE(proportional(parse_poly("x0"), parse_poly("x1")));
    CHECK_FALSE(proportional(parse_poly("x0"), MultiPoly()));
}

TEST_CASE("homogeneous wrapper validates") {
    CHECK(make_homog(parse_poly("x0^2 + x1*x2")).degree == 2);
    CHECK_THROWS_AS(make_homog(parse_poly("x0^2 + x1")), InputError);
    CHECK_THROWS_AS(make_homog(MultiPoly()), InputError);
    CHECK_THROWS_AS(make_homog(parse_poly("y0 + y1 + y2"), x_vars()), InputError);
    HomogPoly f = make_homog(parse_poly("x0^2 - x1*x2"));
    HomogPoly g = swap_coordinates(f);
    CHECK(g.poly == parse_poly("y0^2 - y1*y2"));
    CHECK(swap_coordinates(g).poly == f.poly);
}
