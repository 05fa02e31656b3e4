#include <doctest.h>

#include "contactlab/errors.hpp"
#include "contactlab/rational.hpp"

using namespace contactlab;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
    CHECK(Rat(2, 6) == Rat(1, 3));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(1, -2).den() == 2);
    CHECK(Rat(-4, -6) == Rat(2, 3));
    CHECK(Rat(0, 7).is_zero());
    CHECK_THROWS_AS(Rat(1, 0), MathError);
}

TEST_CASE("rational arithmetic") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK((-a).sign() == -1);
    CHECK(a.inverse() == Rat(3));
    CHECK_THROWS_AS(Rat(0).inverse(), MathError);
    CHECK_THROWS_AS(a / Rat(0), MathError);
}

TEST_CASE("string round trips") {
    CHECK(Rat::from_string("3/4") == Rat(3, 4));
    CHECK(Rat::from_string("-7") == Rat(-7));
    CHECK(Rat::from_string(" 10/4 ") == Rat(5, 2));
    CHECK(Rat(5, 2).str() == "5/2");
    CHECK(Rat(-3).str() == "-3");
    CHECK(Rat(4, 2).str() == "2");
    CHECK_THROWS_AS(Rat::from_string("x"), ParseError);
}

TEST_CASE("content gcd") {
    CHECK(rat_content_gcd(Rat(1, 2), Rat(3, 4)) == Rat(1, 4));
    CHECK(rat_content_gcd(Rat(6), Rat(4)) == Rat(2));
    CHECK(rat_content_gcd(Rat(0), Rat(-5)) == Rat(5));
    CHECK(rat_content_gcd(Rat(-2, 3), Rat(4, 9)) == Rat(2, 9));
}
