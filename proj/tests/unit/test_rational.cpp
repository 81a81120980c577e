#include <doctest.h>

#include "mouldcalc/rational.hpp"

using mouldcalc::Rational;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    Rational a(6, -4);
    CHECK(a.text() == "-3/2");
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rational(0, 7).text() == "0");
    CHECK(Rational(10, 5).text() == "2");
}

TEST_CASE("parsing accepts p and p/q") {
    CHECK(Rational::parse("5/6") == Rational(5, 6));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1) / Rational(3) == Rational(1, 3));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("powers, absolute value, factorials") {
    CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
    CHECK(Rational(5, 7).pow(0) == Rational(1));
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::binomial(8, 4) == Rational(70));
    CHECK(Rational::binomial(3, 5) == Rational(0));
}

TEST_CASE("comparisons follow the rational order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3) > Rational(2));
}
