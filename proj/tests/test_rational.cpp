#include <doctest.h>

#include "uq/rational.hpp"

using uq::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(5) / Rational(2) == Rational(5, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational ordering is exact") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(31, 10) > Rational(3));
    CHECK(Rational(31, 10) < Rational(13, 4));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(uq::min(Rational(5, 2), Rational(3)) == Rational(5, 2));
    CHECK(uq::max(Rational(5, 2), Rational(3)) == Rational(3));
}

TEST_CASE("parse accepts integers, decimals and fractions") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-2.75") == Rational(-11, 4));
    CHECK(Rational::parse("2.75") == Rational(11, 4));
    CHECK(Rational::parse("3.1") == Rational(31, 10));
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1.2.3"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/"));
}

TEST_CASE("to_string round-trips bit-exactly") {
    for (const Rational& r : {Rational(0), Rational(-5), Rational(11, 4), Rational(31, 10),
                              Rational(1, 3), Rational(-7, 6), Rational(13, 40)}) {
        CHECK(Rational::parse(r.to_string()) == r);
    }
    CHECK(Rational(11, 4).to_string() == "2.75");
    CHECK(Rational(31, 10).to_string() == "3.1");
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(-3, 2).to_string() == "-1.5");
    CHECK(Rational(7).to_string() == "7");
}
