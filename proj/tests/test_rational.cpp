#include <doctest.h>

#include <symres/rational.hpp>

using namespace symres;

TEST_CASE("rationals normalize to lowest terms") {
    CHECK(Rational(10, 8) == Rational(5, 4));
    CHECK(Rational(10, 8).str() == "5/4");
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(5, 4) - Rational(4, 3) == Rational(-1, 12));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(5, 4) / Rational(5, 2) == Rational(1, 2));
    CHECK(-Rational(5, 4) == Rational(-5, 4));
}

TEST_CASE("rational comparisons cross-multiply") {
    CHECK(Rational(5, 4) > Rational(6, 5));
    CHECK(Rational(4, 3) > Rational(5, 4));
    CHECK(Rational(1) < Rational(7, 6));
    CHECK(max(Rational(5, 4), Rational(4, 3)) == Rational(4, 3));
    CHECK(min(Rational(5, 4), Rational(4, 3)) == Rational(5, 4));
}

TEST_CASE("rational parsing round-trips") {
    CHECK(Rational::from_string("5/4") == Rational(5, 4));
    CHECK(Rational::from_string("10/8") == Rational(5, 4));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK_THROWS_AS(Rational::from_string("x"), domain_error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), domain_error);
    CHECK_THROWS_AS(Rational::from_string(""), domain_error);
}

TEST_CASE("rational overflow is an error, never a wrap") {
    Rational huge(std::numeric_limits<std::int64_t>::max() / 2, 1);
    CHECK_THROWS_AS(huge * huge, symres::overflow_error);
    CHECK_THROWS_AS(Rational(0, 0), domain_error);
}
