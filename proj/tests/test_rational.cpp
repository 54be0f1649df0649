#include <doctest.h>

#include "ppg/errors.hpp"
#include "ppg/rational.hpp"
#include "ppg/rng.hpp"

using ppg::Rational;

TEST_CASE("arithmetic is exact and stays reduced") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK((a + b).numerator() == 1);
    CHECK((a + b).denominator() == 2);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).numerator() == -1);
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).denominator() == 2);  // denominator normalized positive
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a - b == Rational(1, 6));
    CHECK(abs(Rational(-7, 5)) == Rational(7, 5));
    CHECK(Rational(3, 7) < Rational(1, 2));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(5, 3).is_integer());
}

TEST_CASE("division by zero and zero denominators are rejected") {
    CHECK_THROWS_AS(Rational(1, 0), ppg::Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ppg::Error);
}

TEST_CASE("parse accepts num/den and bare integers") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("5/1") == Rational(5));
    CHECK(Rational::parse("-3/7") == Rational(-3, 7));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse(""), ppg::Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), ppg::Error);
    CHECK_THROWS_AS(Rational::parse("abc"), ppg::Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), ppg::Error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ppg::Error);
}

TEST_CASE("format/parse round-trips exactly") {
    ppg::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        long long num = rng.uniform(-1'000'000'000LL, 1'000'000'000LL);
        long long den = rng.uniform(1, 1'000'000'000LL);
        Rational r(static_cast<long>(num), static_cast<long>(den));
        CHECK(Rational::parse(r.fraction_str()) == r);
        CHECK(Rational::parse(r.str()) == r);
    }
}
