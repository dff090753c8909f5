#include <frobx/rational.hpp>

#include <doctest.h>

using frobx::MalformedRational;
using frobx::Rational;
using frobx::ZeroDenominator;

TEST_CASE("parse and canonical printing") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("-0").str() == "0");
    CHECK(Rational::parse("22/55").str() == "2/5");
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(Rational::parse(""), MalformedRational);
    CHECK_THROWS_AS(Rational::parse("+1"), MalformedRational);
    CHECK_THROWS_AS(Rational::parse("1.5"), MalformedRational);
    CHECK_THROWS_AS(Rational::parse("1/-2"), MalformedRational);
    CHECK_THROWS_AS(Rational::parse("a/2"), MalformedRational);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), MalformedRational);
    CHECK_THROWS_AS(Rational::parse(" 1"), MalformedRational);
    CHECK_THROWS_AS(Rational::parse("1/0"), ZeroDenominator);
}

TEST_CASE("field operations stay exact") {
    Rational a = Rational::parse("1/3");
    Rational b = Rational::parse("1/6");
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), ZeroDenominator);
}

TEST_CASE("constructor normalizes sign and gcd") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
}

TEST_CASE("no precision loss on iterated arithmetic") {
    // sum of 1/k(k+1) telescopes to 1 - 1/(n+1)
    Rational sum;
    const long long n = 200;
    for (long long k = 1; k <= n; ++k)
        sum += Rational(1, k * (k + 1));
    CHECK(sum == Rational(n, n + 1));
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5) >= Rational(5));
}
