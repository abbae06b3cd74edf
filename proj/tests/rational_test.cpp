// SPDX-License-Identifier: MIT

#include <sstream>

#include "doctest.h"
#include "polyadica/rational.hpp"
#include "polyadica/scalar.hpp"

using namespace polyadica;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(8, 2).str() == "4");
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");
    CHECK(a.inverse().str() == "3");
    // A sum that overflows any fixed-width accumulator stays exact.
    Rational big(1);
    for (int i = 0; i < 40; ++i) big = big * Rational(10);
    CHECK((big + Rational(1) - big).str() == "1");
}

TEST_CASE("rational parse accepts p and p/q and rejects junk") {
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational::parse("-7/21").str() == "-1/3");
    CHECK(Rational::parse("0/9").str() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("abc"), MalformedInput);
    CHECK_THROWS_AS(Rational::parse("1.5"), MalformedInput);
    CHECK_THROWS_AS(Rational::parse(""), MalformedInput);
    CHECK_THROWS_AS(Rational::parse("3/"), MalformedInput);
}

TEST_CASE("division by zero throws a domain error") {
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(3) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("rational ordering and equality") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) != Rational(2, 3));
    std::ostringstream ss;
    ss << Rational(-3, 9);
    CHECK(ss.str() == "-1/3");
}

TEST_CASE("float scalars compare with mixed tolerance") {
    CHECK(F64(1.0) == F64(1.0 + 1e-13));
    CHECK(F64(1.0) != F64(1.0 + 1e-6));
    CHECK(F64(0.0) == F64(1e-13));
    CHECK(F64(1e9) == F64(1e9 * (1.0 + 1e-10)));
    CHECK_THROWS_AS(F64(0.0).inverse(), DivisionByZero);
    CHECK(F64(2.0).inverse() == F64(0.5));
}

TEST_CASE("scalar traits expose the mode") {
    CHECK(scalar_traits<Rational>::exact);
    CHECK_FALSE(scalar_traits<F64>::exact);
    CHECK(std::string(scalar_traits<Rational>::mode_name) == "rational");
    CHECK(std::string(scalar_traits<F64>::mode_name) == "float");
}
