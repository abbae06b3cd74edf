// SPDX-License-Identifier: MIT

#include "doctest.h"
#include "polyadica/hypercomplex.hpp"
#include "polyadica/rational.hpp"
#include "polyadica/scalar.hpp"

using namespace polyadica;

namespace {

CDElement<Rational> cd(int level, std::initializer_list<long long> cs) {
    std::vector<Rational> v;
    for (long long c : cs) v.emplace_back(c);
    return CDElement<Rational>(level, std::move(v));
}

}  // namespace

TEST_CASE("complex units square to minus one") {
    const auto i = cd_basis<Rational>(1, 1);
    CHECK(cd_mul(i, i) == cd(1, {-1, 0}));
    CHECK(cd_mul(cd(1, {2, 3}), cd(1, {4, 5})) == cd(1, {-7, 22}));
}

TEST_CASE("quaternion units anticommute") {
    const auto i = cd_basis<Rational>(2, 1);
    const auto j = cd_basis<Rational>(2, 2);
    const auto k = cd_basis<Rational>(2, 3);
    CHECK(cd_mul(i, j) == k);
    CHECK(cd_mul(j, i) == cd_neg(k));
    CHECK(cd_mul(i, i) == cd_neg(cd_one<Rational>(2)));
    CHECK(cd_mul(j, j) == cd_neg(cd_one<Rational>(2)));
    CHECK(cd_mul(k, k) == cd_neg(cd_one<Rational>(2)));
    CHECK(cd_mul(i, k) == cd_neg(j));
    CHECK(cd_mul(k, i) == j);
}

TEST_CASE("octonion basis products follow the doubling table") {
    // With e1, e2, e4 the doubling generators: e1 e2 = e3, e1 e4 = e5,
    // e2 e4 = e6, e3 e4 = e7.
    const auto e = [](std::size_t k) { return cd_basis<Rational>(3, k); };
    CHECK(cd_mul(e(1), e(2)) == e(3));
    CHECK(cd_mul(e(1), e(4)) == e(5));
    CHECK(cd_mul(e(2), e(4)) == e(6));
    CHECK(cd_mul(e(3), e(4)) == e(7));
    for (std::size_t k = 1; k < 8; ++k) {
        CHECK(cd_mul(e(k), e(k)) == cd_neg(cd_one<Rational>(3)));
    }
}

TEST_CASE("octonions are not associative: a witness triple") {
    const auto e1 = cd_basis<Rational>(3, 1);
    const auto e2 = cd_basis<Rational>(3, 2);
    const auto e4 = cd_basis<Rational>(3, 4);
    const auto left = cd_mul(cd_mul(e1, e2), e4);   // (e1 e2) e4 = e3 e4 = e7
    const auto right = cd_mul(e1, cd_mul(e2, e4));  // e1 (e2 e4) = e1 e6 = -e7
    CHECK(left == cd_basis<Rational>(3, 7));
    CHECK(right == cd_neg(cd_basis<Rational>(3, 7)));
    CHECK_FALSE(left == right);
}

TEST_CASE("conjugation fixes the real part and flips the rest") {
    const auto x = cd(2, {1, 2, 3, 4});
    CHECK(cd_conj(x) == cd(2, {1, -2, -3, -4}));
    CHECK(cd_conj(cd_conj(x)) == x);
    // x x* is the norm times the unit
    const auto prod = cd_mul(x, cd_conj(x));
    CHECK(prod == cd_scale(cd_one<Rational>(2), Rational(30)));
}

TEST_CASE("norm squared sums the squared coefficients") {
    CHECK(cd_norm_sq(cd(1, {3, 4})) == Rational(25));
    CHECK(cd_norm_sq(cd(2, {1, 1, 1, 1})) == Rational(4));
    CHECK(cd_norm_sq(cd_zero<Rational>(3)) == Rational(0));
}

TEST_CASE("binary norm is multiplicative through the octonions") {
    const auto a = cd(3, {1, 2, 0, -1, 3, 0, 1, 2});
    const auto b = cd(3, {2, -1, 1, 0, 0, 2, -2, 1});
    CHECK(cd_norm_sq(cd_mul(a, b)) == cd_norm_sq(a) * cd_norm_sq(b));
}

TEST_CASE("inverse works through the octonions and is gated above") {
    const auto x = cd(1, {1, 1});
    CHECK(cd_inverse(x) == CDElement<Rational>(1, {Rational(1, 2), Rational(-1, 2)}));
    CHECK(cd_mul(x, cd_inverse(x)) == cd_one<Rational>(1));
    const auto q = cd(2, {1, 2, 3, 4});
    CHECK(cd_mul(q, cd_inverse(q)) == cd_one<Rational>(2));
    CHECK(cd_mul(cd_inverse(q), q) == cd_one<Rational>(2));
    CHECK_THROWS_AS(cd_inverse(cd_zero<Rational>(2)), DivisionByZero);
    CHECK_THROWS_AS(cd_inverse(cd_one<Rational>(4)), LevelOutOfRange);
}

TEST_CASE("sedenions have zero divisors") {
    // (e1 + e10)(e4 - e15) = 0 with both factors of norm 2.
    auto a = cd_add(cd_basis<Rational>(4, 1), cd_basis<Rational>(4, 10));
    auto b = cd_sub(cd_basis<Rational>(4, 4), cd_basis<Rational>(4, 15));
    CHECK(cd_norm_sq(a) == Rational(2));
    CHECK(cd_norm_sq(b) == Rational(2));
    CHECK(cd_is_zero(cd_mul(a, b)));
    // Norm multiplicativity fails on this pair: 0 != 4.
    CHECK(cd_norm_sq(cd_mul(a, b)) != cd_norm_sq(a) * cd_norm_sq(b));
}

TEST_CASE("mixed levels are rejected") {
    CHECK_THROWS_AS(cd_mul(cd(1, {1, 0}), cd(2, {1, 0, 0, 0})), LevelMismatch);
    CHECK_THROWS_AS(cd_add(cd(1, {1, 0}), cd(2, {1, 0, 0, 0})), LevelMismatch);
}

TEST_CASE("level names follow the classical ladder") {
    CHECK(level_name(0) == "R");
    CHECK(level_name(1) == "C");
    CHECK(level_name(2) == "H");
    CHECK(level_name(3) == "O");
    CHECK(level_name(4) == "S");
    CHECK(level_name(5) == "CD5");
}

TEST_CASE("dual numbers multiply by the derivation rule") {
    const DualNumber<Rational> x(Rational(2), Rational(3));
    const DualNumber<Rational> y(Rational(4), Rational(5));
    const auto p = dual_mul(x, y);
    CHECK(p.a == Rational(8));
    CHECK(p.b == Rational(22));
    // epsilon^2 = 0
    const DualNumber<Rational> eps(Rational(0), Rational(1));
    CHECK(dual_mul(eps, eps).a == Rational(0));
    CHECK(dual_mul(eps, eps).b == Rational(0));
}

TEST_CASE("dual inverse exists exactly when the real part is nonzero") {
    const DualNumber<Rational> x(Rational(2), Rational(3));
    const auto inv = dual_inverse(x);
    CHECK(inv.a == Rational(1, 2));
    CHECK(inv.b == Rational(-3, 4));
    const auto prod = dual_mul(x, inv);
    CHECK(prod.a == Rational(1));
    CHECK(prod.b == Rational(0));
    CHECK_THROWS_AS(dual_inverse(DualNumber<Rational>(Rational(0), Rational(5))),
                    DivisionByZero);
}

TEST_CASE("float mode reproduces the exact fixtures within tolerance") {
    const CDElement<F64> i(1, {F64(0.0), F64(1.0)});
    const auto sq = cd_mul(i, i);
    CHECK(sq.c[0] == F64(-1.0));
    CHECK(sq.c[1] == F64(0.0));
    const CDElement<F64> q(2, {F64(1.0), F64(2.0), F64(3.0), F64(4.0)});
    CHECK(cd_norm_sq(q) == F64(30.0));
}
