// SPDX-License-Identifier: MIT

#include "doctest.h"
#include "polyadica/rational.hpp"
#include "polyadica/scalar.hpp"
#include "polyadica/zmatrix.hpp"

using namespace polyadica;

namespace {

ZMatrix<Rational> zr(int arity, std::initializer_list<long long> es) {
    std::vector<Rational> v;
    for (long long e : es) v.emplace_back(e);
    return ZMatrix<Rational>(arity, std::move(v));
}

}  // namespace

TEST_CASE("shift elements validate arity and entry count") {
    CHECK_NOTHROW(zr(3, {1, 2}));
    CHECK_THROWS_AS(zr(2, {1}), ArityMismatch);
    CHECK_THROWS_AS(zr(3, {1, 2, 3}), ArityMismatch);
    CHECK_THROWS_AS(zr(5, {1, 2, 3}), ArityMismatch);
}

TEST_CASE("octonion entries are rejected: the coefficient algebra must associate") {
    std::vector<CDElement<Rational>> entries(2, cd_one<Rational>(3));
    CHECK_THROWS_AS(ZMatrix<CDElement<Rational>>(3, entries),
                    UnsupportedCoefficientAlgebra);
    std::vector<CDElement<Rational>> quat_entries(2, cd_one<Rational>(2));
    CHECK_NOTHROW(ZMatrix<CDElement<Rational>>(3, quat_entries));
}

TEST_CASE("the ternary product of real shift elements cycles the entries") {
    const auto a = zr(3, {2, 3});
    const auto b = zr(3, {5, 7});
    const auto c = zr(3, {11, 13});
    const auto p = nary_mul<Rational>({a, b, c});
    // component i multiplies entries at cyclically advancing slots
    CHECK(p == zr(3, {2 * 7 * 11, 3 * 5 * 13}));
}

TEST_CASE("products need exactly arity-many factors of one arity") {
    const auto a = zr(3, {1, 2});
    CHECK_THROWS_AS(nary_mul<Rational>({a, a}), ArityMismatch);
    CHECK_THROWS_AS(nary_mul<Rational>({a, a, a, a}), ArityMismatch);
    CHECK_THROWS_AS(nary_mul<Rational>({}), ArityMismatch);
    CHECK_THROWS_AS(nary_mul<Rational>({a, zr(4, {1, 2, 3}), a}), ArityMismatch);
}

TEST_CASE("shift elements are not closed under the binary matrix product") {
    // The dense square of a shift element lands off the cyclic pattern.
    const auto a = zr(3, {1, 2});
    const auto square = dense_mul(to_dense(a), to_dense(a));
    CHECK_THROWS_AS(zmatrix_from_dense(square), PatternViolation);
    // Three factors return to the pattern.
    const auto cube = dense_mul(square, to_dense(a));
    CHECK_NOTHROW(zmatrix_from_dense(cube));
}

TEST_CASE("querelement of the worked five-entry example") {
    const auto z = zr(5, {1, 2, 3, 4});
    const auto q = querelement(z);
    CHECK(q == ZMatrix<Rational>(5, {Rational(1, 24), Rational(1, 12), Rational(1, 8),
                                     Rational(1, 6)}));
}

TEST_CASE("the querelement neutralizes the product in every placement") {
    const auto z = zr(5, {1, 2, 3, 4});
    const auto q = querelement(z);
    const int n = 5;
    for (int pos = 0; pos < n; ++pos) {
        std::vector<ZMatrix<Rational>> factors(static_cast<std::size_t>(n), z);
        factors[static_cast<std::size_t>(pos)] = q;
        CHECK(nary_mul(factors) == z);
    }
}

TEST_CASE("querelement requires every entry invertible") {
    const auto z = zr(4, {1, 0, 3});
    CHECK_THROWS_AS(querelement(z), NonInvertibleEntry);
    try {
        querelement(z);
    } catch (const NonInvertibleEntry& e) {
        CHECK(std::string(e.code()) == "non_invertible_entry");
    }
}

TEST_CASE("the polyadic unit has all entries one and is idempotent") {
    const auto u3 = polyadic_identity(4, Rational(1));
    CHECK(u3 == zr(4, {1, 1, 1}));
    CHECK(is_idempotent(u3));
    CHECK(nary_mul<Rational>({u3, u3, u3, u3}) == u3);
    // The unit is its own querelement.
    CHECK(querelement(u3) == u3);
}

TEST_CASE("neutral polyads are not unique") {
    // For arity 3 any pair (p, 1/p) acts as a neutral polyad on the left.
    const auto z = zr(3, {7, 11});
    const auto p1 = zr(3, {2, 5});
    const auto p2 = ZMatrix<Rational>(3, {Rational(1, 5), Rational(1, 2)});
    CHECK(is_neutral_polyad<Rational>({p1, p2}, z));
    const auto q1 = zr(3, {3, 4});
    const auto q2 = ZMatrix<Rational>(3, {Rational(1, 4), Rational(1, 3)});
    CHECK(is_neutral_polyad<Rational>({q1, q2}, z));
    CHECK_FALSE(p1 == q1);
    // And a polyad that moves z is rejected.
    CHECK_FALSE(is_neutral_polyad<Rational>({p1, p1}, z));
}

TEST_CASE("polyadic powers chain the product") {
    const auto z = zr(3, {2, 3});
    const auto z1 = polyadic_power(z, 1);
    CHECK(z1 == nary_mul<Rational>({z, z, z}));
    const auto z2 = polyadic_power(z, 2);
    CHECK(z2 == nary_mul<Rational>({z1, z, z}));
    CHECK(z2 == zr(3, {72, 108}));
    CHECK(polyadic_power(z, 0) == z);
    CHECK_THROWS_AS(polyadic_power(z, -1), ArityMismatch);
}

TEST_CASE("idempotents and nilpotents over dual coefficients") {
    using D = DualNumber<Rational>;
    const D one(Rational(1), Rational(0));
    const D eps(Rational(0), Rational(1));
    // Unit entries: idempotent.
    const ZMatrix<D> unit(4, {one, one, one});
    CHECK(is_idempotent(unit));
    CHECK_FALSE(is_nilpotent(unit));
    // All-epsilon entries: each component multiplies three epsilons, so one
    // application of the 4-ary product annihilates the element.
    const ZMatrix<D> nil(4, {eps, eps, eps});
    CHECK(is_nilpotent(nil));
    CHECK_FALSE(is_idempotent(nil));
}

TEST_CASE("dual-entry shift elements admit zero divisors under the 4-ary product") {
    using D = DualNumber<Rational>;
    const auto d = [](long long a, long long b) { return D(Rational(a), Rational(b)); };
    // Every component of the 4-ary self-product visits all three entry slots,
    // so two pure-epsilon entries force an epsilon-squared factor everywhere.
    const std::vector<ZMatrix<D>> witnesses = {
        ZMatrix<D>(4, {d(0, 1), d(0, 2), d(3, 4)}),
        ZMatrix<D>(4, {d(5, 1), d(0, 2), d(0, 4)}),
        ZMatrix<D>(4, {d(0, 1), d(6, 2), d(0, 4)}),
    };
    for (const auto& z : witnesses) {
        CHECK_FALSE(zmatrix_is_zero(z));
        CHECK(zmatrix_is_zero(nary_mul<D>({z, z, z, z})));
    }
}

TEST_CASE("quaternion-entry units multiply like the scalar case") {
    using Q = CDElement<Rational>;
    const Q one = cd_one<Rational>(2);
    const Q i = cd_basis<Rational>(2, 1);
    const ZMatrix<Q> z(3, {i, one});
    const auto p = nary_mul<Q>({z, z, z});
    // component 0: i * one * i = -one; component 1: one * i * one = i
    CHECK(p.entries[0] == cd_neg(one));
    CHECK(p.entries[1] == i);
}

TEST_CASE("the dense embedding places entries on the cyclic shift pattern") {
    const auto z = zr(4, {5, 6, 7});
    const auto d = to_dense(z);
    CHECK(d.size == 3);
    CHECK(d.at(0, 1) == Rational(5));
    CHECK(d.at(1, 2) == Rational(6));
    CHECK(d.at(2, 0) == Rational(7));
    CHECK(d.at(0, 0) == Rational(0));
    CHECK(zmatrix_from_dense(d) == z);
}

TEST_CASE("off-pattern dense matrices are rejected with a located diagnostic") {
    auto d = to_dense(zr(4, {5, 6, 7}));
    d.at(1, 1) = Rational(9);
    try {
        zmatrix_from_dense(d);
        CHECK(false);
    } catch (const PatternViolation& e) {
        CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
    }
}

TEST_CASE("direct and dense products agree on a fixed example") {
    const auto a = zr(4, {1, 2, 3});
    const auto b = zr(4, {4, 5, 6});
    const auto c = zr(4, {7, 8, 9});
    const auto d = zr(4, {10, 11, 12});
    CHECK(nary_mul<Rational>({a, b, c, d}) == nary_mul_dense<Rational>({a, b, c, d}));
}

TEST_CASE("scaling multiplies every entry") {
    const auto z = zr(3, {2, 3});
    CHECK(zmatrix_scale(z, Rational(1, 2)) ==
          ZMatrix<Rational>(3, {Rational(1), Rational(3, 2)}));
}

TEST_CASE("float shift elements reproduce the rational fixture") {
    const ZMatrix<F64> z(5, {F64(1), F64(2), F64(3), F64(4)});
    const auto q = querelement(z);
    CHECK(q.entries[0] == F64(1.0 / 24));
    CHECK(q.entries[1] == F64(1.0 / 12));
    CHECK(q.entries[2] == F64(1.0 / 8));
    CHECK(q.entries[3] == F64(1.0 / 6));
}
