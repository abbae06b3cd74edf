// SPDX-License-Identifier: MIT

#include "doctest.h"
#include "polyadica/imaginary.hpp"
#include "polyadica/rational.hpp"
#include "polyadica/rng.hpp"
#include "polyadica/scalar.hpp"

using namespace polyadica;

namespace {

using IC = ImaginaryComplex<Rational>;
using HQ = HalfQuaternion<Rational>;
using HO = HalfOctonion<Rational>;

HQ hq(long long c, long long d) { return HQ{Rational(c), Rational(d)}; }
HO ho(long long a, long long b, long long c, long long d) {
    return HO{Rational(a), Rational(b), Rational(c), Rational(d)};
}

Rational rnd(SplitMix64& rng) {
    return Rational(static_cast<long long>(rng.range(-9, 9)),
                    static_cast<long long>(rng.range(1, 9)));
}

}  // namespace

TEST_CASE("the pure-imaginary line closes under the ternary product") {
    const IC x{Rational(2)};
    const IC y{Rational(3)};
    const IC z{Rational(5)};
    CHECK(ternary_mul_c(x, y, z) == IC{Rational(-30)});
    CHECK(norm_sq_c(x) == Rational(4));
}

TEST_CASE("the imaginary-complex querelement neutralizes all three placements") {
    const IC x{Rational(-3, 7)};
    const IC q = quer_c(x);
    CHECK(q == IC{Rational(7, 3)});
    CHECK(ternary_mul_c(q, x, x) == x);
    CHECK(ternary_mul_c(x, q, x) == x);
    CHECK(ternary_mul_c(x, x, q) == x);
    CHECK_THROWS_AS(quer_c(IC{Rational(0)}), ZeroElement);
}

TEST_CASE("half-quaternions embed into the last two quaternion coordinates") {
    const HQ x = hq(3, -5);
    const auto q = embed_half_quaternion(x);
    CHECK(q.level == 2);
    CHECK(q.c[0] == Rational(0));
    CHECK(q.c[1] == Rational(0));
    CHECK(q.c[2] == Rational(3));
    CHECK(q.c[3] == Rational(-5));
    CHECK(extract_half_quaternion(q) == x);
    // A binary product of two embedded elements escapes the span...
    const auto escape = cd_mul(embed_half_quaternion(hq(1, 0)),
                               embed_half_quaternion(hq(0, 1)));
    CHECK_THROWS_AS(extract_half_quaternion(escape), DomainError);
    try {
        extract_half_quaternion(escape);
    } catch (const DomainError& e) {
        CHECK(std::string(e.code()) == "span_escape");
    }
    // ...but the triple product returns to it: that is the ternary closure.
    CHECK_NOTHROW(extract_half_quaternion(
        cd_mul(escape, embed_half_quaternion(hq(2, 7)))));
}

TEST_CASE("the half-quaternion component formula matches the embedding route") {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const HQ x{rnd(rng), rnd(rng)};
        const HQ y{rnd(rng), rnd(rng)};
        const HQ z{rnd(rng), rnd(rng)};
        CHECK(ternary_mul_h(x, y, z) == ternary_mul_h_components(x, y, z));
    }
}

TEST_CASE("repeating a factor in the cubic term is a detectably wrong formula") {
    // A near-miss variant of the first component that multiplies the first
    // factor twice (c'c'c''' instead of c'c''c''') diverges from the
    // embedding whenever the first two factors differ.
    const HQ x = hq(2, 0);
    const HQ y = hq(3, 0);
    const HQ z = hq(5, 0);
    const HQ good = ternary_mul_h(x, y, z);
    const Rational near_miss_c = x.d * y.c * z.d - x.c * y.d * z.d -
                                 x.d * y.d * z.c - x.c * x.c * z.c;
    CHECK(good.c == Rational(-30));
    CHECK(near_miss_c == Rational(-20));
    CHECK(near_miss_c != good.c);
}

TEST_CASE("the worked two-squares triple") {
    const auto [lhs, rhs] = two_squares_identity(hq(1, 1), hq(1, 0), hq(0, 1));
    CHECK(lhs == Rational(2));
    CHECK(rhs == Rational(2));
    const auto p = ternary_mul_h(hq(1, 1), hq(1, 0), hq(0, 1));
    CHECK(p == hq(1, -1));
}

TEST_CASE("the two-squares identity holds on random triples") {
    SplitMix64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const HQ x{rnd(rng), rnd(rng)};
        const HQ y{rnd(rng), rnd(rng)};
        const HQ z{rnd(rng), rnd(rng)};
        const auto [lhs, rhs] = two_squares_identity(x, y, z);
        CHECK(lhs == rhs);
        CHECK(lhs == norm_sq_h(ternary_mul_h(x, y, z)));
    }
}

TEST_CASE("the half-quaternion querelement neutralizes all three placements") {
    const HQ x = hq(3, 4);
    const HQ q = quer_h(x);
    CHECK(q == HQ{Rational(-3, 25), Rational(-4, 25)});
    CHECK(ternary_mul_h(q, x, x) == x);
    CHECK(ternary_mul_h(x, q, x) == x);
    CHECK(ternary_mul_h(x, x, q) == x);
    CHECK_THROWS_AS(quer_h(hq(0, 0)), ZeroElement);
}

TEST_CASE("half-quaternions are ternary totally associative") {
    SplitMix64 rng(37);
    for (int i = 0; i < 100; ++i) {
        HQ z[5];
        for (auto& v : z) v = HQ{rnd(rng), rnd(rng)};
        const HQ p1 = ternary_mul_h(ternary_mul_h(z[0], z[1], z[2]), z[3], z[4]);
        const HQ p2 = ternary_mul_h(z[0], ternary_mul_h(z[1], z[2], z[3]), z[4]);
        const HQ p3 = ternary_mul_h(z[0], z[1], ternary_mul_h(z[2], z[3], z[4]));
        CHECK(p1 == p2);
        CHECK(p2 == p3);
    }
}

TEST_CASE("half-octonions embed into the upper four octonion coordinates") {
    const HO x = ho(1, -2, 3, -4);
    const auto o = embed_half_octonion(x);
    CHECK(o.level == 3);
    for (int i = 0; i < 4; ++i) CHECK(o.c[static_cast<std::size_t>(i)] == Rational(0));
    CHECK(o.c[4] == Rational(1));
    CHECK(o.c[5] == Rational(-2));
    CHECK(o.c[6] == Rational(3));
    CHECK(o.c[7] == Rational(-4));
    CHECK(extract_half_octonion(o) == x);
    // Binary products escape the span: the first two basis elements multiply
    // into the complex unit slot.
    const auto escape = cd_mul(embed_half_octonion(ho(1, 0, 0, 0)),
                               embed_half_octonion(ho(0, 1, 0, 0)));
    CHECK(escape.c[1] != Rational(0));
    CHECK_THROWS_AS(extract_half_octonion(escape), DomainError);
}

TEST_CASE("both bracketings of the octonion triple product stay in the span") {
    SplitMix64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const auto X = embed_half_octonion(HO{rnd(rng), rnd(rng), rnd(rng), rnd(rng)});
        const auto Y = embed_half_octonion(HO{rnd(rng), rnd(rng), rnd(rng), rnd(rng)});
        const auto Z = embed_half_octonion(HO{rnd(rng), rnd(rng), rnd(rng), rnd(rng)});
        CHECK_NOTHROW(extract_half_octonion(cd_mul(cd_mul(X, Y), Z)));
        CHECK_NOTHROW(extract_half_octonion(cd_mul(X, cd_mul(Y, Z))));
    }
}

TEST_CASE("the half-octonion component formula matches the averaged embedding") {
    SplitMix64 rng(53);
    for (int i = 0; i < 200; ++i) {
        const HO x{rnd(rng), rnd(rng), rnd(rng), rnd(rng)};
        const HO y{rnd(rng), rnd(rng), rnd(rng), rnd(rng)};
        const HO z{rnd(rng), rnd(rng), rnd(rng), rnd(rng)};
        CHECK(ternary_mul_o(x, y, z) == ternary_mul_o_components(x, y, z));
    }
}

TEST_CASE("a fixed half-octonion triple product") {
    // mu[e4, e4, e4] = -e4 for every basis direction: x (x* x) = -|x|^2 x on
    // pure imaginaries, and the two bracketings agree on repeated factors.
    for (int k = 0; k < 4; ++k) {
        Rational cs[4] = {Rational(0), Rational(0), Rational(0), Rational(0)};
        cs[k] = Rational(1);
        const HO e{cs[0], cs[1], cs[2], cs[3]};
        const HO p = ternary_mul_o(e, e, e);
        HO expected{Rational(0), Rational(0), Rational(0), Rational(0)};
        (k == 0 ? expected.a : k == 1 ? expected.b : k == 2 ? expected.c
                                                            : expected.d) = Rational(-1);
        CHECK(p == expected);
    }
}

TEST_CASE("the half-octonion querelement neutralizes all three placements") {
    const HO x = ho(1, 2, -1, 3);
    const HO q = quer_o(x);
    CHECK(q == HO{Rational(-1, 15), Rational(-2, 15), Rational(1, 15), Rational(-3, 15)});
    CHECK(ternary_mul_o(q, x, x) == x);
    CHECK(ternary_mul_o(x, q, x) == x);
    CHECK(ternary_mul_o(x, x, q) == x);
    CHECK_THROWS_AS(quer_o(ho(0, 0, 0, 0)), ZeroElement);
}

TEST_CASE("half-octonions are not totally associative: the stored witness") {
    const HO e5 = ho(0, 1, 0, 0);
    const HO e4 = ho(1, 0, 0, 0);
    const HO e6 = ho(0, 0, 1, 0);
    const HO p1 = ternary_mul_o(ternary_mul_o(e5, e4, e5), e4, e6);
    const HO p2 = ternary_mul_o(e5, ternary_mul_o(e4, e5, e4), e6);
    const HO p3 = ternary_mul_o(e5, e4, ternary_mul_o(e5, e4, e6));
    CHECK(p1 == ho(0, 0, -1, 0));
    CHECK(p2 == ho(0, 0, -1, 0));
    CHECK(p3 == ho(0, 0, 0, 0));
    CHECK_FALSE(p1 == p3);
}

TEST_CASE("half-octonion norm multiplicativity fails on the stored witness") {
    // The averaged product has zero divisors: on this basis triple the two
    // bracketings are exact negatives, so the mean vanishes while every
    // factor has norm 1.
    const HO e5 = ho(0, 1, 0, 0);
    const HO e4 = ho(1, 0, 0, 0);
    const HO e6 = ho(0, 0, 1, 0);
    const HO p = ternary_mul_o(e5, e4, e6);
    CHECK(p == ho(0, 0, 0, 0));
    CHECK(norm_sq_o(p) == Rational(0));
    CHECK(norm_sq_o(e5) * norm_sq_o(e4) * norm_sq_o(e6) == Rational(1));
}

TEST_CASE("float mode reproduces the worked fixtures within tolerance") {
    using HQF = HalfQuaternion<F64>;
    const auto [lhs, rhs] = two_squares_identity(HQF{F64(1), F64(1)}, HQF{F64(1), F64(0)},
                                                 HQF{F64(0), F64(1)});
    CHECK(lhs == F64(2));
    CHECK(rhs == F64(2));
    using HOF = HalfOctonion<F64>;
    const HOF x{F64(0.5), F64(-1.5), F64(2), F64(3)};
    const HOF y{F64(1), F64(2), F64(-0.5), F64(1)};
    const HOF z{F64(-2), F64(0.5), F64(1), F64(-1)};
    const HOF via_formula = ternary_mul_o_components(x, y, z);
    const HOF via_embedding = ternary_mul_o(x, y, z);
    CHECK(via_formula == via_embedding);
}
