// SPDX-License-Identifier: MIT
//
// Ternary division algebras of pure imaginaries: slices of the Cayley-
// Dickson algebras that are NOT closed under the binary product (two pure
// imaginaries multiply into the complementary span) but ARE closed under
// triple products, giving nonderived ternary algebras.
//
//   * ImaginaryComplex:  b*i                     inside C  (level 1),
//   * HalfQuaternion:    c*j + d*k               inside H  (level 2),
//   * HalfOctonion:      a*e4 + b*e5 + c*e6 + d*e7 inside O (level 3).
//
// The quaternion slice is associative, so its triple product is the plain
// composition (xy)z.  The octonion slice is not: the two bracketings (xy)z
// and x(yz) differ, and the ternary product here is their average, which
// stays in the slice and has closed-form components (see ternary_mul_o).
// Every slice is unitless, yet each nonzero element has a querelement, so
// they are ternary division algebras.

#ifndef POLYADICA_IMAGINARY_HPP
#define POLYADICA_IMAGINARY_HPP

#include <utility>

#include "polyadica/hypercomplex.hpp"
#include "polyadica/scalar.hpp"

namespace polyadica {

// --------------------------------------------------------------------------
// Pure imaginary complex numbers.
// --------------------------------------------------------------------------

template <class S>
struct ImaginaryComplex {
    S b = scalar_traits<S>::zero();

    ImaginaryComplex() = default;
    explicit ImaginaryComplex(S b_) : b(std::move(b_)) {}
};

template <class S>
bool operator==(const ImaginaryComplex<S>& x, const ImaginaryComplex<S>& y) {
    return scalar_traits<S>::eq(x.b, y.b);
}

/// (b'i)(b''i)(b'''i) = -b'b''b''' i.
template <class S>
[[nodiscard]] ImaginaryComplex<S> ternary_mul_c(const ImaginaryComplex<S>& x,
                                                const ImaginaryComplex<S>& y,
                                                const ImaginaryComplex<S>& z) {
    return ImaginaryComplex<S>(-(x.b * y.b * z.b));
}

template <class S>
[[nodiscard]] S norm_sq_c(const ImaginaryComplex<S>& x) {
    return x.b * x.b;
}

/// Querelement: mu[z, z, quer(z)] = z forces quer = -1/b * i.
template <class S>
[[nodiscard]] ImaginaryComplex<S> quer_c(const ImaginaryComplex<S>& x) {
    if (scalar_traits<S>::is_exact_zero(x.b)) {
        throw ZeroElement("querelement of the zero imaginary");
    }
    return ImaginaryComplex<S>(-scalar_traits<S>::inverse(x.b));
}

// --------------------------------------------------------------------------
// Half-quaternions c*j + d*k.
// --------------------------------------------------------------------------

template <class S>
struct HalfQuaternion {
    S c = scalar_traits<S>::zero();
    S d = scalar_traits<S>::zero();

    HalfQuaternion() = default;
    HalfQuaternion(S c_, S d_) : c(std::move(c_)), d(std::move(d_)) {}
};

template <class S>
bool operator==(const HalfQuaternion<S>& x, const HalfQuaternion<S>& y) {
    return scalar_traits<S>::eq(x.c, y.c) && scalar_traits<S>::eq(x.d, y.d);
}

/// Level-2 embedding (0, 0, c, d).
template <class S>
[[nodiscard]] CDElement<S> embed_half_quaternion(const HalfQuaternion<S>& x) {
    return CDElement<S>(2, {scalar_traits<S>::zero(), scalar_traits<S>::zero(), x.c, x.d});
}

/// Inverse of the embedding; the 1 and i coordinates must vanish.
template <class S>
[[nodiscard]] HalfQuaternion<S> extract_half_quaternion(const CDElement<S>& q) {
    if (q.level != 2) throw LevelMismatch("half-quaternion extraction needs level 2");
    if (!scalar_traits<S>::eq(q.c[0], scalar_traits<S>::zero()) ||
        !scalar_traits<S>::eq(q.c[1], scalar_traits<S>::zero())) {
        throw DomainError("span_escape",
                          "element has components outside the j,k span");
    }
    return HalfQuaternion<S>(q.c[2], q.c[3]);
}

/// Triple product via the associative quaternion embedding (x y) z.
template <class S>
[[nodiscard]] HalfQuaternion<S> ternary_mul_h(const HalfQuaternion<S>& x,
                                              const HalfQuaternion<S>& y,
                                              const HalfQuaternion<S>& z) {
    const CDElement<S> prod =
        cd_mul(cd_mul(embed_half_quaternion(x), embed_half_quaternion(y)),
               embed_half_quaternion(z));
    return extract_half_quaternion(prod);
}

/// Closed-form components of the same product, kept as an independent
/// cross-check route:
///   c_out = d'c''d''' - c'd''d''' - d'd''c''' - c'c''c''',
///   d_out = c'd''c''' - d'c''c''' - c'c''d''' - d'd''d'''.
template <class S>
[[nodiscard]] HalfQuaternion<S> ternary_mul_h_components(const HalfQuaternion<S>& x,
                                                         const HalfQuaternion<S>& y,
                                                         const HalfQuaternion<S>& z) {
    const S c_out = x.d * y.c * z.d - x.c * y.d * z.d - x.d * y.d * z.c - x.c * y.c * z.c;
    const S d_out = x.c * y.d * z.c - x.d * y.c * z.c - x.c * y.c * z.d - x.d * y.d * z.d;
    return HalfQuaternion<S>(c_out, d_out);
}

template <class S>
[[nodiscard]] S norm_sq_h(const HalfQuaternion<S>& x) {
    return x.c * x.c + x.d * x.d;
}

/// Querelement -(c j + d k) / (c^2 + d^2); valid on every placement.
template <class S>
[[nodiscard]] HalfQuaternion<S> quer_h(const HalfQuaternion<S>& x) {
    const S n = norm_sq_h(x);
    if (scalar_traits<S>::is_exact_zero(n)) {
        throw ZeroElement("querelement of the zero half-quaternion");
    }
    const S inv_n = scalar_traits<S>::inverse(n);
    return HalfQuaternion<S>(-(x.c * inv_n), -(x.d * inv_n));
}

/// Both sides of the ternary two-squares identity
///   |xyz|^2 = |x|^2 |y|^2 |z|^2
/// as a (lhs, rhs) pair, letting callers verify it exactly.
template <class S>
[[nodiscard]] std::pair<S, S> two_squares_identity(const HalfQuaternion<S>& x,
                                                   const HalfQuaternion<S>& y,
                                                   const HalfQuaternion<S>& z) {
    const HalfQuaternion<S> p = ternary_mul_h(x, y, z);
    return {norm_sq_h(p), norm_sq_h(x) * norm_sq_h(y) * norm_sq_h(z)};
}

// --------------------------------------------------------------------------
// Half-octonions a*e4 + b*e5 + c*e6 + d*e7.
// --------------------------------------------------------------------------

template <class S>
struct HalfOctonion {
    S a = scalar_traits<S>::zero();
    S b = scalar_traits<S>::zero();
    S c = scalar_traits<S>::zero();
    S d = scalar_traits<S>::zero();

    HalfOctonion() = default;
    HalfOctonion(S a_, S b_, S c_, S d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
};

template <class S>
bool operator==(const HalfOctonion<S>& x, const HalfOctonion<S>& y) {
    return scalar_traits<S>::eq(x.a, y.a) && scalar_traits<S>::eq(x.b, y.b) &&
           scalar_traits<S>::eq(x.c, y.c) && scalar_traits<S>::eq(x.d, y.d);
}

/// Level-3 embedding (0,0,0,0, a,b,c,d).
template <class S>
[[nodiscard]] CDElement<S> embed_half_octonion(const HalfOctonion<S>& x) {
    const S z = scalar_traits<S>::zero();
    return CDElement<S>(3, {z, z, z, z, x.a, x.b, x.c, x.d});
}

/// Inverse of the embedding; the quaternion half must vanish.
template <class S>
[[nodiscard]] HalfOctonion<S> extract_half_octonion(const CDElement<S>& o) {
    if (o.level != 3) throw LevelMismatch("half-octonion extraction needs level 3");
    for (int i = 0; i < 4; ++i) {
        if (!scalar_traits<S>::eq(o.c[i], scalar_traits<S>::zero())) {
            throw DomainError("span_escape",
                              "element has components outside the e4..e7 span");
        }
    }
    return HalfOctonion<S>(o.c[4], o.c[5], o.c[6], o.c[7]);
}

/// Average of the two octonion bracketings, ((xy)z + x(yz)) / 2.  Both
/// bracketings individually stay inside the slice; their average is the
/// ternary product whose components ternary_mul_o_components spells out.
template <class S>
[[nodiscard]] HalfOctonion<S> ternary_mul_o(const HalfOctonion<S>& x,
                                            const HalfOctonion<S>& y,
                                            const HalfOctonion<S>& z) {
    const CDElement<S> X = embed_half_octonion(x);
    const CDElement<S> Y = embed_half_octonion(y);
    const CDElement<S> Z = embed_half_octonion(z);
    CDElement<S> sum = cd_add(cd_mul(cd_mul(X, Y), Z), cd_mul(X, cd_mul(Y, Z)));
    const S half = scalar_traits<S>::inverse(scalar_traits<S>::from_int(2));
    for (S& v : sum.c) v = v * half;
    return extract_half_octonion(sum);
}

/// Closed-form components of the averaged product.  Each output coordinate
/// follows the same pattern; for the first one:
///   a_out = a''(b'b''' + c'c''' + d'd''') - a'''(b'b'' + c'c'' + d'd'')
///         - a'(b''b''' + c''c''' + d''d''') - a'a''a'''.
template <class S>
[[nodiscard]] HalfOctonion<S> ternary_mul_o_components(const HalfOctonion<S>& x,
                                                       const HalfOctonion<S>& y,
                                                       const HalfOctonion<S>& z) {
    const S a_out = y.a * (x.b * z.b + x.c * z.c + x.d * z.d) -
                    z.a * (x.b * y.b + x.c * y.c + x.d * y.d) -
                    x.a * (y.b * z.b + y.c * z.c + y.d * z.d) - x.a * y.a * z.a;
    const S b_out = y.b * (x.a * z.a + x.c * z.c + x.d * z.d) -
                    z.b * (x.a * y.a + x.c * y.c + x.d * y.d) -
                    x.b * (y.a * z.a + y.c * z.c + y.d * z.d) - x.b * y.b * z.b;
    const S c_out = y.c * (x.a * z.a + x.b * z.b + x.d * z.d) -
                    z.c * (x.a * y.a + x.b * y.b + x.d * y.d) -
                    x.c * (y.a * z.a + y.b * z.b + y.d * z.d) - x.c * y.c * z.c;
    const S d_out = y.d * (x.a * z.a + x.b * z.b + x.c * z.c) -
                    z.d * (x.a * y.a + x.b * y.b + x.c * y.c) -
                    x.d * (y.a * z.a + y.b * z.b + y.c * z.c) - x.d * y.d * z.d;
    return HalfOctonion<S>(a_out, b_out, c_out, d_out);
}

template <class S>
[[nodiscard]] S norm_sq_o(const HalfOctonion<S>& x) {
    return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d;
}

/// Querelement -(a,b,c,d) / (a^2+b^2+c^2+d^2); valid on every placement
/// because both bracketings agree on repeated arguments (alternativity).
template <class S>
[[nodiscard]] HalfOctonion<S> quer_o(const HalfOctonion<S>& x) {
    const S n = norm_sq_o(x);
    if (scalar_traits<S>::is_exact_zero(n)) {
        throw ZeroElement("querelement of the zero half-octonion");
    }
    const S inv_n = scalar_traits<S>::inverse(n);
    return HalfOctonion<S>(-(x.a * inv_n), -(x.b * inv_n), -(x.c * inv_n),
                           -(x.d * inv_n));
}

}  // namespace polyadica

#endif  // POLYADICA_IMAGINARY_HPP
