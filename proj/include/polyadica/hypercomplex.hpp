// SPDX-License-Identifier: MIT
//
// Binary hypercomplex structures: the Cayley-Dickson doubling tower
// (reals, complex, quaternions, octonions, sedenions, ...) and dual numbers.
//
// A CDElement of level L holds 2^L coefficients.  Products are computed by
// the doubling recursion on half-vectors
//
//     (a', b') * (a'', b'') = (a' a'' - conj(b'') b',  b'' a' + b' conj(a''))
//
// with conj(a, b) = (conj(a), -b).  The recursion bottoms out at level 0,
// where multiplication is the scalar product.  The half-products are written
// in this exact order because the halves stop commuting at level 2.

#ifndef POLYADICA_HYPERCOMPLEX_HPP
#define POLYADICA_HYPERCOMPLEX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polyadica/errors.hpp"
#include "polyadica/scalar.hpp"

namespace polyadica {

/// Human-readable name of a Cayley-Dickson level.
inline std::string level_name(int level) {
    switch (level) {
        case 0: return "R";
        case 1: return "C";
        case 2: return "H";
        case 3: return "O";
        case 4: return "S";
        default: return "CD" + std::to_string(level);
    }
}

/// Element of the Cayley-Dickson algebra of the given level.
template <class S>
struct CDElement {
    int level = 0;
    std::vector<S> c;  ///< 2^level coefficients, basis-ordered.

    CDElement() : c{scalar_traits<S>::zero()} {}

    CDElement(int lvl, std::vector<S> coeffs) : level(lvl), c(std::move(coeffs)) {
        if (level < 0 || c.size() != (std::size_t{1} << level)) {
            throw DimensionMismatch("level " + std::to_string(level) + " element needs " +
                                    std::to_string(std::size_t{1} << std::max(level, 0)) +
                                    " coefficients, got " + std::to_string(c.size()));
        }
    }

    [[nodiscard]] std::size_t dim() const noexcept { return c.size(); }
};

/// Basis element e_k (k = 0 gives the unit) at the given level.
template <class S>
CDElement<S> cd_basis(int level, std::size_t k) {
    const std::size_t d = std::size_t{1} << level;
    if (k >= d) throw DimensionMismatch("basis index out of range");
    std::vector<S> c(d, scalar_traits<S>::zero());
    c[k] = scalar_traits<S>::one();
    return CDElement<S>(level, std::move(c));
}

template <class S>
CDElement<S> cd_zero(int level) {
    return CDElement<S>(level,
                        std::vector<S>(std::size_t{1} << level, scalar_traits<S>::zero()));
}

template <class S>
CDElement<S> cd_one(int level) {
    return cd_basis<S>(level, 0);
}

namespace detail {

template <class S>
void cd_conj_rec(const S* a, S* out, std::size_t dim) {
    if (dim == 1) {
        out[0] = a[0];
        return;
    }
    const std::size_t h = dim / 2;
    cd_conj_rec(a, out, h);
    for (std::size_t i = 0; i < h; ++i) out[h + i] = -a[h + i];
}

template <class S>
void cd_mul_rec(const S* x, const S* y, S* out, std::size_t dim) {
    if (dim == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = dim / 2;
    const S* a1 = x;
    const S* b1 = x + h;
    const S* a2 = y;
    const S* b2 = y + h;

    std::vector<S> conj_b2(h, scalar_traits<S>::zero());
    std::vector<S> conj_a2(h, scalar_traits<S>::zero());
    cd_conj_rec(b2, conj_b2.data(), h);
    cd_conj_rec(a2, conj_a2.data(), h);

    std::vector<S> t1(h, scalar_traits<S>::zero());
    std::vector<S> t2(h, scalar_traits<S>::zero());

    // low half: a1 a2 - conj(b2) b1
    cd_mul_rec(a1, a2, t1.data(), h);
    cd_mul_rec(conj_b2.data(), b1, t2.data(), h);
    for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];

    // high half: b2 a1 + b1 conj(a2)
    cd_mul_rec(b2, a1, t1.data(), h);
    cd_mul_rec(b1, conj_a2.data(), t2.data(), h);
    for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace detail

template <class S>
void require_same_level(const CDElement<S>& x, const CDElement<S>& y, const char* what) {
    if (x.level != y.level) {
        throw LevelMismatch(std::string(what) + ": levels " + std::to_string(x.level) +
                            " and " + std::to_string(y.level) + " differ");
    }
}

template <class S>
[[nodiscard]] CDElement<S> cd_mul(const CDElement<S>& x, const CDElement<S>& y) {
    require_same_level(x, y, "product");
    std::vector<S> out(x.dim(), scalar_traits<S>::zero());
    detail::cd_mul_rec(x.c.data(), y.c.data(), out.data(), x.dim());
    return CDElement<S>(x.level, std::move(out));
}

template <class S>
[[nodiscard]] CDElement<S> cd_conj(const CDElement<S>& x) {
    std::vector<S> out(x.dim(), scalar_traits<S>::zero());
    detail::cd_conj_rec(x.c.data(), out.data(), x.dim());
    return CDElement<S>(x.level, std::move(out));
}

/// Squared Euclidean norm: the sum of squared coefficients.  Multiplicative
/// under products up to level 3; defined (but not multiplicative) above.
template <class S>
[[nodiscard]] S cd_norm_sq(const CDElement<S>& x) {
    S acc = scalar_traits<S>::zero();
    for (const S& v : x.c) acc += v * v;
    return acc;
}

/// Two-sided inverse conj(x) / |x|^2, available through the octonions.
template <class S>
[[nodiscard]] CDElement<S> cd_inverse(const CDElement<S>& x) {
    if (x.level > 3) {
        throw LevelOutOfRange("inverse supported through level 3, got level " +
                              std::to_string(x.level));
    }
    const S n = cd_norm_sq(x);
    if (scalar_traits<S>::is_exact_zero(n)) {
        throw DivisionByZero("inverse of zero element");
    }
    const S inv_n = scalar_traits<S>::inverse(n);
    CDElement<S> out = cd_conj(x);
    for (S& v : out.c) v = v * inv_n;
    return out;
}

template <class S>
[[nodiscard]] CDElement<S> cd_add(const CDElement<S>& x, const CDElement<S>& y) {
    require_same_level(x, y, "sum");
    CDElement<S> out = x;
    for (std::size_t i = 0; i < out.dim(); ++i) out.c[i] += y.c[i];
    return out;
}

template <class S>
[[nodiscard]] CDElement<S> cd_sub(const CDElement<S>& x, const CDElement<S>& y) {
    require_same_level(x, y, "difference");
    CDElement<S> out = x;
    for (std::size_t i = 0; i < out.dim(); ++i) out.c[i] -= y.c[i];
    return out;
}

template <class S>
[[nodiscard]] CDElement<S> cd_neg(const CDElement<S>& x) {
    CDElement<S> out = x;
    for (S& v : out.c) v = -v;
    return out;
}

template <class S>
[[nodiscard]] CDElement<S> cd_scale(const CDElement<S>& x, const S& s) {
    CDElement<S> out = x;
    for (S& v : out.c) v = v * s;
    return out;
}

template <class S>
[[nodiscard]] bool cd_eq(const CDElement<S>& x, const CDElement<S>& y) {
    if (x.level != y.level) return false;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (!scalar_traits<S>::eq(x.c[i], y.c[i])) return false;
    }
    return true;
}

template <class S>
[[nodiscard]] bool cd_is_zero(const CDElement<S>& x) {
    for (const S& v : x.c) {
        if (!scalar_traits<S>::eq(v, scalar_traits<S>::zero())) return false;
    }
    return true;
}

template <class S>
bool operator==(const CDElement<S>& x, const CDElement<S>& y) {
    return cd_eq(x, y);
}

/// Dual number a + b*eps with eps^2 = 0.  Commutative, associative, and
/// not a division algebra: every pure-eps element squares to zero.
template <class S>
struct DualNumber {
    S a = scalar_traits<S>::zero();
    S b = scalar_traits<S>::zero();

    DualNumber() = default;
    DualNumber(S a_, S b_) : a(std::move(a_)), b(std::move(b_)) {}
};

template <class S>
[[nodiscard]] DualNumber<S> dual_mul(const DualNumber<S>& x, const DualNumber<S>& y) {
    return DualNumber<S>(x.a * y.a, x.a * y.b + x.b * y.a);
}

template <class S>
[[nodiscard]] DualNumber<S> dual_add(const DualNumber<S>& x, const DualNumber<S>& y) {
    return DualNumber<S>(x.a + y.a, x.b + y.b);
}

template <class S>
[[nodiscard]] DualNumber<S> dual_sub(const DualNumber<S>& x, const DualNumber<S>& y) {
    return DualNumber<S>(x.a - y.a, x.b - y.b);
}

template <class S>
[[nodiscard]] DualNumber<S> dual_neg(const DualNumber<S>& x) {
    return DualNumber<S>(-x.a, -x.b);
}

/// Invertible iff the real part is nonzero: (a + b eps)^-1 = 1/a - (b/a^2) eps.
template <class S>
[[nodiscard]] DualNumber<S> dual_inverse(const DualNumber<S>& x) {
    if (scalar_traits<S>::is_exact_zero(x.a)) {
        throw DivisionByZero("dual number with zero real part has no inverse");
    }
    const S ia = scalar_traits<S>::inverse(x.a);
    return DualNumber<S>(ia, -(x.b * ia * ia));
}

template <class S>
[[nodiscard]] bool dual_eq(const DualNumber<S>& x, const DualNumber<S>& y) {
    return scalar_traits<S>::eq(x.a, y.a) && scalar_traits<S>::eq(x.b, y.b);
}

template <class S>
bool operator==(const DualNumber<S>& x, const DualNumber<S>& y) {
    return dual_eq(x, y);
}

}  // namespace polyadica

#endif  // POLYADICA_HYPERCOMPLEX_HPP
