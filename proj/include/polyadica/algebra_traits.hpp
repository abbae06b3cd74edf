// SPDX-License-Identifier: MIT
//
// One trait surface over every coefficient algebra that can sit inside a
// cyclic-shift element: plain scalars, dual numbers, and Cayley-Dickson
// elements.  Generic n-ary code (products, inverses, norms, dense routes)
// is written once against this surface.
//
// "Like" constructors take an exemplar because the Cayley-Dickson level is
// runtime data: the zero of "the same algebra as x" cannot be named by the
// type alone.

#ifndef POLYADICA_ALGEBRA_TRAITS_HPP
#define POLYADICA_ALGEBRA_TRAITS_HPP

#include <string>

#include "polyadica/hypercomplex.hpp"
#include "polyadica/scalar.hpp"

namespace polyadica {

template <class A>
struct algebra_traits;

namespace detail {

/// Shared implementation for plain scalar coefficient algebras.
template <class S>
struct scalar_algebra_traits {
    using scalar = S;
    static constexpr bool has_norm = true;

    static std::string name(const S&) { return "R"; }

    static S zero_like(const S&) { return scalar_traits<S>::zero(); }
    static S one_like(const S&) { return scalar_traits<S>::one(); }

    static S add(const S& x, const S& y) { return x + y; }
    static S sub(const S& x, const S& y) { return x - y; }
    static S neg(const S& x) { return -x; }
    static S mul(const S& x, const S& y) { return x * y; }

    static bool eq(const S& x, const S& y) { return scalar_traits<S>::eq(x, y); }
    static bool is_zero(const S& x) { return eq(x, scalar_traits<S>::zero()); }
    static bool is_invertible(const S& x) { return !scalar_traits<S>::is_exact_zero(x); }
    static S inverse(const S& x) { return scalar_traits<S>::inverse(x); }

    static S norm_sq(const S& x) { return x * x; }

    /// Scalars are associative; nothing to reject.
    static void require_associative(const S&) {}
};

}  // namespace detail

template <>
struct algebra_traits<Rational> : detail::scalar_algebra_traits<Rational> {};

template <>
struct algebra_traits<F64> : detail::scalar_algebra_traits<F64> {};

template <class S>
struct algebra_traits<DualNumber<S>> {
    using scalar = S;
    static constexpr bool has_norm = false;

    static std::string name(const DualNumber<S>&) { return "dual"; }

    static DualNumber<S> zero_like(const DualNumber<S>&) { return DualNumber<S>(); }
    static DualNumber<S> one_like(const DualNumber<S>&) {
        return DualNumber<S>(scalar_traits<S>::one(), scalar_traits<S>::zero());
    }

    static DualNumber<S> add(const DualNumber<S>& x, const DualNumber<S>& y) {
        return dual_add(x, y);
    }
    static DualNumber<S> sub(const DualNumber<S>& x, const DualNumber<S>& y) {
        return dual_sub(x, y);
    }
    static DualNumber<S> neg(const DualNumber<S>& x) { return dual_neg(x); }
    static DualNumber<S> mul(const DualNumber<S>& x, const DualNumber<S>& y) {
        return dual_mul(x, y);
    }

    static bool eq(const DualNumber<S>& x, const DualNumber<S>& y) { return dual_eq(x, y); }
    static bool is_zero(const DualNumber<S>& x) {
        return scalar_traits<S>::eq(x.a, scalar_traits<S>::zero()) &&
               scalar_traits<S>::eq(x.b, scalar_traits<S>::zero());
    }
    static bool is_invertible(const DualNumber<S>& x) {
        return !scalar_traits<S>::is_exact_zero(x.a);
    }
    static DualNumber<S> inverse(const DualNumber<S>& x) { return dual_inverse(x); }

    static void require_associative(const DualNumber<S>&) {}
};

template <class S>
struct algebra_traits<CDElement<S>> {
    using scalar = S;
    static constexpr bool has_norm = true;

    static std::string name(const CDElement<S>& x) { return level_name(x.level); }

    static CDElement<S> zero_like(const CDElement<S>& x) { return cd_zero<S>(x.level); }
    static CDElement<S> one_like(const CDElement<S>& x) { return cd_one<S>(x.level); }

    static CDElement<S> add(const CDElement<S>& x, const CDElement<S>& y) {
        return cd_add(x, y);
    }
    static CDElement<S> sub(const CDElement<S>& x, const CDElement<S>& y) {
        return cd_sub(x, y);
    }
    static CDElement<S> neg(const CDElement<S>& x) { return cd_neg(x); }
    static CDElement<S> mul(const CDElement<S>& x, const CDElement<S>& y) {
        return cd_mul(x, y);
    }

    static bool eq(const CDElement<S>& x, const CDElement<S>& y) { return cd_eq(x, y); }
    static bool is_zero(const CDElement<S>& x) { return cd_is_zero(x); }
    static bool is_invertible(const CDElement<S>& x) {
        return x.level <= 3 && !scalar_traits<S>::is_exact_zero(cd_norm_sq(x));
    }
    static CDElement<S> inverse(const CDElement<S>& x) { return cd_inverse(x); }

    static S norm_sq(const CDElement<S>& x) { return cd_norm_sq(x); }

    /// Octonions and above lose associativity, which the cyclic-shift
    /// machinery depends on; reject them with a pointed diagnostic.
    static void require_associative(const CDElement<S>& x) {
        if (x.level > 2) {
            throw UnsupportedCoefficientAlgebra(
                "coefficient algebra " + level_name(x.level) +
                " is non-associative; cyclic-shift entries must be R, C, H, or dual");
        }
    }
};

}  // namespace polyadica

#endif  // POLYADICA_ALGEBRA_TRAITS_HPP
