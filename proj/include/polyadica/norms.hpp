// SPDX-License-Identifier: MIT
//
// Polyadic norms of cyclic-shift elements.
//
// The norm of a shift element is the product of the coefficient norms.  In
// exact (rational) mode the SQUARED norm is tracked throughout -- squared
// norms of Cayley-Dickson elements are rational while the norms themselves
// generally are not -- and the `squared` flag on the result says so.  In
// float mode the plain norm is returned.
//
// Laws exercised by the property suites:
//   * multiplicativity: |mu[Z1..Zn]| = |Z1| ... |Zn|,
//   * scaling:          |lambda Z| = lambda^{n-1} |Z|  (squared: lambda^{2(n-1)}),
//   * quer law:         |Z~| = 1 / |Z|^{n-2}.

#ifndef POLYADICA_NORMS_HPP
#define POLYADICA_NORMS_HPP

#include <string>

#include "polyadica/zmatrix.hpp"

namespace polyadica {

/// Norm of a polyadic element; `squared` distinguishes exact-mode values.
template <class S>
struct PolyNorm {
    int arity = 0;
    S value = scalar_traits<S>::zero();
    bool squared = true;
};

/// Product of coefficient norms.  Throws UnnormedAlgebra for coefficient
/// algebras without a multiplicative norm (dual numbers).
template <class A>
[[nodiscard]] PolyNorm<typename algebra_traits<A>::scalar> polyadic_norm(
    const ZMatrix<A>& z) {
    using S = typename algebra_traits<A>::scalar;
    if constexpr (!algebra_traits<A>::has_norm) {
        throw UnnormedAlgebra("coefficient algebra \"" +
                              algebra_traits<A>::name(z.entries.front()) +
                              "\" has no multiplicative norm");
    } else {
        S acc = scalar_traits<S>::one();
        if constexpr (scalar_traits<S>::exact) {
            for (const A& e : z.entries) acc *= algebra_traits<A>::norm_sq(e);
            return PolyNorm<S>{z.arity, acc, true};
        } else {
            for (const A& e : z.entries) {
                acc *= scalar_traits<S>::sqrt(algebra_traits<A>::norm_sq(e));
            }
            return PolyNorm<S>{z.arity, acc, false};
        }
    }
}

/// Norm of the querelement via the closed form 1 / |Z|^{n-2}, without
/// constructing the querelement.  (The property suite checks this against
/// the constructed-querelement route.)  Entry invertibility is gated exactly
/// as in querelement, with the same 1-based diagnostics.
template <class A>
[[nodiscard]] PolyNorm<typename algebra_traits<A>::scalar> quer_norm(const ZMatrix<A>& z) {
    using S = typename algebra_traits<A>::scalar;
    const int m = z.span();
    for (int i = 0; i < m; ++i) {
        if (!algebra_traits<A>::is_invertible(z.entries[i])) {
            throw NonInvertibleEntry(i + 1, "entry " + std::to_string(i + 1) +
                                                " is not invertible");
        }
    }
    PolyNorm<S> base = polyadic_norm(z);
    S powed = scalar_traits<S>::one();
    for (int k = 0; k < z.arity - 2; ++k) powed *= base.value;
    return PolyNorm<S>{z.arity, scalar_traits<S>::inverse(powed), base.squared};
}

}  // namespace polyadica

#endif  // POLYADICA_NORMS_HPP
