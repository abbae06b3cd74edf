// SPDX-License-Identifier: MIT
//
// Cyclic-shift matrices and their n-ary product: the matrix construction
// that turns a binary (associative) coefficient algebra into an n-ary one.
//
// A ZMatrix of arity n packs n-1 coefficients z_1..z_{n-1} into the cyclic
// superdiagonal of an (n-1)x(n-1) matrix: z_i sits at row i, column i+1,
// and z_{n-1} wraps around to row n-1, column 1.  The set of such matrices
// is not closed under 2, 3, ..., n-1 factor products, but IS closed under
// exactly-n-factor products, which is the n-ary multiplication implemented
// here both directly on entry vectors and via the dense-matrix route.

#ifndef POLYADICA_ZMATRIX_HPP
#define POLYADICA_ZMATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polyadica/algebra_traits.hpp"
#include "polyadica/errors.hpp"

namespace polyadica {

/// Dense square matrix over a coefficient algebra.  Multiplication keeps
/// left/right factor order, so non-commutative coefficients are safe.
template <class A>
struct DenseMatrix {
    int size = 0;
    std::vector<A> cells;  ///< row-major, size * size entries.

    DenseMatrix() = default;
    DenseMatrix(int n, std::vector<A> c) : size(n), cells(std::move(c)) {
        if (n <= 0 || cells.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
            throw DimensionMismatch("dense matrix needs size*size cells");
        }
    }

    [[nodiscard]] const A& at(int i, int j) const {
        return cells[static_cast<std::size_t>(i) * size + j];
    }
    [[nodiscard]] A& at(int i, int j) {
        return cells[static_cast<std::size_t>(i) * size + j];
    }
};

template <class A>
[[nodiscard]] DenseMatrix<A> dense_zero_like(int size, const A& like) {
    return DenseMatrix<A>(
        size, std::vector<A>(static_cast<std::size_t>(size) * size,
                             algebra_traits<A>::zero_like(like)));
}

template <class A>
[[nodiscard]] DenseMatrix<A> dense_mul(const DenseMatrix<A>& x, const DenseMatrix<A>& y) {
    if (x.size != y.size) {
        throw DimensionMismatch("dense product of " + std::to_string(x.size) + "x" +
                                std::to_string(x.size) + " and " + std::to_string(y.size) +
                                "x" + std::to_string(y.size) + " matrices");
    }
    DenseMatrix<A> out = dense_zero_like(x.size, x.cells.front());
    for (int i = 0; i < x.size; ++i) {
        for (int k = 0; k < x.size; ++k) {
            if (algebra_traits<A>::is_zero(x.at(i, k))) continue;
            for (int j = 0; j < x.size; ++j) {
                out.at(i, j) = algebra_traits<A>::add(
                    out.at(i, j), algebra_traits<A>::mul(x.at(i, k), y.at(k, j)));
            }
        }
    }
    return out;
}

template <class A>
[[nodiscard]] bool dense_eq(const DenseMatrix<A>& x, const DenseMatrix<A>& y) {
    if (x.size != y.size) return false;
    for (std::size_t i = 0; i < x.cells.size(); ++i) {
        if (!algebra_traits<A>::eq(x.cells[i], y.cells[i])) return false;
    }
    return true;
}

/// Cyclic-shift element of the given arity (>= 3) with n-1 coefficients.
template <class A>
struct ZMatrix {
    int arity = 0;
    std::vector<A> entries;  ///< z_1..z_{n-1}, stored 0-based.

    ZMatrix() = default;

    ZMatrix(int n, std::vector<A> z) : arity(n), entries(std::move(z)) {
        if (arity < 3) {
            throw ArityMismatch("arity must be at least 3, got " + std::to_string(arity));
        }
        if (entries.size() + 1 != static_cast<std::size_t>(arity)) {
            throw ArityMismatch("arity " + std::to_string(arity) + " element needs " +
                                std::to_string(arity - 1) + " entries, got " +
                                std::to_string(entries.size()));
        }
        algebra_traits<A>::require_associative(entries.front());
    }

    /// Number of stored coefficients (and the dense matrix size), n-1.
    [[nodiscard]] int span() const noexcept { return arity - 1; }
};

template <class A>
[[nodiscard]] bool zmatrix_eq(const ZMatrix<A>& x, const ZMatrix<A>& y) {
    if (x.arity != y.arity) return false;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        if (!algebra_traits<A>::eq(x.entries[i], y.entries[i])) return false;
    }
    return true;
}

template <class A>
bool operator==(const ZMatrix<A>& x, const ZMatrix<A>& y) {
    return zmatrix_eq(x, y);
}

template <class A>
[[nodiscard]] bool zmatrix_is_zero(const ZMatrix<A>& z) {
    for (const A& e : z.entries) {
        if (!algebra_traits<A>::is_zero(e)) return false;
    }
    return true;
}

/// Entrywise sum (the additive structure the shift matrices inherit).
template <class A>
[[nodiscard]] ZMatrix<A> zmatrix_add(const ZMatrix<A>& x, const ZMatrix<A>& y) {
    if (x.arity != y.arity) {
        throw ArityMismatch("sum of arity " + std::to_string(x.arity) + " and arity " +
                            std::to_string(y.arity) + " elements");
    }
    ZMatrix<A> out = x;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        out.entries[i] = algebra_traits<A>::add(out.entries[i], y.entries[i]);
    }
    return out;
}

namespace detail {

template <class S>
[[nodiscard]] inline S scale_element(const S& x, const S& s) {
    return s * x;
}

template <class S>
[[nodiscard]] inline DualNumber<S> scale_element(const DualNumber<S>& x, const S& s) {
    return DualNumber<S>(s * x.a, s * x.b);
}

template <class S>
[[nodiscard]] inline CDElement<S> scale_element(const CDElement<S>& x, const S& s) {
    return cd_scale(x, s);
}

}  // namespace detail

/// Scale every entry by a scalar of the coefficient algebra's scalar type.
template <class A>
[[nodiscard]] ZMatrix<A> zmatrix_scale(const ZMatrix<A>& z,
                                       const typename algebra_traits<A>::scalar& s) {
    ZMatrix<A> out = z;
    for (A& e : out.entries) e = detail::scale_element(e, s);
    return out;
}

/// The n-ary polyadic unit: every coefficient equal to the algebra unit.
/// `like` supplies the coefficient algebra (and CD level) to instantiate in.
template <class A>
[[nodiscard]] ZMatrix<A> polyadic_identity(int arity, const A& like) {
    if (arity < 3) {
        throw ArityMismatch("arity must be at least 3, got " + std::to_string(arity));
    }
    return ZMatrix<A>(arity,
                      std::vector<A>(arity - 1, algebra_traits<A>::one_like(like)));
}

/// n-ary product of exactly n cyclic-shift elements of arity n.
/// Component i of the result is the left-to-right product
///   f_0[i] * f_1[i+1] * ... * f_{n-1}[i+n-1]   (indices mod n-1),
/// which is exactly what the dense matrix chain produces on the shift pattern.
template <class A>
[[nodiscard]] ZMatrix<A> nary_mul(const std::vector<ZMatrix<A>>& factors) {
    if (factors.empty()) throw ArityMismatch("product of zero factors");
    const int n = factors.front().arity;
    for (const auto& f : factors) {
        if (f.arity != n) {
            throw ArityMismatch("factors of arity " + std::to_string(n) + " and " +
                                std::to_string(f.arity) + " mixed in one product");
        }
    }
    if (static_cast<int>(factors.size()) != n) {
        throw ArityMismatch("arity " + std::to_string(n) + " product needs exactly " +
                            std::to_string(n) + " factors, got " +
                            std::to_string(factors.size()));
    }
    const int m = n - 1;
    std::vector<A> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        A acc = factors[0].entries[i];
        for (int k = 1; k < n; ++k) {
            acc = algebra_traits<A>::mul(acc, factors[k].entries[(i + k) % m]);
        }
        out.push_back(std::move(acc));
    }
    return ZMatrix<A>(n, std::move(out));
}

/// Polyadic power: ell successive n-ary products, each folding the running
/// result with n-1 fresh copies of z; consumes ell*(n-1)+1 copies in total.
/// ell = 0 returns z unchanged.
template <class A>
[[nodiscard]] ZMatrix<A> polyadic_power(const ZMatrix<A>& z, long long ell) {
    if (ell < 0) throw ArityMismatch("power exponent must be non-negative");
    ZMatrix<A> acc = z;
    for (long long step = 0; step < ell; ++step) {
        std::vector<ZMatrix<A>> factors;
        factors.reserve(z.arity);
        factors.push_back(acc);
        for (int k = 1; k < z.arity; ++k) factors.push_back(z);
        acc = nary_mul(factors);
    }
    return acc;
}

/// The querelement (polyadic inverse): the unique Z~ with
/// mu[Z, ..., Z, Z~] = Z regardless of where Z~ is placed.  Entry i of Z~ is
/// the inverse of the ascending cyclic product of the other n-2 entries:
///   ztilde_i = ( z_{i+1} z_{i+2} ... z_{i-1} )^{-1}.
/// Throws NonInvertibleEntry with the first offending 1-based index.
template <class A>
[[nodiscard]] ZMatrix<A> querelement(const ZMatrix<A>& z) {
    const int m = z.span();
    for (int i = 0; i < m; ++i) {
        if (!algebra_traits<A>::is_invertible(z.entries[i])) {
            throw NonInvertibleEntry(i + 1, "entry " + std::to_string(i + 1) +
                                                " is not invertible");
        }
    }
    std::vector<A> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        A prod = algebra_traits<A>::one_like(z.entries.front());
        for (int step = 1; step < m; ++step) {
            prod = algebra_traits<A>::mul(prod, z.entries[(i + step) % m]);
        }
        out.push_back(algebra_traits<A>::inverse(prod));
    }
    return ZMatrix<A>(z.arity, std::move(out));
}

/// Does ell applications of the product send z back to itself?
template <class A>
[[nodiscard]] bool is_idempotent(const ZMatrix<A>& z, long long ell = 1) {
    if (ell < 1) throw ArityMismatch("idempotency needs at least one product");
    return zmatrix_eq(polyadic_power(z, ell), z);
}

/// Does ell applications of the product annihilate z?
template <class A>
[[nodiscard]] bool is_nilpotent(const ZMatrix<A>& z, long long ell = 1) {
    if (ell < 1) throw ArityMismatch("nilpotency needs at least one product");
    return zmatrix_is_zero(polyadic_power(z, ell));
}

/// Is (p_1, ..., p_{n-1}) a neutral polyad for the probe:
/// mu[probe, p_1, ..., p_{n-1}] == probe?  Neutral polyads are generally
/// not unique; the all-units element is merely the canonical one.
template <class A>
[[nodiscard]] bool is_neutral_polyad(const std::vector<ZMatrix<A>>& polyad,
                                     const ZMatrix<A>& probe) {
    if (static_cast<int>(polyad.size()) != probe.arity - 1) {
        throw ArityMismatch("neutral polyad for arity " + std::to_string(probe.arity) +
                            " needs " + std::to_string(probe.arity - 1) + " elements, got " +
                            std::to_string(polyad.size()));
    }
    std::vector<ZMatrix<A>> factors;
    factors.reserve(probe.arity);
    factors.push_back(probe);
    for (const auto& p : polyad) factors.push_back(p);
    return zmatrix_eq(nary_mul(factors), probe);
}

/// Expand a cyclic-shift element into its dense (n-1)x(n-1) matrix.
template <class A>
[[nodiscard]] DenseMatrix<A> to_dense(const ZMatrix<A>& z) {
    const int m = z.span();
    DenseMatrix<A> out = dense_zero_like(m, z.entries.front());
    for (int i = 0; i < m - 1; ++i) out.at(i, i + 1) = z.entries[i];
    out.at(m - 1, 0) = z.entries[m - 1];
    return out;
}

/// Recover a cyclic-shift element from a dense matrix, requiring every cell
/// off the shift pattern to be zero.  Row/column indices in diagnostics are
/// 1-based.
template <class A>
[[nodiscard]] ZMatrix<A> zmatrix_from_dense(const DenseMatrix<A>& d) {
    const int m = d.size;
    if (m < 2) throw PatternViolation("shift pattern needs size >= 2");
    for (int i = 0; i < m; ++i) {
        const int pattern_col = (i == m - 1) ? 0 : i + 1;
        for (int j = 0; j < m; ++j) {
            if (j == pattern_col) continue;
            if (!algebra_traits<A>::is_zero(d.at(i, j))) {
                throw PatternViolation("cell (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) +
                                       ") lies off the cyclic-shift pattern but is nonzero");
            }
        }
    }
    std::vector<A> entries;
    entries.reserve(m);
    for (int i = 0; i < m - 1; ++i) entries.push_back(d.at(i, i + 1));
    entries.push_back(d.at(m - 1, 0));
    return ZMatrix<A>(m + 1, std::move(entries));
}

/// Dense-route n-ary product: expand every factor, chain the dense products
/// left to right, and contract back through the pattern check.  Used as an
/// independent route to cross-check nary_mul.
template <class A>
[[nodiscard]] ZMatrix<A> nary_mul_dense(const std::vector<ZMatrix<A>>& factors) {
    if (factors.empty()) throw ArityMismatch("product of zero factors");
    const int n = factors.front().arity;
    for (const auto& f : factors) {
        if (f.arity != n) {
            throw ArityMismatch("factors of arity " + std::to_string(n) + " and " +
                                std::to_string(f.arity) + " mixed in one product");
        }
    }
    if (static_cast<int>(factors.size()) != n) {
        throw ArityMismatch("arity " + std::to_string(n) + " product needs exactly " +
                            std::to_string(n) + " factors, got " +
                            std::to_string(factors.size()));
    }
    DenseMatrix<A> acc = to_dense(factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k) {
        acc = dense_mul(acc, to_dense(factors[k]));
    }
    return zmatrix_from_dense(acc);
}

}  // namespace polyadica

#endif  // POLYADICA_ZMATRIX_HPP
