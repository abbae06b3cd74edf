// SPDX-License-Identifier: MIT
//
// The (m+1)-ary product of m-dimensional coordinate vectors: component j of
// mu*[v0, ..., vm] is the cyclic monomial
//
//     v0[j] * v1[j+1] * ... * v{m-1}[j+m-1] * vm[j]      (indices mod m)
//
// i.e. each factor advances one coordinate step and the last factor returns
// to the start.  This is the scalar shadow of the cyclic-shift matrix
// product: sending a vector to its shift matrix is an (m+1)-ary homomorphism,
// and reduced vectorization inverts it.

#ifndef POLYADICA_VECTORALG_HPP
#define POLYADICA_VECTORALG_HPP

#include <string>
#include <vector>

#include "polyadica/errors.hpp"
#include "polyadica/scalar.hpp"
#include "polyadica/zmatrix.hpp"

namespace polyadica {

/// m-dimensional coordinate vector (m >= 2).
template <class S>
struct PolyVector {
    int dim = 0;
    std::vector<S> x;

    PolyVector() = default;
    explicit PolyVector(std::vector<S> coords)
        : dim(static_cast<int>(coords.size())), x(std::move(coords)) {
        validate();
    }
    PolyVector(int m, std::vector<S> coords) : dim(m), x(std::move(coords)) {
        validate();
    }

private:
    void validate() const {
        if (dim < 2) {
            throw DimensionMismatch("vector dimension must be at least 2, got " +
                                    std::to_string(dim));
        }
        if (x.size() != static_cast<std::size_t>(dim)) {
            throw DimensionMismatch("dimension " + std::to_string(dim) + " vector needs " +
                                    std::to_string(dim) + " coordinates, got " +
                                    std::to_string(x.size()));
        }
    }
};

template <class S>
[[nodiscard]] bool vector_eq(const PolyVector<S>& u, const PolyVector<S>& v) {
    if (u.dim != v.dim) return false;
    for (int j = 0; j < u.dim; ++j) {
        if (!scalar_traits<S>::eq(u.x[j], v.x[j])) return false;
    }
    return true;
}

template <class S>
bool operator==(const PolyVector<S>& u, const PolyVector<S>& v) {
    return vector_eq(u, v);
}

/// The (m+1)-ary cyclic product (see file header).
template <class S>
[[nodiscard]] PolyVector<S> poly_product(const std::vector<PolyVector<S>>& factors) {
    if (factors.empty()) throw DimensionMismatch("product of zero factors");
    const int m = factors.front().dim;
    for (const auto& f : factors) {
        if (f.dim != m) {
            throw DimensionMismatch("factors of dimension " + std::to_string(m) + " and " +
                                    std::to_string(f.dim) + " mixed in one product");
        }
    }
    if (static_cast<int>(factors.size()) != m + 1) {
        throw DimensionMismatch("dimension " + std::to_string(m) +
                                " product needs exactly " + std::to_string(m + 1) +
                                " factors, got " + std::to_string(factors.size()));
    }
    std::vector<S> out;
    out.reserve(m);
    for (int j = 0; j < m; ++j) {
        S acc = factors[0].x[j];
        for (int k = 1; k <= m; ++k) acc *= factors[k].x[(j + k) % m];
        out.push_back(acc);
    }
    return PolyVector<S>(m, std::move(out));
}

/// Nonzero structure constants of the product: for each output index j the
/// single monomial f^j with lower indices (j, j+1, ..., j+m-1, j) has value 1
/// and every other combination vanishes.  Indices are reported 1-based.
struct StructureConstants {
    int dim = 0;
    struct Entry {
        std::vector<int> lower;  ///< m+1 lower indices, 1-based.
        int upper = 0;           ///< output coordinate, 1-based.
    };
    std::vector<Entry> nonzero;  ///< exactly dim entries, each of value 1.
};

[[nodiscard]] inline StructureConstants structure_constants(int m) {
    if (m < 2) {
        throw DimensionMismatch("vector dimension must be at least 2, got " +
                                std::to_string(m));
    }
    StructureConstants sc;
    sc.dim = m;
    for (int j = 0; j < m; ++j) {
        StructureConstants::Entry e;
        e.upper = j + 1;
        e.lower.reserve(m + 1);
        for (int k = 0; k <= m; ++k) e.lower.push_back((j + k) % m + 1);
        sc.nonzero.push_back(std::move(e));
    }
    return sc;
}

/// Quervector: coordinate j is the inverse of the cyclic product of the
/// other m-1 coordinates starting at j+1,
///     qv_j = ( x_{j+1} x_{j+2} ... x_{j+m-1} )^{-1},
/// the unique vector with mu*[v, ..., v, qv] = v on every placement.
/// Throws ZeroCoordinate with the first 1-based zero coordinate.
template <class S>
[[nodiscard]] PolyVector<S> quervector(const PolyVector<S>& v) {
    const int m = v.dim;
    for (int j = 0; j < m; ++j) {
        if (scalar_traits<S>::is_exact_zero(v.x[j])) {
            throw ZeroCoordinate(j + 1,
                                 "coordinate " + std::to_string(j + 1) + " is zero");
        }
    }
    std::vector<S> out;
    out.reserve(m);
    for (int j = 0; j < m; ++j) {
        S prod = scalar_traits<S>::one();
        for (int step = 1; step < m; ++step) prod *= v.x[(j + step) % m];
        out.push_back(scalar_traits<S>::inverse(prod));
    }
    return PolyVector<S>(m, std::move(out));
}

/// The m x m cyclic-shift matrix carrying coordinate j at (j, j+1 mod m).
template <class S>
[[nodiscard]] DenseMatrix<S> shift_matrix(const PolyVector<S>& v) {
    const int m = v.dim;
    DenseMatrix<S> out = dense_zero_like(m, v.x.front());
    for (int j = 0; j < m - 1; ++j) out.at(j, j + 1) = v.x[j];
    out.at(m - 1, 0) = v.x[m - 1];
    return out;
}

/// Inverse of shift_matrix; every off-pattern cell must be zero.
template <class S>
[[nodiscard]] PolyVector<S> reduced_vectorization(const DenseMatrix<S>& d) {
    const int m = d.size;
    if (m < 2) throw PatternViolation("shift pattern needs size >= 2");
    for (int i = 0; i < m; ++i) {
        const int pattern_col = (i == m - 1) ? 0 : i + 1;
        for (int j = 0; j < m; ++j) {
            if (j == pattern_col) continue;
            if (!scalar_traits<S>::eq(d.at(i, j), scalar_traits<S>::zero())) {
                throw PatternViolation("cell (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) +
                                       ") lies off the cyclic-shift pattern but is nonzero");
            }
        }
    }
    std::vector<S> coords;
    coords.reserve(m);
    for (int i = 0; i < m - 1; ++i) coords.push_back(d.at(i, i + 1));
    coords.push_back(d.at(m - 1, 0));
    return PolyVector<S>(m, std::move(coords));
}

/// Dense-route product: map every factor through shift_matrix, chain the
/// matrix products, and vectorize back.  Independent cross-check route for
/// poly_product.
template <class S>
[[nodiscard]] PolyVector<S> poly_product_dense(const std::vector<PolyVector<S>>& factors) {
    if (factors.empty()) throw DimensionMismatch("product of zero factors");
    const int m = factors.front().dim;
    if (static_cast<int>(factors.size()) != m + 1) {
        throw DimensionMismatch("dimension " + std::to_string(m) +
                                " product needs exactly " + std::to_string(m + 1) +
                                " factors, got " + std::to_string(factors.size()));
    }
    DenseMatrix<S> acc = shift_matrix(factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k) {
        acc = dense_mul(acc, shift_matrix(factors[k]));
    }
    return reduced_vectorization(acc);
}

}  // namespace polyadica

#endif  // POLYADICA_VECTORALG_HPP
