// SPDX-License-Identifier: MIT
//
// Iterated doubling tower: alternate a Cayley-Dickson doubling of the
// coefficient algebra with a cyclic-shift stage of chosen arity.  A tower
// with arities (n_1, ..., n_L) produces block matrices of size
// M = prod(n_k - 1) over a coefficient algebra of dimension 2^(L-1), for a
// total real dimension M * 2^(L-1).
//
// The sparsity pattern is built inside out: the first arity contributes the
// innermost shift cycle, and every later stage wraps the previous pattern
// into the blocks of its own shift cycle, so the LAST arity is the outermost
// block structure.
//
// Arity chains only compose "evenly" when each (n_{k+1} - 1) is a multiple
// of (n_k - 1); validate_arity_chain reports the per-link ratios without
// treating a broken link as an error, because the construction itself never
// needs the ratios to be integral.

#ifndef POLYADICA_TOWER_HPP
#define POLYADICA_TOWER_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polyadica/errors.hpp"

namespace polyadica {

/// A tower description: the ordered arities of the shift stages, plus an
/// optional expected chain of arity ratios (checked on construction).
struct TowerSpec {
    std::vector<int> arities;

    explicit TowerSpec(std::vector<int> ns) : arities(std::move(ns)) {
        if (arities.empty()) throw InvalidTowerSpec("tower needs at least one arity");
        for (int n : arities) {
            if (n < 3) {
                throw InvalidTowerSpec("every arity must be at least 3, got " +
                                       std::to_string(n));
            }
        }
    }

    [[nodiscard]] int stages() const noexcept { return static_cast<int>(arities.size()); }
};

/// Block-matrix size M = prod(n_k - 1).
[[nodiscard]] inline long long tower_size(const TowerSpec& spec) {
    long long m = 1;
    for (int n : spec.arities) m *= (n - 1);
    return m;
}

/// Dimension of the coefficient algebra after the doublings: 2^(stages-1).
[[nodiscard]] inline long long tower_coeff_dim(const TowerSpec& spec) {
    return 1LL << (spec.stages() - 1);
}

/// Total real dimension M * 2^(stages-1).
[[nodiscard]] inline long long tower_dimension(const TowerSpec& spec) {
    return tower_size(spec) * tower_coeff_dim(spec);
}

/// Per-link ratio report for the arity chain (advisory, never throws).
struct ChainReport {
    struct Link {
        int index = 0;        ///< 1-based link between arity i and i+1.
        long long num = 0;    ///< reduced numerator of (n_{i+1}-1)/(n_i-1).
        long long den = 1;    ///< reduced denominator.
        bool integral = false;
        long long kappa = 0;  ///< the ratio when integral.
    };
    std::vector<Link> links;
    bool ok = true;           ///< all links integral.
    int first_broken = 0;     ///< 1-based index of the first broken link, 0 if ok.
};

[[nodiscard]] inline ChainReport validate_arity_chain(const TowerSpec& spec) {
    ChainReport report;
    for (int i = 0; i + 1 < spec.stages(); ++i) {
        long long num = spec.arities[i + 1] - 1;
        long long den = spec.arities[i] - 1;
        long long a = num;
        long long b = den;
        while (b != 0) {
            long long t = a % b;
            a = b;
            b = t;
        }
        ChainReport::Link link;
        link.index = i + 1;
        link.num = num / a;
        link.den = den / a;
        link.integral = (link.den == 1);
        link.kappa = link.integral ? link.num : 0;
        if (!link.integral && report.first_broken == 0) {
            report.first_broken = link.index;
            report.ok = false;
        }
        report.links.push_back(link);
    }
    return report;
}

/// The composed sparsity pattern and its stage geometry.
struct TowerShape {
    long long size = 0;                                ///< M, the matrix size.
    long long coeff_dim = 0;                           ///< 2^(stages-1).
    std::vector<long long> block_sizes;                ///< pattern size after each stage.
    std::vector<std::pair<long long, long long>> pattern;  ///< 1-based (row, col).
};

/// Compose the shift patterns inside out (see file header).
[[nodiscard]] inline TowerShape build_shape(const TowerSpec& spec) {
    std::vector<std::pair<long long, long long>> pattern;
    long long size = 1;
    std::vector<long long> block_sizes;

    // Stage 1: the bare shift cycle of the first arity.
    {
        const long long m = spec.arities.front() - 1;
        for (long long i = 1; i <= m; ++i) {
            pattern.emplace_back(i, i == m ? 1 : i + 1);
        }
        size = m;
        block_sizes.push_back(size);
    }

    // Later stages: wrap the current pattern into each block of the stage's
    // own shift cycle.
    for (int k = 1; k < spec.stages(); ++k) {
        const long long m = spec.arities[k] - 1;
        std::vector<std::pair<long long, long long>> next;
        next.reserve(pattern.size() * m);
        for (long long bi = 1; bi <= m; ++bi) {
            const long long bj = (bi == m) ? 1 : bi + 1;
            for (const auto& [r, c] : pattern) {
                next.emplace_back((bi - 1) * size + r, (bj - 1) * size + c);
            }
        }
        pattern = std::move(next);
        size *= m;
        block_sizes.push_back(size);
    }

    std::sort(pattern.begin(), pattern.end());
    TowerShape shape;
    shape.size = size;
    shape.coeff_dim = tower_coeff_dim(spec);
    shape.block_sizes = std::move(block_sizes);
    shape.pattern = std::move(pattern);
    return shape;
}

/// Arity of the composed element when the full MxM matrix is read as one
/// flat shift structure (flat = M + 1) together with the outermost stage
/// arity the block structure exposes directly.
struct FinalArity {
    int outer = 0;
    long long flat = 0;
};

[[nodiscard]] inline FinalArity final_arity(const TowerSpec& spec) {
    return FinalArity{spec.arities.back(), tower_size(spec) + 1};
}

/// ASCII rendering: '*' on pattern cells, '.' elsewhere, one row per line.
[[nodiscard]] inline std::string render_shape(const TowerShape& shape) {
    std::vector<std::string> rows(static_cast<std::size_t>(shape.size),
                                  std::string(static_cast<std::size_t>(shape.size), '.'));
    for (const auto& [r, c] : shape.pattern) {
        rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = '*';
    }
    std::string out;
    out.reserve(static_cast<std::size_t>(shape.size + 1) * shape.size);
    for (const auto& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace polyadica

#endif  // POLYADICA_TOWER_HPP
