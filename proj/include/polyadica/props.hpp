// SPDX-License-Identifier: MIT
//
// Seeded property suites over every module.  Each suite draws deterministic
// random cases (see rng.hpp), checks one identity, and reports every
// violation as a counterexample whose inputs are valid CLI documents, so a
// reported case can be replayed verbatim through the command line.
//
// Two suites are EXPECTED to report failures and exist to measure, not to
// assert:
//   * half-octonion-associativity — total ternary associativity of the
//     averaged product fails on generic triples (only repeated-argument
//     patterns are rescued by alternativity); the suite publishes concrete
//     counterexamples.
//   * half-octonion-norm-mult — the analogous norm multiplicativity also
//     fails (there are exact zero divisors such as mu[e4, e5, e6] = 0).
// Every other suite is expected to be failure-free in both numeric modes.

#ifndef POLYADICA_PROPS_HPP
#define POLYADICA_PROPS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyadica/imaginary.hpp"
#include "polyadica/json_io.hpp"
#include "polyadica/norms.hpp"
#include "polyadica/rng.hpp"
#include "polyadica/tower.hpp"
#include "polyadica/vectoralg.hpp"
#include "polyadica/zmatrix.hpp"

namespace polyadica {

enum class Mode { rational, floating };

inline std::string mode_string(Mode m) {
    return m == Mode::rational ? "rational" : "float";
}

inline Mode mode_from_string(const std::string& s) {
    if (s == "rational") return Mode::rational;
    if (s == "float") return Mode::floating;
    throw MalformedInput("unknown mode \"" + s + "\" (expected rational or float)");
}

/// Outcome of one suite run.  Failures beyond a small cap are counted but
/// not stored, to keep reports readable when an identity fails generically.
struct PropsReport {
    std::string suite;
    Mode mode = Mode::rational;
    std::uint64_t seed = 0;
    long long cases = 0;
    long long failures_total = 0;
    std::vector<json> failures;

    static constexpr std::size_t max_stored = 10;

    void add_failure(json f) {
        ++failures_total;
        if (failures.size() < max_stored) failures.push_back(std::move(f));
    }

    [[nodiscard]] json to_json() const {
        json fs = json::array();
        for (const auto& f : failures) fs.push_back(f);
        return json{{"suite", suite},         {"mode", mode_string(mode)},
                    {"seed", seed},           {"cases", cases},
                    {"failures_total", failures_total}, {"failures", std::move(fs)}};
    }
};

// ----------------------------------------------------- random structures --

namespace propdetail {

template <class S>
S random_like(SplitMix64& rng, const S&, bool invertible) {
    return random_scalar<S>(rng, invertible);
}

template <class S>
DualNumber<S> random_like(SplitMix64& rng, const DualNumber<S>&, bool invertible) {
    S a = random_scalar<S>(rng, invertible);
    S b = random_scalar<S>(rng, false);
    return DualNumber<S>(std::move(a), std::move(b));
}

template <class S>
CDElement<S> random_like(SplitMix64& rng, const CDElement<S>& like, bool invertible) {
    for (;;) {
        std::vector<S> c;
        c.reserve(like.dim());
        for (std::size_t i = 0; i < like.dim(); ++i) {
            c.push_back(random_scalar<S>(rng, false));
        }
        CDElement<S> out(like.level, std::move(c));
        if (!invertible) return out;
        const S n = cd_norm_sq(out);
        if constexpr (scalar_traits<S>::exact) {
            if (!scalar_traits<S>::is_exact_zero(n)) return out;
        } else {
            // Keep float norms bounded away from zero so inverse entries
            // stay well-scaled for relative-tolerance comparison.
            if (n.value() >= 0.0625) return out;
        }
    }
}

template <class A>
ZMatrix<A> random_zmatrix(SplitMix64& rng, int arity, const A& like, bool invertible) {
    std::vector<A> entries;
    entries.reserve(arity - 1);
    for (int i = 0; i + 1 < arity; ++i) entries.push_back(random_like(rng, like, invertible));
    return ZMatrix<A>(arity, std::move(entries));
}

template <class S>
PolyVector<S> random_vector(SplitMix64& rng, int m, bool invertible) {
    std::vector<S> x;
    x.reserve(m);
    for (int i = 0; i < m; ++i) x.push_back(random_scalar<S>(rng, invertible));
    return PolyVector<S>(m, std::move(x));
}

template <class S>
HalfQuaternion<S> random_hq(SplitMix64& rng, bool nonzero) {
    for (;;) {
        HalfQuaternion<S> h(random_scalar<S>(rng, false), random_scalar<S>(rng, false));
        if (!nonzero) return h;
        const S n = norm_sq_h(h);
        if constexpr (scalar_traits<S>::exact) {
            if (!scalar_traits<S>::is_exact_zero(n)) return h;
        } else {
            if (n.value() >= 0.0625) return h;
        }
    }
}

template <class S>
HalfOctonion<S> random_ho(SplitMix64& rng, bool nonzero) {
    for (;;) {
        HalfOctonion<S> h(random_scalar<S>(rng, false), random_scalar<S>(rng, false),
                          random_scalar<S>(rng, false), random_scalar<S>(rng, false));
        if (!nonzero) return h;
        const S n = norm_sq_o(h);
        if constexpr (scalar_traits<S>::exact) {
            if (!scalar_traits<S>::is_exact_zero(n)) return h;
        } else {
            if (n.value() >= 0.0625) return h;
        }
    }
}

/// Run `fn` with a unit exemplar of the algebra selected by `idx`:
/// 0 -> scalars, 1 -> dual numbers, 2 -> complex, 3 -> quaternions
/// (without dual numbers the cycle is scalars/complex/quaternions).
template <class S, class Fn>
void with_algebra(long long idx, bool include_dual, Fn&& fn) {
    if (include_dual) {
        switch (idx % 4) {
            case 0: fn(scalar_traits<S>::one()); return;
            case 1:
                fn(DualNumber<S>(scalar_traits<S>::one(), scalar_traits<S>::zero()));
                return;
            case 2: fn(cd_one<S>(1)); return;
            default: fn(cd_one<S>(2)); return;
        }
    }
    switch (idx % 3) {
        case 0: fn(scalar_traits<S>::one()); return;
        case 1: fn(cd_one<S>(1)); return;
        default: fn(cd_one<S>(2)); return;
    }
}

template <class A>
json zmatrix_list_json(const std::vector<ZMatrix<A>>& zs) {
    json arr = json::array();
    for (const auto& z : zs) arr.push_back(zmatrix_to_json(z));
    return arr;
}

template <class S>
json vector_list_json(const std::vector<PolyVector<S>>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(vector_to_json(v));
    return arr;
}

}  // namespace propdetail

// ----------------------------------------------------------------- suites --

template <class S>
PropsReport suite_scalar_field(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"scalar-field", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const S a = random_scalar<S>(rng, false);
        const S b = random_scalar<S>(rng, false);
        const S c = random_scalar<S>(rng, true);
        json inputs{{"a", scalar_to_json<S>(a)},
                    {"b", scalar_to_json<S>(b)},
                    {"c", scalar_to_json<S>(c)}};
        if (!T::eq((a + b) + c, a + (b + c))) {
            r.add_failure(json{{"case", i}, {"detail", "addition associativity"},
                               {"inputs", inputs}});
        }
        if (!T::eq(a * (b + c), a * b + a * c)) {
            r.add_failure(json{{"case", i}, {"detail", "distributivity"},
                               {"inputs", inputs}});
        }
        if (!T::eq(a * b, b * a)) {
            r.add_failure(json{{"case", i}, {"detail", "commutativity"},
                               {"inputs", inputs}});
        }
        if (!T::eq(c * T::inverse(c), T::one())) {
            r.add_failure(json{{"case", i}, {"detail", "multiplicative inverse"},
                               {"inputs", inputs}});
        }
        if constexpr (T::exact) {
            if (Rational::parse(a.str()) != a) {
                r.add_failure(json{{"case", i}, {"detail", "text round-trip"},
                                   {"inputs", inputs}});
            }
        }
    }
    return r;
}

template <class S>
PropsReport suite_nary_vs_dense(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"nary-vs-dense", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        const int arity = 3 + static_cast<int>(rng.range(0, 2));
        const long long alg = rng.range(0, 3);
        propdetail::with_algebra<S>(alg, true, [&](auto exemplar) {
            using A = decltype(exemplar);
            std::vector<ZMatrix<A>> factors;
            for (int k = 0; k < arity; ++k) {
                factors.push_back(propdetail::random_zmatrix(rng, arity, exemplar, false));
            }
            const ZMatrix<A> direct = nary_mul(factors);
            const ZMatrix<A> dense = nary_mul_dense(factors);
            if (!zmatrix_eq(direct, dense)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "entrywise product disagrees with dense route"},
                                   {"input", json{{"factors",
                                                   propdetail::zmatrix_list_json(factors)}}},
                                   {"direct", zmatrix_to_json(direct)},
                                   {"dense", zmatrix_to_json(dense)}});
            }
        });
    }
    return r;
}

template <class S>
PropsReport suite_vecmul_vs_dense(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"vecmul-vs-dense", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        const int m = 2 + static_cast<int>(rng.range(0, 3));
        std::vector<PolyVector<S>> factors;
        for (int k = 0; k <= m; ++k) {
            factors.push_back(propdetail::random_vector<S>(rng, m, false));
        }
        const PolyVector<S> direct = poly_product(factors);
        const PolyVector<S> dense = poly_product_dense(factors);
        if (!vector_eq(direct, dense)) {
            r.add_failure(json{{"case", i},
                               {"detail", "vector product disagrees with shift-matrix route"},
                               {"input", json{{"factors",
                                               propdetail::vector_list_json(factors)}}},
                               {"direct", vector_to_json(direct)},
                               {"dense", vector_to_json(dense)}});
        }
    }
    return r;
}

template <class S>
PropsReport suite_ho_formula_vs_average(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"half-octonion-formula-vs-average", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        const auto x = propdetail::random_ho<S>(rng, false);
        const auto y = propdetail::random_ho<S>(rng, false);
        const auto z = propdetail::random_ho<S>(rng, false);
        const auto avg = ternary_mul_o(x, y, z);
        const auto comp = ternary_mul_o_components(x, y, z);
        if (!(avg == comp)) {
            r.add_failure(json{{"case", i},
                               {"detail", "component formula disagrees with embedding average"},
                               {"input", json{{"factors",
                                               json::array({imaginary_to_json(x),
                                                            imaginary_to_json(y),
                                                            imaginary_to_json(z)})}}},
                               {"average", imaginary_to_json(avg)},
                               {"components", imaginary_to_json(comp)}});
        }
    }
    return r;
}

template <class S>
PropsReport suite_quer_zmatrix(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"quer-zmatrix", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        const int arity = 3 + static_cast<int>(rng.range(0, 2));
        const long long alg = rng.range(0, 3);
        propdetail::with_algebra<S>(alg, true, [&](auto exemplar) {
            using A = decltype(exemplar);
            const ZMatrix<A> z = propdetail::random_zmatrix(rng, arity, exemplar, true);
            const ZMatrix<A> quer = querelement(z);
            for (int p = 0; p < arity; ++p) {
                std::vector<ZMatrix<A>> factors(arity, z);
                factors[p] = quer;
                const ZMatrix<A> got = nary_mul(factors);
                if (!zmatrix_eq(got, z)) {
                    r.add_failure(
                        json{{"case", i},
                             {"detail", "defining equation fails at placement " +
                                            std::to_string(p + 1)},
                             {"element", zmatrix_to_json(z)},
                             {"quer", zmatrix_to_json(quer)},
                             {"placement", p + 1},
                             {"got", zmatrix_to_json(got)}});
                }
            }
        });
    }
    return r;
}

template <class S>
PropsReport suite_quer_vector(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"quer-vector", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        const int m = 2 + static_cast<int>(rng.range(0, 3));
        const PolyVector<S> v = propdetail::random_vector<S>(rng, m, true);
        const PolyVector<S> qv = quervector(v);
        for (int p = 0; p <= m; ++p) {
            std::vector<PolyVector<S>> factors(m + 1, v);
            factors[p] = qv;
            const PolyVector<S> got = poly_product(factors);
            if (!vector_eq(got, v)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "defining equation fails at placement " +
                                                  std::to_string(p + 1)},
                                   {"element", vector_to_json(v)},
                                   {"quer", vector_to_json(qv)},
                                   {"placement", p + 1},
                                   {"got", vector_to_json(got)}});
            }
        }
    }
    return r;
}

template <class S>
PropsReport suite_quer_half_quaternion(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"quer-half-quaternion", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        const auto z = propdetail::random_hq<S>(rng, true);
        const auto q = quer_h(z);
        const HalfQuaternion<S> got[3] = {ternary_mul_h(q, z, z), ternary_mul_h(z, q, z),
                                          ternary_mul_h(z, z, q)};
        for (int p = 0; p < 3; ++p) {
            if (!(got[p] == z)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "defining equation fails at placement " +
                                                  std::to_string(p + 1)},
                                   {"element", imaginary_to_json(z)},
                                   {"quer", imaginary_to_json(q)},
                                   {"placement", p + 1},
                                   {"got", imaginary_to_json(got[p])}});
            }
        }
    }
    return r;
}

template <class S>
PropsReport suite_quer_half_octonion(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"quer-half-octonion", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        const auto z = propdetail::random_ho<S>(rng, true);
        const auto q = quer_o(z);
        const HalfOctonion<S> got[3] = {ternary_mul_o(q, z, z), ternary_mul_o(z, q, z),
                                        ternary_mul_o(z, z, q)};
        for (int p = 0; p < 3; ++p) {
            if (!(got[p] == z)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "defining equation fails at placement " +
                                                  std::to_string(p + 1)},
                                   {"element", imaginary_to_json(z)},
                                   {"quer", imaginary_to_json(q)},
                                   {"placement", p + 1},
                                   {"got", imaginary_to_json(got[p])}});
            }
        }
    }
    return r;
}

template <class S>
PropsReport suite_norm_multiplicativity(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"norm-multiplicativity", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const int arity = 3 + static_cast<int>(rng.range(0, 2));
        const long long alg = rng.range(0, 2);
        propdetail::with_algebra<S>(alg, false, [&](auto exemplar) {
            using A = decltype(exemplar);
            std::vector<ZMatrix<A>> factors;
            for (int k = 0; k < arity; ++k) {
                factors.push_back(propdetail::random_zmatrix(rng, arity, exemplar, false));
            }
            const S lhs = polyadic_norm(nary_mul(factors)).value;
            S rhs = T::one();
            for (const auto& f : factors) rhs *= polyadic_norm(f).value;
            if (!T::eq(lhs, rhs)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "norm of product differs from product of norms"},
                                   {"input", json{{"factors",
                                                   propdetail::zmatrix_list_json(factors)}}},
                                   {"lhs", scalar_to_json<S>(lhs)},
                                   {"rhs", scalar_to_json<S>(rhs)}});
            }
        });
    }
    return r;
}

template <class S>
PropsReport suite_norm_scaling(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"norm-scaling", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const int arity = 3 + static_cast<int>(rng.range(0, 2));
        const long long alg = rng.range(0, 2);
        const S lam = random_scalar<S>(rng, false);
        propdetail::with_algebra<S>(alg, false, [&](auto exemplar) {
            using A = decltype(exemplar);
            const ZMatrix<A> z = propdetail::random_zmatrix(rng, arity, exemplar, false);
            const S lhs = polyadic_norm(zmatrix_scale(z, lam)).value;
            S factor = T::one();
            if constexpr (T::exact) {
                for (int k = 0; k < 2 * (arity - 1); ++k) factor *= lam;
            } else {
                const S lam_abs = F64(std::fabs(lam.value()));
                for (int k = 0; k < arity - 1; ++k) factor *= lam_abs;
            }
            const S rhs = factor * polyadic_norm(z).value;
            if (!T::eq(lhs, rhs)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "scaling law fails"},
                                   {"element", zmatrix_to_json(z)},
                                   {"lambda", scalar_to_json<S>(lam)},
                                   {"lhs", scalar_to_json<S>(lhs)},
                                   {"rhs", scalar_to_json<S>(rhs)}});
            }
        });
    }
    return r;
}

template <class S>
PropsReport suite_quer_norm_law(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"quer-norm-law", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const int arity = 3 + static_cast<int>(rng.range(0, 2));
        const long long alg = rng.range(0, 2);
        propdetail::with_algebra<S>(alg, false, [&](auto exemplar) {
            using A = decltype(exemplar);
            const ZMatrix<A> z = propdetail::random_zmatrix(rng, arity, exemplar, true);
            const S lhs = polyadic_norm(querelement(z)).value;
            const S rhs = quer_norm(z).value;
            if (!T::eq(lhs, rhs)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "constructed querelement norm differs from closed form"},
                                   {"element", zmatrix_to_json(z)},
                                   {"lhs", scalar_to_json<S>(lhs)},
                                   {"rhs", scalar_to_json<S>(rhs)}});
            }
        });
    }
    return r;
}

template <class S>
PropsReport suite_two_squares(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"two-squares", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const auto x = propdetail::random_hq<S>(rng, false);
        const auto y = propdetail::random_hq<S>(rng, false);
        const auto z = propdetail::random_hq<S>(rng, false);
        const auto [lhs, rhs] = two_squares_identity(x, y, z);
        if (!T::eq(lhs, rhs)) {
            r.add_failure(json{{"case", i},
                               {"detail", "two-squares identity fails"},
                               {"input", json{{"factors",
                                               json::array({imaginary_to_json(x),
                                                            imaginary_to_json(y),
                                                            imaginary_to_json(z)})}}},
                               {"lhs", scalar_to_json<S>(lhs)},
                               {"rhs", scalar_to_json<S>(rhs)}});
        }
    }
    return r;
}

template <class S>
PropsReport suite_imaginary_norm_mult(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"imaginary-norm-mult", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const ImaginaryComplex<S> x(random_scalar<S>(rng, false));
        const ImaginaryComplex<S> y(random_scalar<S>(rng, false));
        const ImaginaryComplex<S> z(random_scalar<S>(rng, false));
        const S lhs = norm_sq_c(ternary_mul_c(x, y, z));
        const S rhs = norm_sq_c(x) * norm_sq_c(y) * norm_sq_c(z);
        if (!T::eq(lhs, rhs)) {
            r.add_failure(json{{"case", i},
                               {"detail", "imaginary-complex norm multiplicativity fails"},
                               {"input", json{{"factors",
                                               json::array({imaginary_to_json(x),
                                                            imaginary_to_json(y),
                                                            imaginary_to_json(z)})}}},
                               {"lhs", scalar_to_json<S>(lhs)},
                               {"rhs", scalar_to_json<S>(rhs)}});
        }
    }
    return r;
}

template <class S>
PropsReport suite_ho_norm_mult(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"half-octonion-norm-mult", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const auto x = propdetail::random_ho<S>(rng, false);
        const auto y = propdetail::random_ho<S>(rng, false);
        const auto z = propdetail::random_ho<S>(rng, false);
        const S lhs = norm_sq_o(ternary_mul_o(x, y, z));
        const S rhs = norm_sq_o(x) * norm_sq_o(y) * norm_sq_o(z);
        if (!T::eq(lhs, rhs)) {
            r.add_failure(json{{"case", i},
                               {"detail", "half-octonion norm multiplicativity fails"},
                               {"input", json{{"factors",
                                               json::array({imaginary_to_json(x),
                                                            imaginary_to_json(y),
                                                            imaginary_to_json(z)})}}},
                               {"lhs", scalar_to_json<S>(lhs)},
                               {"rhs", scalar_to_json<S>(rhs)}});
        }
    }
    return r;
}

namespace propdetail {

/// Total associativity sweep for the arity-n shift product: draws
/// 2n-1 factors and compares all n ways of nesting two products.
template <class S>
void assoc_zmatrix_cases(PropsReport& r, int arity, long long cases, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int total = 2 * arity - 1;
    for (long long i = 0; i < cases; ++i) {
        const long long alg = rng.range(0, 3);
        with_algebra<S>(alg, true, [&](auto exemplar) {
            using A = decltype(exemplar);
            std::vector<ZMatrix<A>> fs;
            for (int k = 0; k < total; ++k) {
                fs.push_back(random_zmatrix(rng, arity, exemplar, false));
            }
            std::optional<ZMatrix<A>> first;
            for (int p = 0; p <= arity; ++p) {
                if (p + arity > total) break;
                std::vector<ZMatrix<A>> inner(fs.begin() + p, fs.begin() + p + arity);
                std::vector<ZMatrix<A>> outer;
                for (int k = 0; k < p; ++k) outer.push_back(fs[k]);
                outer.push_back(nary_mul(inner));
                for (int k = p + arity; k < total; ++k) outer.push_back(fs[k]);
                const ZMatrix<A> got = nary_mul(outer);
                if (!first) {
                    first = got;
                } else if (!zmatrix_eq(*first, got)) {
                    r.add_failure(json{{"case", i},
                                       {"detail", "bracketings at offsets 1 and " +
                                                      std::to_string(p + 1) + " disagree"},
                                       {"input", json{{"factors", zmatrix_list_json(fs)}}},
                                       {"lhs", zmatrix_to_json(*first)},
                                       {"rhs", zmatrix_to_json(got)}});
                }
            }
        });
    }
}

}  // namespace propdetail

template <class S>
PropsReport suite_assoc_zmatrix3(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"assoc-zmatrix-3", mode, seed, cases, 0, {}};
    propdetail::assoc_zmatrix_cases<S>(r, 3, cases, seed);
    return r;
}

template <class S>
PropsReport suite_assoc_zmatrix4(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"assoc-zmatrix-4", mode, seed, cases, 0, {}};
    propdetail::assoc_zmatrix_cases<S>(r, 4, cases, seed);
    return r;
}

template <class S>
PropsReport suite_assoc_vector(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"assoc-vector", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    const int m = 3;           // 4-ary product of 3-dimensional vectors
    const int total = 2 * m + 1;  // two nested products consume 2m+1 vectors
    for (long long i = 0; i < cases; ++i) {
        std::vector<PolyVector<S>> fs;
        for (int k = 0; k < total; ++k) {
            fs.push_back(propdetail::random_vector<S>(rng, m, false));
        }
        std::optional<PolyVector<S>> first;
        for (int p = 0; p <= m; ++p) {
            std::vector<PolyVector<S>> inner(fs.begin() + p, fs.begin() + p + m + 1);
            std::vector<PolyVector<S>> outer;
            for (int k = 0; k < p; ++k) outer.push_back(fs[k]);
            outer.push_back(poly_product(inner));
            for (int k = p + m + 1; k < total; ++k) outer.push_back(fs[k]);
            const PolyVector<S> got = poly_product(outer);
            if (!first) {
                first = got;
            } else if (!vector_eq(*first, got)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "bracketings at offsets 1 and " +
                                                  std::to_string(p + 1) + " disagree"},
                                   {"input", json{{"factors",
                                                   propdetail::vector_list_json(fs)}}},
                                   {"lhs", vector_to_json(*first)},
                                   {"rhs", vector_to_json(got)}});
            }
        }
    }
    return r;
}

template <class S>
PropsReport suite_assoc_half_quaternion(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"assoc-half-quaternion", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        HalfQuaternion<S> f[5];
        for (auto& h : f) h = propdetail::random_hq<S>(rng, false);
        const auto a1 = ternary_mul_h(ternary_mul_h(f[0], f[1], f[2]), f[3], f[4]);
        const auto a2 = ternary_mul_h(f[0], ternary_mul_h(f[1], f[2], f[3]), f[4]);
        const auto a3 = ternary_mul_h(f[0], f[1], ternary_mul_h(f[2], f[3], f[4]));
        if (!(a1 == a2) || !(a1 == a3)) {
            json fac = json::array();
            for (const auto& h : f) fac.push_back(imaginary_to_json(h));
            r.add_failure(json{{"case", i},
                               {"detail", "ternary bracketings disagree"},
                               {"input", json{{"factors", std::move(fac)}}},
                               {"first", imaginary_to_json(a1)},
                               {"middle", imaginary_to_json(a2)},
                               {"last", imaginary_to_json(a3)}});
        }
    }
    return r;
}

template <class S>
PropsReport suite_ho_associativity(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"half-octonion-associativity", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    for (long long i = 0; i < cases; ++i) {
        HalfOctonion<S> f[5];
        for (auto& h : f) h = propdetail::random_ho<S>(rng, false);
        const auto a1 = ternary_mul_o(ternary_mul_o(f[0], f[1], f[2]), f[3], f[4]);
        const auto a2 = ternary_mul_o(f[0], ternary_mul_o(f[1], f[2], f[3]), f[4]);
        const auto a3 = ternary_mul_o(f[0], f[1], ternary_mul_o(f[2], f[3], f[4]));
        if (!(a1 == a2) || !(a1 == a3)) {
            json fac = json::array();
            for (const auto& h : f) fac.push_back(imaginary_to_json(h));
            r.add_failure(json{{"case", i},
                               {"detail", "ternary bracketings disagree"},
                               {"input", json{{"factors", std::move(fac)}}},
                               {"first", imaginary_to_json(a1)},
                               {"middle", imaginary_to_json(a2)},
                               {"last", imaginary_to_json(a3)}});
        }
    }
    return r;
}

template <class S>
PropsReport suite_hurwitz(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"hurwitz", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const int level = static_cast<int>(rng.range(0, 3));
        const CDElement<S> like = cd_one<S>(level);
        const CDElement<S> x = propdetail::random_like(rng, like, false);
        const CDElement<S> y = propdetail::random_like(rng, like, false);
        const S lhs = cd_norm_sq(cd_mul(x, y));
        const S rhs = cd_norm_sq(x) * cd_norm_sq(y);
        if (!T::eq(lhs, rhs)) {
            r.add_failure(json{{"case", i},
                               {"detail", "norm multiplicativity fails at level " +
                                              std::to_string(level)},
                               {"x", cd_to_json(x)},
                               {"y", cd_to_json(y)},
                               {"lhs", scalar_to_json<S>(lhs)},
                               {"rhs", scalar_to_json<S>(rhs)}});
        }
    }
    return r;
}

/// Float-only measurement: subadditivity of the plain (unsquared) norm under
/// entrywise addition.  The product of entry norms is not subadditive in
/// general (e.g. doubling every entry of an (n-1)-entry element multiplies the
/// norm by 2^(n-1) > 2), so this suite records how often the bound
/// ||x + y|| <= ||x|| + ||y|| is violated rather than asserting it.
template <class S>
PropsReport suite_norm_triangle(Mode mode, long long cases, std::uint64_t seed) {
    PropsReport r{"norm-triangle", mode, seed, cases, 0, {}};
    SplitMix64 rng(seed);
    using T = scalar_traits<S>;
    for (long long i = 0; i < cases; ++i) {
        const int arity = 3 + static_cast<int>(rng.range(0, 2));
        const long long alg = rng.range(0, 2);
        propdetail::with_algebra<S>(alg, false, [&](auto exemplar) {
            using A = decltype(exemplar);
            const ZMatrix<A> x = propdetail::random_zmatrix(rng, arity, exemplar, false);
            const ZMatrix<A> y = propdetail::random_zmatrix(rng, arity, exemplar, false);
            const S lhs = polyadic_norm(zmatrix_add(x, y)).value;
            const S rhs = polyadic_norm(x).value + polyadic_norm(y).value;
            if (!T::leq(lhs, rhs)) {
                r.add_failure(json{{"case", i},
                                   {"detail", "triangle inequality fails"},
                                   {"x", zmatrix_to_json(x)},
                                   {"y", zmatrix_to_json(y)},
                                   {"lhs", scalar_to_json<S>(lhs)},
                                   {"rhs", scalar_to_json<S>(rhs)}});
            }
        });
    }
    return r;
}

/// Grid search for a ternary unit in each imaginary algebra.  A "failure"
/// here would be a grid element e that satisfies mu[x,e,e] = x (and the other
/// placements) for every probe x -- the suites pass precisely because the
/// algebras are unitless.
template <class S>
PropsReport suite_unitless(Mode mode, long long /*cases*/, std::uint64_t seed) {
    PropsReport r{"unitless", mode, seed, 0, 0, {}};
    using T = scalar_traits<S>;
    const S half = T::inverse(T::from_int(2));
    const std::vector<S> grid = {T::from_int(-2), T::from_int(-1), -half,
                                 T::zero(),        half,            T::from_int(1),
                                 T::from_int(2)};

    // Pure imaginary complex.
    {
        const std::vector<ImaginaryComplex<S>> probes = {
            ImaginaryComplex<S>(T::from_int(1)), ImaginaryComplex<S>(T::from_int(2)),
            ImaginaryComplex<S>(T::from_int(-1)), ImaginaryComplex<S>(half)};
        for (const S& b : grid) {
            ++r.cases;
            const ImaginaryComplex<S> e(b);
            bool unit = true;
            for (const auto& x : probes) {
                if (!(ternary_mul_c(x, e, e) == x) || !(ternary_mul_c(e, x, e) == x) ||
                    !(ternary_mul_c(e, e, x) == x)) {
                    unit = false;
                    break;
                }
            }
            if (unit) {
                r.add_failure(json{{"detail", "grid unit found in imaginary complex"},
                                   {"candidate", imaginary_to_json(e)}});
            }
        }
    }

    // Half-quaternions.
    {
        const std::vector<HalfQuaternion<S>> probes = {
            HalfQuaternion<S>(T::from_int(1), T::zero()),
            HalfQuaternion<S>(T::zero(), T::from_int(1)),
            HalfQuaternion<S>(T::from_int(1), T::from_int(1)),
            HalfQuaternion<S>(T::from_int(2), T::from_int(-1))};
        for (const S& c : grid) {
            for (const S& d : grid) {
                ++r.cases;
                const HalfQuaternion<S> e(c, d);
                bool unit = true;
                for (const auto& x : probes) {
                    if (!(ternary_mul_h(x, e, e) == x) || !(ternary_mul_h(e, x, e) == x) ||
                        !(ternary_mul_h(e, e, x) == x)) {
                        unit = false;
                        break;
                    }
                }
                if (unit) {
                    r.add_failure(json{{"detail", "grid unit found in half-quaternions"},
                                       {"candidate", imaginary_to_json(e)}});
                }
            }
        }
    }

    // Half-octonions (coarser grid to keep the sweep quick).
    {
        const std::vector<S> coarse = {T::from_int(-1), -half, T::zero(), half,
                                       T::from_int(1)};
        const std::vector<HalfOctonion<S>> probes = {
            HalfOctonion<S>(T::from_int(1), T::zero(), T::zero(), T::zero()),
            HalfOctonion<S>(T::zero(), T::from_int(1), T::zero(), T::zero()),
            HalfOctonion<S>(T::zero(), T::zero(), T::from_int(1), T::from_int(-1)),
            HalfOctonion<S>(T::from_int(1), T::from_int(1), T::from_int(1),
                            T::from_int(1))};
        for (const S& a : coarse) {
            for (const S& b : coarse) {
                for (const S& c : coarse) {
                    for (const S& d : coarse) {
                        ++r.cases;
                        const HalfOctonion<S> e(a, b, c, d);
                        bool unit = true;
                        for (const auto& x : probes) {
                            if (!(ternary_mul_o(x, e, e) == x) ||
                                !(ternary_mul_o(e, x, e) == x) ||
                                !(ternary_mul_o(e, e, x) == x)) {
                                unit = false;
                                break;
                            }
                        }
                        if (unit) {
                            r.add_failure(
                                json{{"detail", "grid unit found in half-octonions"},
                                     {"candidate", imaginary_to_json(e)}});
                        }
                    }
                }
            }
        }
    }
    return r;
}

// --------------------------------------------------------------- registry --

struct SuiteInfo {
    std::string name;
    std::string summary;
    bool float_only = false;
    bool expects_failures = false;  ///< measuring suites (see file header)
    std::function<PropsReport(Mode, long long, std::uint64_t)> run;
};

inline const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> suites = [] {
        std::vector<SuiteInfo> v;
        auto add = [&v](std::string name, std::string summary,
                        PropsReport (*rat)(Mode, long long, std::uint64_t),
                        PropsReport (*flt)(Mode, long long, std::uint64_t),
                        bool float_only = false, bool expects_failures = false) {
            SuiteInfo info;
            info.name = std::move(name);
            info.summary = std::move(summary);
            info.float_only = float_only;
            info.expects_failures = expects_failures;
            info.run = [rat, flt](Mode m, long long c, std::uint64_t s) {
                return m == Mode::rational ? rat(m, c, s) : flt(m, c, s);
            };
            v.push_back(std::move(info));
        };
        add("scalar-field", "field axioms and text round-trip of scalars",
            &suite_scalar_field<Rational>, &suite_scalar_field<F64>);
        add("nary-vs-dense", "entrywise n-ary product vs dense matrix chain",
            &suite_nary_vs_dense<Rational>, &suite_nary_vs_dense<F64>);
        add("vecmul-vs-dense", "vector product vs shift-matrix route",
            &suite_vecmul_vs_dense<Rational>, &suite_vecmul_vs_dense<F64>);
        add("half-octonion-formula-vs-average",
            "half-octonion component formula vs embedding average",
            &suite_ho_formula_vs_average<Rational>, &suite_ho_formula_vs_average<F64>);
        add("quer-zmatrix", "querelement defining equation on every placement",
            &suite_quer_zmatrix<Rational>, &suite_quer_zmatrix<F64>);
        add("quer-vector", "quervector defining equation on every placement",
            &suite_quer_vector<Rational>, &suite_quer_vector<F64>);
        add("quer-half-quaternion",
            "half-quaternion querelement defining equation on every placement",
            &suite_quer_half_quaternion<Rational>, &suite_quer_half_quaternion<F64>);
        add("quer-half-octonion",
            "half-octonion querelement defining equation on every placement",
            &suite_quer_half_octonion<Rational>, &suite_quer_half_octonion<F64>);
        add("norm-multiplicativity", "polyadic norm of product vs product of norms",
            &suite_norm_multiplicativity<Rational>, &suite_norm_multiplicativity<F64>);
        add("norm-scaling", "polyadic norm scaling law",
            &suite_norm_scaling<Rational>, &suite_norm_scaling<F64>);
        add("quer-norm-law", "querelement norm closed form vs constructed route",
            &suite_quer_norm_law<Rational>, &suite_quer_norm_law<F64>);
        add("two-squares", "half-quaternion ternary two-squares identity",
            &suite_two_squares<Rational>, &suite_two_squares<F64>);
        add("imaginary-norm-mult", "imaginary-complex ternary norm multiplicativity",
            &suite_imaginary_norm_mult<Rational>, &suite_imaginary_norm_mult<F64>);
        add("half-octonion-norm-mult",
            "half-octonion norm multiplicativity (measured, fails generically)",
            &suite_ho_norm_mult<Rational>, &suite_ho_norm_mult<F64>, false, true);
        add("assoc-zmatrix-3", "total associativity of the ternary shift product",
            &suite_assoc_zmatrix3<Rational>, &suite_assoc_zmatrix3<F64>);
        add("assoc-zmatrix-4", "total associativity of the 4-ary shift product",
            &suite_assoc_zmatrix4<Rational>, &suite_assoc_zmatrix4<F64>);
        add("assoc-vector", "total associativity of the 4-ary vector product",
            &suite_assoc_vector<Rational>, &suite_assoc_vector<F64>);
        add("assoc-half-quaternion", "total ternary associativity of half-quaternions",
            &suite_assoc_half_quaternion<Rational>, &suite_assoc_half_quaternion<F64>);
        add("half-octonion-associativity",
            "total ternary associativity of half-octonions (measured, fails generically)",
            &suite_ho_associativity<Rational>, &suite_ho_associativity<F64>, false, true);
        add("hurwitz", "norm multiplicativity of binary products at levels 0-3",
            &suite_hurwitz<Rational>, &suite_hurwitz<F64>);
        add("norm-triangle",
            "subadditivity of the product norm (measured, fails generically)",
            &suite_norm_triangle<Rational>, &suite_norm_triangle<F64>, true, true);
        add("unitless", "grid search finds no ternary unit in the imaginary algebras",
            &suite_unitless<Rational>, &suite_unitless<F64>);
        return v;
    }();
    return suites;
}

inline const SuiteInfo& find_suite(const std::string& name) {
    for (const auto& s : suite_registry()) {
        if (s.name == name) return s;
    }
    throw MalformedInput("unknown props suite \"" + name + "\"");
}

inline PropsReport run_suite(const std::string& name, Mode mode, long long cases,
                             std::uint64_t seed) {
    const SuiteInfo& info = find_suite(name);
    if (info.float_only && mode == Mode::rational) {
        throw MalformedInput("suite \"" + name + "\" runs in float mode only");
    }
    if (cases < 1) throw MalformedInput("cases must be positive");
    return info.run(mode, cases, seed);
}

}  // namespace polyadica

#endif  // POLYADICA_PROPS_HPP
