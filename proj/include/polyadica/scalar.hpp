// SPDX-License-Identifier: MIT
//
// Scalar kinds and the trait surface generic code programs against.
//
// Two scalar types exist:
//   * Rational — exact arbitrary-precision rationals (the default mode);
//   * F64      — IEEE doubles with tolerance-aware equality.
//
// Equality for F64 is |x - y| <= abs_tol + rel_tol * max(|x|, |y|) with
// rel_tol = 1e-9 and abs_tol = 1e-12.  Arithmetic itself is plain IEEE;
// only comparisons are tolerant.  Invertibility gates, by contrast, reject
// exactly 0.0 and nothing else, so "almost zero" floats still invert.

#ifndef POLYADICA_SCALAR_HPP
#define POLYADICA_SCALAR_HPP

#include <cmath>
#include <ostream>
#include <string>

#include "polyadica/errors.hpp"
#include "polyadica/rational.hpp"

namespace polyadica {

/// Double-precision scalar with tolerant equality.
class F64 {
public:
    static constexpr double rel_tol = 1e-9;
    static constexpr double abs_tol = 1e-12;

    constexpr F64() : v_(0.0) {}
    constexpr F64(double v) : v_(v) {}  // NOLINT: implicit by design

    [[nodiscard]] constexpr double value() const noexcept { return v_; }

    [[nodiscard]] bool is_exact_zero() const noexcept { return v_ == 0.0; }

    [[nodiscard]] F64 inverse() const {
        if (v_ == 0.0) throw DivisionByZero("inverse of zero");
        return F64(1.0 / v_);
    }

    static bool close(double a, double b) {
        const double scale = std::max(std::fabs(a), std::fabs(b));
        return std::fabs(a - b) <= abs_tol + rel_tol * scale;
    }

    friend F64 operator+(F64 a, F64 b) { return F64(a.v_ + b.v_); }
    friend F64 operator-(F64 a, F64 b) { return F64(a.v_ - b.v_); }
    friend F64 operator*(F64 a, F64 b) { return F64(a.v_ * b.v_); }
    friend F64 operator/(F64 a, F64 b) {
        if (b.v_ == 0.0) throw DivisionByZero("division by zero");
        return F64(a.v_ / b.v_);
    }
    friend F64 operator-(F64 a) { return F64(-a.v_); }

    F64& operator+=(F64 o) { v_ += o.v_; return *this; }
    F64& operator-=(F64 o) { v_ -= o.v_; return *this; }
    F64& operator*=(F64 o) { v_ *= o.v_; return *this; }

    /// Tolerant equality (see file header); deliberate and documented.
    friend bool operator==(F64 a, F64 b) { return close(a.v_, b.v_); }
    friend bool operator!=(F64 a, F64 b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, F64 x) { return os << x.v_; }

private:
    double v_;
};

/// Uniform interface over the two scalar kinds.  Generic algebra code uses
/// only this surface, so every structure instantiates for both modes.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "rational";

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long n) { return Rational(n); }

    static bool eq(const Rational& a, const Rational& b) { return a == b; }
    static bool leq(const Rational& a, const Rational& b) { return a <= b; }
    static bool is_exact_zero(const Rational& a) { return a.is_zero(); }
    static Rational inverse(const Rational& a) { return a.inverse(); }
};

template <>
struct scalar_traits<F64> {
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "float";

    static F64 zero() { return F64(0.0); }
    static F64 one() { return F64(1.0); }
    static F64 from_int(long long n) { return F64(static_cast<double>(n)); }

    static bool eq(F64 a, F64 b) { return a == b; }
    /// Tolerant <=: a may exceed b by up to the equality tolerance.
    static bool leq(F64 a, F64 b) {
        if (a.value() <= b.value()) return true;
        return F64::close(a.value(), b.value());
    }
    static bool is_exact_zero(F64 a) { return a.is_exact_zero(); }
    static F64 inverse(F64 a) { return a.inverse(); }
    static F64 sqrt(F64 a) { return F64(std::sqrt(a.value())); }
};

}  // namespace polyadica

#endif  // POLYADICA_SCALAR_HPP
