// SPDX-License-Identifier: MIT
//
// Exact arbitrary-precision rational scalar.  Thin wrapper over
// boost::multiprecision::cpp_rational that pins the library-wide contract:
// values are always in lowest terms with a positive denominator, division by
// zero throws DivisionByZero, and the canonical text form is "p/q" (or just
// "p" for integers).

#ifndef POLYADICA_RATIONAL_HPP
#define POLYADICA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <utility>

#include "polyadica/errors.hpp"

namespace polyadica {

class Rational {
public:
    using backend = boost::multiprecision::cpp_rational;

    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, like int->double

    Rational(long long num, long long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        // The backend reduces the gcd but requires a positive denominator.
        if (den < 0) {
            v_ = backend(-boost::multiprecision::cpp_int(num),
                         -boost::multiprecision::cpp_int(den));
        } else {
            v_ = backend(num, den);
        }
    }

    explicit Rational(backend v) : v_(std::move(v)) {}

    /// Parse "p", "-p", "p/q", or "-p/q" with arbitrary-precision digits.
    static Rational parse(const std::string& text) {
        const auto is_integer = [](const std::string& s) {
            std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') return false;
            }
            return true;
        };
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            if (!is_integer(text)) {
                throw MalformedInput("not a rational literal: \"" + text + "\"");
            }
            return Rational(backend(boost::multiprecision::cpp_int(text)));
        }
        const std::string num_text = text.substr(0, slash);
        const std::string den_text = text.substr(slash + 1);
        if (!is_integer(num_text) || !is_integer(den_text)) {
            throw MalformedInput("not a rational literal: \"" + text + "\"");
        }
        boost::multiprecision::cpp_int num(num_text);
        boost::multiprecision::cpp_int den(den_text);
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(backend(num, den));
    }

    /// Canonical form: "p/q" in lowest terms, or "p" when the value is integral.
    [[nodiscard]] std::string str() const {
        if (boost::multiprecision::denominator(v_) == 1) {
            return boost::multiprecision::numerator(v_).str();
        }
        return boost::multiprecision::numerator(v_).str() + "/" +
               boost::multiprecision::denominator(v_).str();
    }

    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] bool is_negative() const { return v_ < 0; }

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(backend(1) / v_);
    }

    [[nodiscard]] const backend& raw() const noexcept { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.v_ + b.v_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.v_ - b.v_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.v_ * b.v_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero");
        return Rational(a.v_ / b.v_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    backend v_;
};

}  // namespace polyadica

#endif  // POLYADICA_RATIONAL_HPP
