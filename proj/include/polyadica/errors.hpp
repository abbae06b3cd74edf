// SPDX-License-Identifier: MIT
//
// Error taxonomy shared by the whole library.  Every recoverable domain
// failure is a DomainError carrying a stable machine-readable code (used by
// the CLI for its JSON error envelope) plus a human-readable detail string.

#ifndef POLYADICA_ERRORS_HPP
#define POLYADICA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyadica {

/// Base class for all domain-level failures (bad math, not bad syntax).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    /// Stable machine-readable identifier, e.g. "division_by_zero".
    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Division (or inversion) of an exact zero, or a float exactly equal to 0.
class DivisionByZero : public DomainError {
public:
    explicit DivisionByZero(const std::string& detail = "division by zero")
        : DomainError("division_by_zero", detail) {}
};

/// Two Cayley-Dickson elements of different tower levels were combined.
class LevelMismatch : public DomainError {
public:
    explicit LevelMismatch(const std::string& detail)
        : DomainError("level_mismatch", detail) {}
};

/// An operation on Cayley-Dickson elements above the supported level.
class LevelOutOfRange : public DomainError {
public:
    explicit LevelOutOfRange(const std::string& detail)
        : DomainError("level_out_of_range", detail) {}
};

/// An n-ary product received the wrong number of factors, or factors of
/// differing arity.
class ArityMismatch : public DomainError {
public:
    explicit ArityMismatch(const std::string& detail)
        : DomainError("arity_mismatch", detail) {}
};

/// Vectors (or matrices) of incompatible dimensions were combined.
class DimensionMismatch : public DomainError {
public:
    explicit DimensionMismatch(const std::string& detail)
        : DomainError("dimension_mismatch", detail) {}
};

/// A cyclic-shift element contains a non-invertible entry; carries the
/// 1-based index of the first offender.
class NonInvertibleEntry : public DomainError {
public:
    NonInvertibleEntry(int index, const std::string& detail)
        : DomainError("non_invertible_entry", detail), index_(index) {}

    [[nodiscard]] int index() const noexcept { return index_; }

private:
    int index_;
};

/// A vector with a zero coordinate cannot be inverted coordinate-wise;
/// carries the 1-based index of the first zero coordinate.
class ZeroCoordinate : public DomainError {
public:
    ZeroCoordinate(int index, const std::string& detail)
        : DomainError("zero_coordinate", detail), index_(index) {}

    [[nodiscard]] int index() const noexcept { return index_; }

private:
    int index_;
};

/// A norm was requested over a coefficient algebra without a multiplicative
/// norm (e.g. dual numbers).
class UnnormedAlgebra : public DomainError {
public:
    explicit UnnormedAlgebra(const std::string& detail)
        : DomainError("unnormed_algebra", detail) {}
};

/// A dense matrix does not match the cyclic-shift sparsity pattern expected
/// by a structure-recovering routine.
class PatternViolation : public DomainError {
public:
    explicit PatternViolation(const std::string& detail)
        : DomainError("pattern_violation", detail) {}
};

/// Inversion of the zero element of a ternary algebra.
class ZeroElement : public DomainError {
public:
    explicit ZeroElement(const std::string& detail)
        : DomainError("zero_element", detail) {}
};

/// A coefficient algebra outside the associative range was used where
/// associativity is required.
class UnsupportedCoefficientAlgebra : public DomainError {
public:
    explicit UnsupportedCoefficientAlgebra(const std::string& detail)
        : DomainError("unsupported_coefficient_algebra", detail) {}
};

/// A tower description is internally inconsistent.
class InvalidTowerSpec : public DomainError {
public:
    explicit InvalidTowerSpec(const std::string& detail)
        : DomainError("invalid_tower_spec", detail) {}
};

/// Malformed input documents (bad JSON, wrong schema, wrong numeric mode).
/// The CLI maps this family to exit code 2 instead of 1.
class MalformedInput : public std::runtime_error {
public:
    explicit MalformedInput(const std::string& detail)
        : std::runtime_error(detail) {}
};

}  // namespace polyadica

#endif  // POLYADICA_ERRORS_HPP
