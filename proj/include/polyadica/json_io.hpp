// SPDX-License-Identifier: MIT
//
// JSON encoding of every library structure, in both numeric modes.
//
// Scalars are mode-sensitive: rational mode writes exact "p/q" strings and
// rejects JSON numbers (a bare 0.1 cannot round-trip exactly), while float
// mode writes plain JSON numbers and rejects strings.  Everything above the
// scalar layer shares one schema:
//
//   cyclic-shift element  {"arity": n, "algebra": "R"|"dual"|"C"|"H", "entries": [...]}
//   dense matrix          {"size": m, "cells": [[...], ...]}
//   vector                {"dim": m, "coords": [...]}
//   dual entry            {"a": s, "b": s}
//   C/H entry             [s, s] / [s, s, s, s]
//   cd element            {"kind": "cd", "level": l, "coeffs": [...]}
//   imaginary elements    {"kind": "imaginary_complex", "b": s}
//                         {"kind": "half_quaternion", "c": s, "d": s}
//                         {"kind": "half_octonion", "a": s, "b": s, "c": s, "d": s}
//
// Schema violations throw MalformedInput (CLI exit 2); mathematical problems
// inside well-formed documents throw DomainError (CLI exit 1).

#ifndef POLYADICA_JSON_IO_HPP
#define POLYADICA_JSON_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "polyadica/algebra_traits.hpp"
#include "polyadica/errors.hpp"
#include "polyadica/imaginary.hpp"
#include "polyadica/norms.hpp"
#include "polyadica/vectoralg.hpp"
#include "polyadica/zmatrix.hpp"

namespace polyadica {

using nlohmann::json;

// ---------------------------------------------------------------- helpers --

inline const json& require_field(const json& j, const char* name, const char* where) {
    if (!j.is_object() || !j.contains(name)) {
        throw MalformedInput(std::string(where) + " needs field \"" + name + "\"");
    }
    return j.at(name);
}

inline const json& require_array(const json& j, const char* where) {
    if (!j.is_array()) throw MalformedInput(std::string(where) + " must be a JSON array");
    return j;
}

inline int require_int(const json& j, const char* where) {
    if (!j.is_number_integer()) {
        throw MalformedInput(std::string(where) + " must be a JSON integer");
    }
    return j.get<int>();
}

// ---------------------------------------------------------------- scalars --

template <class S>
json scalar_to_json(const S& s);

template <>
inline json scalar_to_json<Rational>(const Rational& s) {
    return json(s.str());
}

template <>
inline json scalar_to_json<F64>(const F64& s) {
    return json(s.value());
}

template <class S>
S scalar_from_json(const json& j);

template <>
inline Rational scalar_from_json<Rational>(const json& j) {
    if (j.is_number()) {
        throw MalformedInput(
            "rational mode takes scalars as \"p/q\" strings, got a JSON number (" +
            j.dump() + "); switch to --mode float for numeric literals");
    }
    if (!j.is_string()) {
        throw MalformedInput("rational scalar must be a \"p/q\" string, got " + j.dump());
    }
    return Rational::parse(j.get<std::string>());
}

template <>
inline F64 scalar_from_json<F64>(const json& j) {
    if (j.is_string()) {
        throw MalformedInput("float mode takes scalars as JSON numbers, got a string (" +
                             j.dump() + "); switch to --mode rational for exact literals");
    }
    if (!j.is_number()) {
        throw MalformedInput("float scalar must be a JSON number, got " + j.dump());
    }
    return F64(j.get<double>());
}

// ----------------------------------------------------------- cd elements --

inline int cd_level_for_tag(const std::string& tag) {
    if (tag == "C") return 1;
    if (tag == "H") return 2;
    if (tag == "O") return 3;
    if (tag == "S") return 4;
    return -1;
}

template <class S>
json cd_to_json(const CDElement<S>& x) {
    json coeffs = json::array();
    for (const S& v : x.c) coeffs.push_back(scalar_to_json<S>(v));
    return json{{"kind", "cd"},
                {"level", x.level},
                {"algebra", level_name(x.level)},
                {"coeffs", std::move(coeffs)}};
}

template <class S>
CDElement<S> cd_from_json(const json& j) {
    int level = -1;
    if (j.contains("level")) {
        level = require_int(j.at("level"), "\"level\"");
    } else if (j.contains("algebra") && j.at("algebra").is_string()) {
        const std::string tag = j.at("algebra").get<std::string>();
        level = tag == "R" ? 0 : cd_level_for_tag(tag);
        if (level < 0) {
            throw MalformedInput("unknown cd algebra tag \"" + tag + "\"");
        }
    } else {
        throw MalformedInput("cd element needs \"level\" or an \"algebra\" tag");
    }
    const json& coeffs = require_array(require_field(j, "coeffs", "cd element"), "\"coeffs\"");
    if (level < 0 || level > 10) {
        throw MalformedInput("cd level must be between 0 and 10");
    }
    std::vector<S> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.push_back(scalar_from_json<S>(v));
    if (c.size() != (std::size_t{1} << level)) {
        throw MalformedInput("cd level " + std::to_string(level) + " needs " +
                             std::to_string(std::size_t{1} << level) + " coefficients, got " +
                             std::to_string(c.size()));
    }
    return CDElement<S>(level, std::move(c));
}

template <class S>
json dual_to_json(const DualNumber<S>& x) {
    return json{{"kind", "dual"}, {"a", scalar_to_json<S>(x.a)}, {"b", scalar_to_json<S>(x.b)}};
}

template <class S>
DualNumber<S> dual_from_json(const json& j) {
    return DualNumber<S>(scalar_from_json<S>(require_field(j, "a", "dual number")),
                         scalar_from_json<S>(require_field(j, "b", "dual number")));
}

// -------------------------------------------------- cyclic-shift elements --

/// Zmatrices are dispatched at runtime over their coefficient algebra.
template <class S>
using AnyZMatrix = std::variant<ZMatrix<S>, ZMatrix<DualNumber<S>>, ZMatrix<CDElement<S>>>;

template <class S>
json zmatrix_to_json(const ZMatrix<S>& z) {
    json entries = json::array();
    for (const S& e : z.entries) entries.push_back(scalar_to_json<S>(e));
    return json{{"arity", z.arity}, {"algebra", "R"}, {"entries", std::move(entries)}};
}

template <class S>
json zmatrix_to_json(const ZMatrix<DualNumber<S>>& z) {
    json entries = json::array();
    for (const auto& e : z.entries) {
        entries.push_back(json{{"a", scalar_to_json<S>(e.a)}, {"b", scalar_to_json<S>(e.b)}});
    }
    return json{{"arity", z.arity}, {"algebra", "dual"}, {"entries", std::move(entries)}};
}

template <class S>
json zmatrix_to_json(const ZMatrix<CDElement<S>>& z) {
    json entries = json::array();
    for (const auto& e : z.entries) {
        json coeffs = json::array();
        for (const S& v : e.c) coeffs.push_back(scalar_to_json<S>(v));
        entries.push_back(std::move(coeffs));
    }
    return json{{"arity", z.arity},
                {"algebra", level_name(z.entries.front().level)},
                {"entries", std::move(entries)}};
}

template <class S>
json any_zmatrix_to_json(const AnyZMatrix<S>& z) {
    return std::visit([](const auto& v) { return zmatrix_to_json(v); }, z);
}



template <class S>
AnyZMatrix<S> zmatrix_from_json(const json& j) {
    const int arity = require_int(require_field(j, "arity", "shift element"), "\"arity\"");
    const json& tag_j = require_field(j, "algebra", "shift element");
    if (!tag_j.is_string()) throw MalformedInput("\"algebra\" must be a string tag");
    const std::string tag = tag_j.get<std::string>();
    const json& entries = require_array(require_field(j, "entries", "shift element"),
                                        "\"entries\"");

    if (tag == "R") {
        std::vector<S> es;
        es.reserve(entries.size());
        for (const auto& e : entries) es.push_back(scalar_from_json<S>(e));
        return ZMatrix<S>(arity, std::move(es));
    }
    if (tag == "dual") {
        std::vector<DualNumber<S>> es;
        es.reserve(entries.size());
        for (const auto& e : entries) es.push_back(dual_from_json<S>(e));
        return ZMatrix<DualNumber<S>>(arity, std::move(es));
    }
    const int level = cd_level_for_tag(tag);
    if (level < 0) {
        throw MalformedInput("unknown algebra tag \"" + tag +
                             "\" (expected R, dual, C, H, O, or S)");
    }
    const std::size_t dim = std::size_t{1} << level;
    std::vector<CDElement<S>> es;
    es.reserve(entries.size());
    for (const auto& e : entries) {
        const json& arr = require_array(e, "algebra entry");
        if (arr.size() != dim) {
            throw MalformedInput("algebra \"" + tag + "\" entries need " +
                                 std::to_string(dim) + " coefficients, got " +
                                 std::to_string(arr.size()));
        }
        std::vector<S> c;
        c.reserve(dim);
        for (const auto& v : arr) c.push_back(scalar_from_json<S>(v));
        es.push_back(CDElement<S>(level, std::move(c)));
    }
    return ZMatrix<CDElement<S>>(arity, std::move(es));
}

// ------------------------------------------------------- dense and vector --

template <class S>
json dense_to_json(const DenseMatrix<S>& d) {
    json rows = json::array();
    for (int i = 0; i < d.size; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < d.size; ++j2) row.push_back(scalar_to_json<S>(d.at(i, j2)));
        rows.push_back(std::move(row));
    }
    return json{{"size", d.size}, {"cells", std::move(rows)}};
}

template <class S>
DenseMatrix<S> dense_from_json(const json& j) {
    const int size = require_int(require_field(j, "size", "dense matrix"), "\"size\"");
    const json& rows = require_array(require_field(j, "cells", "dense matrix"), "\"cells\"");
    if (static_cast<int>(rows.size()) != size) {
        throw MalformedInput("dense matrix of size " + std::to_string(size) + " needs " +
                             std::to_string(size) + " rows");
    }
    std::vector<S> cells;
    cells.reserve(static_cast<std::size_t>(size) * size);
    for (const auto& row : rows) {
        const json& r = require_array(row, "dense matrix row");
        if (static_cast<int>(r.size()) != size) {
            throw MalformedInput("dense matrix rows must have " + std::to_string(size) +
                                 " cells");
        }
        for (const auto& v : r) cells.push_back(scalar_from_json<S>(v));
    }
    return DenseMatrix<S>(size, std::move(cells));
}

template <class S>
json vector_to_json(const PolyVector<S>& v) {
    json coords = json::array();
    for (const S& c : v.x) coords.push_back(scalar_to_json<S>(c));
    return json{{"dim", v.dim}, {"coords", std::move(coords)}};
}

template <class S>
PolyVector<S> vector_from_json(const json& j) {
    const json& coords = require_array(require_field(j, "coords", "vector"), "\"coords\"");
    std::vector<S> x;
    x.reserve(coords.size());
    for (const auto& v : coords) x.push_back(scalar_from_json<S>(v));
    const int dim = static_cast<int>(x.size());
    if (j.contains("dim") && require_int(j.at("dim"), "\"dim\"") != dim) {
        throw MalformedInput("\"dim\" disagrees with the number of coordinates");
    }
    return PolyVector<S>(dim, std::move(x));
}

// -------------------------------------------------------------- imaginary --

template <class S>
using AnyImaginary = std::variant<ImaginaryComplex<S>, HalfQuaternion<S>, HalfOctonion<S>>;

template <class S>
json imaginary_to_json(const ImaginaryComplex<S>& x) {
    return json{{"kind", "imaginary_complex"}, {"b", scalar_to_json<S>(x.b)}};
}

template <class S>
json imaginary_to_json(const HalfQuaternion<S>& x) {
    return json{{"kind", "half_quaternion"},
                {"c", scalar_to_json<S>(x.c)},
                {"d", scalar_to_json<S>(x.d)}};
}

template <class S>
json imaginary_to_json(const HalfOctonion<S>& x) {
    return json{{"kind", "half_octonion"},
                {"a", scalar_to_json<S>(x.a)},
                {"b", scalar_to_json<S>(x.b)},
                {"c", scalar_to_json<S>(x.c)},
                {"d", scalar_to_json<S>(x.d)}};
}

template <class S>
json any_imaginary_to_json(const AnyImaginary<S>& x) {
    return std::visit([](const auto& v) { return imaginary_to_json(v); }, x);
}

template <class S>
AnyImaginary<S> imaginary_from_json(const json& j) {
    const json& kind_j = require_field(j, "kind", "imaginary element");
    if (!kind_j.is_string()) throw MalformedInput("\"kind\" must be a string");
    const std::string kind = kind_j.get<std::string>();
    if (kind == "imaginary_complex") {
        return ImaginaryComplex<S>(
            scalar_from_json<S>(require_field(j, "b", "imaginary_complex")));
    }
    if (kind == "half_quaternion") {
        return HalfQuaternion<S>(
            scalar_from_json<S>(require_field(j, "c", "half_quaternion")),
            scalar_from_json<S>(require_field(j, "d", "half_quaternion")));
    }
    if (kind == "half_octonion") {
        return HalfOctonion<S>(
            scalar_from_json<S>(require_field(j, "a", "half_octonion")),
            scalar_from_json<S>(require_field(j, "b", "half_octonion")),
            scalar_from_json<S>(require_field(j, "c", "half_octonion")),
            scalar_from_json<S>(require_field(j, "d", "half_octonion")));
    }
    throw MalformedInput("unknown imaginary element kind \"" + kind + "\"");
}

// ------------------------------------------------------------------ norms --

template <class S>
json norm_to_json(const PolyNorm<S>& n) {
    json out{{"arity", n.arity}};
    out[n.squared ? "norm_sq" : "norm"] = scalar_to_json<S>(n.value);
    return out;
}

}  // namespace polyadica

#endif  // POLYADICA_JSON_IO_HPP
