// SPDX-License-Identifier: MIT

#include "doctest.h"
#include "polyadica/json_io.hpp"

using namespace polyadica;

TEST_CASE("rational scalars round-trip as exact strings") {
    const json j = scalar_to_json<Rational>(Rational(-7, 3));
    CHECK(j.is_string());
    CHECK(j.get<std::string>() == "-7/3");
    CHECK(scalar_from_json<Rational>(j) == Rational(-7, 3));
}

TEST_CASE("rational mode rejects JSON numbers with a usable hint") {
    try {
        scalar_from_json<Rational>(json(1.5));
        CHECK(false);
    } catch (const MalformedInput& e) {
        CHECK(std::string(e.what()).find("--mode float") != std::string::npos);
    }
}

TEST_CASE("float scalars round-trip as JSON numbers and reject strings") {
    const json j = scalar_to_json<F64>(F64(2.5));
    CHECK(j.is_number());
    CHECK(scalar_from_json<F64>(j) == F64(2.5));
    CHECK(scalar_from_json<F64>(json(3)) == F64(3.0));
    CHECK_THROWS_AS(scalar_from_json<F64>(json("2/3")), MalformedInput);
}

TEST_CASE("shift elements round-trip through JSON for every coefficient algebra") {
    const json real = {{"arity", 5},
                       {"algebra", "R"},
                       {"entries", {"1", "2", "3", "4"}}};
    auto any = zmatrix_from_json<Rational>(real);
    REQUIRE(std::holds_alternative<ZMatrix<Rational>>(any));
    CHECK(any_zmatrix_to_json(any) == real);

    const json dual = {{"arity", 3},
                       {"algebra", "dual"},
                       {"entries",
                        {{{"a", "1"}, {"b", "2"}}, {{"a", "3"}, {"b", "0"}}}}};
    auto any_dual = zmatrix_from_json<Rational>(dual);
    REQUIRE(std::holds_alternative<ZMatrix<DualNumber<Rational>>>(any_dual));
    CHECK(any_zmatrix_to_json(any_dual) == dual);

    const json quat = {{"arity", 3},
                       {"algebra", "H"},
                       {"entries", {{"1", "0", "2", "0"}, {"0", "1", "0", "3"}}}};
    auto any_quat = zmatrix_from_json<Rational>(quat);
    REQUIRE(std::holds_alternative<ZMatrix<CDElement<Rational>>>(any_quat));
    CHECK(any_zmatrix_to_json(any_quat) == quat);
}

TEST_CASE("unknown and ill-sized shift documents are rejected") {
    CHECK_THROWS_AS(zmatrix_from_json<Rational>(
                        json{{"arity", 3}, {"algebra", "Q"}, {"entries", {"1", "2"}}}),
                    MalformedInput);
    CHECK_THROWS_AS(zmatrix_from_json<Rational>(
                        json{{"arity", 3}, {"algebra", "C"}, {"entries", {{"1"}, {"2"}}}}),
                    MalformedInput);
    CHECK_THROWS_AS(zmatrix_from_json<Rational>(json{{"algebra", "R"}}), MalformedInput);
}

TEST_CASE("octonion-entry shift documents parse and then fail the domain gate") {
    const json oct = {{"arity", 3},
                      {"algebra", "O"},
                      {"entries",
                       {{"1", "0", "0", "0", "0", "0", "0", "0"},
                        {"0", "1", "0", "0", "0", "0", "0", "0"}}}};
    CHECK_THROWS_AS(zmatrix_from_json<Rational>(oct), UnsupportedCoefficientAlgebra);
}

TEST_CASE("cd elements accept either a level or an algebra tag") {
    const json with_level = {{"kind", "cd"}, {"level", 2}, {"coeffs", {"1", "0", "2", "0"}}};
    const json with_tag = {{"kind", "cd"}, {"algebra", "H"}, {"coeffs", {"1", "0", "2", "0"}}};
    CHECK(cd_from_json<Rational>(with_level) == cd_from_json<Rational>(with_tag));
    const json emitted = cd_to_json(cd_from_json<Rational>(with_tag));
    CHECK(emitted.at("level") == 2);
    CHECK(emitted.at("algebra") == "H");
    CHECK_THROWS_AS(cd_from_json<Rational>(
                        json{{"kind", "cd"}, {"level", 1}, {"coeffs", {"1"}}}),
                    MalformedInput);
}

TEST_CASE("vectors and dense matrices round-trip") {
    const json v = {{"dim", 3}, {"coords", {"2", "3", "4"}}};
    const auto pv = vector_from_json<Rational>(v);
    CHECK(vector_to_json(pv) == v);
    // dim is optional on input; the coordinate count fixes it
    const auto pv2 = vector_from_json<Rational>(json{{"coords", {"2", "3", "4"}}});
    CHECK(pv2 == pv);

    const auto d = shift_matrix(pv);
    const json dj = dense_to_json(d);
    CHECK(dj.at("size") == 3);
    const auto back = dense_from_json<Rational>(dj);
    CHECK(reduced_vectorization(back) == pv);
}

TEST_CASE("imaginary elements round-trip through their kind tags") {
    const json ic = {{"kind", "imaginary_complex"}, {"b", "5"}};
    auto any_ic = imaginary_from_json<Rational>(ic);
    REQUIRE(std::holds_alternative<ImaginaryComplex<Rational>>(any_ic));
    CHECK(any_imaginary_to_json(any_ic) == ic);

    const json hq = {{"kind", "half_quaternion"}, {"c", "1"}, {"d", "-2"}};
    auto any_hq = imaginary_from_json<Rational>(hq);
    REQUIRE(std::holds_alternative<HalfQuaternion<Rational>>(any_hq));
    CHECK(any_imaginary_to_json(any_hq) == hq);

    const json ho = {{"kind", "half_octonion"},
                     {"a", "1"},
                     {"b", "0"},
                     {"c", "-3"},
                     {"d", "2"}};
    auto any_ho = imaginary_from_json<Rational>(ho);
    REQUIRE(std::holds_alternative<HalfOctonion<Rational>>(any_ho));
    CHECK(any_imaginary_to_json(any_ho) == ho);

    CHECK_THROWS_AS(imaginary_from_json<Rational>(json{{"kind", "nope"}, {"b", "1"}}),
                    MalformedInput);
}

TEST_CASE("norm reports use the squared key exactly when the value is squared") {
    const auto zn = polyadic_norm(ZMatrix<Rational>(3, {Rational(2), Rational(3)}));
    const json jr = norm_to_json(zn);
    CHECK(jr.contains("norm_sq"));
    CHECK_FALSE(jr.contains("norm"));
    CHECK(jr.at("arity") == 3);

    const auto fn = polyadic_norm(ZMatrix<F64>(3, {F64(2), F64(3)}));
    const json jf = norm_to_json(fn);
    CHECK(jf.contains("norm"));
    CHECK_FALSE(jf.contains("norm_sq"));
}

TEST_CASE("float documents parse numeric payloads end to end") {
    const json zf = {{"arity", 3}, {"algebra", "R"}, {"entries", {1.5, -2.0}}};
    auto any = zmatrix_from_json<F64>(zf);
    REQUIRE(std::holds_alternative<ZMatrix<F64>>(any));
    const auto& z = std::get<ZMatrix<F64>>(any);
    CHECK(z.entries[0] == F64(1.5));
    CHECK(z.entries[1] == F64(-2.0));
    // and a rational payload in float position is rejected
    CHECK_THROWS_AS(zmatrix_from_json<F64>(
                        json{{"arity", 3}, {"algebra", "R"}, {"entries", {"1/2", "2"}}}),
                    MalformedInput);
}
