// SPDX-License-Identifier: MIT

#include <set>

#include "doctest.h"
#include "polyadica/props.hpp"

using namespace polyadica;

TEST_CASE("suite names are unique and both modes are wired") {
    std::set<std::string> names;
    for (const auto& s : suite_registry()) {
        CHECK(names.insert(s.name).second);
        CHECK_FALSE(s.summary.empty());
        CHECK(static_cast<bool>(s.run));
    }
    CHECK(names.size() >= 20);
}

TEST_CASE("every law suite reports zero failures on a rational spot run") {
    for (const auto& s : suite_registry()) {
        if (s.expects_failures) continue;
        const Mode mode = s.float_only ? Mode::floating : Mode::rational;
        const auto report = s.run(mode, 40, 12345);
        INFO("suite " << s.name);
        CHECK(report.failures_total == 0);
    }
}

TEST_CASE("every law suite reports zero failures on a float spot run") {
    for (const auto& s : suite_registry()) {
        if (s.expects_failures) continue;
        const auto report = s.run(Mode::floating, 40, 999);
        INFO("suite " << s.name);
        CHECK(report.failures_total == 0);
    }
}

TEST_CASE("the measuring suites find the failures they measure") {
    // These suites document claims that do not hold; if they ever report
    // zero failures over a healthy sample, the harness has lost its teeth.
    const auto assoc = run_suite("half-octonion-associativity", Mode::rational, 200, 7);
    CHECK(assoc.failures_total > 0);
    const auto norm = run_suite("half-octonion-norm-mult", Mode::rational, 200, 7);
    CHECK(norm.failures_total > 0);
    const auto tri = run_suite("norm-triangle", Mode::floating, 200, 7);
    CHECK(tri.failures_total > 0);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    const auto a = run_suite("half-octonion-associativity", Mode::rational, 60, 42);
    const auto b = run_suite("half-octonion-associativity", Mode::rational, 60, 42);
    CHECK(a.to_json().dump() == b.to_json().dump());
    const auto c = run_suite("nary-vs-dense", Mode::floating, 60, 42);
    const auto d = run_suite("nary-vs-dense", Mode::floating, 60, 42);
    CHECK(c.to_json().dump() == d.to_json().dump());
}

TEST_CASE("stored counterexamples are re-runnable input documents") {
    const auto report = run_suite("half-octonion-associativity", Mode::rational, 200, 7);
    REQUIRE(report.failures_total > 0);
    REQUIRE_FALSE(report.failures.empty());
    const json& failure = report.failures.front();
    const json& input = failure.at("input");
    const json& factors = input.at("factors");
    REQUIRE(factors.size() == 5);
    // Re-run the recorded case by hand and confirm the recorded disagreement.
    std::vector<HalfOctonion<Rational>> f;
    for (const auto& doc : factors) {
        auto any = imaginary_from_json<Rational>(doc);
        REQUIRE(std::holds_alternative<HalfOctonion<Rational>>(any));
        f.push_back(std::get<HalfOctonion<Rational>>(any));
    }
    const auto a1 = ternary_mul_o(ternary_mul_o(f[0], f[1], f[2]), f[3], f[4]);
    const auto a3 = ternary_mul_o(f[0], f[1], ternary_mul_o(f[2], f[3], f[4]));
    const auto a2 = ternary_mul_o(f[0], ternary_mul_o(f[1], f[2], f[3]), f[4]);
    CHECK((!(a1 == a2) || !(a1 == a3)));
}

TEST_CASE("reports cap stored counterexamples but keep the full count") {
    const auto report = run_suite("norm-triangle", Mode::floating, 400, 3);
    CHECK(report.failures_total > 10);
    CHECK(report.failures.size() == 10);
    const json j = report.to_json();
    CHECK(j.at("failures_total").get<long long>() == report.failures_total);
    CHECK(j.at("failures").size() == 10);
}

TEST_CASE("suite lookups and guards") {
    CHECK_THROWS_AS(run_suite("no-such-suite", Mode::rational, 10, 0), MalformedInput);
    CHECK_THROWS_AS(run_suite("norm-triangle", Mode::rational, 10, 0), MalformedInput);
    CHECK_THROWS_AS(run_suite("hurwitz", Mode::rational, 0, 0), MalformedInput);
    CHECK_NOTHROW(run_suite("hurwitz", Mode::rational, 1, 0));
}

TEST_CASE("report JSON carries the run parameters") {
    const auto report = run_suite("quer-zmatrix", Mode::rational, 25, 77);
    const json j = report.to_json();
    CHECK(j.at("suite") == "quer-zmatrix");
    CHECK(j.at("mode") == "rational");
    CHECK(j.at("seed").get<std::uint64_t>() == 77);
    CHECK(j.at("cases").get<long long>() == 25);
    CHECK(j.at("failures_total").get<long long>() == 0);
}
