// SPDX-License-Identifier: MIT

#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <type_traits>

#include "CLI11.hpp"

#include "polyadica/json_io.hpp"
#include "polyadica/norms.hpp"
#include "polyadica/props.hpp"
#include "polyadica/tower.hpp"
#include "polyadica/vectoralg.hpp"
#include "polyadica/zmatrix.hpp"

namespace polyadica::cli {
namespace {

template <class Fn>
json with_mode(Mode mode, Fn&& fn) {
    if (mode == Mode::rational) return fn(std::type_identity<Rational>{});
    return fn(std::type_identity<F64>{});
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("input is not valid JSON: ") + e.what());
    }
}

/// All shift-element factors in one document must carry the same algebra tag;
/// mixing tags is a schema error, not a math error.
void require_uniform_algebra(const json& factors) {
    const json& first = require_field(factors.front(), "algebra", "shift element");
    for (const auto& f : factors) {
        if (require_field(f, "algebra", "shift element") != first) {
            throw MalformedInput("factors must share one coefficient algebra, got \"" +
                                 first.get<std::string>() + "\" and \"" +
                                 f.at("algebra").get<std::string>() + "\"");
        }
    }
}

bool looks_like_zmatrix(const json& j) {
    return j.is_object() && j.contains("arity") && j.contains("entries");
}

std::string kind_of(const json& j) {
    if (j.is_object() && j.contains("kind") && j.at("kind").is_string()) {
        return j.at("kind").get<std::string>();
    }
    return "";
}

// ------------------------------------------------------------------- mul --

template <class S>
json handle_mul(const json& in, bool dense_route, const std::string& algebra_hint,
                int arity_hint) {
    const json& factors = require_array(require_field(in, "factors", "mul input"),
                                        "\"factors\"");
    if (factors.empty()) throw MalformedInput("\"factors\" must not be empty");
    for (const auto& f : factors) {
        if (!algebra_hint.empty()) {
            const std::string tag = f.is_object() && f.contains("algebra")
                                        ? f.at("algebra").get<std::string>()
                                        : kind_of(f);
            if (tag != algebra_hint) {
                throw MalformedInput("--algebra " + algebra_hint +
                                     " does not match a factor tagged \"" + tag + "\"");
            }
        }
        if (arity_hint > 0) {
            if (!looks_like_zmatrix(f) ||
                require_int(f.at("arity"), "\"arity\"") != arity_hint) {
                throw MalformedInput("--arity " + std::to_string(arity_hint) +
                                     " requires shift-element factors of that arity");
            }
        }
    }

    if (looks_like_zmatrix(factors.front())) {
        require_uniform_algebra(factors);
        std::vector<AnyZMatrix<S>> parsed;
        parsed.reserve(factors.size());
        for (const auto& f : factors) parsed.push_back(zmatrix_from_json<S>(f));
        return std::visit(
            [&](const auto& first) -> json {
                using Z = std::decay_t<decltype(first)>;
                std::vector<Z> zs;
                zs.reserve(parsed.size());
                for (const auto& p : parsed) zs.push_back(std::get<Z>(p));
                return zmatrix_to_json(dense_route ? nary_mul_dense(zs) : nary_mul(zs));
            },
            parsed.front());
    }

    if (dense_route) {
        throw MalformedInput("--route dense applies to shift-element products");
    }
    const std::string kind = kind_of(factors.front());
    if (kind == "cd") {
        if (factors.size() != 2) {
            throw MalformedInput("the binary product takes exactly 2 factors, got " +
                                 std::to_string(factors.size()));
        }
        return cd_to_json(cd_mul(cd_from_json<S>(factors[0]), cd_from_json<S>(factors[1])));
    }
    if (kind == "dual") {
        if (factors.size() != 2) {
            throw MalformedInput("the binary product takes exactly 2 factors, got " +
                                 std::to_string(factors.size()));
        }
        return dual_to_json(
            dual_mul(dual_from_json<S>(factors[0]), dual_from_json<S>(factors[1])));
    }
    if (kind == "imaginary_complex" || kind == "half_quaternion" ||
        kind == "half_octonion") {
        throw MalformedInput("use `imaginary mul` for ternary imaginary products");
    }
    throw MalformedInput("factors must be shift elements, cd elements, or dual numbers");
}

// ------------------------------------------------------------------ quer --

template <class S>
json handle_quer(const json& in, bool conj) {
    const json& doc = in.contains("element") ? in.at("element") : in;
    if (looks_like_zmatrix(doc)) {
        if (conj) throw MalformedInput("--conj applies to cd elements");
        return std::visit([](const auto& z) { return zmatrix_to_json(querelement(z)); },
                          zmatrix_from_json<S>(doc));
    }
    const std::string kind = kind_of(doc);
    if (kind == "cd") {
        const CDElement<S> x = cd_from_json<S>(doc);
        return cd_to_json(conj ? cd_conj(x) : cd_inverse(x));
    }
    if (kind == "imaginary_complex" || kind == "half_quaternion" ||
        kind == "half_octonion") {
        throw MalformedInput("use `imaginary quer` for ternary imaginary querelements");
    }
    throw MalformedInput("quer input must be a shift element or a cd element");
}

// ------------------------------------------------------------------ norm --

template <class S>
json handle_norm(const json& in, bool quer) {
    const json& doc = in.contains("element") ? in.at("element") : in;
    if (looks_like_zmatrix(doc)) {
        return std::visit(
            [&](const auto& z) { return norm_to_json(quer ? quer_norm(z) : polyadic_norm(z)); },
            zmatrix_from_json<S>(doc));
    }
    if (quer) throw MalformedInput("--quer applies to shift elements");
    const std::string kind = kind_of(doc);
    if (kind == "cd") {
        return json{{"norm_sq", scalar_to_json<S>(cd_norm_sq(cd_from_json<S>(doc)))}};
    }
    if (kind == "dual") {
        throw UnnormedAlgebra("dual numbers have no multiplicative norm");
    }
    if (kind == "imaginary_complex" || kind == "half_quaternion" ||
        kind == "half_octonion") {
        return std::visit(
            [](const auto& x) -> json {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, ImaginaryComplex<S>>) {
                    return json{{"norm_sq", scalar_to_json<S>(norm_sq_c(x))}};
                } else if constexpr (std::is_same_v<T, HalfQuaternion<S>>) {
                    return json{{"norm_sq", scalar_to_json<S>(norm_sq_h(x))}};
                } else {
                    return json{{"norm_sq", scalar_to_json<S>(norm_sq_o(x))}};
                }
            },
            imaginary_from_json<S>(doc));
    }
    throw MalformedInput("norm input must be a shift, cd, or imaginary element");
}

// ----------------------------------------------------------------- power --

template <class S>
json handle_power(const json& in, long long ell) {
    const json& doc = in.contains("element") ? in.at("element") : in;
    if (!looks_like_zmatrix(doc)) {
        throw MalformedInput("power input must be a shift element");
    }
    return std::visit(
        [&](const auto& z) { return zmatrix_to_json(polyadic_power(z, ell)); },
        zmatrix_from_json<S>(doc));
}

// -------------------------------------------------------- identity-check --

template <class S>
json make_unit_json(int arity, const std::string& tag) {
    if (tag == "R") {
        const auto unit = polyadic_identity(arity, scalar_traits<S>::one());
        return json{{"unit", zmatrix_to_json(unit)}, {"idempotent", is_idempotent(unit)}};
    }
    if (tag == "dual") {
        const auto unit = polyadic_identity(
            arity, DualNumber<S>(scalar_traits<S>::one(), scalar_traits<S>::zero()));
        return json{{"unit", zmatrix_to_json(unit)}, {"idempotent", is_idempotent(unit)}};
    }
    const int level = cd_level_for_tag(tag);
    if (level < 0) {
        throw MalformedInput("unknown algebra tag \"" + tag +
                             "\" (expected R, dual, C, H, O, or S)");
    }
    const auto unit = polyadic_identity(arity, cd_one<S>(level));
    return json{{"unit", zmatrix_to_json(unit)}, {"idempotent", is_idempotent(unit)}};
}

template <class S>
json handle_identity(const json& in, long long ell) {
    if (in.contains("polyad")) {
        const json& polyad = require_array(in.at("polyad"), "\"polyad\"");
        const json& probe_doc = require_field(in, "probe", "identity-check input");
        if (polyad.empty()) throw MalformedInput("\"polyad\" must not be empty");
        json all = polyad;
        all.push_back(probe_doc);
        require_uniform_algebra(all);
        AnyZMatrix<S> probe = zmatrix_from_json<S>(probe_doc);
        return std::visit(
            [&](const auto& p) -> json {
                using Z = std::decay_t<decltype(p)>;
                std::vector<Z> ps;
                ps.reserve(polyad.size());
                for (const auto& f : polyad) {
                    ps.push_back(std::get<Z>(zmatrix_from_json<S>(f)));
                }
                return json{{"neutral", is_neutral_polyad(ps, p)}};
            },
            probe);
    }
    const json& doc = in.contains("element") ? in.at("element") : in;
    if (looks_like_zmatrix(doc)) {
        return std::visit(
            [&](const auto& z) {
                return json{{"idempotent", is_idempotent(z, ell)},
                            {"nilpotent", is_nilpotent(z, ell)}};
            },
            zmatrix_from_json<S>(doc));
    }
    if (doc.is_object() && doc.contains("arity") && doc.contains("algebra")) {
        const int arity = require_int(doc.at("arity"), "\"arity\"");
        const json& tag = doc.at("algebra");
        if (!tag.is_string()) throw MalformedInput("\"algebra\" must be a string tag");
        return make_unit_json<S>(arity, tag.get<std::string>());
    }
    throw MalformedInput(
        "identity-check input must be {arity, algebra}, a shift element, or "
        "{polyad, probe}");
}

// ---------------------------------------------------------------- vecmul --

template <class S>
json handle_vecmul(const json& in, bool matrix_input, bool as_matrix) {
    const json& factors = require_array(require_field(in, "factors", "vecmul input"),
                                        "\"factors\"");
    if (factors.empty()) throw MalformedInput("\"factors\" must not be empty");
    std::vector<PolyVector<S>> vs;
    vs.reserve(factors.size());
    for (const auto& f : factors) {
        if (matrix_input) {
            vs.push_back(reduced_vectorization(dense_from_json<S>(f)));
        } else {
            vs.push_back(vector_from_json<S>(f));
        }
    }
    const PolyVector<S> result = poly_product(vs);
    if (as_matrix) return dense_to_json(shift_matrix(result));
    return vector_to_json(result);
}

json structure_constants_json(int m) {
    const StructureConstants sc = structure_constants(m);
    json entries = json::array();
    for (const auto& e : sc.nonzero) {
        entries.push_back(json{{"upper", e.upper}, {"lower", e.lower}, {"value", 1}});
    }
    return json{{"dim", sc.dim}, {"nonzero", std::move(entries)}};
}

template <class S>
json handle_quervec(const json& in) {
    const json& doc = in.contains("element") ? in.at("element") : in;
    return vector_to_json(quervector(vector_from_json<S>(doc)));
}

// ------------------------------------------------------------- imaginary --

template <class S>
json handle_imaginary_mul(const json& in) {
    const json& factors = require_array(require_field(in, "factors", "imaginary mul input"),
                                        "\"factors\"");
    if (factors.size() != 3) {
        throw MalformedInput("the ternary product takes exactly 3 factors, got " +
                             std::to_string(factors.size()));
    }
    AnyImaginary<S> x = imaginary_from_json<S>(factors[0]);
    AnyImaginary<S> y = imaginary_from_json<S>(factors[1]);
    AnyImaginary<S> z = imaginary_from_json<S>(factors[2]);
    if (x.index() != y.index() || x.index() != z.index()) {
        throw MalformedInput("all three factors must have the same kind");
    }
    return std::visit(
        [&](const auto& a) -> json {
            using T = std::decay_t<decltype(a)>;
            const T& b = std::get<T>(y);
            const T& c = std::get<T>(z);
            if constexpr (std::is_same_v<T, ImaginaryComplex<S>>) {
                return imaginary_to_json(ternary_mul_c(a, b, c));
            } else if constexpr (std::is_same_v<T, HalfQuaternion<S>>) {
                return imaginary_to_json(ternary_mul_h(a, b, c));
            } else {
                return imaginary_to_json(ternary_mul_o(a, b, c));
            }
        },
        x);
}

template <class S>
json handle_imaginary_quer(const json& in) {
    const json& doc = in.contains("element") ? in.at("element") : in;
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ImaginaryComplex<S>>) {
                return imaginary_to_json(quer_c(x));
            } else if constexpr (std::is_same_v<T, HalfQuaternion<S>>) {
                return imaginary_to_json(quer_h(x));
            } else {
                return imaginary_to_json(quer_o(x));
            }
        },
        imaginary_from_json<S>(doc));
}

template <class S>
json handle_imaginary_identity(const json& in) {
    const json& factors = require_array(
        require_field(in, "factors", "imaginary identity input"), "\"factors\"");
    if (factors.size() != 3) {
        throw MalformedInput("the two-squares identity takes exactly 3 factors, got " +
                             std::to_string(factors.size()));
    }
    std::vector<HalfQuaternion<S>> hs;
    for (const auto& f : factors) {
        AnyImaginary<S> any = imaginary_from_json<S>(f);
        if (!std::holds_alternative<HalfQuaternion<S>>(any)) {
            throw MalformedInput("the two-squares identity is defined for half-quaternions");
        }
        hs.push_back(std::get<HalfQuaternion<S>>(any));
    }
    const auto [lhs, rhs] = two_squares_identity(hs[0], hs[1], hs[2]);
    return json{{"lhs", scalar_to_json<S>(lhs)},
                {"rhs", scalar_to_json<S>(rhs)},
                {"equal", scalar_traits<S>::eq(lhs, rhs)}};
}

// ----------------------------------------------------------- tower-shape --

json handle_tower(const std::vector<int>& arities, bool render) {
    const TowerSpec spec(arities);
    const TowerShape shape = build_shape(spec);
    const ChainReport chain = validate_arity_chain(spec);
    const FinalArity fa = final_arity(spec);

    json links = json::array();
    for (const auto& l : chain.links) {
        json link{{"index", l.index},
                  {"integral", l.integral},
                  {"ratio", std::to_string(l.num) + "/" + std::to_string(l.den)}};
        if (l.integral) link["kappa"] = l.kappa;
        links.push_back(std::move(link));
    }
    json chain_json{{"ok", chain.ok}, {"links", std::move(links)}};
    if (!chain.ok) chain_json["first_broken"] = chain.first_broken;

    json pattern = json::array();
    for (const auto& [r, c] : shape.pattern) pattern.push_back(json::array({r, c}));

    json out{{"arities", arities},
             {"size", shape.size},
             {"coeff_dim", shape.coeff_dim},
             {"dimension", tower_dimension(spec)},
             {"outer_arity", fa.outer},
             {"flat_arity", fa.flat},
             {"block_sizes", shape.block_sizes},
             {"chain", std::move(chain_json)},
             {"pattern", std::move(pattern)}};
    if (render) out["render"] = render_shape(shape);
    return out;
}

// ------------------------------------------------------------------ main --

std::string read_input(const std::string& path, const std::string& fallback) {
    if (path.empty()) return fallback;
    std::ifstream f(path);
    if (!f) throw MalformedInput("cannot open input file \"" + path + "\"");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

const std::vector<OperationRoute>& operation_routes() {
    static const std::vector<OperationRoute> routes = {
        {"scalar_add", "props"},
        {"scalar_mul", "props"},
        {"scalar_inv", "props"},
        {"cd_mul", "mul"},
        {"cd_conj", "quer"},
        {"cd_norm_sq", "norm"},
        {"cd_inverse", "quer"},
        {"dual_mul", "mul"},
        {"nary_mul", "mul"},
        {"polyadic_identity", "identity-check"},
        {"querelement", "quer"},
        {"polyadic_power", "power"},
        {"is_idempotent", "identity-check"},
        {"is_nilpotent", "identity-check"},
        {"is_neutral_polyad", "identity-check"},
        {"to_dense", "mul"},
        {"dense_mul", "mul"},
        {"polyadic_norm", "norm"},
        {"quer_norm", "norm"},
        {"tower_dimension", "tower-shape"},
        {"validate_arity_chain", "tower-shape"},
        {"build_shape", "tower-shape"},
        {"final_arity", "tower-shape"},
        {"render_shape", "tower-shape"},
        {"poly_product", "vecmul"},
        {"structure_constants", "vecmul"},
        {"quervector", "quervec"},
        {"reduced_vectorization", "vecmul"},
        {"shift_matrix", "vecmul"},
        {"ternary_mul_c", "imaginary mul"},
        {"ternary_mul_h", "imaginary mul"},
        {"ternary_mul_o", "imaginary mul"},
        {"quer_h", "imaginary quer"},
        {"quer_o", "imaginary quer"},
        {"norm_sq_h", "norm"},
        {"two_squares_identity", "imaginary identity"},
        {"run", ""},
        {"props", "props"},
    };
    return routes;
}

int run(const std::vector<std::string>& args, const std::string& input,
        std::ostream& out) {
    CLI::App app{"polyadica: polyadic generalizations of hypercomplex number systems"};
    app.require_subcommand(1);

    std::string mode_str = "rational";
    app.add_option("--mode", mode_str, "numeric mode: rational (exact) or float")
        ->envname("POLYADICA_MODE")
        ->check(CLI::IsMember({"rational", "float"}));
    std::string in_path;
    app.add_option("--in", in_path, "read the input document from a file, not stdin");

    auto* mul = app.add_subcommand(
        "mul", "n-ary product of shift elements, or binary cd/dual product");
    std::string route = "direct";
    mul->add_option("--route", route, "direct (entrywise) or dense (matrix chain)")
        ->check(CLI::IsMember({"direct", "dense"}));
    std::string algebra_hint;
    mul->add_option("--algebra", algebra_hint,
                    "require every factor to carry this algebra tag");
    int arity_hint = 0;
    mul->add_option("--arity", arity_hint, "require shift factors of this arity");

    auto* quer = app.add_subcommand(
        "quer", "querelement of a shift element, or cd inverse/conjugate");
    bool conj = false;
    quer->add_flag("--conj", conj, "cd conjugate instead of inverse");

    auto* norm = app.add_subcommand("norm", "polyadic norm, cd or imaginary norm-squared");
    bool norm_quer = false;
    norm->add_flag("--quer", norm_quer, "norm of the querelement (closed form)");

    auto* power = app.add_subcommand("power", "polyadic power of a shift element");
    long long ell = 1;
    power->add_option("--ell", ell, "number of product applications");

    auto* identity = app.add_subcommand(
        "identity-check", "polyadic unit, idempotency/nilpotency, neutral polyads");
    long long id_ell = 1;
    identity->add_option("--ell", id_ell, "number of product applications");

    auto* tower = app.add_subcommand("tower-shape", "doubling-tower geometry and pattern");
    std::vector<int> arities;
    tower->add_option("--arities", arities, "comma-separated stage arities, e.g. 5,3,4")
        ->required()
        ->delimiter(',');
    bool render = false;
    tower->add_flag("--render", render, "include an ASCII rendering of the pattern");

    auto* vecmul = app.add_subcommand("vecmul", "(m+1)-ary vector product");
    int constants_dim = 0;
    vecmul->add_option("--constants", constants_dim,
                       "emit the nonzero structure constants for this dimension");
    bool matrix_input = false;
    vecmul->add_flag("--matrix", matrix_input, "factors are dense shift matrices");
    bool as_matrix = false;
    vecmul->add_flag("--as-matrix", as_matrix, "emit the result as its shift matrix");

    auto* quervec = app.add_subcommand("quervec", "quervector of a coordinate vector");

    auto* imaginary = app.add_subcommand("imaginary", "ternary imaginary division algebras");
    imaginary->require_subcommand(1);
    auto* imag_mul = imaginary->add_subcommand("mul", "ternary product");
    auto* imag_quer = imaginary->add_subcommand("quer", "ternary querelement");
    auto* imag_identity =
        imaginary->add_subcommand("identity", "two-squares identity for half-quaternions");

    auto* props = app.add_subcommand("props", "run a seeded property suite");
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }
    std::string suite;
    props->add_option("--suite", suite, "suite name (see --list)");
    long long cases = 200;
    props->add_option("--cases", cases, "number of random cases");
    std::uint64_t seed = 0;
    props->add_option("--seed", seed, "random seed");
    bool list_suites = false;
    props->add_flag("--list", list_suites, "list available suites");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("polyadica");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, out);
        }
        out << json{{"error", "malformed_input"}, {"detail", std::string(e.what())}}.dump(2)
            << "\n";
        return 2;
    }

    try {
        const Mode mode = mode_from_string(mode_str);
        auto get_input = [&]() { return parse_document(read_input(in_path, input)); };

        json out_doc;
        int code = 0;

        if (mul->parsed()) {
            out_doc = with_mode(mode, [&](auto tag) {
                using S = typename decltype(tag)::type;
                return handle_mul<S>(get_input(), route == "dense", algebra_hint, arity_hint);
            });
        } else if (quer->parsed()) {
            out_doc = with_mode(mode, [&](auto tag) {
                using S = typename decltype(tag)::type;
                return handle_quer<S>(get_input(), conj);
            });
        } else if (norm->parsed()) {
            out_doc = with_mode(mode, [&](auto tag) {
                using S = typename decltype(tag)::type;
                return handle_norm<S>(get_input(), norm_quer);
            });
        } else if (power->parsed()) {
            out_doc = with_mode(mode, [&](auto tag) {
                using S = typename decltype(tag)::type;
                return handle_power<S>(get_input(), ell);
            });
        } else if (identity->parsed()) {
            out_doc = with_mode(mode, [&](auto tag) {
                using S = typename decltype(tag)::type;
                return handle_identity<S>(get_input(), id_ell);
            });
        } else if (tower->parsed()) {
            out_doc = handle_tower(arities, render);
        } else if (vecmul->parsed()) {
            if (constants_dim > 0) {
                out_doc = structure_constants_json(constants_dim);
            } else {
                out_doc = with_mode(mode, [&](auto tag) {
                    using S = typename decltype(tag)::type;
                    return handle_vecmul<S>(get_input(), matrix_input, as_matrix);
                });
            }
        } else if (quervec->parsed()) {
            out_doc = with_mode(mode, [&](auto tag) {
                using S = typename decltype(tag)::type;
                return handle_quervec<S>(get_input());
            });
        } else if (imaginary->parsed()) {
            out_doc = with_mode(mode, [&](auto tag) {
                using S = typename decltype(tag)::type;
                if (imag_mul->parsed()) return handle_imaginary_mul<S>(get_input());
                if (imag_quer->parsed()) return handle_imaginary_quer<S>(get_input());
                (void)imag_identity;
                return handle_imaginary_identity<S>(get_input());
            });
        } else if (props->parsed()) {
            if (list_suites) {
                json suites = json::array();
                for (const auto& s : suite_registry()) {
                    suites.push_back(json{{"name", s.name},
                                          {"summary", s.summary},
                                          {"float_only", s.float_only},
                                          {"expects_failures", s.expects_failures}});
                }
                out_doc = json{{"suites", std::move(suites)}};
            } else {
                if (suite.empty()) {
                    throw MalformedInput("props needs --suite NAME (or --list)");
                }
                const PropsReport report = run_suite(suite, mode, cases, seed);
                out_doc = report.to_json();
                code = report.failures_total > 0 ? 1 : 0;
            }
        }

        out << out_doc.dump(2) << "\n";
        return code;
    } catch (const DomainError& e) {
        out << json{{"error", e.code()}, {"detail", std::string(e.what())}}.dump(2) << "\n";
        return 1;
    } catch (const MalformedInput& e) {
        out << json{{"error", "malformed_input"}, {"detail", std::string(e.what())}}.dump(2)
            << "\n";
        return 2;
    }
}

}  // namespace polyadica::cli
