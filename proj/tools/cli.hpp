/*
   Copyright 2026 The superharrison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPERHARRISON_TOOLS_CLI_HPP
#define SUPERHARRISON_TOOLS_CLI_HPP

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "superharrison/io.hpp"
#include "superharrison/properties.hpp"
#include "superharrison/superharrison.hpp"

namespace superharrison::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kInputError = 2, kResourceLimit = 3, kInternalError = 4 };

namespace detail {

using io::Json;

struct Context {
    std::string command;
    std::ostream& out;
    std::ostream& err;
    bool json = false;
};

inline Json violations_json(const ValidationReport& r) {
    Json arr = Json::array();
    for (const auto& v : r.violations) arr.push_back(Json{{"kind", v.kind}, {"witness", v.witness}, {"detail", v.detail}});
    return arr;
}

inline void print_violations(std::ostream& os, const ValidationReport& r) {
    for (const auto& v : r.violations) os << "  " << v.kind << ": " << v.detail << '\n';
}

inline SuperModule resolve_module(const SuperAlgebra& alg, const std::string& module) {
    if (module != "self") throw ArgumentError("only --module self is supported, got \"" + module + "\"");
    return self_module(alg);
}

inline Limits resolve_limits(std::optional<std::size_t> max_dim, std::optional<std::size_t> max_degree) {
    Limits limits;
    if (const char* env = std::getenv("SHARRISON_MAX_COCHAIN_DIM"); env && *env)
        limits.max_cochain_dim = io::detail::parse_size(env, "SHARRISON_MAX_COCHAIN_DIM");
    if (max_dim) limits.max_cochain_dim = *max_dim;
    if (max_degree) limits.max_degree = *max_degree;
    return limits;
}

inline ComplexKind parse_kind(const std::string& kind) {
    if (kind == "harrison") return ComplexKind::SuperHarrison;
    if (kind == "hochschild") return ComplexKind::Hochschild;
    throw ArgumentError("--kind must be harrison or hochschild, got \"" + kind + "\"");
}

inline Json header(const Context& ctx, const SuperAlgebra& alg) {
    return Json{{"command", ctx.command}, {"algebra_digest", io::digest(alg)}, {"algebra_dim", alg.dim()}};
}

inline int emit_check(const Context& ctx, const SuperAlgebra& alg) {
    const auto ra = validate_superalgebra(alg);
    const SuperModule self = self_module(alg);
    const auto rm = validate_supermodule(alg, self);
    if (ctx.json) {
        Json j = header(ctx, alg);
        j["algebra_valid"] = ra.ok();
        j["algebra_violations"] = violations_json(ra);
        j["self_module_valid"] = rm.ok();
        j["self_module_violations"] = violations_json(rm);
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "algebra " << io::digest(alg) << " (dim " << alg.dim() << ")\n";
        ctx.out << "superalgebra: " << (ra.ok() ? "valid" : "INVALID") << '\n';
        print_violations(ctx.out, ra);
        ctx.out << "self-module: " << (rm.ok() ? "valid" : "INVALID") << '\n';
        print_violations(ctx.out, rm);
    }
    return ra.ok() && rm.ok() ? kSuccess : kNegative;
}

inline int emit_cohomology(const Context& ctx, const SuperAlgebra& alg, const SuperModule& mod,
                           const CohomologyResult& r) {
    if (ctx.json) {
        Json j = header(ctx, alg);
        j["kind"] = to_string(r.kind);
        j["degree"] = r.degree;
        j["dim_cochain"] = r.dim_cochain;
        j["dim_Z"] = r.dim_Z;
        j["dim_B"] = r.dim_B;
        j["dim_H"] = r.dim_H;
        Json reps = Json::array();
        for (const auto& f : r.representatives) reps.push_back(io::cochain_to_json(f, alg, mod));
        j["representatives"] = reps;
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "algebra " << io::digest(alg) << " (dim " << alg.dim() << ")\n";
        ctx.out << "kind " << to_string(r.kind) << ", degree " << r.degree << '\n';
        ctx.out << "dim C = " << r.dim_cochain << "\n";
        ctx.out << "dim Z = " << r.dim_Z << "\n";
        ctx.out << "dim B = " << r.dim_B << "\n";
        ctx.out << "dim H = " << r.dim_H << "\n";
        for (std::size_t k = 0; k < r.representatives.size(); ++k)
            ctx.out << "representative " << k + 1 << ": " << io::describe_cochain(r.representatives[k], alg, mod)
                    << '\n';
    }
    return kSuccess;
}

inline Json deformation_json(const DeformationReport& r) {
    return Json{{"valid", r.valid()},
                {"associative_mod_t2", r.associative},
                {"associativity_witness", r.associativity_witness},
                {"supercommutative_mod_t2", r.supercommutative},
                {"supercommutativity_witness", r.supercommutativity_witness},
                {"parity_ok", r.parity_ok},
                {"parity_witness", r.parity_witness},
                {"reasons", r.reasons}};
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Hochschild and super Harrison cohomology of finite-dimensional supercommutative algebras",
                 "sharrison"};
    app.require_subcommand(1);

    std::string algebra_spec, module_spec = "self", psi_path, kind_name = "harrison", suite = "all";
    std::size_t degree = 0, shuffle_n = 0, shuffle_p = 0, budget = 200, verify_degree = 3;
    std::optional<std::size_t> max_dim, max_degree;
    std::vector<long long> perm_list, parity_list;
    bool json = false;

    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", algebra_spec, "algebra JSON file or builtin:<name>")->required();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "machine-readable JSON output"); };
    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--max-cochain-dim", max_dim, "cochain coordinate ceiling (default 20000)");
        sub->add_option("--max-degree", max_degree, "degree ceiling (default 4)");
    };

    auto* check = app.add_subcommand("check", "validate an algebra and its self-module");
    add_algebra(check);
    add_json(check);

    auto* shuffles = app.add_subcommand("shuffles", "list the shuffles J_P(1..N)");
    shuffles->add_option("N", shuffle_n, "arity")->required();
    shuffles->add_option("P", shuffle_p, "split point")->required();
    add_json(shuffles);

    auto* sign = app.add_subcommand("sign", "sign of the odd subpermutation of a permutation");
    sign->add_option("--perm", perm_list, "one-based images, comma separated")->required()->delimiter(',');
    sign->add_option("--parity", parity_list, "parities 0/1 of the letters, comma separated")
        ->required()
        ->delimiter(',');
    add_json(sign);

    auto* coh = app.add_subcommand("cohomology", "compute H^N of the chosen complex");
    add_algebra(coh);
    coh->add_option("--module", module_spec, "coefficient module (self)");
    coh->add_option("--degree", degree, "cohomological degree")->required();
    coh->add_option("--kind", kind_name, "harrison or hochschild");
    add_json(coh);
    add_limits(coh);

    auto* der = app.add_subcommand("derivations", "parity-preserving derivations A -> A");
    add_algebra(der);
    add_json(der);

    auto* dcheck = app.add_subcommand("deform-check", "check a first-order deformation a*b + t psi(a,b)");
    add_algebra(dcheck);
    dcheck->add_option("--psi", psi_path, "2-cochain JSON file")->required();
    add_json(dcheck);

    auto* dclasses = app.add_subcommand("deform-classes", "first-order deformation classes (H^2 with A coefficients)");
    add_algebra(dclasses);
    add_json(dclasses);
    add_limits(dclasses);

    auto* extend = app.add_subcommand("extend", "square-zero extension A + M defined by psi");
    add_algebra(extend);
    extend->add_option("--module", module_spec, "coefficient module (self)");
    extend->add_option("--psi", psi_path, "2-cochain JSON file")->required();
    add_json(extend);

    auto* verify = app.add_subcommand("verify", "run property suites");
    add_algebra(verify);
    verify->add_option("--suite", suite, "all, complex, closure, matrices, derivations, containment, deformation, "
                                         "extension or equivalence");
    verify->add_option("--degree", verify_degree, "highest degree swept (default 3)");
    verify->add_option("--budget", budget, "random cochains per sweep (default 200)");
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kInputError;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
    detail::Context ctx{command, out, err, json};
    using detail::Json;

    try {
        if (*check) return detail::emit_check(ctx, io::load_algebra(algebra_spec));

        if (*shuffles) {
            const auto list = enumerate_shuffles(shuffle_n, shuffle_p);
            if (json) {
                Json arr = Json::array();
                for (const auto& s : list) arr.push_back(s.perm.one_based());
                out << Json{{"command", command}, {"n", shuffle_n}, {"p", shuffle_p}, {"shuffles", arr}}.dump(2)
                    << '\n';
            } else {
                for (const auto& s : list) {
                    const auto images = s.perm.one_based();
                    for (std::size_t k = 0; k < images.size(); ++k) out << (k ? " " : "") << images[k];
                    out << '\n';
                }
            }
            return kSuccess;
        }

        if (*sign) {
            const Permutation perm = Permutation::from_one_based(perm_list);
            ParityVector parities;
            for (auto p : parity_list) {
                if (p != 0 && p != 1) throw ArgumentError("parities must be 0 or 1");
                parities.push_back(static_cast<Parity>(p));
            }
            const int s = sigma_o_sign(perm, parities);
            if (json)
                out << Json{{"command", command}, {"sign", s}}.dump(2) << '\n';
            else
                out << s << '\n';
            return kSuccess;
        }

        const SuperAlgebra alg = io::load_algebra(algebra_spec);
        const Limits limits = detail::resolve_limits(max_dim, max_degree);

        if (*coh) {
            const SuperModule mod = detail::resolve_module(alg, module_spec);
            const auto r = cohomology(alg, mod, degree, detail::parse_kind(kind_name), limits);
            return detail::emit_cohomology(ctx, alg, mod, r);
        }

        if (*der) {
            const SuperModule self = self_module(alg);
            const auto basis = derivation_space(alg, self);
            const CochainSpace ones = hochschild_space(alg, self, 1);
            if (json) {
                Json j = detail::header(ctx, alg);
                j["dim_Der"] = basis.dim();
                Json arr = Json::array();
                for (const auto& v : basis.vectors()) arr.push_back(io::cochain_to_json(ones.from_ambient(v), alg, self));
                j["basis"] = arr;
                out << j.dump(2) << '\n';
            } else {
                out << "dim Der = " << basis.dim() << '\n';
                for (std::size_t k = 0; k < basis.dim(); ++k)
                    out << "derivation " << k + 1 << ": "
                        << io::describe_cochain(ones.from_ambient(basis.vectors()[k]), alg, self) << '\n';
            }
            return kSuccess;
        }

        if (*dcheck) {
            const SuperModule self = self_module(alg);
            const Cochain psi = io::load_cochain(psi_path, alg, self);
            const auto r = first_order_deformation_check(alg, psi);
            if (json) {
                Json j = detail::header(ctx, alg);
                j["deformation"] = detail::deformation_json(r);
                out << j.dump(2) << '\n';
            } else {
                out << "first-order deformation: " << (r.valid() ? "valid" : "INVALID") << '\n';
                for (const auto& reason : r.reasons) out << "  " << reason << '\n';
            }
            return r.valid() ? kSuccess : kNegative;
        }

        if (*dclasses) return detail::emit_cohomology(ctx, alg, self_module(alg), deformation_classes(alg, limits));

        if (*extend) {
            const SuperModule mod = detail::resolve_module(alg, module_spec);
            const Cochain psi = io::load_cochain(psi_path, alg, mod);
            if (psi.degree() != 2) throw ArgumentError("psi must be a 2-cochain");
            if (!is_parity_preserving(alg, mod, psi)) throw ArgumentError("psi must be parity-preserving");
            const auto ext = square_zero_extension(alg, mod, psi);
            const auto v = validate_superalgebra(ext.algebra);
            if (json) {
                Json j = detail::header(ctx, alg);
                j["valid"] = v.ok();
                j["violations"] = detail::violations_json(v);
                j["extension"] = io::algebra_to_json(ext.algebra);
                out << j.dump(2) << '\n';
            } else {
                out << "square-zero extension: dim " << ext.algebra.dim() << ", " << (v.ok() ? "valid" : "INVALID")
                    << '\n';
                detail::print_violations(out, v);
                out << io::algebra_to_json(ext.algebra).dump() << '\n';
            }
            return v.ok() ? kSuccess : kNegative;
        }

        if (*verify) {
            const auto sweeps = properties::run_suite(alg, suite, verify_degree, budget);
            bool all = true;
            Json arr = Json::array();
            for (const auto& s : sweeps) {
                all = all && s.report.passed;
                if (json) {
                    arr.push_back(Json{{"suite", s.name},
                                       {"passed", s.report.passed},
                                       {"cases", s.report.cases},
                                       {"positive_cases", s.report.positive_cases},
                                       {"counterexamples", s.report.counterexamples}});
                } else {
                    out << (s.report.passed ? "PASS " : "FAIL ") << s.name << " (" << s.report.cases << " cases)\n";
                    for (const auto& c : s.report.counterexamples) out << "  " << c << '\n';
                }
            }
            if (json) {
                Json j = detail::header(ctx, alg);
                j["suites"] = arr;
                j["passed"] = all;
                out << j.dump(2) << '\n';
            }
            return all ? kSuccess : kNegative;
        }
    } catch (const ResourceLimitError& e) {
        err << "sharrison: resource ceiling: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const ArgumentError& e) {
        err << "sharrison: " << e.what() << '\n';
        return kInputError;
    } catch (const InternalError& e) {
        err << "sharrison: internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInputError;
}

}  // namespace superharrison::cli

#endif  // SUPERHARRISON_TOOLS_CLI_HPP
