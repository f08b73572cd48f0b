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

#ifndef SUPERHARRISON_PROPERTIES_HPP
#define SUPERHARRISON_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "cochain.hpp"
#include "cohomology.hpp"
#include "deformation.hpp"

// Executable property suites shared by the `verify` command and the
// acceptance tests. Each returns a SweepReport.

namespace superharrison::properties {

/// d(d f) = 0 for every basis cochain of the Hochschild space in degrees
/// 0..max_degree and `random_count` random cochains per degree.
inline SweepReport coboundary_squares_to_zero(const SuperAlgebra& alg, const SuperModule& mod, std::size_t max_degree,
                                              std::size_t random_count, std::uint64_t seed = 3) {
    SweepReport report;
    std::mt19937_64 rng(seed);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const CochainSpace space = hochschild_space(alg, mod, n);
        auto check = [&](const Cochain& f, const std::string& what) {
            const bool zero = hochschild_coboundary(alg, mod, hochschild_coboundary(alg, mod, f)).is_zero();
            report.record(zero, true, "degree " + std::to_string(n) + " " + what);
        };
        for (std::size_t k = 0; k < space.dim(); ++k) check(space.element(k), "basis element " + std::to_string(k));
        for (std::size_t r = 0; r < random_count; ++r) {
            Cochain f = Cochain::zero(alg, mod, n);
            for (auto& v : f.values()) v = random_rational(rng);
            check(f, "random cochain " + std::to_string(r));
        }
    }
    return report;
}

/// su_{n+1,p}(d f) = 0 for every f in the super Harrison basis of degree n
/// and every p in 1..n.
inline SweepReport harrison_closure(const SuperAlgebra& alg, const SuperModule& mod, std::size_t min_degree,
                                    std::size_t max_degree) {
    SweepReport report;
    for (std::size_t n = min_degree; n <= max_degree; ++n) {
        const auto basis = harrison_basis(alg, mod, n);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Cochain df = hochschild_coboundary(alg, mod, basis[k]);
            const bool parity = is_parity_preserving(alg, mod, df);
            report.record(parity, true, "degree " + std::to_string(n) + " element " + std::to_string(k) +
                                            ": d f is not parity-preserving");
            for (std::size_t p = 1; p <= n; ++p) {
                const bool zero = super_shuffle_sum(alg, mod, df, p).is_zero();
                report.record(zero, true, "degree " + std::to_string(n) + " element " + std::to_string(k) +
                                              ": su_{" + std::to_string(n + 1) + "," + std::to_string(p) +
                                              "}(d f) != 0");
            }
        }
    }
    return report;
}

/// D_{n+1} D_n = 0 for both complexes, n = 0..max_degree.
inline SweepReport matrix_composition(const SuperAlgebra& alg, const SuperModule& mod, std::size_t max_degree,
                                      const Limits& limits = {}) {
    SweepReport report;
    for (auto kind : {ComplexKind::Hochschild, ComplexKind::SuperHarrison}) {
        std::vector<CochainSpace> spaces;
        for (std::size_t n = 0; n <= max_degree + 2; ++n) spaces.push_back(cochain_space(alg, mod, n, kind, limits));
        for (std::size_t n = 0; n <= max_degree; ++n) {
            const auto d0 = coboundary_matrix(alg, mod, spaces[n], spaces[n + 1]);
            const auto d1 = coboundary_matrix(alg, mod, spaces[n + 1], spaces[n + 2]);
            report.record((d1 * d0).is_zero(), true,
                          to_string(kind) + " D_" + std::to_string(n + 1) + " D_" + std::to_string(n) + " != 0");
        }
    }
    return report;
}

/// Degree-1 super Harrison cocycles coincide with the derivations.
inline SweepReport cocycles_are_derivations(const SuperAlgebra& alg, const SuperModule& mod) {
    SweepReport report;
    const auto h1 = cohomology(alg, mod, 1, ComplexKind::SuperHarrison);
    std::vector<Vector> flat;
    for (const auto& v : h1.cocycles.vectors()) flat.push_back(h1.space.from_coordinates(v).values());
    const auto z1 = SubspaceBasis::span(alg.dim() * mod.dim(), flat);
    const auto der = derivation_space(alg, mod);
    report.record(z1.dim() == der.dim(), true,
                  "dim Z^1 = " + std::to_string(z1.dim()) + " but dim Der = " + std::to_string(der.dim()));
    report.record(z1 == der, true, "Z^1 and Der span different subspaces");
    return report;
}

/// Super Harrison Z^n sits inside the Hochschild Z^n.
inline SweepReport harrison_cocycles_are_hochschild(const SuperAlgebra& alg, const SuperModule& mod,
                                                    std::size_t max_degree) {
    SweepReport report;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const auto sh = cohomology(alg, mod, n, ComplexKind::SuperHarrison);
        const auto hh = cohomology(alg, mod, n, ComplexKind::Hochschild);
        for (const auto& v : sh.cocycles.vectors())
            report.record(hh.is_cocycle(sh.space.from_coordinates(v)), true,
                          "a degree-" + std::to_string(n) + " super Harrison cocycle is not a Hochschild cocycle");
    }
    return report;
}

/// Representatives of H^n are cocycles and independent modulo B^n.
inline SweepReport representatives_independent(const CohomologyResult& r) {
    SweepReport report;
    std::vector<Vector> stacked = r.coboundaries.vectors();
    for (const auto& rep : r.representatives) {
        report.record(r.is_cocycle(rep), true, "a representative is not a cocycle");
        stacked.push_back(*r.space.coordinates(rep));
    }
    const auto span = SubspaceBasis::span(r.space.dim(), stacked);
    report.record(span.dim() == r.dim_B + r.dim_H, true, "representatives are dependent modulo coboundaries");
    return report;
}

/// For random cocycles psi and random parity-preserving g0, psi + d g0 and
/// psi are equivalent through a recovered g (checked as an isomorphism);
/// psi + c and psi are inequivalent for every nonzero class c.
inline SweepReport equivalence_round_trip(const SuperAlgebra& alg, const SuperModule& mod, std::size_t trials,
                                          std::uint64_t seed = 4) {
    SweepReport report;
    std::mt19937_64 rng(seed);
    const auto h2 = cohomology(alg, mod, 2, ComplexKind::SuperHarrison);
    std::vector<Cochain> cocycles;
    for (const auto& v : h2.cocycles.vectors()) cocycles.push_back(h2.space.from_coordinates(v));
    const auto ones = parity_basis(alg, mod, 1);
    const Cochain zero2 = Cochain::zero(alg, mod, 2);
    const Cochain zero1 = Cochain::zero(alg, mod, 1);
    for (std::size_t t = 0; t < trials; ++t) {
        const Cochain psi = random_combination(cocycles, zero2, rng);
        const Cochain g0 = random_combination(ones, zero1, rng);
        const Cochain shifted = psi + hochschild_coboundary(alg, mod, g0);
        const auto g = extension_equivalence(alg, mod, shifted, psi);
        const bool ok = g && hochschild_coboundary(alg, mod, *g) == hochschild_coboundary(alg, mod, g0) &&
                        is_extension_isomorphism(alg, mod, shifted, psi, *g);
        report.record(ok, true, "trial " + std::to_string(t) + ": cohomologous pair not recognised");
        for (std::size_t c = 0; c < h2.representatives.size(); ++c) {
            const Cochain other = psi + h2.representatives[c];
            report.record(!extension_equivalence(alg, mod, other, psi).has_value(), false,
                          "trial " + std::to_string(t) + ": distinct classes reported equivalent");
        }
    }
    return report;
}

struct NamedSweep {
    std::string name;
    SweepReport report;
};

/// Names accepted by run_suite.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"complex",    "closure",     "matrices",  "derivations",
                                                "containment", "deformation", "extension", "equivalence"};
    return names;
}

/// Runs one suite (or "all") on A with coefficients in its self-module.
inline std::vector<NamedSweep> run_suite(const SuperAlgebra& alg, const std::string& suite, std::size_t max_degree = 3,
                                         std::size_t budget = 200) {
    const SuperModule self = self_module(alg);
    const std::vector<std::pair<std::string, std::function<SweepReport()>>> suites{
        {"complex", [&] { return coboundary_squares_to_zero(alg, self, max_degree, 100); }},
        {"closure", [&] { return harrison_closure(alg, self, 0, max_degree); }},
        {"matrices", [&] { return matrix_composition(alg, self, max_degree > 0 ? max_degree - 1 : 0); }},
        {"derivations", [&] { return cocycles_are_derivations(alg, self); }},
        {"containment", [&] { return harrison_cocycles_are_hochschild(alg, self, max_degree > 0 ? max_degree - 1 : 0); }},
        {"deformation", [&] { return deformation_iff_cocycle(alg, budget); }},
        {"extension", [&] { return extension_valid_iff_cocycle(alg, self, budget); }},
        {"equivalence", [&] { return equivalence_round_trip(alg, self, 50); }},
    };
    std::vector<NamedSweep> out;
    bool known = suite == "all";
    for (const auto& [name, run] : suites) {
        if (suite != "all" && suite != name) continue;
        known = true;
        out.push_back({name, run()});
    }
    if (!known) throw ArgumentError("unknown suite \"" + suite + "\"");
    return out;
}

}  // namespace superharrison::properties

#endif  // SUPERHARRISON_PROPERTIES_HPP
