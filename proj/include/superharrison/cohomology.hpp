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

#ifndef SUPERHARRISON_COHOMOLOGY_HPP
#define SUPERHARRISON_COHOMOLOGY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "cochain.hpp"
#include "exactla.hpp"

namespace superharrison {

enum class ComplexKind { Hochschild, SuperHarrison };

inline std::string to_string(ComplexKind kind) {
    return kind == ComplexKind::Hochschild ? "hochschild" : "harrison";
}

/// Size ceilings for dense exact elimination.
struct Limits {
    std::size_t max_degree = 4;
    std::size_t max_cochain_dim = 20000;
};

namespace detail {

inline void check_limits(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n, const Limits& limits) {
    if (n > limits.max_degree)
        throw ResourceLimitError("degree " + std::to_string(n) + " exceeds the ceiling " +
                                 std::to_string(limits.max_degree));
    // Flat size of the degree-n cochains, which bounds every coordinate count.
    std::size_t size = mod.dim();
    for (std::size_t k = 0; k < n; ++k) {
        size *= alg.dim();
        if (size > limits.max_cochain_dim) break;
    }
    if (size > limits.max_cochain_dim)
        throw ResourceLimitError("degree-" + std::to_string(n) + " cochains need more than " +
                                 std::to_string(limits.max_cochain_dim) + " coordinates");
}

}  // namespace detail

/// The degree-n cochain space of the chosen complex.
inline CochainSpace cochain_space(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n, ComplexKind kind,
                                  const Limits& limits = {}) {
    detail::check_limits(alg, mod, n, limits);
    return kind == ComplexKind::Hochschild ? hochschild_space(alg, mod, n) : harrison_space(alg, mod, n);
}

/// Matrix of d between two cochain spaces in their basis coordinates.
/// Throws InternalError if d of a domain basis element leaves the codomain.
inline RationalMatrix coboundary_matrix(const SuperAlgebra& alg, const SuperModule& mod, const CochainSpace& domain,
                                        const CochainSpace& codomain) {
    if (codomain.degree != domain.degree + 1) throw ArgumentError("codomain degree must be domain degree + 1");
    RationalMatrix m(codomain.dim(), domain.dim());
    for (std::size_t c = 0; c < domain.dim(); ++c) {
        const Cochain image = hochschild_coboundary(alg, mod, domain.element(c));
        const auto coords = codomain.coordinates(image);
        if (!coords)
            throw InternalError("coboundary of degree-" + std::to_string(domain.degree) + " basis element " +
                                std::to_string(c) + " is not a cochain of the codomain complex");
        for (std::size_t r = 0; r < codomain.dim(); ++r) m(r, c) = (*coords)[r];
    }
    return m;
}

/// Matrix of d from degree n to degree n + 1 of the chosen complex.
inline RationalMatrix coboundary_matrix(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n,
                                        ComplexKind kind, const Limits& limits = {}) {
    detail::check_limits(alg, mod, n + 1, limits);
    return coboundary_matrix(alg, mod, cochain_space(alg, mod, n, kind, limits),
                             cochain_space(alg, mod, n + 1, kind, limits));
}

struct CohomologyResult {
    std::size_t degree = 0;
    ComplexKind kind = ComplexKind::SuperHarrison;
    std::size_t dim_cochain = 0;
    std::size_t dim_Z = 0;
    std::size_t dim_B = 0;
    std::size_t dim_H = 0;
    std::vector<Cochain> representatives;

    /// The degree-n cochain space and Z, B inside it (in its coordinates).
    CochainSpace space;
    SubspaceBasis cocycles;
    SubspaceBasis coboundaries;

    /// True when f is a coboundary of the complex.
    bool is_coboundary(const Cochain& f) const {
        const auto coords = space.coordinates(f);
        return coords && coboundaries.contains(*coords);
    }

    bool is_cocycle(const Cochain& f) const {
        const auto coords = space.coordinates(f);
        return coords && cocycles.contains(*coords);
    }
};

/// Z^n, B^n and H^n = Z^n / B^n with echelon-normalized representatives.
inline CohomologyResult cohomology(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n, ComplexKind kind,
                                   const Limits& limits = {}) {
    detail::check_limits(alg, mod, n + 1, limits);
    CohomologyResult r;
    r.degree = n;
    r.kind = kind;
    r.space = cochain_space(alg, mod, n, kind, limits);
    const CochainSpace next = cochain_space(alg, mod, n + 1, kind, limits);
    r.dim_cochain = r.space.dim();
    r.cocycles = kernel_basis(coboundary_matrix(alg, mod, r.space, next));
    if (n == 0) {
        r.coboundaries = SubspaceBasis(r.space.dim());
    } else {
        const CochainSpace prev = cochain_space(alg, mod, n - 1, kind, limits);
        r.coboundaries = image_basis(coboundary_matrix(alg, mod, prev, r.space));
    }
    if (!r.cocycles.contains(r.coboundaries))
        throw InternalError("coboundaries are not cocycles in degree " + std::to_string(n));
    const SubspaceBasis reps = quotient_representatives(r.cocycles, r.coboundaries);
    r.dim_Z = r.cocycles.dim();
    r.dim_B = r.coboundaries.dim();
    r.dim_H = reps.dim();
    for (const auto& v : reps.vectors()) r.representatives.push_back(r.space.from_coordinates(v));
    return r;
}

/// Parity-preserving f : A -> M with f(e_i e_j) = e_i . f(e_j) + f(e_i) . e_j
/// for all basis pairs, the right action being the induced one. Assembled
/// directly from the structure constants, in flat coordinates (j, l).
inline SubspaceBasis derivation_space(const SuperAlgebra& alg, const SuperModule& mod) {
    if (mod.algebra_dim() != alg.dim()) throw ArgumentError("module is defined over a different algebra");
    const std::size_t da = alg.dim();
    const std::size_t dm = mod.dim();
    const std::size_t unknowns = da * dm;
    auto var = [dm](std::size_t j, std::size_t l) { return j * dm + l; };
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t out = 0; out < dm; ++out) {
                Vector row(unknowns, Rational(0));
                for (std::size_t k = 0; k < da; ++k) row[var(k, out)] += alg.c(i, j, k);
                for (std::size_t l = 0; l < dm; ++l) {
                    row[var(j, l)] -= mod.a(i, l, out);
                    row[var(i, l)] -= koszul_sign(alg.parity(j), mod.parity(l)) * mod.a(j, l, out);
                }
                if (!is_zero(row)) rows.push_back(std::move(row));
            }
    for (std::size_t j = 0; j < da; ++j)
        for (std::size_t l = 0; l < dm; ++l)
            if (alg.parity(j) != mod.parity(l)) rows.push_back(unit_vector(unknowns, var(j, l)));
    return kernel_basis(RationalMatrix::from_rows(rows, unknowns));
}

}  // namespace superharrison

#endif  // SUPERHARRISON_COHOMOLOGY_HPP
