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

#ifndef SUPERHARRISON_DEFORMATION_HPP
#define SUPERHARRISON_DEFORMATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cochain.hpp"
#include "cohomology.hpp"
#include "exactla.hpp"

namespace superharrison {

/// Outcome of checking m_t(a, b) = ab + t psi(a, b) against the algebra
/// axioms modulo t^2. Witnesses are basis indices.
struct DeformationReport {
    bool associative = true;
    std::vector<std::size_t> associativity_witness;
    bool supercommutative = true;
    std::vector<std::size_t> supercommutativity_witness;
    bool parity_ok = true;
    std::vector<std::size_t> parity_witness;
    std::vector<std::string> reasons;

    bool valid() const noexcept { return associative && supercommutative && parity_ok; }
};

namespace detail {

inline void check_self_two_cochain(const SuperAlgebra& alg, const Cochain& psi) {
    if (psi.degree() != 2) throw ArgumentError("psi must be a 2-cochain, got degree " + std::to_string(psi.degree()));
    if (psi.source_dim() != alg.dim() || psi.target_dim() != alg.dim())
        throw ArgumentError("psi must map A (x) A to A for this algebra");
}

inline std::string indices_text(const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
    return s + ")";
}

}  // namespace detail

/// Builds m_t over Q[t]/(t^2) and checks associativity and
/// supercommutativity on every basis triple/pair, and the parity of psi.
/// Only the first witness of each failure is recorded.
inline DeformationReport first_order_deformation_check(const SuperAlgebra& alg, const Cochain& psi) {
    detail::check_self_two_cochain(alg, psi);
    const std::size_t d = alg.dim();
    std::vector<std::vector<DualNumber>> mt(d * d, std::vector<DualNumber>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) mt[i * d + j][k] = DualNumber{alg.c(i, j, k), psi.at({i, j}, k)};
    auto times = [&](const std::vector<DualNumber>& x, std::size_t k) {  // x * e_k
        std::vector<DualNumber> out(d);
        for (std::size_t m = 0; m < d; ++m) {
            if (x[m] == DualNumber{}) continue;
            for (std::size_t r = 0; r < d; ++r) out[r] += x[m] * mt[m * d + k][r];
        }
        return out;
    };
    auto times_left = [&](std::size_t i, const std::vector<DualNumber>& x) {  // e_i * x
        std::vector<DualNumber> out(d);
        for (std::size_t m = 0; m < d; ++m) {
            if (x[m] == DualNumber{}) continue;
            for (std::size_t r = 0; r < d; ++r) out[r] += x[m] * mt[i * d + m][r];
        }
        return out;
    };
    DeformationReport rep;
    for (std::size_t i = 0; i < d && rep.parity_ok; ++i)
        for (std::size_t j = 0; j < d && rep.parity_ok; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (sgn(psi.at({i, j}, k)) != 0 && alg.parity(k) != ((alg.parity(i) + alg.parity(j)) & 1U)) {
                    rep.parity_ok = false;
                    rep.parity_witness = {i, j, k};
                    rep.reasons.push_back("psi is not parity-preserving at " + detail::indices_text({i, j, k}));
                    break;
                }
    for (std::size_t i = 0; i < d && rep.supercommutative; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const int s = koszul_sign(alg.parity(i), alg.parity(j));
            bool same = true;
            for (std::size_t k = 0; k < d; ++k) {
                const DualNumber& ab = mt[i * d + j][k];
                const DualNumber& ba = mt[j * d + i][k];
                if (ba.c0 != s * ab.c0 || ba.c1 != s * ab.c1) same = false;
            }
            if (!same) {
                rep.supercommutative = false;
                rep.supercommutativity_witness = {i, j};
                rep.reasons.push_back("m_t is not supercommutative mod t^2 at " + detail::indices_text({i, j}));
                break;
            }
        }
    for (std::size_t i = 0; i < d && rep.associative; ++i)
        for (std::size_t j = 0; j < d && rep.associative; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (times(mt[i * d + j], k) != times_left(i, mt[j * d + k])) {
                    rep.associative = false;
                    rep.associativity_witness = {i, j, k};
                    rep.reasons.push_back("m_t is not associative mod t^2 at " + detail::indices_text({i, j, k}));
                    break;
                }
            }
    return rep;
}

/// Summary of an exhaustive-plus-random equivalence sweep.
struct SweepReport {
    bool passed = true;
    std::size_t cases = 0;
    std::size_t positive_cases = 0;
    std::vector<std::string> counterexamples;

    void record(bool agree, bool positive, const std::string& what) {
        ++cases;
        if (positive) ++positive_cases;
        if (!agree) {
            passed = false;
            if (counterexamples.size() < 8) counterexamples.push_back(what);
        }
    }
};

/// Small random rationals with numerators in [-5, 5] and denominators in [1, 4].
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

/// Random combination of the given cochains (each used with probability 1/2).
inline Cochain random_combination(const std::vector<Cochain>& basis, const Cochain& zero, std::mt19937_64& rng) {
    Cochain out = zero;
    std::bernoulli_distribution use(0.5);
    for (const auto& b : basis)
        if (use(rng)) out += random_rational(rng) * b;
    return out;
}

namespace detail {

inline std::string cochain_text(const Cochain& f) {
    std::string s = "{";
    bool first = true;
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
        if (sgn(f[pos]) == 0) continue;
        const auto args = f.decode_tuple(pos / f.target_dim());
        s += (first ? "" : ", ") + indices_text(args) + "->" + std::to_string(pos % f.target_dim()) + ":" +
             to_string(f[pos]);
        first = false;
    }
    return s + "}";
}

/// The test cochains for a degree-2 sweep: the whole parity basis, then
/// `budget` random cochains cycling through three families (random parity
/// combinations, random super Harrison 2-cocycles, and unrestricted random
/// Hochschild 2-cochains when `allow_parity_violations`).
inline std::vector<Cochain> sweep_cochains(const SuperAlgebra& alg, const SuperModule& mod, std::size_t budget,
                                           std::uint64_t seed, bool allow_parity_violations) {
    std::vector<Cochain> out = parity_basis(alg, mod, 2);
    std::mt19937_64 rng(seed);
    const Cochain zero = Cochain::zero(alg, mod, 2);
    const auto parity = out;
    const auto z2 = cohomology(alg, mod, 2, ComplexKind::SuperHarrison);
    std::vector<Cochain> cocycles;
    for (const auto& v : z2.cocycles.vectors()) cocycles.push_back(z2.space.from_coordinates(v));
    const auto full = hochschild_space(alg, mod, 2).basis();
    const std::size_t families = allow_parity_violations ? 3 : 2;
    for (std::size_t r = 0; r < budget; ++r) {
        switch (r % families) {
            case 0: out.push_back(random_combination(parity, zero, rng)); break;
            case 1: out.push_back(random_combination(cocycles, zero, rng)); break;
            default: out.push_back(random_combination(full, zero, rng)); break;
        }
    }
    return out;
}

}  // namespace detail

/// For each swept psi: the deformation check accepts psi exactly when
/// d psi = 0, psi is graded symmetric (su_{2,1} psi = 0) and psi is
/// parity-preserving. Each of the three conditions is also compared with
/// the matching component of the deformation verdict.
inline SweepReport deformation_iff_cocycle(const SuperAlgebra& alg, std::size_t budget, std::uint64_t seed = 1) {
    const SuperModule self = self_module(alg);
    SweepReport report;
    for (const auto& psi : detail::sweep_cochains(alg, self, budget, seed, true)) {
        const auto rep = first_order_deformation_check(alg, psi);
        const bool closed = hochschild_coboundary(alg, self, psi).is_zero();
        const bool symmetric = super_shuffle_sum(alg, self, psi, 1).is_zero();
        const bool parity = is_parity_preserving(alg, self, psi);
        const bool agree = rep.valid() == (closed && symmetric && parity) && rep.associative == closed &&
                           rep.supercommutative == symmetric && rep.parity_ok == parity;
        report.record(agree, rep.valid(), "psi = " + detail::cochain_text(psi));
    }
    return report;
}

/// Lambda = A (+) M with (a, m)(b, n) = (ab, a.n + m.b + psi(a, b)).
/// Indices 0..dimA-1 of Lambda are A, the rest are the copy of M.
struct ExtensionResult {
    SuperAlgebra algebra;
    std::vector<std::size_t> projection;  // Lambda index -> A index (A part only)
    std::vector<std::size_t> inclusion;   // M index -> Lambda index
};

/// Structure constants of the square-zero extension defined by psi. The
/// result is not validated and carries no unit.
inline ExtensionResult square_zero_extension(const SuperAlgebra& alg, const SuperModule& mod, const Cochain& psi) {
    detail::check_shape(alg, mod, psi);
    if (psi.degree() != 2) throw ArgumentError("psi must be a 2-cochain");
    const std::size_t da = alg.dim();
    const std::size_t dm = mod.dim();
    std::vector<std::string> names = alg.basis_names();
    ParityVector parity = alg.parity();
    for (std::size_t l = 0; l < dm; ++l) {
        names.push_back("m(" + mod.basis_names()[l] + ")");
        parity.push_back(mod.parity(l));
    }
    std::vector<ProductRule> rules;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            ProductRule r{i, j, alg.product(i, j)};
            for (std::size_t l = 0; l < dm; ++l)
                if (sgn(psi.at({i, j}, l)) != 0) r.terms.push_back(Term{da + l, psi.at({i, j}, l)});
            if (!r.terms.empty()) rules.push_back(std::move(r));
        }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t l = 0; l < dm; ++l) {
            ProductRule left{i, da + l, {}};
            ProductRule right{da + l, i, {}};
            const int s = koszul_sign(alg.parity(i), mod.parity(l));
            for (const auto& t : mod.act(i, l)) {
                left.terms.push_back(Term{da + t.index, t.coeff});
                right.terms.push_back(Term{da + t.index, s * t.coeff});
            }
            if (!left.terms.empty()) rules.push_back(std::move(left));
            if (!right.terms.empty()) rules.push_back(std::move(right));
        }
    ExtensionResult out{SuperAlgebra::from_rules(std::move(names), std::move(parity), rules), {}, {}};
    for (std::size_t i = 0; i < da; ++i) out.projection.push_back(i);
    for (std::size_t l = 0; l < dm; ++l) out.inclusion.push_back(da + l);
    return out;
}

/// For each swept parity-preserving psi: the extension validates exactly
/// when psi is a super Harrison 2-cocycle; associativity of Lambda is
/// compared with d psi = 0 and supercommutativity with graded symmetry.
inline SweepReport extension_valid_iff_cocycle(const SuperAlgebra& alg, const SuperModule& mod, std::size_t budget,
                                               std::uint64_t seed = 2) {
    SweepReport report;
    const auto z2 = cohomology(alg, mod, 2, ComplexKind::SuperHarrison);
    for (const auto& psi : detail::sweep_cochains(alg, mod, budget, seed, false)) {
        const auto v = validate_superalgebra(square_zero_extension(alg, mod, psi).algebra);
        const bool closed = hochschild_coboundary(alg, mod, psi).is_zero();
        const bool symmetric = super_shuffle_sum(alg, mod, psi, 1).is_zero();
        const bool cocycle = z2.is_cocycle(psi);
        const bool agree = v.ok() == cocycle && !v.has("associativity") == closed &&
                           !v.has("supercommutativity") == symmetric && !v.has("parity");
        report.record(agree, v.ok(), "psi = " + detail::cochain_text(psi));
    }
    return report;
}

/// A parity-preserving g : A -> M with psi1 - psi2 = d g, which makes
/// h(a, m) = (a, m + g(a)) an isomorphism from the psi1 extension to the psi2
/// extension; nullopt when the classes differ. Found by one linear solve.
inline std::optional<Cochain> extension_equivalence(const SuperAlgebra& alg, const SuperModule& mod,
                                                    const Cochain& psi1, const Cochain& psi2) {
    for (const Cochain* psi : {&psi1, &psi2}) {
        detail::check_shape(alg, mod, *psi);
        if (psi->degree() != 2) throw ArgumentError("extension_equivalence expects 2-cochains");
        if (!is_parity_preserving(alg, mod, *psi)) throw ArgumentError("psi is not parity-preserving");
        if (!hochschild_coboundary(alg, mod, *psi).is_zero()) throw ArgumentError("psi is not a cocycle");
    }
    const CochainSpace ones = parity_space(alg, mod, 1);
    std::vector<Vector> columns;
    for (std::size_t k = 0; k < ones.dim(); ++k)
        columns.push_back(hochschild_coboundary(alg, mod, ones.element(k)).values());
    const Cochain diff = psi1 - psi2;
    const auto m = RationalMatrix::from_columns(columns, diff.size());
    const auto x = solve(m, diff.values());
    if (!x) return std::nullopt;
    return ones.from_coordinates(*x);
}

/// Checks directly that h(a, m) = (a, m + g(a)) is multiplicative from the
/// psi1 extension to the psi2 extension on every pair of basis elements.
inline bool is_extension_isomorphism(const SuperAlgebra& alg, const SuperModule& mod, const Cochain& psi1,
                                     const Cochain& psi2, const Cochain& g) {
    if (g.degree() != 1) throw ArgumentError("g must be a 1-cochain");
    const SuperAlgebra l1 = square_zero_extension(alg, mod, psi1).algebra;
    const SuperAlgebra l2 = square_zero_extension(alg, mod, psi2).algebra;
    const std::size_t da = alg.dim();
    const std::size_t d = l1.dim();
    auto h = [&](const Vector& x) {
        Vector y = x;
        for (std::size_t i = 0; i < da; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t l = 0; l < mod.dim(); ++l) y[da + l] += x[i] * g.at({i}, l);
        }
        return y;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector ei = unit_vector(d, i), ej = unit_vector(d, j);
            if (h(multiply(l1, ei, ej)) != multiply(l2, h(ei), h(ej))) return false;
        }
    return true;
}

/// H^2 of A with coefficients in itself; every representative must pass the
/// first-order deformation check.
inline CohomologyResult deformation_classes(const SuperAlgebra& alg, const Limits& limits = {}) {
    const SuperModule self = self_module(alg);
    auto result = cohomology(alg, self, 2, ComplexKind::SuperHarrison, limits);
    for (const auto& rep : result.representatives)
        if (!first_order_deformation_check(alg, rep).valid())
            throw InternalError("an H^2 representative failed the first-order deformation check");
    return result;
}

}  // namespace superharrison

#endif  // SUPERHARRISON_DEFORMATION_HPP
