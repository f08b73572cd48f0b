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

#ifndef SUPERHARRISON_ALGEBRA_HPP
#define SUPERHARRISON_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "rational.hpp"

namespace superharrison {

/// One term c * e_index of a product expansion.
struct Term {
    std::size_t index = 0;
    Rational coeff;
};

/// e_i * e_j = sum of `terms`; pairs that are never listed multiply to zero.
struct ProductRule {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<Term> terms;
};

inline int koszul_sign(Parity a, Parity b) { return (a & b) ? -1 : 1; }

/// Finite-dimensional Z/2-graded algebra given by structure constants
/// e_i * e_j = sum_k c(i, j, k) e_k. Construction only checks shapes; the
/// algebra identities are checked by validate_superalgebra.
class SuperAlgebra {
   public:
    SuperAlgebra() = default;

    SuperAlgebra(std::vector<std::string> basis_names, ParityVector parity, std::vector<Rational> structure,
                 std::optional<std::size_t> unit = std::nullopt)
        : names_(std::move(basis_names)), parity_(std::move(parity)), structure_(std::move(structure)), unit_(unit) {
        dim_ = parity_.size();
        if (names_.size() != dim_)
            throw ArgumentError("basis has " + std::to_string(names_.size()) + " names but " + std::to_string(dim_) +
                                " parities");
        check_parities(parity_);
        if (structure_.size() != dim_ * dim_ * dim_)
            throw ArgumentError("structure tensor must have dim^3 = " + std::to_string(dim_ * dim_ * dim_) +
                                " entries, got " + std::to_string(structure_.size()));
        if (unit_ && *unit_ >= dim_) throw ArgumentError("unit index out of range");
        index_products();
    }

    static SuperAlgebra from_rules(std::vector<std::string> basis_names, ParityVector parity,
                                   const std::vector<ProductRule>& rules,
                                   std::optional<std::size_t> unit = std::nullopt) {
        const std::size_t d = parity.size();
        std::vector<Rational> s(d * d * d, Rational(0));
        for (const auto& rule : rules) {
            if (rule.i >= d || rule.j >= d) throw ArgumentError("product index out of range");
            for (const auto& t : rule.terms) {
                if (t.index >= d) throw ArgumentError("product term index out of range");
                s[(rule.i * d + rule.j) * d + t.index] += t.coeff;
            }
        }
        return SuperAlgebra(std::move(basis_names), std::move(parity), std::move(s), unit);
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }
    const ParityVector& parity() const noexcept { return parity_; }
    Parity parity(std::size_t i) const { return parity_.at(i); }
    const std::optional<std::size_t>& unit_index() const noexcept { return unit_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Rational>& structure() const noexcept { return structure_; }

    /// Nonzero terms of e_i * e_j.
    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }

    std::vector<ProductRule> rules() const {
        std::vector<ProductRule> out;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (!product(i, j).empty()) out.push_back(ProductRule{i, j, product(i, j)});
        return out;
    }

   private:
    void index_products() {
        products_.assign(dim_ * dim_, {});
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (sgn(c(i, j, k)) != 0) products_[i * dim_ + j].push_back(Term{k, c(i, j, k)});
    }

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    ParityVector parity_;
    std::vector<Rational> structure_;
    std::optional<std::size_t> unit_;
    std::vector<std::vector<Term>> products_;
};

/// Z/2-graded left module: e_i . m_k = sum_l a(i, k, l) m_l.
class SuperModule {
   public:
    SuperModule() = default;

    SuperModule(std::size_t algebra_dim, std::vector<std::string> basis_names, ParityVector parity,
                std::vector<Rational> action)
        : algebra_dim_(algebra_dim), names_(std::move(basis_names)), parity_(std::move(parity)), action_(std::move(action)) {
        dim_ = parity_.size();
        if (names_.size() != dim_) throw ArgumentError("module basis names and parities differ in length");
        check_parities(parity_);
        if (action_.size() != algebra_dim_ * dim_ * dim_)
            throw ArgumentError("action tensor must have dimA * dimM^2 = " +
                                std::to_string(algebra_dim_ * dim_ * dim_) + " entries, got " +
                                std::to_string(action_.size()));
        terms_.assign(algebra_dim_ * dim_, {});
        for (std::size_t i = 0; i < algebra_dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k)
                for (std::size_t l = 0; l < dim_; ++l)
                    if (sgn(a(i, k, l)) != 0) terms_[i * dim_ + k].push_back(Term{l, a(i, k, l)});
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t algebra_dim() const noexcept { return algebra_dim_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }
    const ParityVector& parity() const noexcept { return parity_; }
    Parity parity(std::size_t l) const { return parity_.at(l); }

    const Rational& a(std::size_t i, std::size_t k, std::size_t l) const { return action_[(i * dim_ + k) * dim_ + l]; }
    const std::vector<Rational>& action() const noexcept { return action_; }

    /// Nonzero terms of e_i . m_k.
    const std::vector<Term>& act(std::size_t i, std::size_t k) const { return terms_[i * dim_ + k]; }

   private:
    std::size_t algebra_dim_ = 0;
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    ParityVector parity_;
    std::vector<Rational> action_;
    std::vector<std::vector<Term>> terms_;
};

struct Violation {
    std::string kind;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    bool has(const std::string& kind) const {
        for (const auto& v : violations)
            if (v.kind == kind) return true;
        return false;
    }

    const Violation* first(const std::string& kind) const {
        for (const auto& v : violations)
            if (v.kind == kind) return &v;
        return nullptr;
    }
};

namespace detail {

inline std::string tuple_text(std::initializer_list<std::size_t> idx) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto i : idx) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace detail

/// Lists every violated identity (parity, supercommutativity, associativity,
/// unit) with the basis indices that witness it.
inline ValidationReport validate_superalgebra(const SuperAlgebra& alg) {
    ValidationReport report;
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : alg.product(i, j))
                if (alg.parity(t.index) != ((alg.parity(i) + alg.parity(j)) & 1U))
                    report.violations.push_back({"parity", {i, j, t.index},
                                                 "e_i*e_j has a component outside degree |i|+|j| at " +
                                                     detail::tuple_text({i, j, t.index})});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const int s = koszul_sign(alg.parity(i), alg.parity(j));
            for (std::size_t k = 0; k < d; ++k)
                if (alg.c(j, i, k) != s * alg.c(i, j, k)) {
                    report.violations.push_back(
                        {"supercommutativity", {i, j},
                         "e_j*e_i != (-1)^{|i||j|} e_i*e_j at " + detail::tuple_text({i, j}) + " component " +
                             std::to_string(k)});
                    break;
                }
        }
    Vector lhs(d), rhs(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                for (auto& x : lhs) x = 0;
                for (auto& x : rhs) x = 0;
                for (const auto& ij : alg.product(i, j))
                    for (const auto& t : alg.product(ij.index, k)) lhs[t.index] += ij.coeff * t.coeff;
                for (const auto& jk : alg.product(j, k))
                    for (const auto& t : alg.product(i, jk.index)) rhs[t.index] += jk.coeff * t.coeff;
                if (lhs != rhs)
                    report.violations.push_back({"associativity", {i, j, k},
                                                 "(e_i e_j) e_k != e_i (e_j e_k) at " + detail::tuple_text({i, j, k})});
            }
    if (auto u = alg.unit_index()) {
        if (alg.parity(*u) != 0) report.violations.push_back({"unit", {*u}, "unit element is odd"});
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                const Rational expect = (i == k) ? 1 : 0;
                if (alg.c(*u, i, k) != expect || alg.c(i, *u, k) != expect) {
                    report.violations.push_back({"unit", {*u, i}, "unit does not act as identity on basis element " +
                                                                      std::to_string(i)});
                    break;
                }
            }
    }
    return report;
}

inline ValidationReport validate_supermodule(const SuperAlgebra& alg, const SuperModule& mod) {
    if (mod.algebra_dim() != alg.dim())
        throw ArgumentError("module is defined over an algebra of dimension " + std::to_string(mod.algebra_dim()) +
                            ", not " + std::to_string(alg.dim()));
    ValidationReport report;
    const std::size_t d = alg.dim();
    const std::size_t m = mod.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (const auto& t : mod.act(i, k))
                if (mod.parity(t.index) != ((alg.parity(i) + mod.parity(k)) & 1U))
                    report.violations.push_back({"parity", {i, k, t.index},
                                                 "e_i . m_k has a component outside degree |i|+|k| at " +
                                                     detail::tuple_text({i, k, t.index})});
    Vector lhs(m), rhs(m);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                for (auto& x : lhs) x = 0;
                for (auto& x : rhs) x = 0;
                for (const auto& ij : alg.product(i, j))
                    for (const auto& t : mod.act(ij.index, k)) lhs[t.index] += ij.coeff * t.coeff;
                for (const auto& jk : mod.act(j, k))
                    for (const auto& t : mod.act(i, jk.index)) rhs[t.index] += jk.coeff * t.coeff;
                if (lhs != rhs)
                    report.violations.push_back({"module_associativity", {i, j, k},
                                                 "(e_i e_j) . m_k != e_i . (e_j . m_k) at " +
                                                     detail::tuple_text({i, j, k})});
            }
    if (auto u = alg.unit_index()) {
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l)
                if (mod.a(*u, k, l) != ((k == l) ? 1 : 0)) {
                    report.violations.push_back({"unit", {*u, k}, "unit does not fix module basis element " +
                                                                      std::to_string(k)});
                    break;
                }
    }
    return report;
}

/// Bilinear product of coefficient vectors.
inline Vector multiply(const SuperAlgebra& alg, const Vector& x, const Vector& y) {
    if (x.size() != alg.dim() || y.size() != alg.dim())
        throw ArgumentError("vector length does not match algebra dimension " + std::to_string(alg.dim()));
    Vector out(alg.dim(), Rational(0));
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (sgn(y[j]) == 0) continue;
            for (const auto& t : alg.product(i, j)) out[t.index] += x[i] * y[j] * t.coeff;
        }
    }
    return out;
}

/// Left action a . m, bilinear.
inline Vector left_action(const SuperModule& mod, const Vector& a, const Vector& m) {
    if (a.size() != mod.algebra_dim() || m.size() != mod.dim()) throw ArgumentError("vector length mismatch");
    Vector out(mod.dim(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (sgn(m[k]) == 0) continue;
            for (const auto& t : mod.act(i, k)) out[t.index] += a[i] * m[k] * t.coeff;
        }
    }
    return out;
}

/// Induced right action m . a = (-1)^{|a||m|} a . m, applied to each pair of
/// homogeneous basis components and extended bilinearly.
inline Vector right_action(const SuperAlgebra& alg, const SuperModule& mod, const Vector& m, const Vector& a) {
    if (a.size() != alg.dim() || m.size() != mod.dim()) throw ArgumentError("vector length mismatch");
    Vector out(mod.dim(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (sgn(m[k]) == 0) continue;
            const int s = koszul_sign(alg.parity(i), mod.parity(k));
            for (const auto& t : mod.act(i, k)) out[t.index] += s * a[i] * m[k] * t.coeff;
        }
    }
    return out;
}

/// Exterior algebra on k odd generators. Basis: monomials t_S indexed by the
/// bitmask of S, so t_S t_T = 0 when S and T meet and otherwise carries the
/// sign of the merge.
inline SuperAlgebra exterior_algebra(std::size_t k) {
    if (k > 6) throw ArgumentError("exterior_algebra: k = " + std::to_string(k) + " exceeds the supported maximum 6");
    const std::size_t d = std::size_t{1} << k;
    std::vector<std::string> names;
    ParityVector parity;
    for (std::size_t s = 0; s < d; ++s) {
        std::string name;
        unsigned bits = 0;
        for (std::size_t g = 0; g < k; ++g)
            if (s & (std::size_t{1} << g)) {
                name += "t" + std::to_string(g + 1);
                ++bits;
            }
        names.push_back(name.empty() ? "1" : name);
        parity.push_back(static_cast<Parity>(bits & 1U));
    }
    std::vector<ProductRule> rules;
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) {
            if (s & t) continue;
            unsigned swaps = 0;
            for (std::size_t a = 0; a < k; ++a)
                if (s & (std::size_t{1} << a))
                    for (std::size_t b = 0; b < a; ++b)
                        if (t & (std::size_t{1} << b)) ++swaps;
            rules.push_back({s, t, {Term{s | t, Rational((swaps & 1U) ? -1 : 1)}}});
        }
    return SuperAlgebra::from_rules(std::move(names), std::move(parity), rules, 0);
}

/// Q[x]/(x^n), purely even, basis 1, x, ..., x^{n-1}.
inline SuperAlgebra truncated_polynomial(std::size_t n) {
    if (n < 1) throw ArgumentError("truncated_polynomial: n must be at least 1");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    std::vector<ProductRule> rules;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) rules.push_back({i, j, {Term{i + j, Rational(1)}}});
    return SuperAlgebra::from_rules(std::move(names), ParityVector(n, 0), rules, 0);
}

inline SuperAlgebra ground_field() { return truncated_polynomial(1); }

/// Graded tensor product: (a x b)(a' x b') = (-1)^{|b||a'|} (aa') x (bb').
/// Basis element (i, j) sits at index i * dim(B) + j.
inline SuperAlgebra tensor_product(const SuperAlgebra& a, const SuperAlgebra& b) {
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> names;
    ParityVector parity;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            const auto& an = a.basis_names()[i];
            const auto& bn = b.basis_names()[j];
            names.push_back(an == "1" ? bn : (bn == "1" ? an : an + "*" + bn));
            parity.push_back(static_cast<Parity>((a.parity(i) + b.parity(j)) & 1U));
        }
    std::vector<ProductRule> rules;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t i2 = 0; i2 < da; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2) {
                    const int s = koszul_sign(b.parity(j), a.parity(i2));
                    ProductRule rule{i * db + j, i2 * db + j2, {}};
                    for (const auto& ta : a.product(i, i2))
                        for (const auto& tb : b.product(j, j2))
                            rule.terms.push_back(Term{ta.index * db + tb.index, s * ta.coeff * tb.coeff});
                    if (!rule.terms.empty()) rules.push_back(std::move(rule));
                }
    std::optional<std::size_t> unit;
    if (a.unit_index() && b.unit_index()) unit = *a.unit_index() * db + *b.unit_index();
    auto out = SuperAlgebra::from_rules(std::move(names), std::move(parity), rules, unit);
    if (validate_superalgebra(a).ok() && validate_superalgebra(b).ok() && !validate_superalgebra(out).ok())
        throw InternalError("tensor product of valid superalgebras failed validation");
    return out;
}

/// A as a module over itself.
inline SuperModule self_module(const SuperAlgebra& alg) {
    return SuperModule(alg.dim(), alg.basis_names(), alg.parity(), alg.structure());
}

/// c0 + c1 t in Q[t]/(t^2).
struct DualNumber {
    Rational c0;
    Rational c1;

    friend DualNumber operator+(const DualNumber& x, const DualNumber& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
    friend DualNumber operator-(const DualNumber& x, const DualNumber& y) { return {x.c0 - y.c0, x.c1 - y.c1}; }
    friend DualNumber operator*(const DualNumber& x, const DualNumber& y) {
        return {x.c0 * y.c0, x.c0 * y.c1 + x.c1 * y.c0};
    }
    DualNumber& operator+=(const DualNumber& y) {
        c0 += y.c0;
        c1 += y.c1;
        return *this;
    }
    friend bool operator==(const DualNumber&, const DualNumber&) = default;
};

struct NamedAlgebra {
    std::string name;
    SuperAlgebra algebra;
};

/// The reference corpus: exterior algebras on one and two generators,
/// Q[x]/(x^2), Q[x]/(x^3) and Q[x]/(x^2) tensor an exterior generator.
inline std::vector<NamedAlgebra> standard_corpus() {
    return {
        {"exterior:1", exterior_algebra(1)},
        {"exterior:2", exterior_algebra(2)},
        {"truncpoly:2", truncated_polynomial(2)},
        {"truncpoly:3", truncated_polynomial(3)},
        {"tensor:truncpoly:2:exterior:1", tensor_product(truncated_polynomial(2), exterior_algebra(1))},
    };
}

}  // namespace superharrison

#endif  // SUPERHARRISON_ALGEBRA_HPP
