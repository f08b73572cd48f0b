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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact; runtime budgets are part of the verdict.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "superharrison/properties.hpp"

using namespace superharrison;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
    void absorb(const SweepReport& r, const std::string& what) {
        require(r.passed, what + (r.counterexamples.empty() ? "" : ": " + r.counterexamples.front()));
    }
};

Permutation cycle_to_front(std::size_t n) {
    std::vector<long long> img{static_cast<long long>(n + 1)};
    for (std::size_t m = 2; m <= n + 1; ++m) img.push_back(static_cast<long long>(m - 1));
    return Permutation::from_one_based(img);
}

Permutation cycle_to_back(std::size_t n) {
    std::vector<long long> img;
    for (std::size_t m = 1; m <= n; ++m) img.push_back(static_cast<long long>(m + 1));
    img.push_back(1);
    return Permutation::from_one_based(img);
}

bool purely_even(const SuperAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.parity(i) != 0) return false;
    return true;
}

Outcome shuffle_counts() {
    Outcome o;
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::size_t p = 1; p < n; ++p)
            o.require(enumerate_shuffles(n, p).size() == binomial(n, p),
                      "|J_" + std::to_string(p) + "(1.." + std::to_string(n) + ")| != binomial");
    const auto sigma = Permutation::from_one_based(std::vector<long long>{2, 4, 5, 1, 3});
    o.require(is_shuffle(sigma, 3), "(2,4,5,1,3) is not in J_3");
    o.require(invert(sigma) == Permutation::from_one_based(std::vector<long long>{4, 1, 5, 2, 3}), "wrong inverse");
    for (std::size_t p = 1; p <= 4; ++p) o.require(!is_shuffle(invert(sigma), p), "inverse is a shuffle");
    return o;
}

Outcome odd_subpermutation_closed_forms() {
    Outcome o;
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto sigma = cycle_to_front(n);
        const auto tau = cycle_to_back(n);
        for (unsigned mask = 0; mask < (1U << (n + 1)); ++mask) {
            ParityVector par(n + 1);
            for (std::size_t i = 0; i <= n; ++i) par[i] = static_cast<Parity>((mask >> i) & 1U);
            unsigned head = 0, tail = 0;
            for (std::size_t i = 0; i < n; ++i) head += par[i];
            for (std::size_t i = 1; i <= n; ++i) tail += par[i];
            o.require(sigma_o_sign(sigma, par) == ((head * par[n]) % 2 ? -1 : 1),
                      "front cycle closed form fails at n=" + std::to_string(n));
            o.require(sigma_o_sign(tau, par) == ((tail * par[0]) % 2 ? -1 : 1),
                      "back cycle closed form fails at n=" + std::to_string(n));
        }
    }
    const ParityVector par{0, 1, 1};
    o.require(compose(cycle_to_front(2), cycle_to_back(2)).is_identity(), "cycles are not inverse");
    o.require(sigma_o_sign(cycle_to_front(2), par) * sigma_o_sign(cycle_to_back(2), par) == -1,
              "non-multiplicativity counterexample does not give -1");
    return o;
}

Outcome coboundary_squares() {
    Outcome o;
    for (const auto& [name, a] : standard_corpus()) {
        const auto r = properties::coboundary_squares_to_zero(a, self_module(a), 3, 100);
        o.absorb(r, name);
    }
    return o;
}

Outcome harrison_closure() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& [name, a] : standard_corpus()) {
        const auto r = properties::harrison_closure(a, self_module(a), 2, 3);
        o.absorb(r, name);
        checked += r.cases;
    }
    o.require(checked > 0, "no cochains were checked");
    return o;
}

Outcome derivations() {
    Outcome o;
    for (const auto& [name, a] : standard_corpus()) o.absorb(properties::cocycles_are_derivations(a, self_module(a)), name);
    const auto l1 = exterior_algebra(1);
    const auto h1 = cohomology(l1, self_module(l1), 1, ComplexKind::SuperHarrison);
    o.require(h1.dim_H == 1, "dim H^1(Lambda(theta)) = " + std::to_string(h1.dim_H));
    if (h1.dim_H == 1) {
        Cochain euler = Cochain::zero(l1, self_module(l1), 1);
        euler.at({1}, 1) = 1;
        const Rational s = h1.representatives[0].at({1}, 1);
        o.require(sgn(s) != 0 && h1.representatives[0] == s * euler, "representative is not the Euler derivation");
    }
    return o;
}

Outcome deformations() {
    Outcome o;
    for (const auto& [name, a] : standard_corpus()) {
        const auto d = deformation_iff_cocycle(a, 200);
        o.absorb(d, name + " deformation sweep");
        o.require(d.positive_cases > 0 && d.positive_cases < d.cases, name + ": deformation sweep is one-sided");
        const auto e = extension_valid_iff_cocycle(a, self_module(a), 200);
        o.absorb(e, name + " extension sweep");
        o.require(e.positive_cases > 0 && e.positive_cases < e.cases, name + ": extension sweep is one-sided");
    }
    const auto l1 = exterior_algebra(1);
    o.require(cohomology(l1, self_module(l1), 2, ComplexKind::SuperHarrison).dim_H == 0, "H^2_SH(Lambda(theta)) != 0");
    o.require(cohomology(l1, self_module(l1), 2, ComplexKind::Hochschild).dim_H != 0, "Hochschild H^2(Lambda(theta)) = 0");
    const auto t2 = truncated_polynomial(2);
    const auto m = self_module(t2);
    const auto h2 = cohomology(t2, m, 2, ComplexKind::SuperHarrison);
    Cochain psi = Cochain::zero(t2, m, 2);
    psi.at({1, 1}, 0) = 1;
    o.require(h2.dim_H >= 1, "H^2_SH(Q[x]/(x^2)) = 0");
    o.require(h2.is_cocycle(psi) && !h2.is_coboundary(psi), "psi(x (x) x) = 1 is not a nontrivial class");
    o.require(first_order_deformation_check(t2, psi).valid(), "psi(x (x) x) = 1 is not a deformation");
    return o;
}

Outcome equivalence() {
    Outcome o;
    std::size_t distinct = 0;
    for (const auto& [name, a] : standard_corpus()) {
        const auto r = properties::equivalence_round_trip(a, self_module(a), 50);
        o.absorb(r, name);
        distinct += r.cases - r.positive_cases;
    }
    o.require(distinct > 0, "no inequivalent pairs were exercised");
    return o;
}

Outcome even_reduction() {
    Outcome o;
    std::size_t compared = 0;
    std::vector<NamedAlgebra> even;
    for (const auto& entry : standard_corpus())
        if (purely_even(entry.algebra)) even.push_back(entry);
    even.push_back({"field", ground_field()});
    for (const auto& [name, a] : even) {
        const auto m = self_module(a);
        for (std::size_t n = 0; n <= 3; ++n) {
            const auto classical = oracle::classical_harrison(a, m, n);
            const auto r = cohomology(a, m, n, ComplexKind::SuperHarrison);
            o.require(r.dim_cochain == classical.cochain, name + ": cochain dims differ in degree " + std::to_string(n));
            o.require(r.dim_H == classical.cohomology, name + ": cohomology dims differ in degree " + std::to_string(n));
            ++compared;
        }
    }
    o.require(compared > 0, "no purely even algebras in the corpus");
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "shuffle counts", 1, shuffle_counts},
        {2, "odd subpermutation closed forms", 1, odd_subpermutation_closed_forms},
        {3, "coboundary squares to zero", 120, coboundary_squares},
        {4, "super Harrison closure", 300, harrison_closure},
        {5, "H^1 equals derivations", 10, derivations},
        {6, "H^2 against deformations and extensions", 120, deformations},
        {7, "extension equivalence", 60, equivalence},
        {8, "even reduction to classical Harrison", 60, even_reduction},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_seconds) {
            o.ok = false;
            o.note = "over the time budget";
        }
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
             << std::setprecision(2) << secs << " s, budget " << c.budget_seconds << " s)";
        if (!o.ok) line << ": " << o.note;
        std::cout << line.str() << std::endl;
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
