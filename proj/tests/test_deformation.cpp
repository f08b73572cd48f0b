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

#include <gtest/gtest.h>

#include "superharrison/deformation.hpp"
#include "superharrison/properties.hpp"

using namespace superharrison;

namespace {

Cochain psi_on(const SuperAlgebra& a, std::size_t i, std::size_t j, std::size_t k, const Rational& v = 1) {
    Cochain f = Cochain::zero(a, self_module(a), 2);
    f.at({i, j}, k) = v;
    return f;
}

}  // namespace

TEST(DeformationCheck, Examples) {
    const auto l1 = exterior_algebra(1);
    EXPECT_TRUE(first_order_deformation_check(l1, Cochain::zero(l1, self_module(l1), 2)).valid());

    const auto clifford = first_order_deformation_check(l1, psi_on(l1, 1, 1, 0));
    EXPECT_FALSE(clifford.valid());
    EXPECT_FALSE(clifford.supercommutative);
    EXPECT_EQ(clifford.supercommutativity_witness, (std::vector<std::size_t>{1, 1}));
    EXPECT_FALSE(clifford.reasons.empty());

    const auto t2 = truncated_polynomial(2);
    EXPECT_TRUE(first_order_deformation_check(t2, psi_on(t2, 1, 1, 0)).valid());
}

TEST(DeformationCheck, ParityAndAssociativityFailures) {
    const auto l1 = exterior_algebra(1);
    const auto odd_out = first_order_deformation_check(l1, psi_on(l1, 0, 0, 1));
    EXPECT_FALSE(odd_out.parity_ok);
    EXPECT_EQ(odd_out.parity_witness, (std::vector<std::size_t>{0, 0, 1}));
    // psi(1 (x) 1) = 1 is symmetric but breaks associativity: d psi(1,1,1) = 1 != 0.
    const auto t2 = truncated_polynomial(2);
    const auto r = first_order_deformation_check(t2, psi_on(t2, 0, 0, 0));
    EXPECT_TRUE(r.supercommutative);
    EXPECT_FALSE(r.associative);
    EXPECT_FALSE(hochschild_coboundary(t2, self_module(t2), psi_on(t2, 0, 0, 0)).is_zero());
    EXPECT_THROW(first_order_deformation_check(t2, Cochain::zero(t2, self_module(t2), 1)), ArgumentError);
}

TEST(DeformationCheck, IffCocycleSweeps) {
    for (const auto& [name, a] : standard_corpus()) {
        const auto r = deformation_iff_cocycle(a, 60);
        EXPECT_TRUE(r.passed) << name << (r.counterexamples.empty() ? "" : ": " + r.counterexamples[0]);
        EXPECT_EQ(r.cases, parity_basis(a, self_module(a), 2).size() + 60);
        EXPECT_GT(r.positive_cases, 0u) << name;
        EXPECT_LT(r.positive_cases, r.cases) << name;
    }
}

TEST(Extension, Examples) {
    const auto t2 = truncated_polynomial(2);
    const auto m = self_module(t2);
    const auto trivial = square_zero_extension(t2, m, Cochain::zero(t2, m, 2));
    EXPECT_EQ(trivial.algebra.dim(), 4u);
    EXPECT_TRUE(validate_superalgebra(trivial.algebra).ok());
    EXPECT_FALSE(trivial.algebra.unit_index().has_value());

    const auto ext = square_zero_extension(t2, m, psi_on(t2, 1, 1, 0));
    EXPECT_TRUE(validate_superalgebra(ext.algebra).ok());
    // x * x lands in the copy of M; the copy squares to zero.
    EXPECT_EQ(multiply(ext.algebra, unit_vector(4, 1), unit_vector(4, 1)), unit_vector(4, ext.inclusion[0]));
    for (auto i : ext.inclusion)
        for (auto j : ext.inclusion) EXPECT_TRUE(is_zero(multiply(ext.algebra, unit_vector(4, i), unit_vector(4, j))));

    const auto l1 = exterior_algebra(1);
    const auto bad = validate_superalgebra(square_zero_extension(l1, self_module(l1), psi_on(l1, 1, 1, 0)).algebra);
    ASSERT_TRUE(bad.has("supercommutativity"));
    EXPECT_EQ(bad.first("supercommutativity")->witness, (std::vector<std::size_t>{1, 1}));
}

TEST(Extension, PerturbedCocycleFailsWithTheSameWitness) {
    const auto t3 = truncated_polynomial(3);
    const auto m = self_module(t3);
    // A symmetric cocycle plus a non-symmetric unit vector on (1, 2).
    Cochain psi = psi_on(t3, 1, 1, 0);
    psi.at({1, 2}, 2) += 1;
    const auto def = first_order_deformation_check(t3, psi);
    const auto ext = validate_superalgebra(square_zero_extension(t3, m, psi).algebra);
    ASSERT_FALSE(def.supercommutative);
    ASSERT_TRUE(ext.has("supercommutativity"));
    EXPECT_EQ(def.supercommutativity_witness, ext.first("supercommutativity")->witness);
}

TEST(Extension, ValidIffCocycleSweeps) {
    for (const auto& [name, a] : standard_corpus()) {
        const auto r = extension_valid_iff_cocycle(a, self_module(a), 60);
        EXPECT_TRUE(r.passed) << name << (r.counterexamples.empty() ? "" : ": " + r.counterexamples[0]);
        EXPECT_GT(r.positive_cases, 0u) << name;
    }
}

TEST(Equivalence, Examples) {
    const auto t2 = truncated_polynomial(2);
    const auto m = self_module(t2);
    const Cochain psi = psi_on(t2, 1, 1, 0);
    const auto same = extension_equivalence(t2, m, psi, psi);
    ASSERT_TRUE(same.has_value());
    EXPECT_TRUE(same->is_zero());
    EXPECT_FALSE(extension_equivalence(t2, m, Cochain::zero(t2, m, 2), psi).has_value());
    EXPECT_THROW(extension_equivalence(t2, m, psi_on(t2, 0, 0, 0), psi), ArgumentError);
    EXPECT_THROW(extension_equivalence(t2, m, psi, Cochain::zero(t2, m, 1)), ArgumentError);
}

TEST(Equivalence, RecoversShiftByCoboundary) {
    const auto t3 = truncated_polynomial(3);
    const auto m = self_module(t3);
    Cochain g0 = Cochain::zero(t3, m, 1);
    g0.at({0}, 1) = Rational(2, 3);
    g0.at({2}, 0) = -5;
    Cochain psi = Cochain::zero(t3, m, 2);
    for (const auto& rep : deformation_classes(t3).representatives) psi += rep;
    ASSERT_TRUE(hochschild_coboundary(t3, m, psi).is_zero());
    const Cochain shifted = psi + hochschild_coboundary(t3, m, g0);
    const auto g = extension_equivalence(t3, m, shifted, psi);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(hochschild_coboundary(t3, m, *g - g0).is_zero());
    EXPECT_TRUE(is_extension_isomorphism(t3, m, shifted, psi, *g));
    EXPECT_FALSE(is_extension_isomorphism(t3, m, shifted, psi, Cochain::zero(t3, m, 1)));
}

TEST(Equivalence, RoundTripSweeps) {
    for (const auto& [name, a] : standard_corpus()) {
        const auto r = properties::equivalence_round_trip(a, self_module(a), 10);
        EXPECT_TRUE(r.passed) << name << (r.counterexamples.empty() ? "" : ": " + r.counterexamples[0]);
    }
}

TEST(DeformationClasses, Examples) {
    EXPECT_EQ(deformation_classes(exterior_algebra(1)).dim_H, 0u);
    EXPECT_EQ(deformation_classes(ground_field()).dim_H, 0u);
    const auto t2 = truncated_polynomial(2);
    const auto r = deformation_classes(t2);
    ASSERT_GE(r.dim_H, 1u);
    // Some representative pairs nontrivially with x (x) x -> 1.
    bool found = false;
    for (const auto& rep : r.representatives) found = found || sgn(rep.at({1, 1}, 0)) != 0;
    EXPECT_TRUE(found);
    for (const auto& rep : r.representatives) EXPECT_TRUE(first_order_deformation_check(t2, rep).valid());
}
