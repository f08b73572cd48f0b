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

#include <random>

#include "superharrison/algebra.hpp"
#include "superharrison/deformation.hpp"

using namespace superharrison;

namespace {

Vector e(const SuperAlgebra& a, std::size_t i) { return unit_vector(a.dim(), i); }

SuperAlgebra without_unit(const SuperAlgebra& a) {
    return SuperAlgebra(a.basis_names(), a.parity(), a.structure(), std::nullopt);
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

}  // namespace

TEST(Generators, ExteriorAlgebras) {
    const auto k0 = exterior_algebra(0);
    EXPECT_EQ(k0.dim(), 1u);
    EXPECT_TRUE(validate_superalgebra(k0).ok());

    const auto k1 = exterior_algebra(1);
    EXPECT_EQ(k1.dim(), 2u);
    EXPECT_EQ(k1.parity(1), 1);
    EXPECT_TRUE(is_zero(multiply(k1, e(k1, 1), e(k1, 1))));
    EXPECT_TRUE(validate_superalgebra(k1).ok());

    const auto k2 = exterior_algebra(2);
    EXPECT_EQ(k2.dim(), 4u);
    EXPECT_EQ(multiply(k2, e(k2, 1), e(k2, 2)), e(k2, 3));
    Vector minus = e(k2, 3);
    minus[3] = -1;
    EXPECT_EQ(multiply(k2, e(k2, 2), e(k2, 1)), minus);
    EXPECT_EQ(k2.basis_names()[3], "t1t2");
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_TRUE(validate_superalgebra(exterior_algebra(k)).ok()) << k;
    EXPECT_THROW(exterior_algebra(7), ArgumentError);
}

TEST(Generators, TruncatedPolynomials) {
    EXPECT_EQ(truncated_polynomial(1).dim(), 1u);
    const auto t2 = truncated_polynomial(2);
    EXPECT_TRUE(is_zero(multiply(t2, e(t2, 1), e(t2, 1))));
    const auto t3 = truncated_polynomial(3);
    EXPECT_EQ(multiply(t3, e(t3, 1), e(t3, 1)), e(t3, 2));
    EXPECT_TRUE(is_zero(multiply(t3, e(t3, 2), e(t3, 1))));
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(validate_superalgebra(truncated_polynomial(n)).ok());
    EXPECT_THROW(truncated_polynomial(0), ArgumentError);
}

TEST(Multiply, UnitAndBilinearity) {
    std::mt19937_64 rng(5);
    for (const auto& [name, a] : standard_corpus()) {
        const Vector y = random_vector(rng, a.dim());
        EXPECT_EQ(multiply(a, e(a, *a.unit_index()), y), y) << name;
        const Vector x = random_vector(rng, a.dim()), x2 = random_vector(rng, a.dim());
        Vector sum(a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k) sum[k] = x[k] + x2[k];
        Vector expect = multiply(a, x, y);
        const Vector other = multiply(a, x2, y);
        for (std::size_t k = 0; k < a.dim(); ++k) expect[k] += other[k];
        EXPECT_EQ(multiply(a, sum, y), expect) << name;
    }
    EXPECT_THROW(multiply(exterior_algebra(1), Vector(3), Vector(2)), ArgumentError);
}

TEST(Validation, OddSquareBreaksSupercommutativity) {
    // theta odd with theta * theta = 1.
    const auto bad = SuperAlgebra::from_rules({"1", "t"}, {0, 1},
                                              {{0, 0, {{0, 1}}}, {0, 1, {{1, 1}}}, {1, 0, {{1, 1}}}, {1, 1, {{0, 1}}}}, 0);
    const auto r = validate_superalgebra(bad);
    ASSERT_TRUE(r.has("supercommutativity"));
    EXPECT_EQ(r.first("supercommutativity")->witness, (std::vector<std::size_t>{1, 1}));
    EXPECT_FALSE(r.has("parity"));
    EXPECT_FALSE(r.has("associativity"));
}

TEST(Validation, ReportsEachKindOfViolation) {
    // Parity: even * even landing on an odd element.
    auto parity_bad = SuperAlgebra::from_rules({"1", "t"}, {0, 1}, {{0, 0, {{1, 1}}}});
    EXPECT_TRUE(validate_superalgebra(parity_bad).has("parity"));
    // Associativity: x*x = y, x*y = 0, y*x = 0 but x*(x*x) vs (x*x)*x both 0; use x*x = x + y, x*y = y*x = y.
    auto assoc_bad = SuperAlgebra::from_rules({"x", "y"}, {0, 0}, {{0, 0, {{0, 1}, {1, 1}}}, {0, 1, {{1, 2}}}, {1, 0, {{1, 2}}}});
    const auto ra = validate_superalgebra(assoc_bad);
    EXPECT_TRUE(ra.has("associativity"));
    EXPECT_FALSE(ra.has("supercommutativity"));
    // Unit flag on a non-unit.
    auto unit_bad = SuperAlgebra(truncated_polynomial(2).basis_names(), {0, 0}, truncated_polynomial(2).structure(), 1);
    EXPECT_TRUE(validate_superalgebra(unit_bad).has("unit"));
}

TEST(Validation, ShapeErrors) {
    EXPECT_THROW(SuperAlgebra({"1"}, {0}, std::vector<Rational>(2)), ArgumentError);
    EXPECT_THROW(SuperAlgebra({"1", "t"}, {0}, std::vector<Rational>(1)), ArgumentError);
    EXPECT_THROW(SuperAlgebra({"1"}, {2}, std::vector<Rational>(1)), ArgumentError);
    EXPECT_THROW(SuperAlgebra({"1"}, {0}, std::vector<Rational>(1), 3), ArgumentError);
    EXPECT_THROW(SuperModule(2, {"m"}, {0}, std::vector<Rational>(3)), ArgumentError);
    EXPECT_THROW(validate_supermodule(exterior_algebra(1), self_module(exterior_algebra(2))), ArgumentError);
}

TEST(TensorProduct, WithGroundField) {
    for (const auto& [name, a] : standard_corpus()) {
        const auto t = tensor_product(a, ground_field());
        EXPECT_EQ(t.structure(), a.structure()) << name;
        EXPECT_EQ(t.parity(), a.parity()) << name;
        EXPECT_EQ(t.unit_index(), a.unit_index()) << name;
    }
}

TEST(TensorProduct, TwoExteriorGeneratorsGiveTheExteriorAlgebraOnTwo) {
    const auto t = tensor_product(exterior_algebra(1), exterior_algebra(1));
    const auto l = exterior_algebra(2);
    ASSERT_TRUE(validate_superalgebra(t).ok());
    // t1 -> t (x) 1 (index 2), t2 -> 1 (x) t (index 1), t1t2 -> t (x) t (index 3).
    const std::size_t phi[4] = {0, 2, 1, 3};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(t.c(phi[i], phi[j], phi[k]), l.c(i, j, k));
}

TEST(TensorProduct, MixedParity) {
    const auto t = tensor_product(truncated_polynomial(2), exterior_algebra(1));
    EXPECT_EQ(t.dim(), 4u);
    EXPECT_EQ(t.parity(), (ParityVector{0, 1, 0, 1}));
    EXPECT_TRUE(validate_superalgebra(t).ok());
    EXPECT_TRUE(validate_supermodule(t, self_module(t)).ok());
}

TEST(SelfModule, IsAValidSupermodule) {
    EXPECT_EQ(self_module(ground_field()).dim(), 1u);
    EXPECT_EQ(self_module(exterior_algebra(1)).dim(), 2u);
    for (const auto& [name, a] : standard_corpus()) EXPECT_TRUE(validate_supermodule(a, self_module(a)).ok()) << name;
}

TEST(SelfModule, PerturbedParityEntryIsFlagged) {
    const auto a = exterior_algebra(1);
    auto action = a.structure();
    action[(0 * 2 + 0) * 2 + 1] = 1;  // 1 . m_1 gets an odd component
    const SuperModule m(2, a.basis_names(), a.parity(), action);
    const auto r = validate_supermodule(a, m);
    ASSERT_TRUE(r.has("parity"));
    EXPECT_EQ(r.first("parity")->witness, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(SelfModule, ZeroActionSatisfiesModuleAxiomsWithoutUnit) {
    const auto a = without_unit(exterior_algebra(2));
    const SuperModule zero(a.dim(), {"m0", "m1"}, {0, 1}, std::vector<Rational>(a.dim() * 4));
    EXPECT_TRUE(validate_supermodule(a, zero).ok());
    EXPECT_TRUE(validate_supermodule(exterior_algebra(2), zero).has("unit"));
}

TEST(RightAction, SignRule) {
    const auto a = exterior_algebra(2);
    const auto m = self_module(a);
    // theta_1 acted on from the right by theta_2 is -(theta_2 theta_1) = theta_1 theta_2.
    EXPECT_EQ(right_action(a, m, e(a, 1), e(a, 2)), e(a, 3));
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const Vector v = random_vector(rng, 4);
        EXPECT_EQ(right_action(a, m, v, e(a, 0)), v);
        // even algebra element: m . a = a . m
        EXPECT_EQ(right_action(a, m, v, e(a, 3)), left_action(m, e(a, 3), v));
    }
}

TEST(RightAction, BimoduleCompatibilityOnBasisTriples) {
    for (const auto& [name, a] : standard_corpus()) {
        const auto m = self_module(a);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t k = 0; k < m.dim(); ++k)
                for (std::size_t j = 0; j < a.dim(); ++j) {
                    const Vector ak = left_action(m, e(a, i), unit_vector(m.dim(), k));
                    const Vector kj = right_action(a, m, unit_vector(m.dim(), k), e(a, j));
                    EXPECT_EQ(right_action(a, m, ak, e(a, j)), left_action(m, e(a, i), kj)) << name;
                }
    }
}

TEST(DualNumber, MatchesTruncatedPolynomialProduct) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const DualNumber x{random_rational(rng), random_rational(rng)};
        const DualNumber y{random_rational(rng), random_rational(rng)};
        // (x0 + x1 t)(y0 + y1 t) = x0 y0 + (x0 y1 + x1 y0) t + x1 y1 t^2, dropping t^2.
        const Rational p0 = x.c0 * y.c0, p1 = x.c0 * y.c1 + x.c1 * y.c0;
        EXPECT_EQ(x * y, (DualNumber{p0, p1}));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x + y) * x, x * x + y * x);
    }
}
