// Copyright 2026 The muub-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "muub/cyclo.hpp"

#include <complex>
#include <random>

#include "gtest/gtest.h"
#include "muub/random.hpp"

using namespace muub;

namespace {

std::vector<Rational> ints(std::initializer_list<int> v) {
    std::vector<Rational> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

CycloScalar w(int d, int e) { return CycloScalar::omega_pow(d, e); }

}  // namespace

TEST(cyclo, omega_pow_identity) {
    EXPECT_EQ(w(3, 0).coeffs(), ints({1, 0, 0}));
    EXPECT_EQ(w(3, 0), CycloScalar::one(3));
}

TEST(cyclo, omega_pow_reduces_top_power) {
    // ω^5 = ω^2 = -1 - ω for d = 3.
    EXPECT_EQ(w(3, 5).coeffs(), ints({-1, -1, 0}));
    EXPECT_EQ(w(3, 5).root_d_pow(), 0);
}

TEST(cyclo, omega_pow_exponent_mod_d) {
    EXPECT_EQ(w(5, 7), w(5, 2));
    EXPECT_EQ(w(5, -3), w(5, 2));
    for (int d : {3, 5, 7, 11, 13}) {
        for (int e = -30; e <= 30; ++e) EXPECT_EQ(w(d, e), w(d, mod(e, d)));
    }
}

TEST(cyclo, rejects_bad_dimension) {
    for (int d : {-3, 0, 1, 2, 4, 9, 15}) {
        try {
            (void)CycloScalar::omega_pow(d, 1);
            FAIL() << d;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidDimension);
        }
    }
    EXPECT_NO_THROW((void)CycloScalar::omega_pow(2, 1, DimensionPolicy::AnyPrime));
}

TEST(cyclo, ring_examples) {
    EXPECT_EQ(w(3, 1) * w(3, 2), CycloScalar::one(3));
    CycloScalar sum = CycloScalar::zero(5);
    for (int k = 0; k < 5; ++k) sum += w(5, k);
    EXPECT_TRUE(sum.is_zero());
    EXPECT_EQ(w(3, 1).conj(), w(3, 2));
}

TEST(cyclo, mismatched_order) {
    try {
        (void)(w(3, 1) + w(5, 1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    EXPECT_THROW((void)(w(3, 1) * w(5, 1)), Error);
}

TEST(cyclo, abs_squared_examples) {
    for (int k = 0; k < 7; ++k) EXPECT_EQ(w(7, k).abs_squared(), CycloScalar::one(7));
    const auto s = CycloScalar::inv_sqrt_d(3);
    EXPECT_TRUE((s * (w(3, 0) + w(3, 1) + w(3, 2))).abs_squared().is_zero());
    // (1 + ω)(1 + ω²) = 1, and |1/√3|² = 1/3.
    const auto q = (s * (w(3, 0) + w(3, 1))).abs_squared();
    ASSERT_TRUE(q.is_rational());
    EXPECT_EQ(q.as_rational(), Rational(1, 3));
    EXPECT_EQ(q.root_d_pow(), 0);
}

TEST(cyclo, to_complex_examples) {
    EXPECT_EQ(CycloScalar::one(3).to_complex(), std::complex<double>(1.0, 0.0));
    const auto z = w(3, 1).to_complex();
    EXPECT_NEAR(z.real(), -0.5, 1e-15);
    EXPECT_NEAR(z.imag(), 0.8660254037844386, 1e-15);
    const auto y = (w(3, 2) + w(3, 1)).to_complex();
    EXPECT_NEAR(y.real(), -1.0, 1e-15);
    EXPECT_NEAR(y.imag(), 0.0, 1e-15);
}

TEST(cyclo, radical_folding) {
    // 3/(√3)^2 = 1 regardless of how it was written.
    const auto a = CycloScalar::from_coeffs(3, ints({3, 0, 0}), 2);
    EXPECT_EQ(a, CycloScalar::one(3));
    EXPECT_EQ(a.root_d_pow(), 0);
    // Non-canonical top coefficient is shifted away: (1 + ω + 2ω²) = ω².
    EXPECT_EQ(CycloScalar::from_coeffs(3, ints({1, 1, 2}), 0), w(3, 2));
    const auto half = CycloScalar::inv_sqrt_d(5) * CycloScalar::inv_sqrt_d(5);
    EXPECT_EQ(half.as_rational(), Rational(1, 5));
}

TEST(cyclo, gauss_sum_is_sqrt_d) {
    for (int d : {5, 13, 17}) {
        const auto g = CycloScalar::gauss_sum(d);
        EXPECT_NEAR(g.to_complex().real(), std::sqrt(double(d)), 1e-12);
        EXPECT_NEAR(g.to_complex().imag(), 0.0, 1e-12);
        // Mixed parity equality: g/d = 1/√d.
        EXPECT_EQ(g * CycloScalar::from_rational(d, Rational(1, d)), CycloScalar::inv_sqrt_d(d));
        EXPECT_TRUE((g * CycloScalar::inv_sqrt_d(d)).is_rational());
    }
    // For d ≡ 3 mod 4, √d is outside Q(ω): different parities never coincide
    // and a mixed sum is unrepresentable.
    EXPECT_FALSE(CycloScalar::inv_sqrt_d(7) == CycloScalar::from_rational(7, Rational(1, 7)));
    EXPECT_FALSE(CycloScalar::inv_sqrt_d(7).is_rational());
    try {
        (void)(CycloScalar::inv_sqrt_d(7) + CycloScalar::one(7));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Unrepresentable);
    }
    EXPECT_EQ(CycloScalar::inv_sqrt_d(5) + CycloScalar::one(5),
              CycloScalar::gauss_sum(5) * CycloScalar::from_rational(5, Rational(1, 5)) + CycloScalar::one(5));
}

TEST(cyclo, as_rational_rejects_irrational) {
    EXPECT_FALSE(w(5, 1).is_rational());
    EXPECT_THROW((void)w(5, 1).as_rational(), Error);
    EXPECT_TRUE((w(5, 1) + w(5, 4)).is_rational() == false);
}

class CycloProperties : public ::testing::TestWithParam<int> {};

TEST_P(CycloProperties, ring_laws_and_congruence) {
    const int d = GetParam();
    Rng rng(1000 + d);
    for (int t = 0; t < 200; ++t) {
        const int parity = t % 2;
        const auto a = random_scalar(d, rng, parity);
        const auto b = random_scalar(d, rng, parity);
        const auto c = random_scalar(d, rng, parity);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a.conj().conj(), a);
        EXPECT_EQ(a.abs_squared(), a.conj().abs_squared());
        EXPECT_TRUE(a.abs_squared().root_d_pow() == 0);
        // A re-encoded copy (top coefficient shifted, denominator scaled,
        // radical power raised by two) behaves identically.
        std::vector<Rational> raw = a.coeffs();
        for (auto &x : raw) x = (x + Rational(5, 7)) * Rational(d);
        const auto a2 = CycloScalar::from_coeffs(d, raw, a.root_d_pow() + 2);
        EXPECT_EQ(a2, a);
        EXPECT_EQ(a2 * b, a * b);
        EXPECT_EQ(a2 + b, a + b);
    }
}

TEST_P(CycloProperties, float_image_is_multiplicative) {
    const int d = GetParam();
    Rng rng(7 + d);
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_scalar(d, rng, t % 2);
        const auto b = random_scalar(d, rng, (t / 2) % 2);
        const auto lhs = (a * b).to_complex();
        const auto rhs = a.to_complex() * b.to_complex();
        EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

INSTANTIATE_TEST_SUITE_P(primes, CycloProperties, ::testing::Values(3, 5, 7, 11, 13));
