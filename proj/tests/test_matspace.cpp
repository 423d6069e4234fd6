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

#include "muub/matspace.hpp"

#include "gtest/gtest.h"
#include "muub/random.hpp"

using namespace muub;

namespace {

CycloScalar one(int d) { return CycloScalar::one(d); }

}  // namespace

TEST(matspace, g_map_examples) {
    EXPECT_EQ(g_map(Ket::basis(3, 0)), MsElement::shift_power(3, 0));
    EXPECT_EQ(to_dense(g_map(Ket::basis(5, 0))), DenseOp::identity(5, 5));
    const auto s = CycloScalar::inv_sqrt_d(3);
    const auto third = g_map(mub_state(3, 0, 0));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(third[i], s);
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        const auto psi = random_ket(5, rng, t % 2);
        EXPECT_EQ(g_inv(g_map(psi)), psi);
    }
}

TEST(matspace, hs_inner_examples) {
    const auto x1 = MsElement::shift_power(3, 1);
    const auto x2 = MsElement::shift_power(3, 2);
    EXPECT_EQ(hs_inner(x1, x1), CycloScalar::from_int(3, 3));
    EXPECT_TRUE(hs_inner(x1, x2).is_zero());
    EXPECT_THROW((void)hs_inner(x1, MsElement::shift_power(5, 1)), Error);
}

TEST(matspace, hs_inner_matches_dense_trace_and_overlap) {
    for (int d : {3, 5, 7}) {
        Rng rng(50 + d);
        for (int t = 0; t < 40; ++t) {
            const auto phi = random_ket(d, rng, t % 2);
            const auto psi = random_ket(d, rng, t % 2);
            const auto fast = hs_inner(g_map(phi), g_map(psi));
            EXPECT_EQ(fast, dense_hs_inner(to_dense(g_map(phi)), to_dense(g_map(psi))));
            // |Tr[G(φ)†G(ψ)]|² = d² |⟨φ|ψ⟩|², both sides in the real subfield.
            EXPECT_EQ(fast.abs_squared(), inner(phi, psi).abs_squared() * Rational(d * d));
        }
    }
}

TEST(matspace, to_dense_examples) {
    const auto x = to_dense(MsElement::shift_power(3, 1));
    for (std::size_t m = 0; m < 3; ++m) {
        for (std::size_t n = 0; n < 3; ++n) {
            EXPECT_EQ(x.at(m, n), m == (n + 1) % 3 ? one(3) : CycloScalar::zero(3)) << m << n;
        }
    }
    EXPECT_EQ((x.adjoint() * x).trace(), CycloScalar::from_int(3, 3));
}

TEST(matspace, unitarity_examples) {
    EXPECT_TRUE(is_unitary_dense(to_dense(g_map(mub_state(3, 1, 1)))));
    EXPECT_FALSE(is_unitary_dense(to_dense(g_map(mub_state(3, 0, 0)))));
    EXPECT_TRUE(is_unitary_dense(DenseOp::identity(7, 7)));
}

TEST(matspace, homomorphism_and_dagger) {
    for (int d : {3, 5}) {
        Rng rng(70 + d);
        for (int t = 0; t < 30; ++t) {
            const auto a = random_ket(d, rng, t % 2);
            const auto b = random_ket(d, rng, (t / 2) % 2);
            EXPECT_EQ(to_dense(g_map(bullet(a, b))), to_dense(g_map(a)) * to_dense(g_map(b)));
            EXPECT_EQ(to_dense(g_map(dagger(a))), to_dense(g_map(a)).adjoint());
        }
    }
}

TEST(matspace, monoid_and_dense_unitarity_agree) {
    for (int d : {3, 5, 7}) {
        for (int r = 0; r < d; ++r) {
            for (int s = 0; s < d; ++s) {
                const auto psi = mub_state(d, r, s);
                EXPECT_EQ(!monoid_unitarity_witness(psi).has_value(), is_unitary_dense(to_dense(g_map(psi))));
                EXPECT_EQ(r != 0, is_unitary_dense(to_dense(g_map(psi))));
            }
        }
        Rng rng(90 + d);
        for (int t = 0; t < 30; ++t) {
            const auto psi = random_ket(d, rng, t % 2);
            EXPECT_EQ(!monoid_unitarity_witness(psi).has_value(), is_unitary_dense(to_dense(g_map(psi))));
        }
        for (int k = 0; k < d; ++k) {
            // ω^j |k⟩ is a phase times a permutation.
            const auto psi = CycloScalar::omega_pow(d, k + 1) * Ket::basis(d, k);
            EXPECT_FALSE(monoid_unitarity_witness(psi).has_value());
            EXPECT_TRUE(is_unitary_dense(to_dense(g_map(psi))));
        }
    }
}
