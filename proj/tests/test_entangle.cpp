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

#include "muub/entangle.hpp"

#include "gtest/gtest.h"
#include "muub/float_oracle.hpp"

using namespace muub;

namespace {

constexpr auto kAny = DimensionPolicy::AnyPrime;

CycloScalar w(int d, int e) { return CycloScalar::omega_pow(d, e, kAny); }
CycloScalar one(int d) { return CycloScalar::one(d, kAny); }

BipartiteKet sum_of(int d, std::initializer_list<std::tuple<int, int, CycloScalar>> terms) {
    BipartiteKet out = BipartiteKet::zero(d);
    for (const auto &[m, n, c] : terms) out += c * BipartiteKet::product(d, m, n);
    return CycloScalar::inv_sqrt_d(d, kAny) * out;
}

DenseOp id(int d) { return DenseOp::identity(d, static_cast<std::size_t>(d), kAny); }

}  // namespace

TEST(entangle, pauli_examples) {
    const auto x2 = pauli_x(2);
    EXPECT_TRUE(x2.at(0, 0).is_zero());
    EXPECT_EQ(x2.at(0, 1), one(2));
    EXPECT_EQ(x2.at(1, 0), one(2));
    const auto z3 = pauli_z(3);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(z3.at(k, k), w(3, static_cast<int>(k)));
    EXPECT_EQ(pauli_x(5).pow(5), id(5));
    EXPECT_EQ(pauli_z(5).pow(5), id(5));
    EXPECT_THROW((void)pauli_x(4), Error);
}

TEST(entangle, pauli_word_examples) {
    const auto p = pauli_word(3, 1, 1, 2);
    EXPECT_EQ(p.phase, w(3, 1));
    EXPECT_EQ(p.x_power, 2);
    EXPECT_EQ(p.z_power, 2);
    EXPECT_TRUE(p.agrees());
    // Cross-check the product with the float matrices.
    const auto xz = oracle::shift(3) * oracle::clock(3);
    const auto sq = xz * xz;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_LT(std::abs(p.product.at(i, j).to_complex() - sq(i, j)), 1e-12);
    for (int d : {2, 3, 5}) {
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                const auto n1 = pauli_word(d, b, a, 1);
                EXPECT_EQ(n1.phase, one(d));
                EXPECT_EQ(n1.product, pauli_word_op(d, b, a));
            }
        }
    }
    EXPECT_EQ(pauli_word(5, 2, 3, 5).product, id(5));
    EXPECT_THROW((void)pauli_word(3, 3, 0, 1), Error);
    EXPECT_THROW((void)pauli_word(3, 0, 0, -1), Error);
}

TEST(entangle, pauli_identity_sweep) {
    for (int d : {2, 3, 5, 7}) {
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                for (int n = 0; n <= d; ++n) ASSERT_TRUE(pauli_word(d, b, a, n).agrees()) << d << a << b << n;
                const auto full = pauli_word(d, b, a, d).product;
                if (d > 2) {
                    EXPECT_EQ(full, id(d));
                } else {
                    // (XZ)² = -I in d = 2: the phase ω^{ab} survives.
                    EXPECT_EQ(full, w(2, a * b) * id(2));
                }
            }
        }
    }
}

TEST(entangle, choi_examples) {
    EXPECT_EQ(choi(id(3)), sum_of(3, {{0, 0, one(3)}, {1, 1, one(3)}, {2, 2, one(3)}}));
    EXPECT_EQ(choi(pauli_x(3)), sum_of(3, {{0, 1, one(3)}, {1, 2, one(3)}, {2, 0, one(3)}}));
    try {
        (void)choi(to_dense(g_map(mub_state(3, 0, 0))));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnitary);
    }
}

TEST(entangle, choi_preserves_inner_products) {
    for (int d : {3, 5, 7}) {
        const auto fam = muub_family(d);
        std::vector<DenseOp> ops;
        for (const auto &b : fam)
            for (const auto &m : b.ops) ops.push_back(to_dense(m));
        const CycloScalar scale = CycloScalar::from_int(d, d);
        for (std::size_t i = 0; i < ops.size(); i += (d == 7 ? 5 : 1)) {
            const auto ci = choi(ops[i]);
            for (std::size_t j = 0; j < ops.size(); j += (d == 7 ? 3 : 1)) {
                EXPECT_EQ(scale * inner(ci, choi(ops[j])), dense_hs_inner(ops[i], ops[j]));
            }
        }
    }
}

TEST(entangle, bell_examples) {
    const auto phi = bell_state(2, 0, 0);
    EXPECT_EQ(phi, sum_of(2, {{0, 0, one(2)}, {1, 1, one(2)}}));
    EXPECT_EQ(bell_state(3, 1, 1), sum_of(3, {{0, 1, one(3)}, {1, 2, w(3, 1)}, {2, 0, w(3, 2)}}));
    for (int d : {2, 3, 5}) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) EXPECT_EQ(bell_state(d, a, b), choi(pauli_word_op(d, b, a)));
    }
}

TEST(entangle, bell_basis_orthonormal_and_mes) {
    for (int d : {2, 3, 5}) {
        std::vector<BipartiteKet> all;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) all.push_back(bell_state(d, a, b));
        for (std::size_t i = 0; i < all.size(); ++i) {
            EXPECT_TRUE(is_mes(all[i]));
            for (std::size_t j = 0; j < all.size(); ++j) {
                const auto v = inner(all[i], all[j]);
                if (i == j) {
                    EXPECT_EQ(v, one(d));
                } else {
                    EXPECT_TRUE(v.is_zero());
                }
            }
        }
    }
}

TEST(entangle, mes_mub_reduces_to_choi_of_recipe) {
    for (int r = 1; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            EXPECT_EQ(mes_mub_state(3, r, s, 0, 1), choi(to_dense(muub_element(3, r, s))));
}

TEST(entangle, mes_mub_properties) {
    for (int d : {3, 5}) {
        for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}}) {
            std::vector<std::vector<BipartiteKet>> bases;
            for (int r = 1; r < d; ++r) {
                bases.emplace_back();
                for (int s = 0; s < d; ++s) bases.back().push_back(mes_mub_state(d, r, s, a, b));
            }
            for (const auto &basis : bases) {
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    EXPECT_EQ(inner(basis[i], basis[i]), CycloScalar::one(d));
                    EXPECT_TRUE(is_mes(basis[i]));
                    for (std::size_t j = i + 1; j < basis.size(); ++j) EXPECT_TRUE(inner(basis[i], basis[j]).is_zero());
                }
            }
            for (std::size_t x = 0; x < bases.size(); ++x)
                for (std::size_t y = x + 1; y < bases.size(); ++y)
                    for (const auto &p : bases[x])
                        for (const auto &q : bases[y])
                            EXPECT_EQ(inner(p, q).abs_squared().as_rational(), Rational(1, d));
        }
    }
}

TEST(entangle, mes_mub_matches_float_oracle) {
    for (int d : {3, 5}) {
        for (int r = 1; r < d; ++r) {
            const auto exact = mes_mub_state(d, r, 1, 1, 1);
            const auto approx = oracle::mes_mub_state(d, r, 1, 1, 1);
            for (std::size_t k = 0; k < approx.size(); ++k)
                EXPECT_LT(std::abs(exact.amps()[k].to_complex() - approx[k]), 1e-12);
            EXPECT_LT(oracle::mes_deviation(approx, d), 1e-12);
        }
    }
}

TEST(entangle, mes_mub_errors) {
    try {
        (void)mes_mub_state(3, 1, 0, 0, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateFamily);
    }
    EXPECT_THROW((void)mes_mub_state(3, 0, 0, 1, 1), Error);
    EXPECT_THROW((void)mes_mub_state(2, 1, 0, 1, 1), Error);
    EXPECT_THROW((void)mes_mub_state(3, 1, 3, 1, 1), Error);
}

TEST(entangle, partial_trace_examples) {
    const auto rho = projector(bell_state(3, 1, 1));
    const DenseOp target = CycloScalar::from_rational(3, Rational(1, 3)) * DenseOp::identity(3, 3);
    EXPECT_EQ(partial_trace(rho, 1).op(), target);
    EXPECT_EQ(partial_trace(rho, 2).op(), target);
    const auto prod = projector(BipartiteKet::product(3, 0, 0));
    EXPECT_EQ(partial_trace(prod, 1).op(), projector(Ket::basis(3, 0)).op());
    const auto mixed = projector(BipartiteKet::product(5, 2, 4));
    EXPECT_EQ(partial_trace(mixed, 1).op().trace(), CycloScalar::one(5));
    EXPECT_EQ(partial_trace(mixed, 2).op().trace(), CycloScalar::one(5));
    EXPECT_THROW((void)partial_trace(projector(Ket::basis(3, 1)), 1), Error);
    EXPECT_THROW((void)partial_trace(rho, 3), Error);
}

TEST(entangle, is_mes_examples) {
    for (int d : {2, 3, 5})
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) EXPECT_TRUE(is_mes(bell_state(d, a, b)));
    EXPECT_FALSE(is_mes(BipartiteKet::product(3, 0, 0)));
    EXPECT_TRUE(is_mes(mes_mub_state(3, 1, 0, 1, 1)));
}

TEST(entangle, traceless_orthogonality_values) {
    for (int d : {3, 5}) {
        const Rational inv(1, d);
        const auto p = projector(mub_state(d, 1, 0));
        EXPECT_EQ(traceless_orthogonality(p, p).as_rational(), Rational(1) - inv);
        EXPECT_TRUE(traceless_orthogonality(p, projector(mub_state(d, 2, d - 1))).is_zero());
        EXPECT_EQ(traceless_orthogonality(p, projector(mub_state(d, 1, 1))).as_rational(), -inv);
    }
    const auto p = projector(Ket::basis(3, 0));
    EXPECT_THROW((void)traceless_orthogonality(p, projector(Ket::basis(5, 0))), Error);
    const auto twice = DensityMatrix(CycloScalar::from_int(3, 2) * p.op());
    EXPECT_THROW((void)traceless_orthogonality(p, twice), Error);
}

TEST(entangle, subspace_coordinates_recover_mub_state) {
    for (int d : {3, 5}) {
        for (int r = 1; r < d; ++r) {
            for (int s = 0; s < d; ++s) {
                EXPECT_EQ(subspace_coordinates(mes_mub_state(d, r, s, 1, 1), 1, 1), mub_state(d, r, s));
            }
        }
    }
}
