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

#pragma once

// Generalized Pauli operators, the Choi vector |U⟩ = (1/√d) Σ_{m,n} ⟨n|U|m⟩ |m⟩|n⟩,
// generalized Bell states, mutually unbiased bases of maximally entangled
// states built from a word W = X^b Z^a, and partial traces.
//
// Bipartite index convention: |m⟩|n⟩ ↦ m·d + n.
// This layer admits d = 2 for Pauli/Bell content.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "muub/cyclo.hpp"
#include "muub/error.hpp"
#include "muub/family.hpp"
#include "muub/hilbert.hpp"
#include "muub/matspace.hpp"
#include "muub/primes.hpp"

namespace muub {

class BipartiteKet {
public:
    BipartiteKet(int d, std::vector<CycloScalar> amps) : d_(d), amps_(std::move(amps)) {
        if (amps_.size() != static_cast<std::size_t>(d_) * static_cast<std::size_t>(d_)) {
            throw Error(ErrorCode::DimensionMismatch, "bipartite ket needs d² amplitudes");
        }
        for (const auto &a : amps_) {
            if (a.d() != d_) throw Error(ErrorCode::DimensionMismatch, "amplitude order differs from d");
        }
    }

    static BipartiteKet zero(int d) {
        require_dimension(d, DimensionPolicy::AnyPrime);
        const auto n = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
        return BipartiteKet(d, std::vector<CycloScalar>(n, CycloScalar::zero(d, DimensionPolicy::AnyPrime)));
    }

    /// |m⟩|n⟩.
    static BipartiteKet product(int d, int m, int n) {
        BipartiteKet out = zero(d);
        out.amps_[index(d, m, n)] = CycloScalar::one(d, DimensionPolicy::AnyPrime);
        return out;
    }

    static std::size_t index(int d, int m, int n) {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(d) + static_cast<std::size_t>(n);
    }

    int d() const noexcept { return d_; }
    const std::vector<CycloScalar> &amps() const noexcept { return amps_; }
    const CycloScalar &at(int m, int n) const { return amps_[index(d_, m, n)]; }

    BipartiteKet &operator+=(const BipartiteKet &rhs) {
        if (d_ != rhs.d_) throw Error(ErrorCode::DimensionMismatch, "bipartite kets over different d");
        for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += rhs.amps_[i];
        return *this;
    }

    friend BipartiteKet operator*(const CycloScalar &c, BipartiteKet k) {
        for (auto &a : k.amps_) a = c * a;
        return k;
    }

    friend bool operator==(const BipartiteKet &, const BipartiteKet &) = default;

private:
    int d_;
    std::vector<CycloScalar> amps_;
};

inline CycloScalar inner(const BipartiteKet &a, const BipartiteKet &b) {
    if (a.d() != b.d()) throw Error(ErrorCode::DimensionMismatch, "bipartite kets over different d");
    CycloScalar acc = CycloScalar::zero(a.d(), DimensionPolicy::AnyPrime);
    for (std::size_t i = 0; i < a.amps().size(); ++i) {
        const auto &x = a.amps()[i];
        const auto &y = b.amps()[i];
        if (x.is_zero() || y.is_zero()) continue;
        acc += x.conj() * y;
    }
    return acc;
}

/// Hermitian matrix on a space of dimension dim() built over scalars of order d().
class DensityMatrix {
public:
    explicit DensityMatrix(DenseOp rho) : rho_(std::move(rho)) {}

    int d() const noexcept { return rho_.d(); }
    std::size_t dim() const noexcept { return rho_.size(); }
    const DenseOp &op() const noexcept { return rho_; }
    const CycloScalar &at(std::size_t i, std::size_t j) const { return rho_.at(i, j); }

    friend bool operator==(const DensityMatrix &, const DensityMatrix &) = default;

private:
    DenseOp rho_;
};

/// |ψ⟩⟨ψ| for amplitudes in any coordinates.
inline DensityMatrix projector(int d, const std::vector<CycloScalar> &amps) {
    const std::size_t n = amps.size();
    DenseOp rho = DenseOp::zero(d, n, DimensionPolicy::AnyPrime);
    for (std::size_t i = 0; i < n; ++i) {
        if (amps[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (amps[j].is_zero()) continue;
            rho.at(i, j) = amps[i] * amps[j].conj();
        }
    }
    return DensityMatrix(std::move(rho));
}

inline DensityMatrix projector(const BipartiteKet &psi) { return projector(psi.d(), psi.amps()); }
inline DensityMatrix projector(const Ket &psi) { return projector(psi.d(), psi.amps()); }

/// X_d|k⟩ = |k ⊕ 1⟩.
inline DenseOp pauli_x(int d) {
    require_dimension(d, DimensionPolicy::AnyPrime);
    const auto n = static_cast<std::size_t>(d);
    DenseOp out = DenseOp::zero(d, n, DimensionPolicy::AnyPrime);
    const auto one = CycloScalar::one(d, DimensionPolicy::AnyPrime);
    for (std::size_t k = 0; k < n; ++k) out.at((k + 1) % n, k) = one;
    return out;
}

/// Z_d|k⟩ = ω^k |k⟩.
inline DenseOp pauli_z(int d) {
    require_dimension(d, DimensionPolicy::AnyPrime);
    const auto n = static_cast<std::size_t>(d);
    DenseOp out = DenseOp::zero(d, n, DimensionPolicy::AnyPrime);
    for (std::size_t k = 0; k < n; ++k) {
        out.at(k, k) = CycloScalar::omega_pow(d, static_cast<std::int64_t>(k), DimensionPolicy::AnyPrime);
    }
    return out;
}

/// X_d^b Z_d^a.
inline DenseOp pauli_word_op(int d, int b, int a) {
    require_dimension(d, DimensionPolicy::AnyPrime);
    require_index(a, 0, d - 1, "a");
    require_index(b, 0, d - 1, "b");
    return pauli_x(d).pow(b) * pauli_z(d).pow(a);
}

/// (X^b Z^a)^n computed two ways: by repeated multiplication, and as the
/// closed form ω^{ab(n²-n)/2} X^{bn} Z^{an}.
struct PauliPower {
    DenseOp product;       // explicit (X^b Z^a)^n
    CycloScalar phase;     // ω^{ab(n²-n)/2}
    int x_power;           // bn mod d
    int z_power;           // an mod d
    DenseOp closed_form;   // phase · X^{x_power} Z^{z_power}

    bool agrees() const { return product == closed_form; }
};

inline PauliPower pauli_word(int d, int b, int a, int n) {
    require_dimension(d, DimensionPolicy::AnyPrime);
    require_index(a, 0, d - 1, "a");
    require_index(b, 0, d - 1, "b");
    if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "n must be non-negative");
    const DenseOp word = pauli_word_op(d, b, a);
    const std::int64_t nn = n;
    const std::int64_t exponent = static_cast<std::int64_t>(a) * b * (nn * nn - nn) / 2;
    CycloScalar phase = CycloScalar::omega_pow(d, exponent, DimensionPolicy::AnyPrime);
    const int xp = mod(static_cast<std::int64_t>(b) * n, d);
    const int zp = mod(static_cast<std::int64_t>(a) * n, d);
    DenseOp closed = phase * (pauli_x(d).pow(xp) * pauli_z(d).pow(zp));
    return {word.pow(n), std::move(phase), xp, zp, std::move(closed)};
}

/// (1/√d) Σ_{m,n} ⟨n|U|m⟩ |m⟩|n⟩ for unitary U.
inline BipartiteKet choi(const DenseOp &u) {
    const int d = u.d();
    if (u.size() != static_cast<std::size_t>(d)) {
        throw Error(ErrorCode::DimensionMismatch, "choi expects a d×d operator");
    }
    if (!is_unitary_dense(u)) throw Error(ErrorCode::NotUnitary, "choi input is not unitary");
    const CycloScalar norm = CycloScalar::inv_sqrt_d(d, DimensionPolicy::AnyPrime);
    std::vector<CycloScalar> amps;
    amps.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            const auto &e = u.at(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
            amps.push_back(e.is_zero() ? e : norm * e);
        }
    }
    return BipartiteKet(d, std::move(amps));
}

/// (1/√d) Σ_n ω^{an} |n⟩|n ⊕ b⟩; coincides entrywise with choi(X^b Z^a).
inline BipartiteKet bell_state(int d, int a, int b) {
    require_dimension(d, DimensionPolicy::AnyPrime);
    require_index(a, 0, d - 1, "a");
    require_index(b, 0, d - 1, "b");
    BipartiteKet out = BipartiteKet::zero(d);
    const CycloScalar norm = CycloScalar::inv_sqrt_d(d, DimensionPolicy::AnyPrime);
    std::vector<CycloScalar> amps = out.amps();
    for (int n = 0; n < d; ++n) {
        amps[BipartiteKet::index(d, n, mod(n + b, d))] =
            norm * CycloScalar::omega_pow(d, static_cast<std::int64_t>(a) * n, DimensionPolicy::AnyPrime);
    }
    return BipartiteKet(d, std::move(amps));
}

inline void require_word_family(int d, int a, int b) {
    require_dimension(d);
    require_index(a, 0, d - 1, "a");
    require_index(b, 0, d - 1, "b");
    if (a == 0 && b == 0) {
        throw Error(ErrorCode::DegenerateFamily, "(a, b) = (0, 0): powers of the identity span one dimension");
    }
}

/// Choi vectors of W^0, .., W^{d-1} for W = X^b Z^a; orthonormal when
/// (a, b) ≠ (0, 0).
inline std::vector<BipartiteKet> word_family_basis(int d, int a, int b) {
    require_word_family(d, a, b);
    const DenseOp word = pauli_word_op(d, b, a);
    std::vector<BipartiteKet> out;
    DenseOp power = DenseOp::identity(d, static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        out.push_back(choi(power));
        power = power * word;
    }
    return out;
}

/// State s of basis r in the entangled family of W = X^b Z^a:
/// (1/√d) Σ_i ω^{s(d-i)} ω^{-r α(i)} |W^i⟩ with |W^i⟩ the unit-norm Choi vector.
inline BipartiteKet mes_mub_state(int d, int r, int s, int a, int b) {
    require_word_family(d, a, b);
    require_index(r, 1, d - 1, "r");
    require_index(s, 0, d - 1, "s");
    const auto basis = word_family_basis(d, a, b);
    const CycloScalar norm = CycloScalar::inv_sqrt_d(d);
    BipartiteKet out = BipartiteKet::zero(d);
    for (int i = 0; i < d; ++i) {
        const CycloScalar c = norm * CycloScalar::omega_pow(d, mub_phase_exponent(d, r, s, i));
        out += c * basis[static_cast<std::size_t>(i)];
    }
    return out;
}

/// Coordinates of ψ against the orthonormal Choi vectors of the W-family,
/// i.e. ψ expressed in the d-dimensional subspace basis {|i_U⟩}.
inline Ket subspace_coordinates(const BipartiteKet &psi, int a, int b) {
    const auto basis = word_family_basis(psi.d(), a, b);
    std::vector<CycloScalar> coords;
    coords.reserve(basis.size());
    for (const auto &u : basis) coords.push_back(inner(u, psi));
    return Ket(psi.d(), std::move(coords));
}

/// side 1 traces out the first factor, side 2 the second.
inline DensityMatrix partial_trace(const DensityMatrix &rho, int side) {
    if (side != 1 && side != 2) throw Error(ErrorCode::IndexOutOfRange, "side must be 1 or 2");
    const std::size_t total = rho.dim();
    std::size_t k = 0;
    while (k * k < total) ++k;
    if (k * k != total || k == 0) {
        throw Error(ErrorCode::DimensionMismatch, "partial trace needs a square total dimension");
    }
    DenseOp out = DenseOp::zero(rho.d(), k, DimensionPolicy::AnyPrime);
    for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
            CycloScalar acc = CycloScalar::zero(rho.d(), DimensionPolicy::AnyPrime);
            for (std::size_t t = 0; t < k; ++t) {
                acc += side == 1 ? rho.at(t * k + x, t * k + y) : rho.at(x * k + t, y * k + t);
            }
            out.at(x, y) = std::move(acc);
        }
    }
    return DensityMatrix(std::move(out));
}

/// Both reduced states of |ψ⟩⟨ψ| equal I/d exactly.
inline bool is_mes(const BipartiteKet &psi) {
    const int d = psi.d();
    const auto rho = projector(psi);
    const DenseOp target = CycloScalar::from_rational(d, Rational(1, d), DimensionPolicy::AnyPrime) *
                           DenseOp::identity(d, static_cast<std::size_t>(d), DimensionPolicy::AnyPrime);
    return partial_trace(rho, 1).op() == target && partial_trace(rho, 2).op() == target;
}

/// Tr[(ρ_A - I/n)(ρ_B - I/n)] for unit-trace states of dimension n.
inline CycloScalar traceless_orthogonality(const DensityMatrix &rho_a, const DensityMatrix &rho_b) {
    if (rho_a.dim() != rho_b.dim() || rho_a.d() != rho_b.d()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrices of different dimension");
    }
    const int d = rho_a.d();
    const auto one = CycloScalar::one(d, DimensionPolicy::AnyPrime);
    if (rho_a.op().trace() != one || rho_b.op().trace() != one) {
        throw Error(ErrorCode::InvalidState, "traceless_orthogonality expects unit-trace states");
    }
    const std::size_t n = rho_a.dim();
    const DenseOp shift = CycloScalar::from_rational(d, Rational(1, static_cast<long long>(n)), DimensionPolicy::AnyPrime) *
                          DenseOp::identity(d, n, DimensionPolicy::AnyPrime);
    return ((rho_a.op() - shift) * (rho_b.op() - shift)).trace();
}

}  // namespace muub
