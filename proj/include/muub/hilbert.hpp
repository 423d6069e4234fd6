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

// Kets of H_d, the d + 1 mutually unbiased bases in prime dimension, and the
// cyclic-convolution monoid (H_d, •, |0⟩).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muub/cyclo.hpp"
#include "muub/error.hpp"
#include "muub/primes.hpp"

namespace muub {

/// Amplitudes over the computational basis; amps[i] multiplies |i⟩.
/// Not normalized at the type level.
class Ket {
public:
    Ket(int d, std::vector<CycloScalar> amps) : d_(d), amps_(std::move(amps)) {
        if (amps_.size() != static_cast<std::size_t>(d_)) {
            throw Error(ErrorCode::DimensionMismatch, "ket over d = " + std::to_string(d_) + " needs " +
                                                          std::to_string(d_) + " amplitudes, got " +
                                                          std::to_string(amps_.size()));
        }
        for (const auto &a : amps_) {
            if (a.d() != d_) throw Error(ErrorCode::DimensionMismatch, "amplitude order differs from ket order");
        }
    }

    static Ket zero(int d) { return Ket(d, std::vector<CycloScalar>(static_cast<std::size_t>(d), CycloScalar::zero(d))); }

    /// |k⟩.
    static Ket basis(int d, int k) {
        require_dimension(d);
        require_index(k, 0, d - 1, "k");
        Ket out = zero(d);
        out.amps_[static_cast<std::size_t>(k)] = CycloScalar::one(d);
        return out;
    }

    int d() const noexcept { return d_; }
    const std::vector<CycloScalar> &amps() const noexcept { return amps_; }
    const CycloScalar &operator[](std::size_t i) const { return amps_[i]; }

    Ket &operator+=(const Ket &rhs) {
        check_same(rhs);
        for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += rhs.amps_[i];
        return *this;
    }

    friend Ket operator+(Ket lhs, const Ket &rhs) { return lhs += rhs; }

    friend Ket operator*(const CycloScalar &c, const Ket &k) {
        std::vector<CycloScalar> out;
        out.reserve(k.amps_.size());
        for (const auto &a : k.amps_) out.push_back(c * a);
        return Ket(k.d_, std::move(out));
    }

    friend bool operator==(const Ket &, const Ket &) = default;

    void check_same(const Ket &other) const {
        if (d_ != other.d_) {
            throw Error(ErrorCode::DimensionMismatch,
                        "kets over d = " + std::to_string(d_) + " and d = " + std::to_string(other.d_));
        }
    }

private:
    int d_;
    std::vector<CycloScalar> amps_;
};

/// std::nullopt labels the computational basis; otherwise the index r.
using BasisLabel = std::optional<int>;

inline std::string label_string(const BasisLabel &label, const char *unlabeled = "computational") {
    return label ? std::to_string(*label) : std::string(unlabeled);
}

struct MubBasis {
    int d;
    BasisLabel label;
    std::vector<Ket> states;  // ordered by s
};

/// α(a) = a + (a+1) + ... + (d-1).
constexpr std::int64_t alpha(int d, int a) {
    return (static_cast<std::int64_t>(d) * (d - 1) - static_cast<std::int64_t>(a) * (a - 1)) / 2;
}

/// Exponent of ω in the |a⟩ amplitude of basis r, state s:
/// s(d - a) - r·α(a), reduced mod d.
constexpr int mub_phase_exponent(int d, int r, int s, int a) {
    return mod(static_cast<std::int64_t>(s) * (d - a) - static_cast<std::int64_t>(r) * alpha(d, a), d);
}

inline MubBasis computational_basis(int d) {
    require_dimension(d);
    MubBasis out{d, std::nullopt, {}};
    for (int k = 0; k < d; ++k) out.states.push_back(Ket::basis(d, k));
    return out;
}

/// (1/√d) Σ_a ω^{s(d-a)} ω^{-r α(a)} |a⟩.
inline Ket mub_state(int d, int r, int s) {
    require_dimension(d);
    require_index(r, 0, d - 1, "r");
    require_index(s, 0, d - 1, "s");
    std::vector<CycloScalar> amps;
    amps.reserve(static_cast<std::size_t>(d));
    const CycloScalar norm = CycloScalar::inv_sqrt_d(d);
    for (int a = 0; a < d; ++a) {
        int e = mub_phase_exponent(d, r, s, a);
#ifdef MUUB_FAULT_INJECTION
        // Deliberately wrong exponent, used to check that the self-test harness notices.
        if (r == 1 && s == 0 && a == d - 1) e = mod(e + 1, d);
#endif
        amps.push_back(norm * CycloScalar::omega_pow(d, e));
    }
    return Ket(d, std::move(amps));
}

inline MubBasis mub_basis(int d, int r) {
    require_dimension(d);
    require_index(r, 0, d - 1, "r");
    MubBasis out{d, r, {}};
    for (int s = 0; s < d; ++s) out.states.push_back(mub_state(d, r, s));
    return out;
}

/// Computational basis followed by r = 0..d-1.
inline std::vector<MubBasis> all_mubs(int d) {
    std::vector<MubBasis> out;
    out.push_back(computational_basis(d));
    for (int r = 0; r < d; ++r) out.push_back(mub_basis(d, r));
    return out;
}

/// ⟨a|b⟩ = Σ conj(a_i) b_i.
inline CycloScalar inner(const Ket &a, const Ket &b) {
    a.check_same(b);
    CycloScalar acc = CycloScalar::zero(a.d());
    for (std::size_t i = 0; i < a.amps().size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        acc += a[i].conj() * b[i];
    }
    return acc;
}

inline CycloScalar norm_squared(const Ket &a) { return inner(a, a); }

/// Cyclic convolution: the |m⟩ amplitude is Σ_{i ⊕ j = m} a_i b_j.
inline Ket bullet(const Ket &a, const Ket &b) {
    a.check_same(b);
    const auto n = static_cast<std::size_t>(a.d());
    std::vector<CycloScalar> out(n, CycloScalar::zero(a.d()));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            out[(i + j) % n] += a[i] * b[j];
        }
    }
    return Ket(a.d(), std::move(out));
}

/// Σ a_i |i⟩ ↦ Σ conj(a_i) |(d - i) mod d⟩, the preimage of the operator adjoint.
inline Ket dagger(const Ket &a) {
    const auto n = static_cast<std::size_t>(a.d());
    std::vector<CycloScalar> out(n, CycloScalar::zero(a.d()));
    for (std::size_t i = 0; i < n; ++i) out[(n - i) % n] = a[i].conj();
    return Ket(a.d(), std::move(out));
}

/// std::nullopt when a • a† = |0⟩ (the image under G is unitary); otherwise
/// the product a • a† as a witness.
inline std::optional<Ket> monoid_unitarity_witness(const Ket &a) {
    Ket product = bullet(a, dagger(a));
    if (product == Ket::basis(a.d(), 0)) return std::nullopt;
    return product;
}

}  // namespace muub
