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

// The operator subspace M_s = span{X^0, .., X^{d-1}} ⊂ M(d, C), the linear
// bijection G : H_d → M_s, and explicit matrices over Q(ω, 1/√d).
//
// X is realized as the cyclic shift X|k⟩ = |k ⊕ 1⟩, so X^i has a one in
// entry (m, n) exactly when m = n ⊕ i.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "muub/cyclo.hpp"
#include "muub/error.hpp"
#include "muub/hilbert.hpp"
#include "muub/primes.hpp"

namespace muub {

/// Σ xcoeffs[i] X^i.
class MsElement {
public:
    MsElement(int d, std::vector<CycloScalar> xcoeffs) : d_(d), xcoeffs_(std::move(xcoeffs)) {
        if (xcoeffs_.size() != static_cast<std::size_t>(d_)) {
            throw Error(ErrorCode::DimensionMismatch, "M_s element over d = " + std::to_string(d_) + " needs " +
                                                          std::to_string(d_) + " coefficients");
        }
        for (const auto &c : xcoeffs_) {
            if (c.d() != d_) throw Error(ErrorCode::DimensionMismatch, "coefficient order differs from d");
        }
    }

    /// X^i.
    static MsElement shift_power(int d, int i) {
        require_dimension(d);
        std::vector<CycloScalar> c(static_cast<std::size_t>(d), CycloScalar::zero(d));
        c[static_cast<std::size_t>(mod(i, d))] = CycloScalar::one(d);
        return MsElement(d, std::move(c));
    }

    int d() const noexcept { return d_; }
    const std::vector<CycloScalar> &xcoeffs() const noexcept { return xcoeffs_; }
    const CycloScalar &operator[](std::size_t i) const { return xcoeffs_[i]; }

    friend bool operator==(const MsElement &, const MsElement &) = default;

private:
    int d_;
    std::vector<CycloScalar> xcoeffs_;
};

inline MsElement g_map(const Ket &a) { return MsElement(a.d(), a.amps()); }
inline Ket g_inv(const MsElement &m) { return Ket(m.d(), m.xcoeffs()); }

/// Tr(A†B), computed as d · Σ conj(a_i) b_i since Tr(X^{i†} X^j) = d δ_ij.
inline CycloScalar hs_inner(const MsElement &a, const MsElement &b) {
    if (a.d() != b.d()) throw Error(ErrorCode::DimensionMismatch, "hs_inner over different d");
    CycloScalar acc = CycloScalar::zero(a.d());
    for (std::size_t i = 0; i < a.xcoeffs().size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        acc += a[i].conj() * b[i];
    }
    return acc * Rational(a.d());
}

/// Square matrix of scalars of a single order d; size is d or d² in practice.
class DenseOp {
public:
    DenseOp(int d, std::size_t size, std::vector<CycloScalar> entries)
        : d_(d), size_(size), entries_(std::move(entries)) {
        if (entries_.size() != size_ * size_) {
            throw Error(ErrorCode::DimensionMismatch, "dense operator needs size² entries");
        }
        for (const auto &e : entries_) {
            if (e.d() != d_) throw Error(ErrorCode::DimensionMismatch, "entry order differs from operator order");
        }
    }

    static DenseOp zero(int d, std::size_t size, DimensionPolicy policy = DimensionPolicy::OddPrime) {
        return DenseOp(d, size, std::vector<CycloScalar>(size * size, CycloScalar::zero(d, policy)));
    }

    static DenseOp identity(int d, std::size_t size, DimensionPolicy policy = DimensionPolicy::OddPrime) {
        DenseOp out = zero(d, size, policy);
        const auto one = CycloScalar::one(d, policy);
        for (std::size_t i = 0; i < size; ++i) out.at(i, i) = one;
        return out;
    }

    int d() const noexcept { return d_; }
    std::size_t size() const noexcept { return size_; }
    const std::vector<CycloScalar> &entries() const noexcept { return entries_; }

    CycloScalar &at(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
    const CycloScalar &at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }

    DenseOp adjoint() const {
        DenseOp out = *this;
        for (std::size_t i = 0; i < size_; ++i) {
            for (std::size_t j = 0; j < size_; ++j) out.at(j, i) = at(i, j).conj();
        }
        return out;
    }

    CycloScalar trace() const {
        CycloScalar acc = at(0, 0);
        for (std::size_t i = 1; i < size_; ++i) acc += at(i, i);
        return acc;
    }

    DenseOp pow(int n) const {
        DenseOp out = identity(d_, size_, DimensionPolicy::AnyPrime);
        for (int k = 0; k < n; ++k) out = out * *this;
        return out;
    }

    DenseOp &operator+=(const DenseOp &rhs) {
        check_same(rhs);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
        return *this;
    }

    DenseOp &operator-=(const DenseOp &rhs) {
        check_same(rhs);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
        return *this;
    }

    friend DenseOp operator+(DenseOp lhs, const DenseOp &rhs) { return lhs += rhs; }
    friend DenseOp operator-(DenseOp lhs, const DenseOp &rhs) { return lhs -= rhs; }

    friend DenseOp operator*(const CycloScalar &c, DenseOp m) {
        for (auto &e : m.entries_) e = c * e;
        return m;
    }

    friend DenseOp operator*(const DenseOp &a, const DenseOp &b) {
        a.check_same(b);
        const std::size_t n = a.size_;
        DenseOp out = zero(a.d_, n, DimensionPolicy::AnyPrime);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto &aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const auto &bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    out.at(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend bool operator==(const DenseOp &, const DenseOp &) = default;

    void check_same(const DenseOp &other) const {
        if (d_ != other.d_ || size_ != other.size_) {
            throw Error(ErrorCode::DimensionMismatch, "dense operators of different shape or order");
        }
    }

private:
    int d_;
    std::size_t size_;
    std::vector<CycloScalar> entries_;
};

/// Σ c_i X^i as an explicit d×d matrix: entry (m, n) = c_{(m - n) mod d}.
inline DenseOp to_dense(const MsElement &m) {
    const int d = m.d();
    const auto n = static_cast<std::size_t>(d);
    std::vector<CycloScalar> entries;
    entries.reserve(n * n);
    for (int row = 0; row < d; ++row) {
        for (int col = 0; col < d; ++col) entries.push_back(m[static_cast<std::size_t>(mod(row - col, d))]);
    }
    return DenseOp(d, n, std::move(entries));
}

/// Tr(A†B) from explicit matrices.
inline CycloScalar dense_hs_inner(const DenseOp &a, const DenseOp &b) {
    a.check_same(b);
    CycloScalar acc = CycloScalar::zero(a.d(), DimensionPolicy::AnyPrime);
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        const auto &x = a.entries()[k];
        const auto &y = b.entries()[k];
        if (x.is_zero() || y.is_zero()) continue;
        acc += x.conj() * y;
    }
    return acc;
}

/// Exact test U†U = I.
inline bool is_unitary_dense(const DenseOp &u) {
    return u.adjoint() * u == DenseOp::identity(u.d(), u.size(), DimensionPolicy::AnyPrime);
}

}  // namespace muub
