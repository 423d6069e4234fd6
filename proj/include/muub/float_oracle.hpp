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

// Complex-double recomputation of the constructions, written against explicit
// matrices and shares nothing with the exact kernel. Used to cross-check exact
// results at an absolute tolerance.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace muub::oracle {

using cd = std::complex<double>;
using Vec = std::vector<cd>;

inline constexpr double kTolerance = 1e-10;

struct Mat {
    std::size_t n = 0;
    std::vector<cd> a;

    explicit Mat(std::size_t size) : n(size), a(size * size) {}
    cd &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    cd operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

inline Mat identity(std::size_t n) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline Mat operator*(const Mat &x, const Mat &y) {
    Mat out(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k)
            for (std::size_t j = 0; j < x.n; ++j) out(i, j) += x(i, k) * y(k, j);
    return out;
}

inline Mat adjoint(const Mat &x) {
    Mat out(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j) out(j, i) = std::conj(x(i, j));
    return out;
}

inline cd trace(const Mat &x) {
    cd t = 0.0;
    for (std::size_t i = 0; i < x.n; ++i) t += x(i, i);
    return t;
}

inline cd root_of_unity(int d, double k) {
    const double theta = 2.0 * std::numbers::pi * k / d;
    return {std::cos(theta), std::sin(theta)};
}

/// Shift matrix, built entry by entry.
inline Mat shift(int d) {
    Mat m(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) m(static_cast<std::size_t>((k + 1) % d), static_cast<std::size_t>(k)) = 1.0;
    return m;
}

inline Mat clock(int d) {
    Mat m(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) m(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = root_of_unity(d, k);
    return m;
}

inline Mat power(const Mat &x, int e) {
    Mat out = identity(x.n);
    for (int k = 0; k < e; ++k) out = out * x;
    return out;
}

/// Σ_{t=a}^{d-1} t, summed term by term.
inline long long alpha_sum(int d, int a) {
    long long s = 0;
    for (int t = a; t < d; ++t) s += t;
    return s;
}

/// Amplitude of |a⟩ in state s of basis r; the phase is evaluated as a product
/// of two complex exponentials without reducing exponents.
inline cd mub_amplitude(int d, int r, int s, int a) {
    const cd w_s = root_of_unity(d, static_cast<double>(s) * (d - a));
    const cd w_r = root_of_unity(d, -static_cast<double>(r) * static_cast<double>(alpha_sum(d, a)));
    return w_s * w_r / std::sqrt(static_cast<double>(d));
}

inline Vec mub_state(int d, int r, int s) {
    Vec v(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) v[static_cast<std::size_t>(a)] = mub_amplitude(d, r, s, a);
    return v;
}

inline Vec computational_state(int d, int k) {
    Vec v(static_cast<std::size_t>(d));
    v[static_cast<std::size_t>(k)] = 1.0;
    return v;
}

inline cd inner(const Vec &x, const Vec &y) {
    cd acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

/// Σ_i c_i X^i as an explicit matrix, with X^i formed by repeated products.
inline Mat shift_combination(int d, const Vec &c) {
    const Mat x = shift(d);
    Mat out(static_cast<std::size_t>(d));
    Mat p = identity(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += c[static_cast<std::size_t>(i)] * p.a[k];
        p = p * x;
    }
    return out;
}

/// Member s of MUUB r as an explicit matrix; r < 0 selects the standard basis X^s.
inline Mat muub_matrix(int d, int r, int s) {
    if (r < 0) return power(shift(d), s);
    return shift_combination(d, mub_state(d, r, s));
}

inline double hs_abs2(const Mat &x, const Mat &y) { return std::norm(trace(adjoint(x) * y)); }

inline bool is_unitary(const Mat &u, double tol = kTolerance) {
    const Mat p = adjoint(u) * u;
    for (std::size_t i = 0; i < u.n; ++i)
        for (std::size_t j = 0; j < u.n; ++j)
            if (std::abs(p(i, j) - (i == j ? 1.0 : 0.0)) > tol) return false;
    return true;
}

/// (1/√d) Σ_{m,n} ⟨n|U|m⟩ |m⟩|n⟩, index m·d + n.
inline Vec choi(const Mat &u) {
    const std::size_t d = u.n;
    Vec v(d * d);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t n = 0; n < d; ++n) v[m * d + n] = u(n, m) / std::sqrt(static_cast<double>(d));
    return v;
}

inline Vec bell_state(int d, int a, int b) {
    return choi(power(shift(d), b) * power(clock(d), a));
}

/// (1/d) Σ_i c_i |W^i⟩ with |·⟩ the unnormalized vector Σ ⟨n|U|m⟩|m⟩|n⟩.
inline Vec mes_mub_state(int d, int r, int s, int a, int b) {
    const Mat w = power(shift(d), b) * power(clock(d), a);
    const std::size_t n = static_cast<std::size_t>(d);
    Vec out(n * n);
    Mat p = identity(n);
    for (int i = 0; i < d; ++i) {
        const cd c = mub_amplitude(d, r, s, i) * std::sqrt(static_cast<double>(d));  // bare phase
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t k = 0; k < n; ++k) out[m * n + k] += c * p(k, m) / static_cast<double>(d);
        p = p * w;
    }
    return out;
}

/// Max |(Tr_side |ψ⟩⟨ψ|) - I/d| over entries.
inline double mes_deviation(const Vec &psi, int d) {
    const std::size_t n = static_cast<std::size_t>(d);
    double worst = 0.0;
    for (int side = 1; side <= 2; ++side) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                cd acc = 0.0;
                for (std::size_t t = 0; t < n; ++t) {
                    acc += side == 1 ? psi[t * n + x] * std::conj(psi[t * n + y])
                                     : psi[x * n + t] * std::conj(psi[y * n + t]);
                }
                worst = std::max(worst, std::abs(acc - (x == y ? 1.0 / d : 0.0)));
            }
        }
    }
    return worst;
}

}  // namespace muub::oracle
