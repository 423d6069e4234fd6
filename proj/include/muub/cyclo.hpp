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

// Exact arithmetic in Q(ω), ω = exp(2πi/d), extended by one power of 1/√d.
//
// A CycloScalar stores integer numerators n_0..n_{d-1}, a positive common
// denominator q and a radical exponent k in {0, 1}; its value is
//
//     (n_0 + n_1 ω + ... + n_{d-1} ω^{d-1}) / (q · d^{k/2}).
//
// Canonical form: n_{d-1} = 0 (using 1 + ω + ... + ω^{d-1} = 0),
// gcd(n_0, .., n_{d-2}, q) = 1, q > 0, and even radical powers folded into q.
// Zero is always stored with k = 0. Within one radical parity the canonical
// form is unique, so equality is structural; across parities it is decided
// through the quadratic Gauss sum (√d ∈ Q(ω) iff d ≡ 1 mod 4).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "muub/error.hpp"
#include "muub/primes.hpp"

namespace muub {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class CycloScalar {
public:
    static CycloScalar zero(int d, DimensionPolicy policy = DimensionPolicy::OddPrime) {
        require_dimension(d, policy);
        return CycloScalar(d);
    }

    static CycloScalar one(int d, DimensionPolicy policy = DimensionPolicy::OddPrime) {
        return from_int(d, 1, policy);
    }

    static CycloScalar from_int(int d, std::int64_t value, DimensionPolicy policy = DimensionPolicy::OddPrime) {
        CycloScalar out = zero(d, policy);
        out.num_[0] = value;
        out.canonicalize();
        return out;
    }

    static CycloScalar from_rational(int d, const Rational &value,
                                     DimensionPolicy policy = DimensionPolicy::OddPrime) {
        CycloScalar out = zero(d, policy);
        out.num_[0] = boost::multiprecision::numerator(value);
        out.den_ = boost::multiprecision::denominator(value);
        out.canonicalize();
        return out;
    }

    /// ω^(e mod d).
    static CycloScalar omega_pow(int d, std::int64_t e, DimensionPolicy policy = DimensionPolicy::OddPrime) {
        CycloScalar out = zero(d, policy);
        out.num_[static_cast<std::size_t>(mod(e, d))] = 1;
        out.canonicalize();
        return out;
    }

    /// 1/√d.
    static CycloScalar inv_sqrt_d(int d, DimensionPolicy policy = DimensionPolicy::OddPrime) {
        CycloScalar out = one(d, policy);
        out.root_ = 1;
        return out;
    }

    /// Σ coeffs[k] ω^k / d^(root_d_pow/2). Any representative is accepted and
    /// canonicalized, including radical powers above 1.
    static CycloScalar from_coeffs(int d, std::span<const Rational> coeffs, int root_d_pow,
                                   DimensionPolicy policy = DimensionPolicy::AnyPrime) {
        require_dimension(d, policy);
        if (coeffs.size() != static_cast<std::size_t>(d)) {
            throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(d) + " coefficients, got " +
                                                          std::to_string(coeffs.size()));
        }
        if (root_d_pow < 0) throw Error(ErrorCode::ParseError, "root_d_pow must be non-negative");
        CycloScalar out(d);
        BigInt common = 1;
        for (const Rational &c : coeffs) {
            const BigInt &q = boost::multiprecision::denominator(c);
            common = common / boost::multiprecision::gcd(common, q) * q;
        }
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            out.num_[k] = boost::multiprecision::numerator(coeffs[k]) *
                          (common / boost::multiprecision::denominator(coeffs[k]));
        }
        out.den_ = common;
        out.root_ = root_d_pow;
        out.canonicalize();
        return out;
    }

    /// √d written inside Q(ω): the Gauss sum Σ (a/d) ω^a
    /// equals +√d for d ≡ 1 mod 4.
    static CycloScalar gauss_sum(int d) {
        require_dimension(d);
        CycloScalar out(d);
        for (int a = 1; a < d; ++a) out.num_[static_cast<std::size_t>(a)] = legendre(a, d);
        out.canonicalize();
        return out;
    }

    int d() const noexcept { return d_; }
    int root_d_pow() const noexcept { return root_; }
    const BigInt &denominator() const noexcept { return den_; }
    std::span<const BigInt> numerators() const noexcept { return num_; }

    /// Canonical rational coefficients c_0..c_{d-1} (c_{d-1} is always 0).
    std::vector<Rational> coeffs() const {
        std::vector<Rational> out;
        out.reserve(num_.size());
        for (const BigInt &n : num_) out.emplace_back(n, den_);
        return out;
    }

    bool is_zero() const noexcept { return den_ == 1 && root_ == 0 && all_zero(); }

    /// True iff the value is a rational number.
    bool is_rational() const {
        const auto even = even_form();
        if (!even) return false;
        for (std::size_t k = 1; k < even->num_.size(); ++k) {
            if (even->num_[k] != 0) return false;
        }
        return true;
    }

    Rational as_rational() const {
        const auto even = even_form();
        if (!even || !is_rational()) {
            throw Error(ErrorCode::Unrepresentable, "scalar " + to_string() + " is not rational");
        }
        return Rational(even->num_[0], even->den_);
    }

    CycloScalar conj() const {
        CycloScalar out(d_);
        const auto n = static_cast<std::size_t>(d_);
        for (std::size_t k = 0; k < n; ++k) out.num_[(n - k) % n] = num_[k];
        out.den_ = den_;
        out.root_ = root_;
        out.canonicalize();
        return out;
    }

    CycloScalar abs_squared() const { return *this * conj(); }

    std::complex<double> to_complex() const {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < d_; ++k) {
            const auto &n = num_[static_cast<std::size_t>(k)];
            if (n == 0) continue;
            const double c = static_cast<double>(Rational(n, den_));
            const double theta = 2.0 * std::numbers::pi * k / d_;
            acc += std::complex<double>(c * std::cos(theta), c * std::sin(theta));
        }
        if (root_ == 1) acc /= std::sqrt(static_cast<double>(d_));
        return acc;
    }

    CycloScalar operator-() const {
        CycloScalar out = *this;
        for (auto &n : out.num_) n = -n;
        return out;
    }

    CycloScalar &operator+=(const CycloScalar &rhs) {
        check_same_order(rhs);
        if (rhs.is_zero()) return *this;
        if (is_zero()) return *this = rhs;
        if (root_ != rhs.root_) {
            // Mixed parity: bring both to Q(ω) or give up.
            auto lhs_even = even_form();
            auto rhs_even = rhs.even_form();
            if (!lhs_even || !rhs_even) {
                throw Error(ErrorCode::Unrepresentable,
                            "sum of a Q(ω) element and a 1/√d multiple leaves the representable set for d = " +
                                std::to_string(d_));
            }
            *this = *lhs_even;
            return *this += *rhs_even;
        }
        if (den_ == rhs.den_) {
            for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += rhs.num_[k];
        } else {
            for (std::size_t k = 0; k < num_.size(); ++k) num_[k] = num_[k] * rhs.den_ + rhs.num_[k] * den_;
            den_ *= rhs.den_;
        }
        canonicalize();
        return *this;
    }

    CycloScalar &operator-=(const CycloScalar &rhs) { return *this += -rhs; }

    CycloScalar &operator*=(const CycloScalar &rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend CycloScalar operator+(CycloScalar lhs, const CycloScalar &rhs) { return lhs += rhs; }
    friend CycloScalar operator-(CycloScalar lhs, const CycloScalar &rhs) { return lhs -= rhs; }

    friend CycloScalar operator*(const CycloScalar &lhs, const CycloScalar &rhs) {
        lhs.check_same_order(rhs);
        CycloScalar out(lhs.d_);
        const auto n = static_cast<std::size_t>(lhs.d_);
        for (std::size_t i = 0; i < n; ++i) {
            if (lhs.num_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (rhs.num_[j] == 0) continue;
                out.num_[(i + j) % n] += lhs.num_[i] * rhs.num_[j];
            }
        }
        out.den_ = lhs.den_ * rhs.den_;
        out.root_ = lhs.root_ + rhs.root_;
        out.canonicalize();
        return out;
    }

    friend CycloScalar operator*(const CycloScalar &lhs, const Rational &rhs) {
        return lhs * from_rational(lhs.d_, rhs, DimensionPolicy::AnyPrime);
    }

    friend bool operator==(const CycloScalar &lhs, const CycloScalar &rhs) {
        if (lhs.d_ != rhs.d_) return false;
        if (lhs.root_ == rhs.root_) return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
        const auto a = lhs.even_form();
        const auto b = rhs.even_form();
        if (!a || !b) return false;
        return a->den_ == b->den_ && a->num_ == b->num_;
    }

    std::string to_string() const {
        std::string out = "(";
        bool first = true;
        for (std::size_t k = 0; k < num_.size(); ++k) {
            if (num_[k] == 0) continue;
            if (!first) out += " + ";
            first = false;
            out += num_[k].str();
            if (k > 0) out += "w^" + std::to_string(k);
        }
        if (first) out += "0";
        out += ")";
        if (den_ != 1) out += "/" + den_.str();
        if (root_ == 1) out += "/sqrt(" + std::to_string(d_) + ")";
        return out;
    }

private:
    explicit CycloScalar(int d) : d_(d), num_(static_cast<std::size_t>(d)), den_(1), root_(0) {}

    bool all_zero() const noexcept {
        for (const auto &n : num_) {
            if (n != 0) return false;
        }
        return true;
    }

    void check_same_order(const CycloScalar &other) const {
        if (d_ != other.d_) {
            throw Error(ErrorCode::DimensionMismatch,
                        "scalars over d = " + std::to_string(d_) + " and d = " + std::to_string(other.d_));
        }
    }

    /// Same value with an even radical power, if one exists in Q(ω).
    std::optional<CycloScalar> even_form() const {
        if (root_ == 0) return *this;
        if (d_ % 4 != 1) return std::nullopt;
        // x/√d = x·g/d with g the Gauss sum.
        CycloScalar lifted = *this;
        lifted.root_ = 0;
        lifted = lifted * gauss_sum(d_);
        lifted.den_ *= d_;
        lifted.canonicalize();
        return lifted;
    }

    void canonicalize() {
        const auto top = num_.size() - 1;
        if (num_[top] != 0) {
            const BigInt shift = num_[top];
            for (auto &n : num_) n -= shift;
        }
        while (root_ >= 2) {
            root_ -= 2;
            den_ *= d_;
        }
        if (den_ < 0) {
            den_ = -den_;
            for (auto &n : num_) n = -n;
        }
        if (all_zero()) {
            den_ = 1;
            root_ = 0;
            return;
        }
        if (den_ != 1) {
            BigInt g = den_;
            for (const auto &n : num_) {
                if (n == 0) continue;
                g = boost::multiprecision::gcd(g, n);
                if (g == 1) return;
            }
            for (auto &n : num_) n /= g;
            den_ /= g;
        }
    }

    int d_;
    std::vector<BigInt> num_;
    BigInt den_;
    int root_;
};

inline CycloScalar omega_pow(int d, std::int64_t e) { return CycloScalar::omega_pow(d, e); }
inline CycloScalar conj(const CycloScalar &a) { return a.conj(); }
inline CycloScalar abs_squared(const CycloScalar &a) { return a.abs_squared(); }
inline std::complex<double> to_complex(const CycloScalar &a) { return a.to_complex(); }

}  // namespace muub
