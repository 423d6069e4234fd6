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

#include <cstdint>
#include <string>
#include <vector>

#include "muub/error.hpp"

namespace muub {

constexpr bool is_prime(int n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (int k = 3; k * k <= n; k += 2) {
        if (n % k == 0) return false;
    }
    return true;
}

constexpr bool is_odd_prime(int n) { return n > 2 && is_prime(n); }

/// Which orders of ω a constructor admits. Everything except the Pauli/Bell
/// layer requires an odd prime.
enum class DimensionPolicy { OddPrime, AnyPrime };

inline void require_dimension(int d, DimensionPolicy policy = DimensionPolicy::OddPrime) {
    const bool ok = policy == DimensionPolicy::OddPrime ? is_odd_prime(d) : is_prime(d);
    if (!ok) {
        throw Error(ErrorCode::InvalidDimension,
                    "d = " + std::to_string(d) +
                        (policy == DimensionPolicy::OddPrime ? " is not an odd prime" : " is not a prime"));
    }
}

inline void require_index(int value, int lo, int hi, const char *name) {
    if (value < lo || value > hi) {
        throw Error(ErrorCode::IndexOutOfRange, std::string(name) + " = " + std::to_string(value) +
                                                    " outside [" + std::to_string(lo) + ", " +
                                                    std::to_string(hi) + "]");
    }
}

/// Non-negative residue of e mod d.
constexpr int mod(std::int64_t e, int d) {
    const std::int64_t r = e % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

/// Odd primes p with lo <= p <= hi, ascending.
inline std::vector<int> odd_primes_in(int lo, int hi) {
    std::vector<int> out;
    for (int p = lo < 3 ? 3 : lo; p <= hi; ++p) {
        if (is_odd_prime(p)) out.push_back(p);
    }
    return out;
}

/// The map a -> a*p mod d over a = 0..d-1, in order of a.
inline std::vector<int> scaling_map(int d, int p) {
    std::vector<int> image(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        image[static_cast<std::size_t>(a)] = mod(static_cast<std::int64_t>(a) * p, d);
    }
    return image;
}

/// True iff a -> a*p mod d permutes {0..d-1}. For prime d this holds exactly
/// when p is not a multiple of d.
inline bool scaling_is_bijection(int d, int p) {
    std::vector<bool> hit(static_cast<std::size_t>(d), false);
    for (int l : scaling_map(d, p)) {
        if (hit[static_cast<std::size_t>(l)]) return false;
        hit[static_cast<std::size_t>(l)] = true;
    }
    return true;
}

/// Legendre symbol (a/p) for odd prime p.
constexpr int legendre(int a, int p) {
    a = mod(a, p);
    if (a == 0) return 0;
    std::int64_t result = 1;
    std::int64_t base = a;
    int e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

}  // namespace muub
