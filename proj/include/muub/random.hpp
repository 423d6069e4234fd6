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

// Seeded generators for property sweeps. Output is a pure function of the
// engine state, so the same seed reproduces the same sample set.

#include <cstdint>
#include <random>
#include <vector>

#include "muub/cyclo.hpp"
#include "muub/hilbert.hpp"

namespace muub {

using Rng = std::mt19937_64;

/// Σ c_k ω^k / (q · √d^parity) with integer c_k in [-bound, bound] and q in 1..3.
inline CycloScalar random_scalar(int d, Rng &rng, int parity = 0, int bound = 8) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) c.emplace_back(coeff(rng));
    const Rational scale(1, den(rng));
    for (auto &x : c) x *= scale;
    return CycloScalar::from_coeffs(d, c, parity);
}

/// All amplitudes share one radical parity so sums stay representable.
inline Ket random_ket(int d, Rng &rng, int parity = 0, int bound = 8) {
    std::vector<CycloScalar> amps;
    amps.reserve(static_cast<std::size_t>(d));
    std::bernoulli_distribution sparse(0.25);
    for (int i = 0; i < d; ++i) {
        amps.push_back(sparse(rng) ? CycloScalar::zero(d) : random_scalar(d, rng, parity, bound));
    }
    return Ket(d, std::move(amps));
}

}  // namespace muub
