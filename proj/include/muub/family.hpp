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

// The maximal family of d mutually unbiased unitary bases of M_s: the
// standard basis {X^i} together with
//
//     X_s^(r) = (1/√d) Σ_i ω^{s(d-i)} ω^{-r α(i)} X^i,   r = 1..d-1,
//
// and the pairwise audit |Tr(A†B)|² = d over every cross-basis pair.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muub/cyclo.hpp"
#include "muub/error.hpp"
#include "muub/hilbert.hpp"
#include "muub/matspace.hpp"
#include "muub/primes.hpp"

namespace muub {

/// label std::nullopt is the standard basis {X^0, .., X^{d-1}}.
struct MuubBasis {
    int d;
    BasisLabel label;
    std::vector<MsElement> ops;  // ordered by s
};

inline std::string muub_label_string(const BasisLabel &label) { return label_string(label, "standard"); }

inline MsElement muub_element(int d, int r, int s) {
    require_dimension(d);
    require_index(r, 0, d - 1, "r");
    require_index(s, 0, d - 1, "s");
    if (r == 0) {
        throw Error(ErrorCode::NotUnitaryFamily,
                    "r = 0 does not give unitary operators; see theorem_counterexample");
    }
    const CycloScalar norm = CycloScalar::inv_sqrt_d(d);
    std::vector<CycloScalar> c;
    c.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        // ω^{s(d-i)} · ω^{-r α(i)}
        const CycloScalar phase = CycloScalar::omega_pow(d, static_cast<std::int64_t>(s) * (d - i)) *
                                  CycloScalar::omega_pow(d, -static_cast<std::int64_t>(r) * alpha(d, i));
        c.push_back(norm * phase);
    }
    return MsElement(d, std::move(c));
}

inline MuubBasis standard_basis(int d) {
    require_dimension(d);
    MuubBasis out{d, std::nullopt, {}};
    for (int i = 0; i < d; ++i) out.ops.push_back(MsElement::shift_power(d, i));
    return out;
}

inline MuubBasis muub_basis(int d, int r) {
    MuubBasis out{d, r, {}};
    for (int s = 0; s < d; ++s) out.ops.push_back(muub_element(d, r, s));
    return out;
}

/// [standard, r = 1, .., r = d-1].
inline std::vector<MuubBasis> muub_family(int d) {
    std::vector<MuubBasis> out;
    out.push_back(standard_basis(d));
    for (int r = 1; r < d; ++r) out.push_back(muub_basis(d, r));
    return out;
}

struct MuubCell {
    std::size_t i;
    std::size_t j;
    Rational value;
};

struct VerificationReport {
    int d;
    BasisLabel a;
    BasisLabel b;
    std::vector<Rational> values;    // |Tr(A_i† B_j)|², row-major in (i, j)
    std::optional<Rational> constant;  // the shared value, when all cells agree
    bool is_muub;                     // every cell equals d
    std::vector<MuubCell> counterexamples;  // cells differing from d
};

inline VerificationReport verify_muub_pair(const MuubBasis &a, const MuubBasis &b) {
    if (a.d != b.d) throw Error(ErrorCode::DimensionMismatch, "bases over different d");
    if (a.label == b.label) {
        throw Error(ErrorCode::SameBasis, "basis " + muub_label_string(a.label) + " compared with itself");
    }
    VerificationReport report{a.d, a.label, b.label, {}, std::nullopt, true, {}};
    const Rational target(a.d);
    report.values.reserve(a.ops.size() * b.ops.size());
    for (std::size_t i = 0; i < a.ops.size(); ++i) {
        for (std::size_t j = 0; j < b.ops.size(); ++j) {
            Rational v = hs_inner(a.ops[i], b.ops[j]).abs_squared().as_rational();
            if (v != target) {
                report.is_muub = false;
                report.counterexamples.push_back({i, j, v});
            }
            report.values.push_back(std::move(v));
        }
    }
    if (!report.values.empty()) {
        report.constant = report.values.front();
        for (const auto &v : report.values) {
            if (v != *report.constant) {
                report.constant.reset();
                break;
            }
        }
    }
    return report;
}

/// Pairwise Tr(A_i† A_j) = 0 for i ≠ j and every member unitary.
inline bool is_orthogonal_unitary_basis(const MuubBasis &basis) {
    for (std::size_t i = 0; i < basis.ops.size(); ++i) {
        if (!is_unitary_dense(to_dense(basis.ops[i]))) return false;
        for (std::size_t j = i + 1; j < basis.ops.size(); ++j) {
            if (!hs_inner(basis.ops[i], basis.ops[j]).is_zero()) return false;
        }
    }
    return true;
}

/// The r = s = 0 image G(|ω_0^(0)⟩), which is not unitary.
struct TheoremCounterexample {
    MsElement element;
    Ket witness;          // |ω_0^(0)⟩ • |ω_0^(0)⟩†
    bool dense_unitary;  // outcome of the explicit U†U = I test
};

inline TheoremCounterexample theorem_counterexample(int d) {
    const Ket state = mub_state(d, 0, 0);
    auto witness = monoid_unitarity_witness(state);
    MsElement element = g_map(state);
    const bool dense = is_unitary_dense(to_dense(element));
    return {element, witness ? *witness : Ket::basis(d, 0), dense};
}

struct FamilyVerification {
    int d;
    std::vector<MuubBasis> family;
    std::vector<VerificationReport> pairs;  // ordered by (a, b) family position
    bool bases_well_formed;
    TheoremCounterexample counterexample;

    bool counterexample_confirmed() const {
        Ket all_ones = Ket::zero(d);
        for (int m = 0; m < d; ++m) all_ones += Ket::basis(d, m);
        return !counterexample.dense_unitary && counterexample.witness == all_ones;
    }

    bool pass() const {
        if (static_cast<int>(family.size()) != d || !bases_well_formed) return false;
        for (const auto &p : pairs) {
            if (!p.is_muub) return false;
        }
        return counterexample_confirmed();
    }
};

inline FamilyVerification verify_family(int d) {
    FamilyVerification out{d, muub_family(d), {}, true, theorem_counterexample(d)};
    for (const auto &basis : out.family) {
        if (!is_orthogonal_unitary_basis(basis)) out.bases_well_formed = false;
    }
    for (std::size_t x = 0; x < out.family.size(); ++x) {
        for (std::size_t y = x + 1; y < out.family.size(); ++y) {
            out.pairs.push_back(verify_muub_pair(out.family[x], out.family[y]));
        }
    }
    return out;
}

}  // namespace muub
