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

// JSON forms of the exact types.
//
//   scalar:        {"d": int, "coeffs": [[num, den], ...], "root_d_pow": int}
//   ket:           {"d": int, "amps": [scalar, ...]}
//   basis:         ket list plus {"label": "computational" | int}
//   M_s element:   {"d": int, "xcoeffs": [scalar, ...]}
//   dense op:      {"d": int, "size": int, "entries": [scalar, ...]}  (row-major)
//   bipartite ket: {"d": int, "index": "m*d+n", "amps": [scalar, ...]}
//
// Emission is always canonical; ingestion accepts any representative.
// Integers outside int64 are written as decimal strings.

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "muub/cyclo.hpp"
#include "muub/entangle.hpp"
#include "muub/error.hpp"
#include "muub/family.hpp"
#include "muub/hilbert.hpp"
#include "muub/matspace.hpp"

namespace muub::json {

using nlohmann::json;

enum class NumberMode { Exact, Float };

inline json integer(const BigInt &v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

inline BigInt parse_integer(const json &j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception &) {
        }
    }
    throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

inline json rational(const Rational &q) {
    return json::array({integer(boost::multiprecision::numerator(q)), integer(boost::multiprecision::denominator(q))});
}

inline Rational parse_rational(const json &j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "expected [num, den], got " + j.dump());
    const BigInt den = parse_integer(j[1]);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    return Rational(parse_integer(j[0]), den);
}

inline json complex_number(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

inline json scalar(const CycloScalar &a, NumberMode mode = NumberMode::Exact) {
    if (mode == NumberMode::Float) return complex_number(a.to_complex());
    json coeffs = json::array();
    for (const auto &c : a.coeffs()) coeffs.push_back(rational(c));
    return {{"d", a.d()}, {"coeffs", std::move(coeffs)}, {"root_d_pow", a.root_d_pow()}};
}

inline CycloScalar parse_scalar(const json &j) {
    try {
        const int d = j.at("d").get<int>();
        std::vector<Rational> coeffs;
        for (const auto &c : j.at("coeffs")) coeffs.push_back(parse_rational(c));
        const int root = j.contains("root_d_pow") ? j.at("root_d_pow").get<int>() : 0;
        return CycloScalar::from_coeffs(d, coeffs, root);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

inline json scalars(const std::vector<CycloScalar> &v, NumberMode mode) {
    json out = json::array();
    for (const auto &a : v) out.push_back(scalar(a, mode));
    return out;
}

inline std::vector<CycloScalar> parse_scalars(const json &j, int d) {
    std::vector<CycloScalar> out;
    for (const auto &e : j) {
        out.push_back(parse_scalar(e));
        if (out.back().d() != d) throw Error(ErrorCode::DimensionMismatch, "entry order differs from d");
    }
    return out;
}

inline json ket(const Ket &k, NumberMode mode = NumberMode::Exact) {
    return {{"d", k.d()}, {"amps", scalars(k.amps(), mode)}};
}

inline Ket parse_ket(const json &j) {
    try {
        const int d = j.at("d").get<int>();
        return Ket(d, parse_scalars(j.at("amps"), d));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

inline json label(const BasisLabel &l, const char *unlabeled) {
    if (l) return *l;
    return unlabeled;
}

inline json mub_basis(const MubBasis &b, NumberMode mode = NumberMode::Exact) {
    json states = json::array();
    for (const auto &s : b.states) states.push_back(ket(s, mode));
    return {{"d", b.d}, {"label", label(b.label, "computational")}, {"states", std::move(states)}};
}

inline json ms_element(const MsElement &m, NumberMode mode = NumberMode::Exact) {
    return {{"d", m.d()}, {"xcoeffs", scalars(m.xcoeffs(), mode)}};
}

inline MsElement parse_ms_element(const json &j) {
    try {
        const int d = j.at("d").get<int>();
        return MsElement(d, parse_scalars(j.at("xcoeffs"), d));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

inline json muub_basis(const MuubBasis &b, NumberMode mode = NumberMode::Exact) {
    json ops = json::array();
    for (const auto &op : b.ops) ops.push_back(ms_element(op, mode));
    return {{"d", b.d}, {"label", label(b.label, "standard")}, {"ops", std::move(ops)}};
}

inline json dense(const DenseOp &op, NumberMode mode = NumberMode::Exact) {
    return {{"d", op.d()}, {"size", op.size()}, {"entries", scalars(op.entries(), mode)}};
}

inline json bipartite(const BipartiteKet &k, NumberMode mode = NumberMode::Exact) {
    return {{"d", k.d()}, {"index", "m*d+n"}, {"amps", scalars(k.amps(), mode)}};
}

inline json density(const DensityMatrix &rho, NumberMode mode = NumberMode::Exact) {
    return {{"d", rho.d()}, {"dim", rho.dim()}, {"entries", scalars(rho.op().entries(), mode)}};
}

inline json report(const VerificationReport &r) {
    json values = json::array();
    for (const auto &v : r.values) values.push_back(rational(v));
    json bad = json::array();
    for (const auto &c : r.counterexamples) bad.push_back({{"i", c.i}, {"j", c.j}, {"value", rational(c.value)}});
    return {{"a", label(r.a, "standard")},
            {"b", label(r.b, "standard")},
            {"values", std::move(values)},
            {"constant", r.constant ? rational(*r.constant) : json(nullptr)},
            {"verdict", r.is_muub ? "MUUB" : "NOT_MUUB"},
            {"counterexamples", std::move(bad)}};
}

inline json counterexample(const TheoremCounterexample &c, NumberMode mode = NumberMode::Exact) {
    return {{"element", ms_element(c.element, mode)}, {"witness", ket(c.witness, mode)}, {"dense_check", c.dense_unitary}};
}

}  // namespace muub::json
