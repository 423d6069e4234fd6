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

// muub-kit command-line front end. run() is the whole program minus process
// plumbing, so tests can drive it with argument vectors and string streams.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "muub/cyclo.hpp"
#include "muub/entangle.hpp"
#include "muub/error.hpp"
#include "muub/family.hpp"
#include "muub/float_oracle.hpp"
#include "muub/hilbert.hpp"
#include "muub/matspace.hpp"
#include "muub/selftest.hpp"
#include "muub/serialize.hpp"

namespace muub::cli {

namespace mj = muub::json;

inline constexpr const char *kToolName = "muub-kit";
inline constexpr const char *kVersion = "1.0.0";

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kDegenerate = 3,
    kVerificationFailed = 4,
    kIoError = 5,
};

enum class Format { Json, Csv, Pretty };

struct RunConfig {
    std::string command;
    int d = 3;
    std::optional<int> r;
    std::optional<int> s;
    int a = 0;
    int b = 0;
    int n = 1;
    bool all = false;
    mj::NumberMode mode = mj::NumberMode::Exact;
    Format format = Format::Json;
    std::string out_path;
    std::uint64_t seed = 0;
    int samples = 200;
    int max_d = 7;
};

inline int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateFamily: return kDegenerate;
        case ErrorCode::InvalidDimension:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::NotUnitaryFamily:
        case ErrorCode::NotUnitary:
        case ErrorCode::SameBasis:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::ParseError: return kInvalidInput;
        case ErrorCode::InvalidState:
        case ErrorCode::Unrepresentable: return kVerificationFailed;
    }
    return kUsage;
}

namespace detail {

using Json = nlohmann::json;


inline bool color_enabled(const RunConfig &cfg) {
    return cfg.format == Format::Pretty && cfg.out_path.empty() && std::getenv("MUUB_NO_COLOR") == nullptr;
}

inline std::string verdict_text(bool ok, const RunConfig &cfg) {
    const char *word = ok ? "PASS" : "FAIL";
    if (!color_enabled(cfg)) return word;
    return std::string(ok ? "\033[32m" : "\033[31m") + word + "\033[0m";
}

inline std::string format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Pretty: return "pretty";
    }
    return "json";
}

inline Json config_json(const RunConfig &cfg) {
    Json j = {{"command", cfg.command},
              {"mode", cfg.mode == mj::NumberMode::Exact ? "exact" : "float"},
              {"format", format_name(cfg.format)},
              {"seed", cfg.seed}};
    if (cfg.command == "selftest") {
        j["max_d"] = cfg.max_d;
        j["samples"] = cfg.samples;
    } else {
        j["d"] = cfg.d;
    }
    if (cfg.r) j["r"] = *cfg.r;
    if (cfg.s) j["s"] = *cfg.s;
    if (cfg.command == "bell" || cfg.command == "mes" || cfg.command == "pauli") {
        j["a"] = cfg.a;
        j["b"] = cfg.b;
    }
    if (cfg.command == "pauli") j["n"] = cfg.n;
    if (cfg.command == "mub") j["all"] = cfg.all;
    return j;
}

inline Json wrap(const RunConfig &cfg, Json result) {
    return {{"tool", kToolName}, {"version", kVersion}, {"config", config_json(cfg)}, {"result", std::move(result)}};
}

inline std::string rational_text(const Rational &q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    return num.str() + "/" + den.str();
}

inline Json float_vec(const oracle::Vec &v) {
    Json out = Json::array();
    for (const auto &z : v) out.push_back(Json::array({z.real(), z.imag()}));
    return out;
}

inline double deviation(const std::vector<CycloScalar> &exact, const oracle::Vec &approx) {
    double worst = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) worst = std::max(worst, std::abs(exact[i].to_complex() - approx[i]));
    return worst;
}

/// Output of one command before it is written anywhere.
struct Outcome {
    int code = kOk;
    Json result;
    std::string csv;
    std::string pretty;
};

inline void csv_abs2_rows(std::ostringstream &os, const std::string &label, int s,
                          const std::vector<CycloScalar> &amps) {
    for (std::size_t a = 0; a < amps.size(); ++a) {
        os << label << ',' << s << ',' << a << ',' << rational_text(amps[a].abs_squared().as_rational()) << '\n';
    }
}

inline Outcome cmd_mub(const RunConfig &cfg) {
    Outcome o;
    require_dimension(cfg.d);
    std::ostringstream csv, pretty;
    csv << "basis,s,index,abs2\n";
    const bool float_mode = cfg.mode == mj::NumberMode::Float;
    double worst = 0.0;

    auto emit_ket = [&](const std::string &label, int r_or_comp, int s, const Ket &k) {
        csv_abs2_rows(csv, label, s, k.amps());
        pretty << "basis " << label << " s=" << s << ":";
        for (const auto &amp : k.amps()) pretty << "  " << amp.to_string();
        pretty << '\n';
        if (!float_mode) return mj::ket(k);
        const auto approx = r_or_comp < 0 ? oracle::computational_state(cfg.d, s) : oracle::mub_state(cfg.d, r_or_comp, s);
        worst = std::max(worst, deviation(k.amps(), approx));
        return Json{{"d", cfg.d}, {"amps", float_vec(approx)}};
    };

    if (cfg.r && cfg.s && !cfg.all) {
        const Ket k = mub_state(cfg.d, *cfg.r, *cfg.s);
        o.result = {{"ket", emit_ket(std::to_string(*cfg.r), *cfg.r, *cfg.s, k)}, {"label", *cfg.r}, {"s", *cfg.s}};
    } else {
        std::vector<MubBasis> bases;
        if (cfg.r && !cfg.all) {
            bases.push_back(mub_basis(cfg.d, *cfg.r));
        } else {
            bases = all_mubs(cfg.d);
        }
        Json arr = Json::array();
        for (const auto &basis : bases) {
            Json states = Json::array();
            for (std::size_t s = 0; s < basis.states.size(); ++s) {
                states.push_back(emit_ket(label_string(basis.label), basis.label ? *basis.label : -1,
                                          static_cast<int>(s), basis.states[s]));
            }
            arr.push_back({{"d", basis.d}, {"label", mj::label(basis.label, "computational")}, {"states", states}});
        }
        o.result = {{"bases", arr}, {"count", bases.size()}};
    }
    if (float_mode) o.result["max_deviation"] = worst;
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

inline Outcome cmd_muub(const RunConfig &cfg) {
    Outcome o;
    require_dimension(cfg.d);
    std::ostringstream csv, pretty;
    csv << "basis,s,index,abs2\n";
    const bool float_mode = cfg.mode == mj::NumberMode::Float;
    double worst = 0.0;

    auto emit = [&](const BasisLabel &label, int s, const MsElement &m) {
        const std::string name = muub_label_string(label);
        csv_abs2_rows(csv, name, s, m.xcoeffs());
        pretty << "basis " << name << " s=" << s << ":";
        for (std::size_t i = 0; i < m.xcoeffs().size(); ++i) pretty << "  " << m[i].to_string() << "·X^" << i;
        pretty << '\n';
        if (!float_mode) return mj::ms_element(m);
        oracle::Vec approx(static_cast<std::size_t>(cfg.d));
        if (label) {
            approx = oracle::mub_state(cfg.d, *label, s);
        } else {
            approx[static_cast<std::size_t>(s)] = 1.0;
        }
        worst = std::max(worst, deviation(m.xcoeffs(), approx));
        return Json{{"d", cfg.d}, {"xcoeffs", float_vec(approx)}};
    };

    if (cfg.r && cfg.s) {
        const auto m = muub_element(cfg.d, *cfg.r, *cfg.s);
        o.result = {{"element", emit(*cfg.r, *cfg.s, m)}, {"label", *cfg.r}, {"s", *cfg.s}};
    } else {
        std::vector<MuubBasis> fam;
        if (cfg.r) {
            fam.push_back(*cfg.r == 0 ? standard_basis(cfg.d) : muub_basis(cfg.d, *cfg.r));
        } else {
            fam = muub_family(cfg.d);
        }
        Json arr = Json::array();
        for (const auto &basis : fam) {
            Json ops = Json::array();
            for (std::size_t s = 0; s < basis.ops.size(); ++s) ops.push_back(emit(basis.label, static_cast<int>(s), basis.ops[s]));
            arr.push_back({{"d", basis.d}, {"label", mj::label(basis.label, "standard")}, {"ops", ops}});
        }
        o.result = {{"bases", arr}, {"count", fam.size()}};
    }
    if (float_mode) o.result["max_deviation"] = worst;
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

inline Outcome cmd_verify(const RunConfig &cfg) {
    Outcome o;
    require_dimension(cfg.d);
    const auto v = verify_family(cfg.d);
    const bool float_mode = cfg.mode == mj::NumberMode::Float;
    const int d = cfg.d;

    std::ostringstream csv, pretty;
    csv << "a,b,i,j,abs2\n";
    Json pairs = Json::array();
    double worst = 0.0;
    std::size_t k = 0;
    for (int x = -1; x < d; ++x) {
        if (x == 0) continue;
        for (int y = x + 1; y < d; ++y) {
            if (y == 0) continue;
            const auto &rep = v.pairs[k++];
            Json entry = mj::report(rep);
            Json fvalues = Json::array();
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    const auto &exact = rep.values[static_cast<std::size_t>(i * d + j)];
                    csv << muub_label_string(rep.a) << ',' << muub_label_string(rep.b) << ',' << i << ',' << j << ','
                        << rational_text(exact) << '\n';
                    if (float_mode) {
                        const double f = oracle::hs_abs2(oracle::muub_matrix(d, x, i), oracle::muub_matrix(d, y, j));
                        worst = std::max(worst, std::abs(f - static_cast<double>(exact)));
                        fvalues.push_back(f);
                    }
                }
            }
            if (float_mode) entry["values"] = fvalues;
            pretty << "pair (" << muub_label_string(rep.a) << ", " << muub_label_string(rep.b) << "): "
                   << (rep.constant ? "C = " + rational_text(*rep.constant) : std::string("no common constant")) << "  "
                   << verdict_text(rep.is_muub, cfg) << '\n';
            pairs.push_back(std::move(entry));
        }
    }
    bool pass = v.pass();
    Json result = {{"d", d},
                   {"bases", v.family.size()},
                   {"bases_well_formed", v.bases_well_formed},
                   {"pairs", pairs},
                   {"counterexample", mj::counterexample(v.counterexample, cfg.mode)},
                   {"counterexample_confirmed", v.counterexample_confirmed()}};
    if (float_mode) {
        const bool float_ok = worst < oracle::kTolerance;
        result["max_deviation"] = worst;
        result["float_agreement"] = float_ok;
        pass = pass && float_ok;
    }
    result["verdict"] = pass ? "pass" : "fail";

    std::ostringstream head;
    head << "d = " << d << ", " << v.family.size() << " bases, " << v.pairs.size() << " pairs\n";
    head << pretty.str();
    head << "r = 0 counterexample non-unitary: " << verdict_text(v.counterexample_confirmed(), cfg) << '\n';
    if (float_mode) head << "float max deviation: " << std::scientific << worst << '\n';
    head << "verdict: " << verdict_text(pass, cfg) << '\n';

    o.code = pass ? kOk : kVerificationFailed;
    o.result = std::move(result);
    o.csv = csv.str();
    o.pretty = head.str();
    return o;
}

inline Json partial_trace_audit(const BipartiteKet &psi, mj::NumberMode mode) {
    const auto rho = projector(psi);
    return {{"mes", is_mes(psi)},
            {"trace_1", mj::density(partial_trace(rho, 1), mode)},
            {"trace_2", mj::density(partial_trace(rho, 2), mode)}};
}

inline Outcome cmd_bell(const RunConfig &cfg) {
    Outcome o;
    const auto psi = bell_state(cfg.d, cfg.a, cfg.b);
    const bool float_mode = cfg.mode == mj::NumberMode::Float;
    o.result = partial_trace_audit(psi, cfg.mode);
    if (float_mode) {
        const auto approx = oracle::bell_state(cfg.d, cfg.a, cfg.b);
        o.result["state"] = {{"d", cfg.d}, {"index", "m*d+n"}, {"amps", float_vec(approx)}};
        o.result["max_deviation"] = deviation(psi.amps(), approx);
    } else {
        o.result["state"] = mj::bipartite(psi);
    }
    std::ostringstream csv, pretty;
    csv << "m,n,abs2\n";
    pretty << "bell d=" << cfg.d << " a=" << cfg.a << " b=" << cfg.b << ":\n";
    for (int m = 0; m < cfg.d; ++m) {
        for (int n = 0; n < cfg.d; ++n) {
            const auto &amp = psi.at(m, n);
            csv << m << ',' << n << ',' << rational_text(amp.abs_squared().as_rational()) << '\n';
            if (!amp.is_zero()) pretty << "  |" << m << "," << n << ">  " << amp.to_string() << '\n';
        }
    }
    pretty << "maximally entangled: " << verdict_text(o.result["mes"].get<bool>(), cfg) << '\n';
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

inline Outcome cmd_mes(const RunConfig &cfg) {
    Outcome o;
    require_word_family(cfg.d, cfg.a, cfg.b);
    const int r = cfg.r.value_or(1);
    const int s = cfg.s.value_or(0);
    const auto psi = mes_mub_state(cfg.d, r, s, cfg.a, cfg.b);
    const bool float_mode = cfg.mode == mj::NumberMode::Float;
    o.result = partial_trace_audit(psi, cfg.mode);
    if (float_mode) {
        const auto approx = oracle::mes_mub_state(cfg.d, r, s, cfg.a, cfg.b);
        o.result["state"] = {{"d", cfg.d}, {"index", "m*d+n"}, {"amps", float_vec(approx)}};
        o.result["max_deviation"] = deviation(psi.amps(), approx);
    } else {
        o.result["state"] = mj::bipartite(psi);
    }
    std::ostringstream csv, pretty;
    csv << "r,s,overlap_abs2\n";
    pretty << "mes d=" << cfg.d << " a=" << cfg.a << " b=" << cfg.b << " r=" << r << " s=" << s << '\n';
    Json overlaps = Json::array();
    bool unbiased = true;
    for (int r2 = 1; r2 < cfg.d; ++r2) {
        for (int s2 = 0; s2 < cfg.d; ++s2) {
            const auto value = inner(psi, mes_mub_state(cfg.d, r2, s2, cfg.a, cfg.b)).abs_squared().as_rational();
            if (r2 != r && value != Rational(1, cfg.d)) unbiased = false;
            overlaps.push_back({{"r", r2}, {"s", s2}, {"value", mj::rational(value)}});
            csv << r2 << ',' << s2 << ',' << rational_text(value) << '\n';
        }
    }
    o.result["overlaps"] = overlaps;
    o.result["cross_basis_unbiased"] = unbiased;
    pretty << "maximally entangled: " << verdict_text(o.result["mes"].get<bool>(), cfg) << '\n';
    pretty << "cross-basis overlap² = 1/" << cfg.d << ": " << verdict_text(unbiased, cfg) << '\n';
    o.code = (o.result["mes"].get<bool>() && unbiased) ? kOk : kVerificationFailed;
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

inline Outcome cmd_pauli(const RunConfig &cfg) {
    Outcome o;
    const auto p = pauli_word(cfg.d, cfg.b, cfg.a, cfg.n);
    o.result = {{"product", mj::dense(p.product, cfg.mode)},
                {"phase", mj::scalar(p.phase, cfg.mode)},
                {"x_power", p.x_power},
                {"z_power", p.z_power},
                {"agrees", p.agrees()}};
    std::ostringstream csv, pretty;
    csv << "row,col,abs2\n";
    for (std::size_t i = 0; i < p.product.size(); ++i)
        for (std::size_t j = 0; j < p.product.size(); ++j)
            csv << i << ',' << j << ',' << rational_text(p.product.at(i, j).abs_squared().as_rational()) << '\n';
    pretty << "(X^" << cfg.b << " Z^" << cfg.a << ")^" << cfg.n << " = " << p.phase.to_string() << " X^" << p.x_power
           << " Z^" << p.z_power << "  " << verdict_text(p.agrees(), cfg) << '\n';
    o.code = p.agrees() ? kOk : kVerificationFailed;
    o.csv = csv.str();
    o.pretty = pretty.str();
    return o;
}

inline Outcome cmd_selftest(const RunConfig &cfg, std::ostream &progress) {
    Outcome o;
    selftest::Options opt{cfg.seed, cfg.samples};
    std::ostringstream pretty, csv;
    // Wall-clock timing appears only in the pretty view so json/csv stay byte-stable.
    csv << "suite,d,checks,failures\n";
    const bool live = cfg.format == Format::Pretty && cfg.out_path.empty();
    auto line = [&](const selftest::SuiteResult &r) {
        std::ostringstream l;
        l << std::left << std::setw(32) << r.name << " d=" << std::setw(3) << r.d << " " << std::right << std::setw(7)
          << r.checks << " checks  " << std::fixed << std::setprecision(3) << r.seconds << "s  "
          << verdict_text(r.passed(), cfg);
        if (!r.passed()) l << "  (" << r.failures << " failed; first: " << r.first_failure << ")";
        l << '\n';
        if (live) progress << l.str() << std::flush;
        pretty << l.str();
    };
    const auto results = selftest::run_all(cfg.max_d, opt, line);
    Json arr = Json::array();
    bool ok = !results.empty();
    std::vector<std::string> failed;
    for (const auto &r : results) {
        arr.push_back({{"suite", r.name},
                       {"d", r.d},
                       {"checks", r.checks},
                       {"failures", r.failures},
                       {"first_failure", r.first_failure}});
        csv << r.name << ',' << r.d << ',' << r.checks << ',' << r.failures << '\n';
        if (!r.passed()) {
            ok = false;
            failed.push_back(r.name + " (d=" + std::to_string(r.d) + ")");
        }
    }
    Json dims = Json::array();
    for (int d : odd_primes_in(3, cfg.max_d)) dims.push_back(d);
    o.result = {{"dimensions", dims}, {"suites", arr}, {"failed", failed}, {"verdict", ok ? "pass" : "fail"}};
    std::ostringstream tail;
    if (!failed.empty()) {
        tail << "failed suites:";
        for (const auto &f : failed) tail << ' ' << f;
        tail << '\n';
    }
    tail << "selftest: " << verdict_text(ok, cfg) << '\n';
    o.pretty = live ? tail.str() : pretty.str() + tail.str();
    o.csv = csv.str();
    o.code = ok ? kOk : kVerificationFailed;
    return o;
}

}  // namespace detail

/// Parses args (without argv[0]), runs one command, writes the result.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Mutually unbiased unitary bases: construction and exact verification", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string mode = "exact";
    std::string format = "json";
    auto common = [&](CLI::App *sub) {
        sub->add_option("--mode", mode, "Number mode")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
        sub->add_option("--seed", cfg.seed, "Seed for randomized sweeps");
    };
    auto with_d = [&](CLI::App *sub) { sub->add_option("--d", cfg.d, "Dimension (prime)")->required(); };

    auto *mub = app.add_subcommand("mub", "Emit mutually unbiased bases of H_d");
    with_d(mub);
    mub->add_option("--r", cfg.r, "Basis index");
    mub->add_option("--s", cfg.s, "State index");
    mub->add_flag("--all", cfg.all, "All d+1 bases");
    common(mub);

    auto *muub = app.add_subcommand("muub", "Emit the MUUB family of M_s");
    with_d(muub);
    muub->add_option("--r", cfg.r, "Basis index (0 = standard basis)");
    muub->add_option("--s", cfg.s, "Element index");
    common(muub);

    auto *verify = app.add_subcommand("verify", "Build the family and audit every pair");
    with_d(verify);
    common(verify);

    auto *bell = app.add_subcommand("bell", "Generalized Bell state with partial-trace audit");
    with_d(bell);
    bell->add_option("--a", cfg.a, "Z exponent");
    bell->add_option("--b", cfg.b, "X exponent");
    common(bell);

    auto *mes = app.add_subcommand("mes", "Maximally entangled MUB state");
    with_d(mes);
    mes->add_option("--r", cfg.r, "Basis index (1..d-1)");
    mes->add_option("--s", cfg.s, "State index");
    mes->add_option("--a", cfg.a, "Z exponent of the word");
    mes->add_option("--b", cfg.b, "X exponent of the word");
    common(mes);

    auto *pauli = app.add_subcommand("pauli", "Power of a Pauli word, explicit vs closed form");
    with_d(pauli);
    pauli->add_option("--a", cfg.a, "Z exponent");
    pauli->add_option("--b", cfg.b, "X exponent");
    pauli->add_option("--n", cfg.n, "Power");
    common(pauli);

    auto *self = app.add_subcommand("selftest", "Run every invariant suite");
    self->add_option("--max-d", cfg.max_d, "Largest dimension swept");
    self->add_option("--samples", cfg.samples, "Random samples per suite");
    common(self);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion &) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.mode = mode == "float" ? mj::NumberMode::Float : mj::NumberMode::Exact;
    cfg.format = format == "csv" ? Format::Csv : format == "pretty" ? Format::Pretty : Format::Json;

    detail::Outcome outcome;
    try {
        if (cfg.command == "mub") outcome = detail::cmd_mub(cfg);
        else if (cfg.command == "muub") outcome = detail::cmd_muub(cfg);
        else if (cfg.command == "verify") outcome = detail::cmd_verify(cfg);
        else if (cfg.command == "bell") outcome = detail::cmd_bell(cfg);
        else if (cfg.command == "mes") outcome = detail::cmd_mes(cfg);
        else if (cfg.command == "pauli") outcome = detail::cmd_pauli(cfg);
        else outcome = detail::cmd_selftest(cfg, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }

    std::string text;
    switch (cfg.format) {
        case Format::Json: text = detail::wrap(cfg, outcome.result).dump(2) + "\n"; break;
        case Format::Csv: text = outcome.csv; break;
        case Format::Pretty: text = outcome.pretty; break;
    }

    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        file << text;
        if (!file) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return kIoError;
        }
    }
    return outcome.code;
}

}  // namespace muub::cli
