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

// Invariant suites run by `muub-kit selftest`. Each suite sweeps one family of
// identities for a single d and reports how many checks ran and failed.

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "muub/cyclo.hpp"
#include "muub/entangle.hpp"
#include "muub/family.hpp"
#include "muub/float_oracle.hpp"
#include "muub/hilbert.hpp"
#include "muub/matspace.hpp"
#include "muub/primes.hpp"
#include "muub/random.hpp"

namespace muub::selftest {

struct SuiteResult {
    std::string name;
    int d = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool passed() const { return failures == 0; }
};

struct Options {
    std::uint64_t seed = 0;
    int samples = 200;
};

class Checker {
public:
    explicit Checker(SuiteResult &out) : out_(out) {}

    void expect(bool ok, const std::string &what) {
        ++out_.checks;
        if (ok) return;
        if (out_.failures++ == 0) out_.first_failure = what;
    }

private:
    SuiteResult &out_;
};

namespace detail {

inline Ket all_ones(int d) {
    Ket k = Ket::zero(d);
    for (int m = 0; m < d; ++m) k += Ket::basis(d, m);
    return k;
}

inline Rng rng_for(const Options &opt, int d, std::uint64_t salt) {
    return Rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(d) * 7919ULL + salt);
}

inline std::string at(int d, int r, int s) {
    return "d=" + std::to_string(d) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
}

}  // namespace detail

inline void cyclo_ring(int d, const Options &opt, Checker &c) {
    auto rng = detail::rng_for(opt, d, 1);
    for (int t = 0; t < opt.samples; ++t) {
        const int parity = t % 2;
        const auto a = random_scalar(d, rng, parity);
        const auto b = random_scalar(d, rng, parity);
        const auto x = random_scalar(d, rng, parity);
        c.expect(a * b == b * a, "commutativity");
        c.expect((a * b) * x == a * (b * x), "associativity");
        c.expect(a * (b + x) == a * b + a * x, "distributivity");
        c.expect(a.conj().conj() == a, "conj involution");
        c.expect(a.abs_squared() == a.conj().abs_squared(), "|a|² = |conj a|²");
        c.expect(CycloScalar::omega_pow(d, t) == CycloScalar::omega_pow(d, mod(t, d)), "ω exponent reduction");
    }
}

inline void monoid_laws(int d, const Options &opt, Checker &c) {
    auto rng = detail::rng_for(opt, d, 2);
    const Ket e = Ket::basis(d, 0);
    for (int t = 0; t < opt.samples; ++t) {
        const int parity = t % 2;
        const auto a = random_ket(d, rng, parity);
        const auto b = random_ket(d, rng, parity);
        const auto x = random_ket(d, rng, parity);
        const auto ab = bullet(a, b);
        c.expect(ab.d() == d && ab.amps().size() == static_cast<std::size_t>(d), "closure");
        c.expect(bullet(ab, x) == bullet(a, bullet(b, x)), "associativity");
        c.expect(bullet(e, a) == a && bullet(a, e) == a, "identity |0⟩");
        c.expect(bullet(a, b + x) == ab + bullet(a, x), "distributivity");
    }
}

inline void mub_unbiased(int d, const Options &, Checker &c) {
    const auto all = all_mubs(d);
    const Rational inv(1, d);
    for (std::size_t x = 0; x < all.size(); ++x) {
        const auto &bx = all[x].states;
        for (std::size_t i = 0; i < bx.size(); ++i) {
            for (std::size_t j = i; j < bx.size(); ++j) {
                const auto v = inner(bx[i], bx[j]);
                c.expect(i == j ? v == CycloScalar::one(d) : v.is_zero(), "orthonormality in basis " + std::to_string(x));
            }
        }
        for (std::size_t y = x + 1; y < all.size(); ++y) {
            for (const auto &p : bx) {
                for (const auto &q : all[y].states) {
                    const auto v = inner(p, q).abs_squared();
                    c.expect(v.is_rational() && v.as_rational() == inv,
                             "|⟨φ|ψ⟩|² = 1/d between bases " + std::to_string(x) + "," + std::to_string(y));
                }
            }
        }
    }
}

inline void coefficient_formula(int d, const Options &, Checker &c) {
    const Ket e = Ket::basis(d, 0);
    for (int r = 0; r < d; ++r) {
        for (int s = 0; s < d; ++s) {
            const auto psi = mub_state(d, r, s);
            const auto product = bullet(psi, dagger(psi));
            if (r != 0) {
                c.expect(product == e, "ψ•ψ† = |0⟩ at " + detail::at(d, r, s));
            } else if (s == 0) {
                c.expect(product == detail::all_ones(d), "ψ•ψ† = Σ|m⟩ at r = s = 0");
            }
        }
    }
}

inline void inner_product_proportionality(int d, const Options &opt, Checker &c) {
    auto rng = detail::rng_for(opt, d, 3);
    const Rational d2(d * d);
    for (int t = 0; t < opt.samples; ++t) {
        const int parity = t % 2;
        const auto phi = random_ket(d, rng, parity);
        const auto psi = random_ket(d, rng, parity);
        const auto tr = hs_inner(g_map(phi), g_map(psi));
        c.expect(tr.abs_squared() == inner(phi, psi).abs_squared() * d2, "|Tr G(φ)†G(ψ)|² = d²|⟨φ|ψ⟩|²");
        if (t < 20) {
            c.expect(tr == dense_hs_inner(to_dense(g_map(phi)), to_dense(g_map(psi))), "coefficient vs dense trace");
        }
    }
}

inline void mub_basis_images(int d, const Options &, Checker &c) {
    const auto all = all_mubs(d);
    const Rational target(d);
    for (std::size_t x = 0; x < all.size(); ++x) {
        for (std::size_t y = x + 1; y < all.size(); ++y) {
            for (const auto &p : all[x].states) {
                for (const auto &q : all[y].states) {
                    const auto v = hs_inner(g_map(p), g_map(q)).abs_squared();
                    c.expect(v.is_rational() && v.as_rational() == target, "MUB images |Tr|² = d");
                }
            }
        }
    }
    const auto comp = computational_basis(d);
    for (std::size_t i = 0; i < comp.states.size(); ++i) {
        for (std::size_t j = i + 1; j < comp.states.size(); ++j) {
            c.expect(hs_inner(g_map(comp.states[i]), g_map(comp.states[j])).is_zero(), "X^i ⟂ X^j");
        }
    }
}

inline void monoid_homomorphism(int d, const Options &opt, Checker &c) {
    auto rng = detail::rng_for(opt, d, 4);
    for (int t = 0; t < opt.samples; ++t) {
        const auto a = random_ket(d, rng, t % 2);
        const auto b = random_ket(d, rng, (t / 2) % 2);
        c.expect(to_dense(g_map(bullet(a, b))) == to_dense(g_map(a)) * to_dense(g_map(b)), "G(a•b) = G(a)G(b)");
    }
}

inline void dagger_adjoint(int d, const Options &opt, Checker &c) {
    auto rng = detail::rng_for(opt, d, 5);
    for (int t = 0; t < opt.samples; ++t) {
        const auto a = random_ket(d, rng, t % 2);
        c.expect(to_dense(g_map(dagger(a))) == to_dense(g_map(a)).adjoint(), "G(a†) = G(a)†");
        c.expect(dagger(dagger(a)) == a, "dagger involution");
    }
}

inline void unitarity_equivalence(int d, const Options &opt, Checker &c) {
    for (int r = 0; r < d; ++r) {
        for (int s = 0; s < d; ++s) {
            const auto psi = mub_state(d, r, s);
            const bool monoid = !monoid_unitarity_witness(psi).has_value();
            const bool dense = is_unitary_dense(to_dense(g_map(psi)));
            c.expect(monoid == dense, "monoid ⇔ dense unitarity at " + detail::at(d, r, s));
            c.expect(dense == (r != 0), "unitary iff r ≠ 0 at " + detail::at(d, r, s));
        }
    }
    auto rng = detail::rng_for(opt, d, 6);
    for (int t = 0; t < opt.samples; ++t) {
        // Mix random kets with phased basis kets so both verdicts occur.
        const Ket psi = t % 4 == 0 ? CycloScalar::omega_pow(d, t) * Ket::basis(d, t % d) : random_ket(d, rng, t % 2);
        const bool monoid = !monoid_unitarity_witness(psi).has_value();
        c.expect(monoid == is_unitary_dense(to_dense(g_map(psi))), "monoid ⇔ dense unitarity on random ket");
    }
}

inline void scaling_bijection(int d, const Options &, Checker &c) {
    for (int p = 1; p < d; ++p) c.expect(scaling_is_bijection(d, p), "a ↦ ap mod d bijective, p=" + std::to_string(p));
    c.expect(!scaling_is_bijection(d, 0), "p = 0 collapses");
}

inline void pauli_power(int d, const Options &, Checker &c) {
    const auto id = DenseOp::identity(d, static_cast<std::size_t>(d), DimensionPolicy::AnyPrime);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            for (int n = 0; n <= d; ++n) {
                const auto p = pauli_word(d, b, a, n);
                c.expect(p.agrees(), "(X^bZ^a)^n closed form a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                         " n=" + std::to_string(n));
                if (n == d && d > 2) c.expect(p.product == id, "(X^bZ^a)^d = I");
            }
        }
    }
}

inline void muub_family_suite(int d, const Options &, Checker &c) {
    const auto v = verify_family(d);
    c.expect(static_cast<int>(v.family.size()) == d, "family size d");
    c.expect(v.bases_well_formed, "members unitary and HS-orthogonal");
    for (const auto &p : v.pairs) {
        c.expect(p.is_muub, "pair " + muub_label_string(p.a) + "," + muub_label_string(p.b) + " |Tr|² = d");
    }
    c.expect(v.counterexample_confirmed(), "r = 0 counterexample non-unitary with witness Σ|m⟩");
    for (int r = 1; r < d; ++r) {
        for (int s = 0; s < d; ++s) c.expect(muub_element(d, r, s) == g_map(mub_state(d, r, s)), "recipe = G-image");
    }
}

inline void bell_states(int d, const Options &, Checker &c) {
    std::vector<BipartiteKet> all;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            all.push_back(bell_state(d, a, b));
            c.expect(all.back() == choi(pauli_word_op(d, b, a)), "bell = choi(X^bZ^a)");
            c.expect(is_mes(all.back()), "bell state MES");
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            const auto v = inner(all[i], all[j]);
            c.expect(i == j ? v == CycloScalar::one(d, DimensionPolicy::AnyPrime) : v.is_zero(), "Bell Gram = I");
        }
    }
}

inline void mes_families(int d, const Options &, Checker &c) {
    const Rational inv(1, d);
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}}) {
        std::vector<std::vector<BipartiteKet>> bases;
        for (int r = 1; r < d; ++r) {
            bases.emplace_back();
            for (int s = 0; s < d; ++s) {
                bases.back().push_back(mes_mub_state(d, r, s, a, b));
                c.expect(is_mes(bases.back().back()), "MES at " + detail::at(d, r, s));
                c.expect(inner(bases.back().back(), bases.back().back()) == CycloScalar::one(d), "unit norm");
            }
        }
        for (std::size_t x = 0; x < bases.size(); ++x) {
            for (std::size_t y = x + 1; y < bases.size(); ++y) {
                for (const auto &p : bases[x]) {
                    for (const auto &q : bases[y]) {
                        const auto v = inner(p, q).abs_squared();
                        c.expect(v.is_rational() && v.as_rational() == inv, "cross-r overlap² = 1/d");
                    }
                }
            }
        }
    }
}

inline void traceless_orthogonality_suite(int d, const Options &, Checker &c) {
    const auto all = all_mubs(d);
    const Rational inv(1, d);
    std::vector<std::vector<DensityMatrix>> proj;
    for (const auto &b : all) {
        proj.emplace_back();
        for (const auto &s : b.states) proj.back().push_back(projector(s));
    }
    for (std::size_t x = 0; x < proj.size(); ++x) {
        for (std::size_t i = 0; i < proj[x].size(); ++i) {
            for (std::size_t j = i + 1; j < proj[x].size(); ++j) {
                const auto v = traceless_orthogonality(proj[x][i], proj[x][j]);
                c.expect(v.is_rational() && v.as_rational() == -inv, "same-basis pair gives -1/d");
            }
        }
        for (std::size_t y = x + 1; y < proj.size(); ++y) {
            for (const auto &p : proj[x]) {
                for (const auto &q : proj[y]) c.expect(traceless_orthogonality(p, q).is_zero(), "distinct MUBs give 0");
            }
        }
    }
}

inline void float_oracle_suite(int d, const Options &, Checker &c) {
    const double tol = oracle::kTolerance;
    for (int r = 0; r < d; ++r) {
        for (int s = 0; s < d; ++s) {
            const auto exact = mub_state(d, r, s);
            const auto approx = oracle::mub_state(d, r, s);
            double worst = 0.0;
            for (int a = 0; a < d; ++a) worst = std::max(worst, std::abs(exact[a].to_complex() - approx[a]));
            c.expect(worst < tol, "float MUB amplitudes at " + detail::at(d, r, s));
        }
    }
    const auto v = verify_family(d);
    std::size_t k = 0;
    for (int x = -1; x < d; ++x) {
        if (x == 0) continue;
        for (int y = x + 1; y < d; ++y) {
            if (y == 0) continue;
            const auto &rep = v.pairs[k++];
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    const double f = oracle::hs_abs2(oracle::muub_matrix(d, x, i), oracle::muub_matrix(d, y, j));
                    const double e = static_cast<double>(rep.values[static_cast<std::size_t>(i * d + j)]);
                    c.expect(std::abs(f - e) < tol, "float |Tr|² agrees");
                }
            }
        }
    }
}

struct Suite {
    const char *name;
    void (*run)(int, const Options &, Checker &);
};

inline const std::vector<Suite> &suites() {
    static const std::vector<Suite> all = {
        {"cyclo-ring", cyclo_ring},
        {"monoid-laws", monoid_laws},
        {"mub-unbiased", mub_unbiased},
        {"coefficient-formula", coefficient_formula},
        {"inner-product-proportionality", inner_product_proportionality},
        {"mub-basis-images", mub_basis_images},
        {"monoid-homomorphism", monoid_homomorphism},
        {"dagger-adjoint", dagger_adjoint},
        {"unitarity-equivalence", unitarity_equivalence},
        {"scaling-bijection", scaling_bijection},
        {"pauli-power", pauli_power},
        {"muub-family", muub_family_suite},
        {"bell-states", bell_states},
        {"mes-families", mes_families},
        {"traceless-orthogonality", traceless_orthogonality_suite},
        {"float-oracle", float_oracle_suite},
    };
    return all;
}

inline SuiteResult run_suite(const Suite &suite, int d, const Options &opt) {
    SuiteResult out;
    out.name = suite.name;
    out.d = d;
    Checker checker(out);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        suite.run(d, opt, checker);
    } catch (const std::exception &e) {
        checker.expect(false, std::string("exception: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

/// Every suite for every odd prime d <= max_d.
inline std::vector<SuiteResult> run_all(int max_d, const Options &opt,
                                        const std::function<void(const SuiteResult &)> &on_result = {}) {
    std::vector<SuiteResult> out;
    for (int d : odd_primes_in(3, max_d)) {
        for (const auto &suite : suites()) {
            out.push_back(run_suite(suite, d, opt));
            if (on_result) on_result(out.back());
        }
    }
    return out;
}

}  // namespace muub::selftest
