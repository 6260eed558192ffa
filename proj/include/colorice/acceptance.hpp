#pragma once

// Desk-scale verification battery.  Each criterion runs one identity family
// over a bounded grid and reports what the machine observed next to the
// analyzed verdict the suite requires.  A criterion whose observation differs
// from its analyzed verdict makes the whole battery fail, so a documented
// deviation must stay exactly as documented: it can neither regress further
// nor silently start passing.
//
// All grids are driven by Config so the battery can be shrunk (or grown) from
// a key = value file without touching code.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "config.hpp"
#include "demazure.hpp"
#include "fock.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "schur.hpp"
#include "solvability.hpp"
#include "whittaker.hpp"

namespace colorice {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool observed_ok = false;  // what the machine measured for the stated identity
    bool expected_ok = true;   // the analyzed verdict
    bool matches_analysis = false;
    long long checked = 0;
    std::string note;

    Json to_json() const {
        Json j;
        j["id"] = id;
        j["title"] = title;
        j["observed"] = observed_ok ? "pass" : "fail";
        j["expected"] = expected_ok ? "pass" : "fail";
        j["matches_analysis"] = matches_analysis;
        j["checked"] = checked;
        if (!note.empty()) j["note"] = note;
        return j;
    }
};

namespace acceptance_detail {

// Strictly decreasing nonnegative r-tuples with top part <= maxpart.
inline std::vector<std::vector<long long>> strict_mus(int r, long long maxpart) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    std::function<void(long long, int)> gen = [&](long long lo, int left) {
        if (left == 0) {
            out.emplace_back(cur.rbegin(), cur.rend());
            return;
        }
        for (long long p = lo; p <= maxpart; ++p) {
            cur.push_back(p);
            gen(p + 1, left - 1);
            cur.pop_back();
        }
    };
    gen(0, r);
    return out;
}

// All r-tuples with entries lo..hi.
inline std::vector<std::vector<int>> tuples(int lo, int hi, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r, lo);
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == hi) cur[i--] = lo;
        if (i < 0) break;
        ++cur[i];
    }
    if (r == 0) out.assign(1, {});
    return out;
}

// Partitions inside the maxlen x maxpart box (weakly decreasing).
inline std::vector<Partition> box_partitions(int maxlen, long long maxpart) {
    std::vector<Partition> out{{}};
    std::vector<long long> cur;
    std::function<void(long long, int)> gen = [&](long long hi, int left) {
        if (left == 0) return;
        for (long long p = hi; p >= 1; --p) {
            cur.push_back(p);
            out.push_back(cur);
            gen(p, left - 1);
            cur.pop_back();
        }
    };
    gen(maxpart, maxlen);
    std::sort(out.begin(), out.end());
    return out;
}

// Partitions with |lambda| <= w and at most maxlen parts.
inline std::vector<Partition> partitions_up_to(long long w, int maxlen) {
    std::vector<Partition> out;
    for (long long d = 0; d <= w; ++d)
        for (auto& p : partitions_of(d, maxlen)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

inline PairingFn alpha_pairing(int m) {
    return [m](int i, int j) {
        return Specialization::generic().alpha_value_at(-i, -j, m);
    };
}

inline SystemSpec make_system(Family fam, int m, std::vector<long long> mu,
                              std::vector<int> boundary,
                              Specialization sp = Specialization::generic()) {
    SystemSpec s;
    s.family = fam;
    s.spec = std::move(sp);
    s.palette = m;
    s.mu = std::move(mu);
    s.boundary = std::move(boundary);
    return s;
}

// Per-family conservation pairing: straight-flow tables conserve {left,top}
// against {right,bottom}; the reversed-flow table conserves {top,right}
// against {left,bottom}.
inline bool vertex_conserves(Family fam, int l, int t, int r, int b) {
    const bool gamma = fam == Family::Gamma;
    std::array<int, 2> in = gamma ? std::array<int, 2>{t, r} : std::array<int, 2>{l, t};
    std::array<int, 2> out = gamma ? std::array<int, 2>{l, b} : std::array<int, 2>{r, b};
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    return in == out;
}

// Independent state walker: enumerates every admissible filling vertex by
// vertex, asserting the conservation pairing at each vertex, and returns the
// number of complete states (for cross-checking against the layered count).
inline long long walk_states(const SystemSpec& s, long long& conservation_failures) {
    s.validate();
    const int N = s.column_count();
    const bool gamma = s.family == Family::Gamma;
    const bool colored = s.family == Family::Colored;
    std::vector<int> labels{EMPTY};
    for (int c = 0; c < s.palette; ++c) labels.push_back(colored ? c + 1 : c);
    long long states = 0;

    std::function<void(int, std::vector<int>)> row_rec = [&](int row, std::vector<int> top) {
        if (row == s.rows()) {
            if (top == std::vector<int>(N, EMPTY)) ++states;
            return;
        }
        std::vector<int> bottom(N, EMPTY);
        std::function<void(int, int)> vrec = [&](int pos, int carry) {
            if (gamma ? pos >= N : pos < 0) {
                if (carry == s.boundary[row]) row_rec(row + 1, bottom);
                return;
            }
            const int t = top[pos];
            for (int out_h : labels) {
                for (int out_v : labels) {
                    int l = gamma ? out_h : carry;
                    int r = gamma ? carry : out_h;
                    VertexWeight w = s.weight(pos, l, t, r, out_v);
                    if (!w.admissible()) continue;
                    if (!vertex_conserves(s.family, l, t, r, out_v)) ++conservation_failures;
                    bottom[pos] = out_v;
                    vrec(gamma ? pos + 1 : pos - 1, out_h);
                    bottom[pos] = EMPTY;
                }
            }
        };
        vrec(gamma ? 0 : N - 1, EMPTY);
    };
    row_rec(0, s.top_boundary());
    return states;
}

}  // namespace acceptance_detail

// --- 1. column/crossing exchange relation, unfused and fused -----------------

inline CriterionResult criterion_unfused_exchange(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 1;
    c.title = "column/crossing exchange, unfused and fused, generic symbols";
    auto spec = Specialization::generic();
    bool ok = true, reverse_rejected = true;
    for (int m = 1; m <= cfg.max_palette; ++m) {
        for (int ell = 1; ell <= m; ++ell) {
            TFn t = t_column(m, spec, ell);
            auto res = verify_rtt(m, ell, t, t, r_matrix(m, spec, ell, 2, 0, 1),
                                  r_matrix(m, spec, ell + 1, 2, 0, 1));
            ok = ok && res.ok();
            c.checked += res.checked;
            if (m > 1) {
                auto rev = verify_rtt(m, ell, t, t, r_matrix(m, spec, ell + 1, 2, 0, 1),
                                      r_matrix(m, spec, ell, 2, 0, 1));
                c.checked += rev.checked;
                reverse_rejected = reverse_rejected && !rev.ok();
            }
        }
        auto fused = verify_rtt_fused(m, spec);
        ok = ok && fused.ok();
        c.checked += fused.checked;
    }
    c.observed_ok = ok && reverse_rejected;
    c.note = std::string("shift direction: reference color on the left crossing, successor on "
                         "the right") +
             (reverse_rejected ? " (opposite direction rejected)"
                               : " (opposite direction unexpectedly admissible)");
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 2. crossing/crossing exchange under all specializations -----------------

inline CriterionResult criterion_crossing_exchange(const Config& cfg) {
    CriterionResult c;
    c.id = 2;
    c.title = "crossing/crossing exchange, generic and both specializations";
    bool ok = true;
    for (int m = 1; m <= cfg.max_palette; ++m) {
        for (const auto& spec : {Specialization::generic(), Specialization::iwahori(),
                                 Specialization::metaplectic(m)}) {
            for (int ref = 1; ref <= m; ++ref) {
                auto res = verify_rrr(m, r_matrix(m, spec, ref, 3, 0, 1),
                                      r_matrix(m, spec, ref, 3, 0, 2),
                                      r_matrix(m, spec, ref, 3, 1, 2));
                ok = ok && res.ok();
                c.checked += res.checked;
            }
        }
    }
    c.observed_ok = ok;
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 3. twist invariance ------------------------------------------------------

inline CriterionResult criterion_twist_invariance(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 3;
    c.title = "exchange relations survive diagonal and flux twists";
    if (!cfg.run_twists) {
        c.observed_ok = true;
        c.matches_analysis = true;
        c.note = "skipped by config (run_twists = false)";
        return c;
    }
    auto spec = Specialization::generic();
    const Scalar flux = Scalar::phi_pow(1);
    bool ok = true;
    for (int m = 1; m <= cfg.max_palette; ++m) {
        PairingFn pairing = ad::alpha_pairing(m);
        // variant 0: diagonal (pairing) twist; 1: flux twist; 2: both
        for (int variant = 0; variant < 3; ++variant) {
            auto twist_t = [&](TFn f) {
                if (variant != 1) f = twist_standard(std::move(f), pairing);
                if (variant != 0) f = twist_flux(std::move(f), flux);
                return f;
            };
            auto twist_r = [&](RFn f) {
                if (variant != 1) f = twist_standard_r(std::move(f), pairing);
                if (variant != 0) f = twist_flux_r(std::move(f), flux);
                return f;
            };
            for (int ell = 1; ell <= m; ++ell) {
                TFn t = twist_t(t_column(m, spec, ell));
                auto res = verify_rtt(m, ell, t, t, twist_r(r_matrix(m, spec, ell, 2, 0, 1)),
                                      twist_r(r_matrix(m, spec, ell + 1, 2, 0, 1)));
                ok = ok && res.ok();
                c.checked += res.checked;
            }
            for (int ref = 1; ref <= m; ++ref) {
                auto res = verify_rrr(m, twist_r(r_matrix(m, spec, ref, 3, 0, 1)),
                                      twist_r(r_matrix(m, spec, ref, 3, 0, 2)),
                                      twist_r(r_matrix(m, spec, ref, 3, 1, 2)));
                ok = ok && res.ok();
                c.checked += res.checked;
            }
        }
    }
    c.observed_ok = ok;
    c.note = "variants: diagonal pairing twist, flux twist, composite";
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 4 and 5 share one sweep over the colored transport grid -----------------

inline void criterion_transport_sweep(const Config& cfg, CriterionResult& c4,
                                      CriterionResult& c5) {
    namespace ad = acceptance_detail;
    c4 = CriterionResult{};
    c4.id = 4;
    c4.title = "adjacent-exchange transport reproduces enumerated values";
    c5 = CriterionResult{};
    c5.id = 5;
    c5.title = "uniform normalizer for the equal-color exchange";
    auto spec = Specialization::generic();
    bool ok4 = true;
    std::set<int> eps{-1, 0, 1};
    long long eps_instances = 0;
    for (int m = 1; m <= cfg.max_palette; ++m) {
        for (int r = 1; r <= cfg.max_rank; ++r) {
            for (const auto& mu : ad::strict_mus(r, cfg.max_mu)) {
                std::map<std::vector<int>, Laurent> zs;
                for (const auto& sig : ad::tuples(1, m, r))
                    zs.emplace(sig, partition_function(
                                        ad::make_system(Family::Colored, m, mu, sig, spec)));
                for (const auto& [sig, Z] : zs) {
                    for (int i = 0; i + 1 < r; ++i) {
                        if (sig[i] != sig[i + 1]) {
                            auto target = sig;
                            std::swap(target[i], target[i + 1]);
                            auto moving = sig;
                            Laurent stepped = transport_step(Z, moving, i, m, spec);
                            ok4 = ok4 && stepped == zs.at(target);
                            ++c4.checked;
                        } else if (!Z.is_zero()) {
                            auto hits = functional_equation_exponents(Z, i);
                            std::set<int> hs(hits.begin(), hits.end());
                            for (auto it = eps.begin(); it != eps.end();)
                                it = hs.count(*it) ? std::next(it) : eps.erase(it);
                            ++eps_instances;
                        }
                    }
                }
            }
        }
    }
    c4.observed_ok = ok4;
    c4.matches_analysis = c4.observed_ok == c4.expected_ok;
    c5.checked = eps_instances;
    c5.observed_ok = !eps.empty();
    std::string survivors;
    for (int e : eps) survivors += (survivors.empty() ? "" : ", ") + std::to_string(e);
    c5.note = "surviving exponents of the normalizer z^(e*alpha_i): {" + survivors + "}";
    c5.matches_analysis = c5.observed_ok == c5.expected_ok;
}

// --- 6. frozen systems match the product formula ------------------------------

inline CriterionResult criterion_monostatic(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 6;
    c.title = "single-state systems equal the product formula";
    bool ok = true;
    long long qualifying = 0, complement = 0;
    for (int m = 1; m <= cfg.max_palette; ++m) {
        for (int r = 1; r <= cfg.max_rank; ++r) {
            for (const auto& mu : ad::strict_mus(r, cfg.max_mu)) {
                std::vector<int> sigma(r);
                for (int i = 0; i < r; ++i) sigma[i] = res_pos(-mu[i], m);
                auto sorted = sigma;
                std::sort(sorted.begin(), sorted.end());
                const bool distinct =
                    std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
                for (const auto& spec : {Specialization::generic(), Specialization::iwahori(),
                                         Specialization::metaplectic(m)}) {
                    auto pf = partition_function_full(
                        ad::make_system(Family::Colored, m, mu, sigma, spec));
                    const bool matches =
                        pf.states == 1 && pf.value == monostatic_value(mu, sigma, m, spec);
                    // the distinctness hypothesis is required and sharp
                    ok = ok && (matches == distinct);
                    ++c.checked;
                    ++(distinct ? qualifying : complement);
                }
            }
        }
    }
    c.observed_ok = ok;
    c.note = std::to_string(qualifying) +
             " qualifying instances (distinct exit colors) are single-state and equal the "
             "product; the hypothesis is sharp on the remaining " +
             std::to_string(complement);
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 7. closed form and the printed-constant audit ----------------------------

inline CriterionResult criterion_closed_form(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 7;
    c.title = "closed form transports exactly; constant audit on every instance";
    auto spec = Specialization::generic();
    bool ok = true;
    long long deviations = 0;
    bool reference_seen = false;
    for (int m = 1; m <= cfg.max_palette; ++m) {
        for (int r = 1; r <= cfg.max_rank; ++r) {
            for (const auto& mu : ad::strict_mus(r, cfg.max_mu)) {
                std::vector<int> colres(r);
                for (int i = 0; i < r; ++i) colres[i] = res_pos(-mu[i], m);
                std::vector<int> sig = colres;
                std::sort(sig.begin(), sig.end());
                if (std::adjacent_find(sig.begin(), sig.end()) != sig.end()) continue;
                do {
                    auto audit = closed_form(mu, sig, m, spec);
                    Laurent Z =
                        partition_function(ad::make_system(Family::Colored, m, mu, sig, spec));
                    ok = ok && audit.transported == Z && audit.derived_matches &&
                         audit.ratio_is_q_power && audit.ratio_matches_lengths;
                    ++c.checked;
                    if (!(audit.ratio == Scalar::one())) ++deviations;
                    if (m == 2 && mu == std::vector<long long>{2, 1} &&
                        sig == std::vector<int>{1, 2})
                        reference_seen = audit.ratio == Scalar::q_pow(-2);
                } while (std::next_permutation(sig.begin(), sig.end()));
            }
        }
    }
    const bool grid_has_reference =
        cfg.max_palette >= 2 && cfg.max_rank >= 2 && cfg.max_mu >= 2;
    c.observed_ok = ok && (reference_seen || !grid_has_reference);
    c.note = "printed constant differs from the transported value on " +
             std::to_string(deviations) + " of " + std::to_string(c.checked) +
             " instances (each a recorded q-power)" +
             (grid_has_reference ? "; includes the reference instance with ratio q^-2" : "");
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 8. one-supercolor character identity -------------------------------------

inline CriterionResult criterion_character_identity(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 8;
    c.title = "dressed lattice value equals the deformed character, two Schur oracles";
    bool ok = true;
    const auto lambdas = ad::box_partitions(2, 3);
    for (int n = 1; n <= cfg.max_n; ++n) {
        for (int r = 1; r <= cfg.max_rank; ++r) {
            for (const auto& lambda : lambdas) {
                if (static_cast<int>(lambda.size()) > r) continue;
                for (int theta = 0; theta < n; ++theta) {
                    auto rep = verify_tokuyama(n, lambda, r, theta);
                    ok = ok && rep.ok;
                    ++c.checked;
                }
            }
        }
    }
    long long oracle_checked = 0;
    bool oracles_agree = true;
    for (int r = 1; r <= cfg.max_rank; ++r) {
        for (const auto& lambda : lambdas) {
            if (static_cast<int>(lambda.size()) > r) continue;
            oracles_agree = oracles_agree && schur_ssyt(lambda, r) == schur_bialternant(lambda, r);
            ++oracle_checked;
        }
    }
    c.checked += oracle_checked;
    c.observed_ok = ok && oracles_agree;
    c.note = "character oracles (tableau sum vs alternant quotient) agree on " +
             std::to_string(oracle_checked) + " shapes";
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 9. power-substitution identity (documented deformation failure) ----------

inline CriterionResult criterion_power_identity(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 9;
    c.title = "power-substituted character identity at the deformed parameter";
    // analyzed: the deformed identity fails exactly on instances with n >= 2
    // and r >= 2, so the expected verdict depends on whether the configured
    // grid reaches that region.
    c.expected_ok = !(cfg.max_n >= 2 && cfg.max_rank >= 2);
    bool classical_all = true, pattern_all = true, deformed_all = true;
    long long deformed_failures = 0;
    for (int n = 1; n <= cfg.max_n; ++n) {
        for (int r = 1; r <= cfg.max_rank; ++r) {
            for (const auto& lambda : ad::partitions_up_to(cfg.max_weight, r)) {
                auto rep = verify_power_identity(n, lambda, r);
                classical_all = classical_all && rep.classical_exact;
                pattern_all = pattern_all && rep.ok;
                if (!rep.deformed_exact) {
                    deformed_all = false;
                    ++deformed_failures;
                }
                ++c.checked;
            }
        }
    }
    // frozen residual of the smallest failing instance
    auto ref = verify_power_identity(2, {}, 2);
    Laurent expected_residual = (Scalar::q_pow(2) - Scalar::one()) * Laurent::var(2, 0) *
                                Laurent::var(2, 1);
    const bool residual_ok = ref.difference == expected_residual;

    c.observed_ok = deformed_all && classical_all;
    c.matches_analysis = (c.observed_ok == c.expected_ok) && classical_all && pattern_all &&
                         residual_ok;
    c.note = "deformed form fails on " + std::to_string(deformed_failures) +
             " instances (exactly those with degree >= 2 and rank >= 2); classical v = 1 "
             "form exact everywhere; frozen residual (q^2-1) z1 z2 machine-checked" +
             (residual_ok ? "" : " [RESIDUAL DRIFTED]");
    return c;
}

// --- 10. reversed-flow refinement and shift lemma ------------------------------

inline CriterionResult criterion_flow_refinement(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 10;
    c.title = "reversed-flow refinement, shift lemma, and polynomiality";
    bool ok = true;
    for (int n = 1; n <= cfg.max_n; ++n) {
        for (int r = 1; r <= cfg.max_rank; ++r) {
            for (const auto& mu : ad::strict_mus(r, cfg.max_mu)) {
                for (const auto& theta : ad::tuples(0, n - 1, r)) {
                    auto rep = verify_gamma_delta(n, mu, theta);
                    ok = ok && rep.ok;
                    ++c.checked;
                }
            }
        }
    }
    c.observed_ok = ok;
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 11. two-specialization duality --------------------------------------------

inline CriterionResult criterion_duality(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 11;
    c.title = "operator-word duality between the two specializations";
    bool ok = true;
    long long vanishing = 0;
    for (int n = 2; n <= std::min(3, cfg.max_n); ++n) {
        for (int r = 1; r <= std::min(cfg.max_rank, n); ++r) {
            // ordered tuples of distinct residues mod n
            std::vector<std::vector<int>> thetas;
            for (const auto& t : ad::tuples(0, n - 1, r)) {
                auto s = t;
                std::sort(s.begin(), s.end());
                if (std::adjacent_find(s.begin(), s.end()) == s.end()) thetas.push_back(t);
            }
            for (const auto& mu : ad::strict_mus(r, cfg.max_mu)) {
                for (const auto& theta : thetas) {
                    auto rep = verify_duality(n, mu, theta);
                    ok = ok && rep.ok;
                    if (rep.vanishing) ++vanishing;
                    ++c.checked;
                }
            }
        }
    }
    c.observed_ok = ok;
    c.note = std::to_string(vanishing) +
             " instances vanish on both sides; the rest yield z-free constants (Gauss-sum "
             "product and q-monomial) extracted by proportionality";
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 12. truncated product identity --------------------------------------------

inline CriterionResult criterion_cauchy(const Config& cfg) {
    CriterionResult c;
    c.id = 12;
    c.title = "truncated two-family product identity in the formal expansion";
    bool ok = true;
    for (int n = 1; n <= std::min(2, cfg.max_n); ++n) {
        for (int theta = 0; theta < n; ++theta) {
            auto rep = verify_cauchy(n, 2, theta, cfg.max_weight);
            ok = ok && rep.ok;
            ++c.checked;
        }
    }
    c.observed_ok = ok;
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 13. transfer matrix equals the exponentiated current series ---------------

inline CriterionResult criterion_transfer(const Config& cfg) {
    CriterionResult c;
    c.id = 13;
    c.title = "one-row transfer matrix equals the exponentiated current series";
    if (!cfg.run_fock) {
        c.observed_ok = true;
        c.matches_analysis = true;
        c.note = "skipped by config (run_fock = false)";
        return c;
    }
    TruncationParams tp;
    tp.energy_bound = cfg.energy_bound;
    tp.degree_bound = cfg.degree_bound;
    bool ok = true;
    long long kets = 0;
    for (int m = 1; m <= cfg.max_palette; ++m) {
        auto rep = verify_transfer_hamiltonian(m, tp);
        ok = ok && rep.ok;
        kets += rep.kets_checked;
        c.checked += rep.elements_checked;
    }
    c.observed_ok = ok;
    c.note = std::to_string(kets) + " basis states (includes the vacuum diagonal and the "
             "(-Phi/q)^level diagonal checks); series coefficient (1-q^{2k})/k in force";
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 14. current commutativity --------------------------------------------------

inline CriterionResult criterion_commutators(const Config& cfg) {
    CriterionResult c;
    c.id = 14;
    c.title = "lowering currents commute on the truncated basis";
    if (!cfg.run_fock || cfg.commutator_range < 2) {
        c.observed_ok = true;
        c.matches_analysis = true;
        c.note = "skipped by config";
        return c;
    }
    TruncationParams tp;
    tp.energy_bound = cfg.energy_bound;
    tp.degree_bound = cfg.degree_bound;
    bool ok = true;
    for (int m = 1; m <= cfg.max_palette; ++m) {
        auto rep = verify_current_commutativity(m, cfg.commutator_range, tp);
        ok = ok && rep.ok;
        c.checked += rep.pairs_checked;
    }
    c.observed_ok = ok;
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// --- 15. structural invariants ---------------------------------------------------

inline CriterionResult criterion_structural(const Config& cfg) {
    namespace ad = acceptance_detail;
    CriterionResult c;
    c.id = 15;
    c.title = "conservation, column/palette extension, operator relations";
    bool ok = true;
    std::vector<std::string> problems;

    // (a) every nonzero table entry conserves under the per-family pairing,
    //     so every enumerated state is built from conserving vertices.
    {
        long long support = 0;
        for (int m = 1; m <= cfg.max_palette; ++m) {
            for (auto fam : {Family::Colored, Family::Supercolored, Family::DeltaPrime,
                             Family::Delta, Family::Gamma}) {
                std::vector<Specialization> specs{Specialization::generic()};
                if (fam == Family::Colored || fam == Family::Supercolored) {
                    specs.push_back(Specialization::iwahori());
                    specs.push_back(Specialization::metaplectic(m));
                }
                const bool colored = fam == Family::Colored;
                std::vector<int> labels{EMPTY};
                for (int col = 0; col < m; ++col) labels.push_back(colored ? col + 1 : col);
                for (const auto& sp : specs) {
                    for (int col = 0; col < m; ++col) {
                        const int cc = colored ? res_pos(-col, m) : res_mod(col, m);
                        for (int l : labels)
                            for (int t : labels)
                                for (int r : labels)
                                    for (int b : labels) {
                                        VertexWeight w{Scalar::zero(), 0};
                                        switch (fam) {
                                            case Family::Colored:
                                                w = colored_weight(m, sp, cc, l, t, r, b);
                                                break;
                                            case Family::Supercolored:
                                                w = supercolored_weight(m, sp, cc, l, t, r, b);
                                                break;
                                            case Family::DeltaPrime:
                                                w = delta_prime_weight(m, cc, l, t, r, b);
                                                break;
                                            case Family::Delta:
                                                w = delta_weight(m, cc, l, t, r, b);
                                                break;
                                            case Family::Gamma:
                                                w = gamma_weight(m, cc, l, t, r, b);
                                                break;
                                        }
                                        ++c.checked;
                                        if (w.coeff.is_zero()) continue;
                                        ++support;
                                        if (!ad::vertex_conserves(fam, l, t, r, b)) {
                                            ok = false;
                                            problems.push_back("nonconserving table entry");
                                        }
                                    }
                    }
                }
            }
        }
        (void)support;
    }

    // (a') independent state walk on sample systems: every vertex of every
    //      enumerated state conserves, and the walk count matches the layered
    //      enumeration.
    {
        long long cons_failures = 0;
        const std::vector<SystemSpec> samples = {
            ad::make_system(Family::Colored, 2, {3, 0}, {1, 2}),
            ad::make_system(Family::Colored, 2, {4, 2, 1}, {2, 1, 1}),
            ad::make_system(Family::Supercolored, 2, {3, 1}, {1, 0}),
            ad::make_system(Family::Delta, 2, {2, 1}, {1, 0}),
            ad::make_system(Family::Gamma, 2, {2, 1}, {0, 1}),
        };
        for (const auto& s : samples) {
            long long walked = ad::walk_states(s, cons_failures);
            long long layered = partition_function_full(s).states;
            if (walked != layered) {
                ok = false;
                problems.push_back("state walk disagrees with the layered enumeration");
            }
            c.checked += walked;
        }
        if (cons_failures > 0) {
            ok = false;
            problems.push_back("conservation failure inside an enumerated state");
        }
    }

    // (b) column extension: appending empty columns never changes the value.
    {
        const std::vector<SystemSpec> samples = {
            ad::make_system(Family::Colored, 2, {3, 0}, {1, 2}),
            ad::make_system(Family::Colored, 3, {4, 2, 0}, {3, 1, 2}),
            ad::make_system(Family::Supercolored, 2, {3, 1}, {1, 0}),
            ad::make_system(Family::Delta, 2, {2, 1}, {1, 0}),
            ad::make_system(Family::DeltaPrime, 2, {2, 1}, {1, 0}),
            ad::make_system(Family::Gamma, 2, {2, 1}, {0, 1}),
            ad::make_system(Family::Colored, 2, {2, 1}, {1, 2}, Specialization::metaplectic(2)),
        };
        for (auto s : samples) {
            const Laurent base = partition_function(s);
            const int n0 = s.column_count();
            for (int extra : {1, s.palette, 2 * s.palette + 1}) {
                s.columns = n0 + extra;
                if (!(partition_function(s) == base)) {
                    ok = false;
                    problems.push_back("column extension changed the value");
                }
                ++c.checked;
            }
        }
    }

    // (c) palette extension: residue-anchored embeddings preserve the
    //     order-specialized value.
    {
        auto zof = [&](int m, std::vector<long long> mu, std::vector<int> sig) {
            return partition_function(ad::make_system(Family::Colored, m, std::move(mu),
                                                      std::move(sig),
                                                      Specialization::iwahori()));
        };
        auto extend = [&](const std::vector<long long>& mu, const std::vector<int>& sig, int m,
                          const std::vector<int>& tau, int m2) {
            std::vector<long long> mu2(mu.size());
            std::vector<int> sig2(sig.size());
            for (std::size_t i = 0; i < mu.size(); ++i)
                mu2[i] = (mu[i] / m) * m2 + tau[res_mod(mu[i], m)];
            for (std::size_t i = 0; i < sig.size(); ++i)
                sig2[i] = res_pos(-tau[res_mod(-sig[i], m)], m2);
            return std::make_pair(mu2, sig2);
        };
        const std::vector<std::tuple<int, std::vector<long long>, std::vector<int>>> cases = {
            {2, {2, 1}, {1, 2}},    {2, {2, 1}, {2, 1}},       {2, {3, 0}, {1, 2}},
            {2, {4, 2, 1}, {2, 1, 1}}, {1, {1, 0}, {1, 1}},    {3, {3, 2, 1}, {1, 3, 2}},
            {2, {5, 2}, {2, 2}},    {3, {4, 2, 0}, {3, 1, 2}},
        };
        for (const auto& [m, mu, sig] : cases) {
            const Laurent base = zof(m, mu, sig);
            std::vector<std::pair<std::vector<int>, int>> taus;
            if (m == 1) taus = {{{0}, 2}, {{0}, 3}};
            if (m == 2) taus = {{{0, 1}, 3}, {{0, 2}, 3}, {{0, 1}, 4}, {{0, 3}, 4}, {{0, 2}, 4}};
            if (m == 3)
                taus = {{{0, 1, 2}, 4}, {{0, 1, 3}, 4}, {{0, 2, 3}, 4}, {{0, 1, 2}, 5},
                        {{0, 2, 4}, 5}};
            for (const auto& [tau, m2] : taus) {
                auto [mu2, sig2] = extend(mu, sig, m, tau, m2);
                if (!(zof(m2, mu2, sig2) == base)) {
                    ok = false;
                    problems.push_back("palette extension changed the value");
                }
                ++c.checked;
            }
        }
    }

    // (d) braid relation and two-sided invertibility of the operators on
    //     rank-3 monomials through the configured total degree.
    {
        const int cap = cfg.braid_degree / 2;
        for (int e0 = -cap; e0 <= cap; ++e0)
            for (int e1 = -cap; e1 <= cap; ++e1)
                for (int e2 = -cap; e2 <= cap; ++e2) {
                    if (std::abs(e0) + std::abs(e1) + std::abs(e2) > cfg.braid_degree) continue;
                    Laurent f = Laurent::term({e0, e1, e2}, Scalar::one());
                    Laurent lhs = apply_T(apply_T(apply_T(f, 0), 1), 0);
                    Laurent rhs = apply_T(apply_T(apply_T(f, 1), 0), 1);
                    if (!(lhs == rhs)) {
                        ok = false;
                        problems.push_back("braid relation failed");
                    }
                    for (int i = 0; i < 2; ++i) {
                        if (!(apply_T_inv(apply_T(f, i), i) == f) ||
                            !(apply_T(apply_T_inv(f, i), i) == f)) {
                            ok = false;
                            problems.push_back("operator inverse failed");
                        }
                    }
                    c.checked += 3;
                }
    }

    c.observed_ok = ok;
    if (!problems.empty()) {
        std::sort(problems.begin(), problems.end());
        problems.erase(std::unique(problems.begin(), problems.end()), problems.end());
        std::string joined;
        for (const auto& p : problems) joined += (joined.empty() ? "" : "; ") + p;
        c.note = joined;
    }
    c.matches_analysis = c.observed_ok == c.expected_ok;
    return c;
}

// ---------------------------------------------------------------------------

inline std::vector<CriterionResult> run_acceptance(const Config& cfg) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_unfused_exchange(cfg));
    out.push_back(criterion_crossing_exchange(cfg));
    out.push_back(criterion_twist_invariance(cfg));
    CriterionResult c4, c5;
    criterion_transport_sweep(cfg, c4, c5);
    out.push_back(c4);
    out.push_back(c5);
    out.push_back(criterion_monostatic(cfg));
    out.push_back(criterion_closed_form(cfg));
    out.push_back(criterion_character_identity(cfg));
    out.push_back(criterion_power_identity(cfg));
    out.push_back(criterion_flow_refinement(cfg));
    out.push_back(criterion_duality(cfg));
    out.push_back(criterion_cauchy(cfg));
    out.push_back(criterion_transfer(cfg));
    out.push_back(criterion_commutators(cfg));
    out.push_back(criterion_structural(cfg));
    return out;
}

inline std::string acceptance_text(const std::vector<CriterionResult>& results) {
    std::string out;
    int mismatches = 0;
    for (const auto& r : results) {
        char line[160];
        std::snprintf(line, sizeof(line), "criterion %2d: %s  %s (checked %lld)", r.id,
                      r.observed_ok ? "PASS" : "FAIL", r.title.c_str(), r.checked);
        out += line;
        out += "\n";
        if (!r.note.empty()) out += "              " + r.note + "\n";
        if (!r.matches_analysis) {
            out += "              DEVIATES FROM THE ANALYZED VERDICT\n";
            ++mismatches;
        } else if (!r.expected_ok) {
            out += "              (documented deviation: this FAIL is the analyzed verdict)\n";
        }
    }
    int observed_pass = 0;
    for (const auto& r : results) observed_pass += r.observed_ok ? 1 : 0;
    out += "summary: " + std::to_string(observed_pass) + "/" +
           std::to_string(results.size()) + " observed PASS; " +
           std::to_string(results.size() - static_cast<std::size_t>(mismatches)) + "/" +
           std::to_string(results.size()) + " match the analyzed verdicts\n";
    return out;
}

inline bool acceptance_ok(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.matches_analysis) return false;
    return true;
}

}  // namespace colorice
