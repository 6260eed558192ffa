#pragma once

/*
  Special-function identities built on the lattice models: the deformed
  Weyl-character formula for the metaplectic tables, the power-map identity
  between Hecke parameters, the two-sided duality between the metaplectic
  and the palette-relabeled Iwahori systems, and a truncated Cauchy
  identity for the dressed characters.
*/

#include "demazure.hpp"
#include "schur.hpp"

namespace colorice {

inline std::vector<long long> rho(int r) {
    std::vector<long long> v(r);
    for (int i = 0; i < r; ++i) v[i] = r - 1 - i;
    return v;
}

// Pi_{i<j} (1 - c * (z_i/z_j)^{-n}) over variable slots vars[0..k-1].
inline Laurent root_product(int rank, const std::vector<int>& vars, const Scalar& c, int n) {
    Laurent out = Laurent::one(rank);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            std::vector<int> e(rank, 0);
            e[vars[i]] = -n;
            e[vars[j]] = n;
            out *= Laurent::one(rank) - Laurent::term(std::move(e), c);
        }
    return out;
}

inline Laurent monomial_on(int rank, const std::vector<int>& vars,
                           const std::vector<long long>& exps) {
    std::vector<int> e(rank, 0);
    for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i]] = static_cast<int>(exps[i]);
    return Laurent::term(std::move(e), Scalar::one());
}

// ---------------------------------------------------------------------------
// Deformed Weyl character formula (metaplectic supercolored systems).

struct TokuyamaReport {
    std::vector<long long> mu;
    Partition lambda;         // recovered shape, empty when vanishing
    bool vanishing = false;   // mu is not theta + n*(lambda + rho); both sides zero
    Laurent lhs, rhs;
    bool ok = false;
};

// For a constant boundary residue theta in 0..n-1 the dressed one-supercolor
// value z^theta * Z(mu, theta)(w0 z^n) equals
//   z^(theta + n rho) Pi(1 - q^2 z^-(n alpha)) s_lambda(z^n)
// when mu = n(lambda + rho) + theta for a partition lambda, and 0 otherwise.
inline TokuyamaReport verify_tokuyama_at(int n, const std::vector<long long>& mu, int theta) {
    const int r = static_cast<int>(mu.size());
    TokuyamaReport rep;
    rep.mu = mu;
    std::vector<long long> rh = rho(r);

    SystemSpec s;
    s.family = Family::Supercolored;
    s.spec = Specialization::metaplectic(n);
    s.palette = n;
    s.mu = mu;
    s.boundary.assign(r, theta);
    Laurent Z = partition_function(s);

    std::vector<int> all(r);
    for (int i = 0; i < r; ++i) all[i] = i;
    std::vector<long long> th(r, theta);
    rep.lhs = monomial_on(r, all, th) * Z.power_subst(n).reverse_vars();

    for (int i = 0; i < r; ++i) {
        if (res_mod(mu[i] - theta, n) != 0) rep.vanishing = true;
    }
    if (rep.vanishing) {
        rep.rhs = Laurent::zero(r);
        rep.ok = rep.lhs.is_zero();
        return rep;
    }

    rep.lambda.resize(r);
    for (int i = 0; i < r; ++i) rep.lambda[i] = (mu[i] - theta) / n - rh[i];
    std::vector<long long> shift(r);
    for (int i = 0; i < r; ++i) shift[i] = theta + n * rh[i];
    rep.rhs = monomial_on(r, all, shift) * root_product(r, all, Scalar::q_pow(2), n) *
              schur_bialternant(rep.lambda, r).power_subst(n);
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

inline TokuyamaReport verify_tokuyama(int n, const Partition& lambda, int r, int theta) {
    std::vector<long long> rh = rho(r), mu(r);
    for (int i = 0; i < r; ++i) {
        long long li = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
        mu[i] = n * (li + rh[i]) + theta;
    }
    return verify_tokuyama_at(n, mu, theta);
}

// ---------------------------------------------------------------------------
// Power-map relation between dressed characters at deformation parameter v:
//
//   s_lambda(z^n) z^(n rho) Pi(1 - v z^-(n alpha))  vs
//   z^rho Pi(1 - v z^-alpha) s_(n(lambda+rho)-rho)(z).
//
// At v = 1 both sides are the alternant a_(n(lambda+rho))(z) and the relation
// is an identity.  At generic v the two sides differ once n >= 2 and r >= 2
// (the deformed denominators are no longer alternants, so the Weyl-group
// argument behind the v = 1 case does not survive the power map).  The report
// carries both checks and the deformed residual so the discrepancy is audited
// rather than hidden.

inline std::pair<Laurent, Laurent> power_identity_sides(int n, const Partition& lambda, int r,
                                                        const Scalar& v) {
    std::vector<int> all(r);
    for (int i = 0; i < r; ++i) all[i] = i;
    std::vector<long long> rh = rho(r);

    Laurent lhs = schur_bialternant(lambda, r).power_subst(n);
    std::vector<long long> nrho(r);
    for (int i = 0; i < r; ++i) nrho[i] = n * rh[i];
    lhs *= monomial_on(r, all, nrho) * root_product(r, all, v, n);

    Partition big(r);
    for (int i = 0; i < r; ++i) {
        long long li = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
        big[i] = n * (li + rh[i]) - rh[i];
    }
    Laurent rhs = monomial_on(r, all, rh) * root_product(r, all, v, 1) *
                  schur_bialternant(big, r);
    return {lhs, rhs};
}

struct PowerIdentityReport {
    bool deformed_exact = false;   // at v = q^2, the metaplectic deformation
    bool classical_exact = false;  // at v = 1
    Laurent difference;            // deformed lhs - rhs
    bool ok = false;               // classical holds and the deformed verdict is as analyzed
};

inline PowerIdentityReport verify_power_identity(int n, const Partition& lambda, int r) {
    PowerIdentityReport rep;
    auto [dl, dr] = power_identity_sides(n, lambda, r, Scalar::q_pow(2));
    rep.difference = dl - dr;
    rep.deformed_exact = rep.difference.is_zero();
    auto [cl, cr] = power_identity_sides(n, lambda, r, Scalar::one());
    rep.classical_exact = cl == cr;
    rep.ok = rep.classical_exact && (rep.deformed_exact == (n == 1 || r == 1));
    return rep;
}

// ---------------------------------------------------------------------------
// Reversed-flow refinement: the Gamma table against the Delta tables.

struct GammaDeltaReport {
    Laurent z_gamma;
    bool flow_ok = false;        // Z^Gamma_(mu,theta)(z) == Z^Delta_(mu,w0 theta)(w0 z)
    bool shift_ok = false;       // Z^Delta == z^theta Z^Delta'
    bool polynomial_ok = false;  // z^-theta Z^Gamma has all exponents in n Z_(>=0)
    bool ok = false;
};

inline GammaDeltaReport verify_gamma_delta(int n, const std::vector<long long>& mu,
                                           const std::vector<int>& theta) {
    const int r = static_cast<int>(theta.size());
    GammaDeltaReport rep;

    SystemSpec g;
    g.family = Family::Gamma;
    g.palette = n;
    g.mu = mu;
    g.boundary = theta;
    rep.z_gamma = partition_function(g);

    SystemSpec d = g;
    d.family = Family::Delta;
    d.boundary.assign(theta.rbegin(), theta.rend());
    Laurent z_delta = partition_function(d);
    rep.flow_ok = rep.z_gamma == z_delta.reverse_vars();

    SystemSpec dp = d;
    dp.family = Family::DeltaPrime;
    std::vector<int> exps(d.boundary.begin(), d.boundary.end());
    rep.shift_ok = z_delta == Laurent::term(exps, Scalar::one()) * partition_function(dp);

    rep.polynomial_ok = true;
    for (const auto& [e, c] : rep.z_gamma.terms()) {
        (void)c;
        for (int i = 0; i < r; ++i)
            if (e[i] < theta[i] || res_mod(e[i] - theta[i], n) != 0) rep.polynomial_ok = false;
    }
    rep.ok = rep.flow_ok && rep.shift_ok && rep.polynomial_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// Metaplectic / Iwahori duality.

struct DualityReport {
    bool vanishing = false;   // both sides zero (residue mismatch)
    bool ok = false;          // all structural checks passed
    Scalar c_met, c_iw, c_ratio;
    std::vector<long long> mu_tilde;
    std::string note;
};

namespace detail {

// Extract the z-free scalar c with f == c * p.  Some coefficient of p must be
// an invertible monomial to form the candidate ratio; the full product
// comparison then certifies proportionality exactly.
inline bool proportional_constant(const Laurent& f, const Laurent& p, Scalar& out) {
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_monomial()) continue;
        auto it = f.terms().find(e);
        if (it == f.terms().end()) return false;
        Scalar cand = it->second * c.inverse();
        if (f == cand * p) {
            out = cand;
            return true;
        }
        return false;
    }
    return false;
}

}  // namespace detail

inline DualityReport verify_duality(int n, const std::vector<long long>& mu,
                                    const std::vector<int>& theta) {
    const int r = static_cast<int>(mu.size());
    DualityReport rep;

    // exit colors: negate the reversed supercolor vector, as values in 1..n
    std::vector<int> sigma(r);
    for (int i = 0; i < r; ++i) sigma[i] = res_pos(-theta[r - 1 - i], n);

    SystemSpec met;
    met.family = Family::Colored;
    met.spec = Specialization::metaplectic(n);
    met.palette = n;
    met.mu = mu;
    met.boundary = sigma;
    Laurent z_met = partition_function(met);

    // residue bookkeeping for the relabeled system
    std::vector<int> colres(r);
    for (int i = 0; i < r; ++i) colres[i] = res_pos(-mu[i], n);
    std::vector<int> used = colres;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto rank_of = [&](int c) {
        return static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin()) + 1;
    };

    if (z_met.is_zero()) {
        rep.vanishing = true;
        // the relabeled side must vanish as well when the exits mismatch
        if (static_cast<int>(used.size()) == r) {
            std::vector<int> sig_t(r), mu_col(r);
            bool relabelable = true;
            for (int i = 0; i < r; ++i) {
                if (!std::binary_search(used.begin(), used.end(), sigma[i])) relabelable = false;
            }
            if (relabelable) {
                rep.mu_tilde.resize(r);
                for (int i = 0; i < r; ++i) {
                    int t = rank_of(colres[i]);
                    rep.mu_tilde[i] = r * (mu[i] / n) + res_mod(-t, r);
                    sig_t[i] = rank_of(sigma[i]);
                    (void)mu_col;
                }
                SystemSpec iw;
                iw.family = Family::Colored;
                iw.spec = Specialization::iwahori();
                iw.palette = r;
                iw.mu = rep.mu_tilde;
                iw.boundary = sig_t;
                rep.ok = partition_function(iw).is_zero();
                rep.note = "both sides vanish";
                return rep;
            }
        }
        rep.ok = true;
        rep.note = "metaplectic side vanishes (no relabeling exists)";
        return rep;
    }

    if (static_cast<int>(used.size()) != r) {
        rep.note = "column colors not distinct";
        return rep;
    }

    // shared polynomial: operator word applied to the floor monomial
    std::vector<long long> lam_rho(r);
    for (int i = 0; i < r; ++i) lam_rho[i] = mu[i] / n;
    const Perm w = shortest_arranging_perm(sigma);
    const Perm wp = shortest_arranging_perm(colres);
    std::vector<int> exps(r);
    for (int i = 0; i < r; ++i) exps[i] = static_cast<int>(lam_rho[i]);
    Laurent P = apply_T_word(
        apply_T_word_inv(Laurent::term(exps, Scalar::one()), reduced_word(wp)),
        reduced_word(w));

    if (!detail::proportional_constant(z_met, P, rep.c_met)) {
        rep.note = "metaplectic value is not a multiple of the operator polynomial";
        return rep;
    }
    if (!rep.c_met.is_monomial()) {
        rep.note = "metaplectic constant is not a monomial";
        return rep;
    }

    // relabeled Iwahori system over palette r
    rep.mu_tilde.resize(r);
    std::vector<int> sigma_t(r);
    for (int i = 0; i < r; ++i) {
        rep.mu_tilde[i] = r * (mu[i] / n) + res_mod(-rank_of(colres[i]), r);
        sigma_t[i] = rank_of(sigma[i]);
    }
    for (int i = 0; i + 1 < r; ++i)
        if (rep.mu_tilde[i] <= rep.mu_tilde[i + 1]) {
            rep.note = "relabeled boundary not strict";
            return rep;
        }

    SystemSpec iw;
    iw.family = Family::Colored;
    iw.spec = Specialization::iwahori();
    iw.palette = r;
    iw.mu = rep.mu_tilde;
    iw.boundary = sigma_t;
    Laurent z_iw = partition_function(iw);

    if (!detail::proportional_constant(z_iw, P, rep.c_iw)) {
        rep.note = "relabeled value is not a multiple of the operator polynomial";
        return rep;
    }
    if (!rep.c_iw.is_monomial()) {
        rep.note = "relabeled constant is not a monomial";
        return rep;
    }
    const ScalarMono& mono = rep.c_iw.terms().begin()->first;
    if (mono.phi != 0 || !mono.alpha.empty() || !mono.gauss.empty()) {
        rep.note = "relabeled constant involves more than q";
        return rep;
    }
    rep.c_ratio = rep.c_met * rep.c_iw.inverse();
    rep.ok = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Truncated Cauchy identity for the dressed characters.

// W_lambda(z) = z^(theta + n rho) Pi(1 - q^2 z^(-n alpha)) s_lambda(z^n),
// built over an arbitrary variable slot set inside a larger ring.
inline Laurent dressed_character(int rank, const std::vector<int>& vars, const Partition& lambda,
                                 int n, int theta) {
    const int r = static_cast<int>(vars.size());
    std::vector<long long> rh = rho(r), shift(r);
    for (int i = 0; i < r; ++i) shift[i] = theta + n * rh[i];
    Laurent s = schur_bialternant(lambda, r).power_subst(n);
    // re-embed the rank-r Schur polynomial into the big ring
    Laurent embedded = Laurent::zero(rank);
    for (const auto& [e, c] : s.terms()) {
        std::vector<int> big(rank, 0);
        for (int i = 0; i < r; ++i) big[vars[i]] = e[i];
        embedded += Laurent::term(std::move(big), c);
    }
    return monomial_on(rank, vars, shift) * root_product(rank, vars, Scalar::q_pow(2), n) *
           embedded;
}

struct CauchyReport {
    Laurent lhs, rhs;
    bool ok = false;
};

inline CauchyReport verify_cauchy(int n, int r, int theta, long long maxweight) {
    const int rank = 2 * r + 1;  // x_1..x_r, y_1..y_r, t
    const int tvar = 2 * r;
    std::vector<int> xs(r), ys(r), all;
    for (int i = 0; i < r; ++i) xs[i] = i;
    for (int i = 0; i < r; ++i) ys[i] = r + i;
    all = xs;
    all.insert(all.end(), ys.begin(), ys.end());

    std::vector<long long> rh = rho(r);
    long long nrho = 0;
    for (long long x : rh) nrho += n * x;
    const long long base_t = nrho + static_cast<long long>(r) * theta;

    CauchyReport rep;
    rep.lhs = Laurent::zero(rank);
    std::vector<long long> negrho(r);
    for (int i = 0; i < r; ++i) negrho[i] = -rh[i];
    for (long long d = 0; d <= maxweight; ++d) {
        for (const Partition& lam : partitions_of(d, r)) {
            Laurent wx = monomial_on(rank, xs, negrho) * dressed_character(rank, xs, lam, n, theta);
            Laurent wy = monomial_on(rank, ys, negrho) * dressed_character(rank, ys, lam, n, theta);
            rep.lhs += wx * wy * Laurent::var(rank, tvar, static_cast<int>(n * d + base_t));
        }
    }

    // prefactor (xy)^(theta + n rho - rho) * both root products * t^base
    std::vector<long long> shift(r);
    for (int i = 0; i < r; ++i) shift[i] = theta + n * rh[i] - rh[i];
    Laurent rhs = monomial_on(rank, xs, shift) * monomial_on(rank, ys, shift) *
                  root_product(rank, xs, Scalar::q_pow(2), n) *
                  root_product(rank, ys, Scalar::q_pow(2), n) *
                  Laurent::var(rank, tvar, static_cast<int>(base_t));
    // truncated product Pi_{i,j} (1 - (x_i y_j t)^n)^{-1}
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Laurent geo = Laurent::zero(rank);
            for (long long k = 0; k <= maxweight; ++k) {
                std::vector<int> e(rank, 0);
                e[xs[i]] = static_cast<int>(n * k);
                e[ys[j]] = static_cast<int>(n * k);
                e[tvar] = static_cast<int>(n * k);
                geo += Laurent::term(std::move(e), Scalar::one());
            }
            rhs *= geo;
            rhs = rhs.truncate_var(tvar, static_cast<int>(n * maxweight + base_t));
        }
    rep.rhs = rhs;
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace colorice
