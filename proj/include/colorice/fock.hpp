#pragma once

/*
  Truncated q-deformed fermionic Fock space with a twisted wedge product.

  Vectors are finite linear combinations of semi-infinite wedge monomials
  u_{a_1} ^ u_{a_2} ^ ...  with strictly decreasing integer indices that
  eventually agree with a vacuum tail u_T ^ u_{T-1} ^ u_{T-2} ^ ... .
  A WedgeWord stores the finite prefix together with the top index T of
  its implicit tail.

  Two-slot exchange rule (palette size m; the exchange parameters
  alpha[l,k] are the same m-periodic generators used by the vertex
  weight tables, so Fock-space and lattice computations share one ring):

    u_l ^ u_k  =  - u_k ^ u_l                             if k == l (mod m)

    u_l ^ u_k  =  -q alpha[l,k] u_k ^ u_l
                  + (q^2-1) (   sum_{n>=0} q^{2n}   u_{k-i-mn} ^ u_{l+i+mn}
                    - alpha[l,k] sum_{n>=1} q^{2n-1} u_{k-mn}   ^ u_{l+mn} )
                                                          otherwise,

  for k > l with i = (k - l) mod m; both sums run while the first index
  stays strictly larger than the second.  Straightening rewrites the
  leftmost out-of-order adjacent pair; a repeated adjacent index kills a
  word.  Once a word is strictly decreasing, its last explicit entry is
  settled against the tail: an entry equal to T+1 is absorbed into the
  tail, and an entry <= T annihilates the word (its descent through the
  consecutive tail always reaches an equal adjacent pair, in every
  branch of the exchange rule, because all correction indices stay
  strictly between the exchanged pair).

  Gradings of a word with c explicit parts p_1 > ... > p_c over tail T:
    level  (the (J_0+1)-eigenvalue)  =  c + T + 1
    energy                           =  sum p_j - c T - c(c+1)/2
  so the basis ket |lambda> (strict partition over tail -1, a part equal
  to 0 allowed) has level = number of parts and energy |lambda| minus
  the staircase weight.

  Currents J_k shift one wedge index by -mk, summed over slots.  For
  k > 0 only explicit slots contribute (tail slots collide with deeper
  tail entries); for k < 0 the top m|k| tail entries are exposed first,
  after which deeper tail slots land on an exposed duplicate inside a
  consecutive run and annihilate for the same reason as above.

  The one-row transfer matrix T(zeta) acts between strict partitions via
  the supercolored weight table with spectral parameter zeta (each
  path's zeta-degree is its horizontal travel divided by m).  The
  identity checked by verify_transfer_hamiltonian is

      T(zeta)  =  (-Phi/q)^{J_0 + 1} exp( H(zeta) ),
      H(zeta)  =  sum_{k>=1} (1 - q^{2k})/k zeta^k J_k,

  as matrix elements between all strict partitions within the requested
  energy / series-degree / length truncation.  (With slot-sum currents
  the 1/k in the Hamiltonian coefficient is forced; see hamiltonian_exp.)
*/

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "schur.hpp"
#include "weights.hpp"

namespace colorice {

struct FockError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Wedge words and Fock vectors
// ---------------------------------------------------------------------------

struct WedgeWord {
    long long tail_top = -1;             // implicit tail: tail_top, tail_top-1, ...
    std::vector<long long> parts;        // strictly decreasing, parts.back() >= tail_top+2

    friend bool operator==(const WedgeWord& a, const WedgeWord& b) {
        return a.tail_top == b.tail_top && a.parts == b.parts;
    }
    friend bool operator<(const WedgeWord& a, const WedgeWord& b) {
        if (a.tail_top != b.tail_top) return a.tail_top < b.tail_top;
        return a.parts < b.parts;
    }
};

// (J_0 + 1)-eigenvalue of the word.
inline long long word_level(const WedgeWord& w) {
    return static_cast<long long>(w.parts.size()) + w.tail_top + 1;
}

inline long long word_energy(const WedgeWord& w) {
    const long long c = static_cast<long long>(w.parts.size());
    long long s = 0;
    for (long long p : w.parts) s += p;
    return s - c * w.tail_top - c * (c + 1) / 2;
}

inline std::string word_to_string(const WedgeWord& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.parts.size(); ++i) os << (i ? "," : "") << w.parts[i];
    os << "|" << w.tail_top << ")";
    return os.str();
}

struct FockVector {
    std::map<WedgeWord, Scalar> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const WedgeWord& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [w, c] : o.terms) add(w, c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }

    friend FockVector operator*(const Scalar& c, const FockVector& v) {
        FockVector out;
        if (c.is_zero()) return out;
        for (const auto& [w, s] : v.terms) out.add(w, c * s);
        return out;
    }

    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.terms == b.terms;
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// Straightening
// ---------------------------------------------------------------------------

namespace detail {

// Expansion of one out-of-order adjacent pair u_l ^ u_k (l < k) as a list of
// (coefficient, high index, low index) replacements, each strictly ordered.
inline std::vector<std::tuple<Scalar, long long, long long>> exchange_pairs(int m, long long l,
                                                                            long long k) {
    std::vector<std::tuple<Scalar, long long, long long>> out;
    if ((k - l) % m == 0) {
        out.emplace_back(-Scalar::one(), k, l);
        return out;
    }
    const long long i = res_mod(k - l, m);
    const Scalar al = Scalar::alpha_gen(l, k, m);
    const Scalar corr = Scalar::q_pow(2) - Scalar::one();
    out.emplace_back(-(Scalar::q_pow(1) * al), k, l);
    for (long long n = 0; k - i - m * n > l + i + m * n; ++n)
        out.emplace_back(corr * Scalar::q_pow(static_cast<int>(2 * n)), k - i - m * n,
                         l + i + m * n);
    for (long long n = 1; k - m * n > l + m * n; ++n)
        out.emplace_back(-(corr * al * Scalar::q_pow(static_cast<int>(2 * n - 1))), k - m * n,
                         l + m * n);
    return out;
}

inline void straighten_into(int m, std::vector<long long> w, long long tail, Scalar coeff,
                            FockVector& out, long long& fuel, bool leftmost) {
    for (;;) {
        if (--fuel <= 0) throw FockError("straightening step budget exhausted");
        int pos = -1;
        if (leftmost) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] <= w[i + 1]) {
                    pos = static_cast<int>(i);
                    break;
                }
        } else {
            for (size_t i = w.size(); i >= 2; --i)
                if (w[i - 2] <= w[i - 1]) {
                    pos = static_cast<int>(i - 2);
                    break;
                }
        }
        if (pos < 0) {
            // strictly decreasing; settle the boundary with the implicit tail
            while (!w.empty()) {
                if (w.back() > tail + 1) break;
                if (w.back() == tail + 1) {
                    w.pop_back();
                    ++tail;
                    continue;
                }
                return;  // entry <= tail_top: annihilates against the tail
            }
            out.add(WedgeWord{tail, std::move(w)}, coeff);
            return;
        }
        if (w[pos] == w[pos + 1]) return;  // repeated index
        auto reps = exchange_pairs(m, w[pos], w[pos + 1]);
        for (size_t t = 1; t < reps.size(); ++t) {
            auto w2 = w;
            w2[pos] = std::get<1>(reps[t]);
            w2[pos + 1] = std::get<2>(reps[t]);
            straighten_into(m, std::move(w2), tail, coeff * std::get<0>(reps[t]), out, fuel,
                            leftmost);
        }
        w[pos] = std::get<1>(reps[0]);
        w[pos + 1] = std::get<2>(reps[0]);
        coeff = coeff * std::get<0>(reps[0]);
    }
}

}  // namespace detail

// Normal-order an arbitrary finite prefix over the tail tail_top, tail_top-1, ...
inline FockVector straighten(int m, std::vector<long long> entries, long long tail_top = -1,
                             const Scalar& coeff = Scalar::one(), bool leftmost = true) {
    if (m <= 0) throw FockError("palette size must be positive");
    FockVector out;
    if (coeff.is_zero()) return out;
    long long fuel = 100000000;
    detail::straighten_into(m, std::move(entries), tail_top, coeff, out, fuel, leftmost);
    return out;
}

// Basis ket |lambda>: strict partition (a single trailing 0 part allowed)
// placed over the tail -1, -2, ...
inline WedgeWord from_partition(const std::vector<long long>& lambda) {
    WedgeWord w;
    w.tail_top = -1;
    w.parts = lambda;
    for (size_t i = 0; i + 1 < w.parts.size(); ++i)
        if (w.parts[i] <= w.parts[i + 1]) throw FockError("parts must strictly decrease");
    if (!w.parts.empty() && w.parts.back() < 0) throw FockError("parts must be >= 0");
    while (!w.parts.empty() && w.parts.back() == w.tail_top + 1) {
        w.parts.pop_back();
        ++w.tail_top;
    }
    return w;
}

inline FockVector ket(const std::vector<long long>& lambda) {
    FockVector v;
    v.add(from_partition(lambda), Scalar::one());
    return v;
}

// Label of a word in the tail -1 frame: the strict partition lambda with
// |lambda> equal to the word.  Requires tail_top >= -1.
inline std::vector<long long> to_partition_label(const WedgeWord& w) {
    if (w.tail_top < -1) throw FockError("word extends below the reference tail");
    std::vector<long long> out = w.parts;
    for (long long t = w.tail_top; t >= 0; --t) out.push_back(t);
    return out;
}

// ---------------------------------------------------------------------------
// Currents and the Hamiltonian exponential
// ---------------------------------------------------------------------------

struct TruncationParams {
    long long energy_bound = 8;  // E
    int degree_bound = 3;        // D, in the internal grading variable zeta
    int length_bound = -1;       // explicit-part bound for basis enumeration; -1 => E+1
};

// J_k: shift one wedge index by -mk, summed over slots.
inline FockVector current_apply(int m, int k, const FockVector& v, const TruncationParams& tp) {
    if (k == 0) throw FockError("current index must be nonzero");
    FockVector out;
    long long fuel = 100000000;
    const long long step = static_cast<long long>(m) * std::llabs(k);
    for (const auto& [w, c] : v.terms) {
        if (k > 0) {
            for (size_t j = 0; j < w.parts.size(); ++j) {
                auto e = w.parts;
                e[j] -= step;
                detail::straighten_into(m, std::move(e), w.tail_top, c, out, fuel, true);
            }
        } else {
            if (word_energy(w) + step > tp.energy_bound)
                throw FockError("raising current exceeds the energy truncation");
            auto base = w.parts;
            for (long long t = w.tail_top; t > w.tail_top - step; --t) base.push_back(t);
            const long long tail = w.tail_top - step;
            for (size_t j = 0; j < base.size(); ++j) {
                auto e = base;
                e[j] += step;
                detail::straighten_into(m, std::move(e), tail, c, out, fuel, true);
            }
        }
    }
    return out;
}

// exp( scale * H(zeta) ) v with H(zeta) = sum_{k>=1} (1-q^{2k})/k zeta^k J_k,
// graded by zeta-degree 0..D.  The 1/k normalizes the slot-sum currents: on a
// one-particle state J_k acts as the k-step shift, and exp(sum_k c_k x^k)
// must reproduce the geometric single-path series 1 + (1-q^2)(x + x^2 + ...)
// = (1-q^2 x)/(1-x), which forces c_k = (1-q^{2k})/k.  The scale factor
// exists so series arithmetic (e.g. composing the exponential with itself)
// can be cross-checked exactly.
inline std::vector<FockVector> hamiltonian_exp(int m, const FockVector& v,
                                               const TruncationParams& tp,
                                               const Scalar& scale = Scalar::one()) {
    const int D = tp.degree_bound;
    std::vector<FockVector> out(static_cast<size_t>(D) + 1);
    out[0] = v;
    for (int d = 1; d <= D; ++d) {
        for (const auto& kappa : partitions_of(d, d)) {
            Scalar c = Scalar::one();
            std::map<long long, int> mult;
            for (long long k : kappa) {
                c = c * scale * (Scalar::one() - Scalar::q_pow(static_cast<int>(2 * k))) *
                    Scalar::from_rat(Rat(1) / Rat(k));
                ++mult[k];
            }
            Rat denom = 1;
            for (const auto& [k, cnt] : mult) {
                (void)k;
                for (int t = 2; t <= cnt; ++t) denom *= t;
            }
            c = c * Scalar::from_rat(Rat(1) / denom);
            FockVector acc = v;
            for (long long k : kappa) acc = current_apply(m, static_cast<int>(k), acc, tp);
            out[static_cast<size_t>(d)] += c * acc;
        }
    }
    return out;
}

namespace detail {

inline Scalar scalar_pow(const Scalar& s, long long e) {
    Scalar base = e >= 0 ? s : s.inverse();
    long long n = e >= 0 ? e : -e;
    Scalar out = Scalar::one();
    for (long long i = 0; i < n; ++i) out = out * base;
    return out;
}

inline Scalar minus_phi_over_q() { return -(Scalar::phi_pow(1) * Scalar::q_pow(-1)); }

}  // namespace detail

// ---------------------------------------------------------------------------
// One-row transfer matrix
// ---------------------------------------------------------------------------

// <mu| T(zeta) |lambda>: the unique admissible one-row supercolored state with
// top boundary lambda, bottom boundary mu and empty side boundaries, as a
// rank-1 Laurent polynomial in the grading variable zeta.  Always a single
// monomial of zeta-degree (|lambda|-|mu|)/m, or zero.
inline Laurent transfer_element(int m, const std::vector<long long>& mu,
                                const std::vector<long long>& lambda,
                                const Specialization& spec = Specialization::generic()) {
    if (m <= 0) throw FockError("palette size must be positive");
    auto check = [](const std::vector<long long>& p) {
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] <= p[i + 1]) throw FockError("parts must strictly decrease");
        if (!p.empty() && p.back() < 0) throw FockError("parts must be >= 0");
    };
    check(mu);
    check(lambda);
    if (mu.size() != lambda.size()) return Laurent::zero(1);

    long long cols = 0;
    for (long long p : mu) cols = std::max(cols, p + 1);
    for (long long p : lambda) cols = std::max(cols, p + 1);
    std::set<long long> top(lambda.begin(), lambda.end());
    std::set<long long> bot(mu.begin(), mu.end());

    int h = EMPTY;  // color carried rightward on the current horizontal edge
    Scalar coeff = Scalar::one();
    int zdeg = 0;
    for (long long col = cols - 1; col >= 0; --col) {
        const int sc = res_mod(col, m);
        const int t = top.count(col) ? sc : EMPTY;
        const int b = bot.count(col) ? sc : EMPTY;
        int r;  // conservation: {r, b} = {h, t} as multisets
        if (b == h)
            r = t;
        else if (b == t)
            r = h;
        else
            return Laurent::zero(1);
        const VertexWeight vw = supercolored_weight(m, spec, sc, h, t, r, b);
        if (!vw.admissible()) return Laurent::zero(1);
        coeff = coeff * vw.coeff;
        zdeg += vw.zdeg;
        h = r;
    }
    if (h != EMPTY) return Laurent::zero(1);
    return Laurent::term({zdeg}, coeff);
}

// lambda -> (lambda_1 + m, ..., lambda_l + m, m-1, m-2, ..., 0)
inline std::vector<long long> shifted_partition(int m, const std::vector<long long>& lambda) {
    std::vector<long long> out;
    out.reserve(lambda.size() + static_cast<size_t>(m));
    for (long long p : lambda) out.push_back(p + m);
    for (int t = m - 1; t >= 0; --t) out.push_back(t);
    return out;
}

// <mu+| T |lambda+> == (-Phi/q)^m <mu| T |lambda>
inline bool verify_shift_covariance(int m, const std::vector<long long>& mu,
                                    const std::vector<long long>& lambda,
                                    const Specialization& spec = Specialization::generic()) {
    const Laurent lhs = transfer_element(m, shifted_partition(m, mu), shifted_partition(m, lambda), spec);
    const Laurent rhs = detail::scalar_pow(detail::minus_phi_over_q(), m) *
                        transfer_element(m, mu, lambda, spec);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

namespace detail {

// All strict partitions with exactly len parts (>= 0, a trailing 0 allowed)
// and energy |lambda| - len(len-1)/2 equal to e.
inline std::vector<std::vector<long long>> strict_partitions_of_energy(long long e, int len) {
    std::vector<std::vector<long long>> out;
    if (e < 0) return out;
    if (len == 0) {
        if (e == 0) out.push_back({});
        return out;
    }
    for (const auto& nu : partitions_of(e, len)) {
        std::vector<long long> lam(static_cast<size_t>(len), 0);
        for (size_t i = 0; i < nu.size(); ++i) lam[i] = nu[i];
        for (int i = 0; i < len; ++i) lam[static_cast<size_t>(i)] += len - 1 - i;
        out.push_back(std::move(lam));
    }
    return out;
}

inline std::string partition_to_string(const std::vector<long long>& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

}  // namespace detail

struct TransferHamiltonianReport {
    int palette = 0;
    TruncationParams trunc;
    long long kets_checked = 0;
    long long elements_checked = 0;
    bool ok = true;
    std::vector<std::string> violations;
};

// T(zeta) == (-Phi/q)^{J_0+1} exp(H(zeta)) as matrix elements between all
// strict partitions of energy <= E and at most length_bound parts, through
// zeta-degree D, with generic coefficients.
inline TransferHamiltonianReport verify_transfer_hamiltonian(int m, const TruncationParams& tp) {
    TransferHamiltonianReport rep;
    rep.palette = m;
    rep.trunc = tp;
    const int lmax =
        tp.length_bound >= 0 ? tp.length_bound : static_cast<int>(tp.energy_bound) + 1;
    for (int len = 0; len <= lmax; ++len) {
        for (long long e = 0; e <= tp.energy_bound; ++e) {
            for (const auto& lam : detail::strict_partitions_of_energy(e, len)) {
                ++rep.kets_checked;
                auto series = hamiltonian_exp(m, ket(lam), tp);
                const Scalar pre = detail::scalar_pow(detail::minus_phi_over_q(), len);
                for (int d = 0; d <= tp.degree_bound; ++d) {
                    // collect the wedge-side coefficients at zeta^d
                    std::map<std::vector<long long>, Scalar> got;
                    for (const auto& [w, c] : series[static_cast<size_t>(d)].terms)
                        got[to_partition_label(w)] = pre * c;
                    // compare against lattice transfer elements over all
                    // candidate bottom boundaries at this degree
                    const long long emu = e - static_cast<long long>(d) * m;
                    for (const auto& mu : detail::strict_partitions_of_energy(emu, len)) {
                        ++rep.elements_checked;
                        Laurent lattice = transfer_element(m, mu, lam);
                        Laurent wedge = Laurent::zero(1);
                        auto it = got.find(mu);
                        if (it != got.end()) {
                            wedge = Laurent::term({d}, it->second);
                            got.erase(it);
                        }
                        if (lattice != wedge) {
                            rep.ok = false;
                            rep.violations.push_back(
                                "lambda=" + detail::partition_to_string(lam) +
                                " mu=" + detail::partition_to_string(mu) + " zeta^" +
                                std::to_string(d) + ": transfer and Hamiltonian sides differ");
                        }
                    }
                    if (!got.empty()) {
                        rep.ok = false;
                        for (const auto& [mu, c] : got) {
                            (void)c;
                            rep.violations.push_back(
                                "lambda=" + detail::partition_to_string(lam) + " zeta^" +
                                std::to_string(d) + ": Hamiltonian side reaches unmatched state " +
                                detail::partition_to_string(mu));
                        }
                    }
                }
            }
        }
    }
    return rep;
}

struct CurrentCommutationReport {
    int palette = 0;
    int max_index = 0;
    long long states_checked = 0;
    long long pairs_checked = 0;
    bool ok = true;
    std::vector<std::string> violations;
};

// [J_k, J_l] == 0 for 1 <= k < l <= max_index on every strict partition of
// energy <= E with at most length_bound parts.
inline CurrentCommutationReport verify_current_commutativity(int m, int max_index,
                                                             const TruncationParams& tp) {
    CurrentCommutationReport rep;
    rep.palette = m;
    rep.max_index = max_index;
    const int lmax =
        tp.length_bound >= 0 ? tp.length_bound : static_cast<int>(tp.energy_bound) + 1;
    for (int len = 0; len <= lmax; ++len) {
        for (long long e = 0; e <= tp.energy_bound; ++e) {
            for (const auto& lam : detail::strict_partitions_of_energy(e, len)) {
                ++rep.states_checked;
                const FockVector v = ket(lam);
                for (int k = 1; k <= max_index; ++k) {
                    const FockVector kv = current_apply(m, k, v, tp);
                    for (int l = k + 1; l <= max_index; ++l) {
                        ++rep.pairs_checked;
                        const FockVector lk = current_apply(m, l, kv, tp);
                        const FockVector kl =
                            current_apply(m, k, current_apply(m, l, v, tp), tp);
                        if (lk != kl) {
                            rep.ok = false;
                            rep.violations.push_back(
                                "[J_" + std::to_string(k) + ",J_" + std::to_string(l) +
                                "] != 0 on " + detail::partition_to_string(lam));
                        }
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace colorice
