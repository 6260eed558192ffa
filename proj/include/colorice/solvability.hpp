#pragma once

/*
  R-matrices, train arguments and Drinfeld twists.

  The R-matrix acts on a pair of horizontal lines carrying variables
  (z1, z2); entries are Laurent polynomials.  Labels are EMPTY or colors
  1..m.  The vertex form R(a, b -> c, d) reads: a enters on the z1 line,
  b on the z2 line, c leaves on the z2 side, d on the z1 side, and label
  conservation holds ({a,b} = {c,d} as multisets).

  The "unfused" R additionally depends on a reference color: the bounce
  entry picks z1 or z2 according to the cyclic distance of the two colors
  from the reference.  The train argument (RTT) for a single column of
  color ell holds with reference ell on one side and ell+1 on the other;
  which side gets the shift is probed and recorded by the caller.
*/

#include <array>
#include <functional>

#include "laurent.hpp"
#include "lattice.hpp"

namespace colorice {

// ---------------------------------------------------------------------------
// R-matrix entries

// Weight table for R(a, b -> c, d) as a Laurent polynomial in the variables
// with indices v1 (the z1 line) and v2 (the z2 line) inside rank `rank`.
// `ref` selects the bounce convention: the fused table is ref = 1.
inline Laurent r_weight(int m, const Specialization& spec, int ref, int rank, int v1, int v2,
                        int a, int b, int c, int d) {
    auto z1 = [&](int e = 1) { return Laurent::var(rank, v1, e); };
    auto z2 = [&](int e = 1) { return Laurent::var(rank, v2, e); };
    const Laurent zero = Laurent::zero(rank);
    const Scalar q2 = Scalar::q_pow(2);
    const Scalar phi = spec.phi_value();

    if (a == EMPTY && b == EMPTY) {
        if (c != EMPTY || d != EMPTY) return zero;
        return z1() - q2 * z2();
    }
    if (a != EMPTY && b != EMPTY) {
        if (a == b) {
            if (c != a || d != a) return zero;
            return z2() - q2 * z1();
        }
        if (c == a && d == b) {  // pass: labels stay on their lines
            return -Scalar::q_pow(1) * spec.alpha_value_at(-a, -b, m) * (z1() - z2());
        }
        if (c == b && d == a) {  // bounce: labels trade lines
            bool first = res_mod(a - ref, m) < res_mod(b - ref, m);
            return (Scalar::one() - q2) * (first ? z1() : z2());
        }
        return zero;
    }
    if (a != EMPTY) {  // b empty
        if (c == EMPTY && d == a) return (Scalar::one() - q2) * z1();
        if (c == a && d == EMPTY) return -Scalar::q_pow(1) * phi.inverse() * (z1() - z2());
        return zero;
    }
    // a empty, b colored
    if (c == EMPTY && d == b) return -Scalar::q_pow(1) * phi * (z1() - z2());
    if (c == b && d == EMPTY) return (Scalar::one() - q2) * z2();
    return zero;
}

// ---------------------------------------------------------------------------
// Weight-function plumbing.  Twists and train arguments operate on closures
// so that twisted and untwisted models share one verifier.

// single-column monochrome piece: (left, top, right, bottom) -> weight
using TFn = std::function<VertexWeight(int l, int t, int r, int b)>;
// R entry: (a, b, c, d) -> Laurent in two fixed variable slots
using RFn = std::function<Laurent(int a, int b, int c, int d)>;

inline TFn t_column(int m, const Specialization& spec, int ell) {
    return [m, spec, ell](int l, int t, int r, int b) {
        return colored_weight(m, spec, ell, l, t, r, b);
    };
}

inline RFn r_matrix(int m, const Specialization& spec, int ref, int rank, int v1, int v2) {
    return [=](int a, int b, int c, int d) {
        return r_weight(m, spec, ref, rank, v1, v2, a, b, c, d);
    };
}

// Standard Drinfeld twist by an invertible pairing phi(i, j): rescales the
// straight-through configurations.
using PairingFn = std::function<Scalar(int i, int j)>;

inline TFn twist_standard(TFn base, PairingFn pairing) {
    return [base = std::move(base), pairing = std::move(pairing)](int l, int t, int r, int b) {
        VertexWeight w = base(l, t, r, b);
        if (w.admissible() && l != EMPTY && l == r && t != EMPTY && t == b)
            w.coeff = w.coeff * pairing(l, t);
        return w;
    };
}

inline RFn twist_standard_r(RFn base, PairingFn pairing) {
    return [base = std::move(base), pairing = std::move(pairing)](int a, int b, int c, int d) {
        Laurent w = base(a, b, c, d);
        if (!w.is_zero() && a != EMPTY && a == c && b != EMPTY && b == d)
            w = pairing(a, b) * w;
        return w;
    };
}

// Non-standard twist by an invertible scalar u: T picks up u when the path
// leaves through the bottom; R picks up u^([b] - [c]) on its vertical flux.
inline TFn twist_flux(TFn base, Scalar u) {
    return [base = std::move(base), u = std::move(u)](int l, int t, int r, int b) {
        VertexWeight w = base(l, t, r, b);
        if (w.admissible() && b != EMPTY) w.coeff = w.coeff * u;
        return w;
    };
}

inline RFn twist_flux_r(RFn base, Scalar u) {
    return [base = std::move(base), u = std::move(u)](int a, int b, int c, int d) {
        Laurent w = base(a, b, c, d);
        if (w.is_zero()) return w;
        int e = (b != EMPTY ? 1 : 0) - (c != EMPTY ? 1 : 0);
        if (e != 0) w = u.pow(e) * w;
        return w;
    };
}

// ---------------------------------------------------------------------------
// Train arguments

struct Mismatch {
    std::array<int, 6> labels;  // a, b, c, f, d, e (RTT) or a, b, c, d, e, f (RRR)
    Laurent lhs, rhs;
};

struct CheckResult {
    long long checked = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// RTT for one column (vertical labels in {EMPTY, vcolor}); horizontals run
// over EMPTY and all palette colors.  rl attaches to the crossing left of
// the column, rr to the crossing on the right.
inline CheckResult verify_rtt(int m, int vcolor, const TFn& t1, const TFn& t2, const RFn& rl,
                              const RFn& rr) {
    std::vector<int> hor{EMPTY};
    for (int c = 1; c <= m; ++c) hor.push_back(c);
    const std::vector<int> ver{EMPTY, vcolor};

    CheckResult res;
    for (int a : hor)
        for (int b : hor)
            for (int c : ver)
                for (int f : ver)
                    for (int d : hor)
                        for (int e : hor) {
                            Laurent lhs = Laurent::zero(2), rhs = Laurent::zero(2);
                            for (int i : hor)
                                for (int j : hor)
                                    for (int k : ver) {
                                        Laurent rw = rl(a, b, i, j);
                                        if (rw.is_zero()) continue;
                                        VertexWeight w1 = t1(i, c, d, k);
                                        if (!w1.admissible()) continue;
                                        VertexWeight w2 = t2(j, k, e, f);
                                        if (!w2.admissible()) continue;
                                        lhs += (w1.coeff * w2.coeff) *
                                               (rw * Laurent::var(2, 0, w1.zdeg) *
                                                Laurent::var(2, 1, w2.zdeg));
                                    }
                            for (int l : hor)
                                for (int mm : hor)
                                    for (int n : ver) {
                                        VertexWeight w2 = t2(b, c, l, n);
                                        if (!w2.admissible()) continue;
                                        VertexWeight w1 = t1(a, n, mm, f);
                                        if (!w1.admissible()) continue;
                                        Laurent rw = rr(mm, l, d, e);
                                        if (rw.is_zero()) continue;
                                        rhs += (w1.coeff * w2.coeff) *
                                               (rw * Laurent::var(2, 0, w1.zdeg) *
                                                Laurent::var(2, 1, w2.zdeg));
                                    }
                            ++res.checked;
                            if (lhs != rhs)
                                res.mismatches.push_back({{a, b, c, f, d, e}, lhs, rhs});
                        }
    return res;
}

// Yang-Baxter for three crossings; r12/r13/r23 must be built over rank 3 on
// the variable pairs (0,1), (0,2), (1,2).
inline CheckResult verify_rrr(int m, const RFn& r12, const RFn& r13, const RFn& r23) {
    std::vector<int> lab{EMPTY};
    for (int c = 1; c <= m; ++c) lab.push_back(c);

    CheckResult res;
    for (int a : lab)
        for (int b : lab)
            for (int c : lab)
                for (int d : lab)
                    for (int e : lab)
                        for (int f : lab) {
                            Laurent lhs = Laurent::zero(3), rhs = Laurent::zero(3);
                            for (int i : lab)
                                for (int j : lab)
                                    for (int k : lab) {
                                        Laurent w1 = r12(a, b, i, j);
                                        if (w1.is_zero()) continue;
                                        Laurent w2 = r13(i, c, d, k);
                                        if (w2.is_zero()) continue;
                                        Laurent w3 = r23(j, k, e, f);
                                        if (w3.is_zero()) continue;
                                        lhs += w1 * w2 * w3;
                                    }
                            for (int l : lab)
                                for (int n : lab)
                                    for (int mm : lab) {
                                        Laurent w1 = r23(b, c, l, n);
                                        if (w1.is_zero()) continue;
                                        Laurent w2 = r13(a, n, mm, f);
                                        if (w2.is_zero()) continue;
                                        Laurent w3 = r12(mm, l, d, e);
                                        if (w3.is_zero()) continue;
                                        rhs += w1 * w2 * w3;
                                    }
                            ++res.checked;
                            if (lhs != rhs)
                                res.mismatches.push_back({{a, b, c, d, e, f}, lhs, rhs});
                        }
    return res;
}

// ---------------------------------------------------------------------------
// Fusion: a block of palette-many columns, colors 1..m left to right,
// behaves as a single monochrome column whose vertical labels are subsets.

// Fused block weight as zdeg -> coefficient (different interior states can
// carry different powers of the row variable).
inline std::map<int, Scalar> fused_t_weight(int m, const Specialization& spec, int left,
                                            unsigned topset, int right, unsigned botset) {
    std::map<int, Scalar> acc;
    // scan columns left to right, i.e. colors 1..m
    auto rec = [&](auto&& self, int color, int carry, Scalar coeff, int zdeg) -> void {
        if (color > m) {
            if (carry == right) {
                auto it = acc.find(zdeg);
                if (it == acc.end())
                    acc.emplace(zdeg, coeff);
                else {
                    it->second += coeff;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
            return;
        }
        int t = (topset >> (color - 1)) & 1 ? color : EMPTY;
        int bwant = (botset >> (color - 1)) & 1 ? color : EMPTY;
        const int cand[2][2] = {{carry, t}, {t, carry}};
        const int ncand = (carry == t) ? 1 : 2;
        for (int ci = 0; ci < ncand; ++ci) {
            int out_h = cand[ci][0], out_v = cand[ci][1];
            if (out_v != bwant) continue;
            VertexWeight w = colored_weight(m, spec, color, carry, t, out_h, out_v);
            if (!w.admissible()) continue;
            self(self, color + 1, out_h, coeff * w.coeff, zdeg + w.zdeg);
        }
    };
    rec(rec, 1, left, Scalar::one(), 0);
    return acc;
}

// Fused train argument: vertical labels are arbitrary subsets, and the same
// fused R (reference color 1) appears on both sides.
inline CheckResult verify_rtt_fused(int m, const Specialization& spec) {
    std::vector<int> hor{EMPTY};
    for (int c = 1; c <= m; ++c) hor.push_back(c);
    const unsigned nsets = 1u << m;
    RFn r = r_matrix(m, spec, 1, 2, 0, 1);

    auto lift = [](const std::map<int, Scalar>& w, int var) {
        Laurent f = Laurent::zero(2);
        for (const auto& [deg, c] : w) f += c * Laurent::var(2, var, deg);
        return f;
    };

    CheckResult res;
    for (int a : hor)
        for (int b : hor)
            for (unsigned c = 0; c < nsets; ++c)
                for (unsigned f = 0; f < nsets; ++f)
                    for (int d : hor)
                        for (int e : hor) {
                            Laurent lhs = Laurent::zero(2), rhs = Laurent::zero(2);
                            for (int i : hor)
                                for (int j : hor) {
                                    Laurent rw = r(a, b, i, j);
                                    if (rw.is_zero()) continue;
                                    for (unsigned k = 0; k < nsets; ++k) {
                                        Laurent w1 = lift(fused_t_weight(m, spec, i, c, d, k), 0);
                                        if (w1.is_zero()) continue;
                                        Laurent w2 = lift(fused_t_weight(m, spec, j, k, e, f), 1);
                                        if (w2.is_zero()) continue;
                                        lhs += rw * w1 * w2;
                                    }
                                }
                            for (int l : hor)
                                for (int mm : hor) {
                                    Laurent rw = r(mm, l, d, e);
                                    if (rw.is_zero()) continue;
                                    for (unsigned n = 0; n < nsets; ++n) {
                                        Laurent w2 = lift(fused_t_weight(m, spec, b, c, l, n), 1);
                                        if (w2.is_zero()) continue;
                                        Laurent w1 = lift(fused_t_weight(m, spec, a, n, mm, f), 0);
                                        if (w1.is_zero()) continue;
                                        rhs += rw * w1 * w2;
                                    }
                                }
                            ++res.checked;
                            if (lhs != rhs)
                                res.mismatches.push_back(
                                    {{a, b, static_cast<int>(c), static_cast<int>(f), d, e},
                                     lhs,
                                     rhs});
                        }
    return res;
}

// One fused row: top boundary subsets per block determined by mu.  Used to
// cross-check fusion bookkeeping against the plain column-by-column model.
inline Laurent fused_one_row(int m, const Specialization& spec,
                             const std::vector<long long>& mu, int exit_color) {
    long long top = 0;
    for (long long k : mu) top = std::max(top, k);
    const int blocks = static_cast<int>((top + m) / m);
    std::vector<unsigned> topsets(blocks, 0);
    for (long long k : mu) {
        int block = static_cast<int>(k / m);
        int color = res_pos(-k, m);
        topsets[block] |= 1u << (color - 1);
    }
    Laurent out = Laurent::zero(1);
    // blocks ordered right to left as block index grows; scan left to right
    auto rec = [&](auto&& self, int block, int carry, Laurent f) -> void {
        if (block < 0) {
            if (carry == exit_color) out += f;
            return;
        }
        std::vector<int> hor{EMPTY};
        for (int c = 1; c <= m; ++c) hor.push_back(c);
        for (int nxt : hor) {
            auto w = fused_t_weight(m, spec, carry, topsets[block], nxt, 0u);
            Laurent lf = Laurent::zero(1);
            for (const auto& [deg, c] : w) lf += c * Laurent::var(1, 0, deg);
            if (lf.is_zero()) continue;
            self(self, block - 1, nxt, f * lf);
        }
    };
    rec(rec, blocks - 1, EMPTY, Laurent::one(1));
    return out;
}

}  // namespace colorice
