#pragma once

/*
  Multivariate Laurent polynomials in z_1..z_r with Scalar coefficients.

  Terms are keyed by exponent vectors (lexicographic order).  Division is
  supported when the divisor's lex-leading coefficient is an invertible
  monomial Scalar; the quotient is required to be exact and a descent guard
  plus iteration cap turn a non-terminating (hence inexact) division into
  an error instead of a hang.
*/

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace colorice {

struct LaurentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Laurent {
  public:
    explicit Laurent(int rank = 0) : rank_(rank) {}

    static Laurent zero(int rank) { return Laurent(rank); }

    static Laurent constant(int rank, Scalar c) {
        Laurent f(rank);
        if (!c.is_zero()) f.terms_.emplace(std::vector<int>(rank, 0), std::move(c));
        return f;
    }

    static Laurent one(int rank) { return constant(rank, Scalar::one()); }

    static Laurent term(std::vector<int> exps, Scalar c) {
        Laurent f(static_cast<int>(exps.size()));
        if (!c.is_zero()) f.terms_.emplace(std::move(exps), std::move(c));
        return f;
    }

    // z_i^e with 0-based variable index.
    static Laurent var(int rank, int i, int e = 1) {
        std::vector<int> exps(rank, 0);
        exps.at(i) = e;
        return term(std::move(exps), Scalar::one());
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

    Scalar coefficient(const std::vector<int>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Scalar::zero() : it->second;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent operator-() const {
        Laurent r(rank_);
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        check_rank(o);
        for (const auto& [k, v] : o.terms_) add_term(k, v);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a += -b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        a.check_rank(b);
        Laurent r(a.rank_);
        for (const auto& [ka, va] : a.terms_) {
            for (const auto& [kb, vb] : b.terms_) {
                std::vector<int> k(a.rank_);
                for (int i = 0; i < a.rank_; ++i) k[i] = ka[i] + kb[i];
                r.add_term(std::move(k), va * vb);
            }
        }
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator*(const Scalar& c, const Laurent& f) {
        Laurent r(f.rank_);
        if (c.is_zero()) return r;
        for (const auto& [k, v] : f.terms_) r.add_term(k, c * v);
        return r;
    }

    // z_i -> z_i^n for all variables.
    Laurent power_subst(int n) const {
        Laurent r(rank_);
        for (const auto& [k, v] : terms_) {
            std::vector<int> e(k);
            for (int& x : e) x *= n;
            r.add_term(std::move(e), v);
        }
        return r;
    }

    // Variable relabeling: variable i becomes variable w[i] (w a permutation
    // of 0..rank-1), i.e. the exponent of old slot i moves to slot w[i].
    Laurent permute_vars(const std::vector<int>& w) const {
        if (static_cast<int>(w.size()) != rank_)
            throw LaurentError("permute_vars: permutation size mismatch");
        Laurent r(rank_);
        for (const auto& [k, v] : terms_) {
            std::vector<int> e(rank_, 0);
            for (int i = 0; i < rank_; ++i) e[w[i]] = k[i];
            r.add_term(std::move(e), v);
        }
        return r;
    }

    // Exchange z_i and z_{i+1} (0-based i).
    Laurent swap_vars(int i) const {
        std::vector<int> w(rank_);
        for (int t = 0; t < rank_; ++t) w[t] = t;
        std::swap(w[i], w[i + 1]);
        return permute_vars(w);
    }

    // z_i -> z_{r+1-i}: the longest-element relabeling.
    Laurent reverse_vars() const {
        std::vector<int> w(rank_);
        for (int t = 0; t < rank_; ++t) w[t] = rank_ - 1 - t;
        return permute_vars(w);
    }

    Laurent substituted(const Assignment& as) const {
        Laurent r(rank_);
        for (const auto& [k, v] : terms_) r.add_term(k, v.substituted(as));
        return r;
    }

    // Drop terms whose exponent in variable i exceeds maxdeg.
    Laurent truncate_var(int i, int maxdeg) const {
        Laurent r(rank_);
        for (const auto& [k, v] : terms_)
            if (k[i] <= maxdeg) r.add_term(k, v);
        return r;
    }

    std::string to_string(const std::string& base = "z") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << it->second.to_string() << ")";
            for (int i = 0; i < rank_; ++i) {
                if (it->first[i] != 0) {
                    os << "*" << base << i + 1;
                    if (it->first[i] != 1) os << "^" << it->first[i];
                }
            }
        }
        return os.str();
    }

    // Exact division.  The divisor's lex-leading coefficient must be an
    // invertible monomial; throws LaurentError if the quotient is inexact.
    friend Laurent exact_div(const Laurent& num, const Laurent& den) {
        num.check_rank(den);
        if (den.is_zero()) throw LaurentError("exact_div: division by zero");
        if (num.is_zero()) return Laurent(num.rank_);
        const auto lead = den.terms_.rbegin();
        if (!lead->second.is_monomial())
            throw LaurentError("exact_div: divisor leading coefficient is not a monomial");
        const Scalar lead_inv = lead->second.inverse();
        const std::vector<int>& lead_exp = lead->first;

        // Descent guard: in an exact division the quotient's support stays
        // within [min(num) - max(den) - slack, ...] coordinatewise.
        constexpr int kSlack = 8;
        std::vector<int> floor(num.rank_);
        for (int i = 0; i < num.rank_; ++i) {
            int mn = num.terms_.begin()->first[i], mx = den.terms_.begin()->first[i];
            for (const auto& [k, v] : num.terms_) mn = std::min(mn, k[i]);
            for (const auto& [k, v] : den.terms_) mx = std::max(mx, k[i]);
            floor[i] = mn - mx - kSlack;
        }

        Laurent q(num.rank_), r = num;
        long long guard = 1 << 20;
        while (!r.is_zero()) {
            if (--guard < 0) throw LaurentError("exact_div: iteration cap exceeded (inexact?)");
            const auto rl = r.terms_.rbegin();
            std::vector<int> e(num.rank_);
            for (int i = 0; i < num.rank_; ++i) {
                e[i] = rl->first[i] - lead_exp[i];
                if (e[i] < floor[i]) throw LaurentError("exact_div: inexact division");
            }
            Laurent t = Laurent::term(std::move(e), rl->second * lead_inv);
            q += t;
            r += -(t * den);
        }
        return q;
    }

  private:
    int rank_;
    std::map<std::vector<int>, Scalar> terms_;

    void check_rank(const Laurent& o) const {
        if (rank_ != o.rank_) throw LaurentError("rank mismatch");
    }

    void add_term(std::vector<int> k, Scalar v) {
        if (v.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), std::move(v));
        } else {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

}  // namespace colorice
