#pragma once

/*
  Exact coefficient ring for the lattice-model workbench.

  A Scalar is a finite sum of monomials

      (rational) * q^a * Phi^b * prod alpha[i,j]^e * prod g[a]^f

  where
    - q and Phi are invertible formal symbols,
    - alpha[i,j] are invertible palette pairing symbols, stored canonically
      with 1 <= i < j <= m after m-periodic index reduction; the relations
      alpha[i,i] = 1 and alpha[i,j]*alpha[j,i] = 1 are baked into the
      canonical form (a reversed pair is the canonical generator inverted),
    - g[a], 1 <= a <= n-1, are Gauss-sum symbols subject to the reduction
      g[a]*g[n-a] = q^2 (hence g[n/2]^2 = q^2 when n is even, and negative
      powers of g eliminate via g[a]^-1 = g[n-a]*q^-2).

  The Gauss modulus n is carried on the value (gauss_n); scalars without
  Gauss content unify with any modulus.  Rational coefficients are exact
  arbitrary-precision rationals.
*/

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace colorice {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Least nonnegative residue, in {0, ..., m-1}.
inline int res_mod(long long x, int m) {
    long long r = x % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

// Least strictly positive residue, in {1, ..., m}.
inline int res_pos(long long x, int m) {
    int r = res_mod(x, m);
    return r == 0 ? m : r;
}

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Assignment;

struct ScalarMono {
    int q = 0;
    int phi = 0;
    std::map<std::pair<int, int>, int> alpha;  // (i,j) with i<j -> nonzero exponent
    std::map<int, int> gauss;                  // a in 1..n-1 -> exponent > 0

    friend bool operator==(const ScalarMono& a, const ScalarMono& b) {
        return a.q == b.q && a.phi == b.phi && a.alpha == b.alpha && a.gauss == b.gauss;
    }
    friend bool operator<(const ScalarMono& a, const ScalarMono& b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.phi != b.phi) return a.phi < b.phi;
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.gauss < b.gauss;
    }
};

class Scalar {
  public:
    Scalar() = default;  // zero

    static Scalar zero() { return Scalar(); }

    static Scalar from_rat(Rat r) {
        Scalar s;
        if (r != 0) s.terms_[ScalarMono{}] = std::move(r);
        return s;
    }

    static Scalar one() { return from_rat(Rat(1)); }
    static Scalar integer(long long v) { return from_rat(Rat(v)); }

    static Scalar q_pow(int e) {
        Scalar s;
        ScalarMono m;
        m.q = e;
        s.terms_[m] = 1;
        return s;
    }

    static Scalar phi_pow(int e) {
        Scalar s;
        ScalarMono m;
        m.phi = e;
        s.terms_[m] = 1;
        return s;
    }

    // alpha[i,j] with m-periodic reduction and canonical ordering.
    static Scalar alpha_gen(long long i, long long j, int palette, int e = 1) {
        int a = res_pos(i, palette), b = res_pos(j, palette);
        if (a == b || e == 0) return one();
        ScalarMono m;
        if (a < b)
            m.alpha[{a, b}] = e;
        else
            m.alpha[{b, a}] = -e;
        Scalar s;
        s.terms_[m] = 1;
        return s;
    }

    // g[a] at Gauss modulus n.  a is reduced mod n; a == 0 is not a generator.
    static Scalar gauss_gen(long long a, int n, int e = 1) {
        int r = res_mod(a, n);
        if (r == 0) throw ScalarError("gauss_gen: index 0 mod n is not a generator");
        Scalar s;
        s.gauss_n_ = n;
        ScalarMono m;
        m.gauss[r] = e;
        s.terms_[m] = 1;
        s.normalize();
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == ScalarMono{} &&
               terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    int gauss_modulus() const { return gauss_n_; }

    std::optional<Rat> as_rational() const {
        if (terms_.empty()) return Rat(0);
        if (terms_.size() == 1 && terms_.begin()->first == ScalarMono{})
            return terms_.begin()->second;
        return std::nullopt;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar operator-() const {
        Scalar r = *this;
        for (auto& [k, v] : r.terms_) v = -v;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        merge_modulus(o.gauss_n_);
        for (const auto& [k, v] : o.terms_) {
            auto it = terms_.find(k);
            if (it == terms_.end()) {
                terms_.emplace(k, v);
            } else {
                it->second += v;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a += -b; }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        r.gauss_n_ = merged_modulus(a.gauss_n_, b.gauss_n_);
        for (const auto& [ka, va] : a.terms_) {
            for (const auto& [kb, vb] : b.terms_) {
                ScalarMono k;
                k.q = ka.q + kb.q;
                k.phi = ka.phi + kb.phi;
                k.alpha = ka.alpha;
                for (const auto& [p, e] : kb.alpha) k.alpha[p] += e;
                k.gauss = ka.gauss;
                for (const auto& [p, e] : kb.gauss) k.gauss[p] += e;
                Rat v = va * vb;
                r.accumulate(std::move(k), std::move(v));
            }
        }
        r.normalize();
        return r;
    }

    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Multiplicative inverse; defined for single-monomial scalars only.
    Scalar inverse() const {
        if (terms_.size() != 1) throw ScalarError("inverse: scalar is not a monomial");
        const auto& [k, v] = *terms_.begin();
        Scalar r;
        r.gauss_n_ = gauss_n_;
        ScalarMono m;
        m.q = -k.q;
        m.phi = -k.phi;
        for (const auto& [p, e] : k.alpha) m.alpha[p] = -e;
        for (const auto& [p, e] : k.gauss) m.gauss[p] = -e;
        r.terms_[m] = Rat(1) / v;
        r.normalize();
        return r;
    }

    Scalar pow(int e) const {
        if (e == 0) return one();
        Scalar base = e > 0 ? *this : inverse();
        int n = e > 0 ? e : -e;
        Scalar r = one();
        for (int t = 0; t < n; ++t) r = r * base;
        return r;
    }

    // Substitute values for Phi and for canonical alpha generators.  Values
    // appearing with negative exponents must be invertible monomials.
    // Generators without an assigned value are kept symbolic.
    Scalar substituted(const Assignment& as) const;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : terms_) {
            Rat av = v < 0 ? Rat(-v) : v;
            if (first) {
                if (v < 0) os << "-";
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            first = false;
            bool havesym = k.q || k.phi || !k.alpha.empty() || !k.gauss.empty();
            bool wrote = false;
            if (av != 1 || !havesym) {
                os << av;
                wrote = true;
            }
            auto sep = [&]() {
                if (wrote) os << "*";
                wrote = true;
            };
            if (k.q) {
                sep();
                os << "q";
                if (k.q != 1) os << "^" << k.q;
            }
            if (k.phi) {
                sep();
                os << "Phi";
                if (k.phi != 1) os << "^" << k.phi;
            }
            for (const auto& [p, e] : k.alpha) {
                sep();
                os << "a[" << p.first << "," << p.second << "]";
                if (e != 1) os << "^" << e;
            }
            for (const auto& [p, e] : k.gauss) {
                sep();
                os << "g[" << p << "]";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    const std::map<ScalarMono, Rat>& terms() const { return terms_; }

  private:
    std::map<ScalarMono, Rat> terms_;
    int gauss_n_ = 0;  // 0 = no Gauss content

    static int merged_modulus(int a, int b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) throw ScalarError("mixing scalars with different Gauss moduli");
        return a;
    }

    void merge_modulus(int other) { gauss_n_ = merged_modulus(gauss_n_, other); }

    void accumulate(ScalarMono&& k, Rat&& v) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (v != 0) terms_.emplace(std::move(k), std::move(v));
        } else {
            it->second += v;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Re-canonicalize every monomial (alpha exponent stripping plus the
    // Gauss rewrite system); merges any colliding monomials.
    void normalize() {
        std::map<ScalarMono, Rat> out;
        for (auto& [k0, v0] : terms_) {
            ScalarMono k;
            k.q = k0.q;
            k.phi = k0.phi;
            for (const auto& [p, e] : k0.alpha)
                if (e != 0) k.alpha[p] = e;
            if (!k0.gauss.empty()) {
                if (gauss_n_ == 0) throw ScalarError("Gauss factor without a modulus");
                const int n = gauss_n_;
                std::map<int, int> g;
                for (const auto& [a, e] : k0.gauss)
                    if (e != 0) g[a] += e;
                // eliminate negative exponents: g[a]^-1 = g[n-a]*q^-2
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (auto it = g.begin(); it != g.end(); ++it) {
                        if (it->second < 0) {
                            int a = it->first, e = it->second;
                            k.q += 2 * e;
                            int b = res_mod(n - a, n);
                            g.erase(it);
                            g[b] += -e;
                            if (g[b] == 0) g.erase(b);
                            changed = true;
                            break;
                        }
                    }
                }
                // cancel complementary pairs: g[a]*g[n-a] = q^2
                for (int a = 1; 2 * a < n; ++a) {
                    auto ia = g.find(a), ib = g.find(n - a);
                    if (ia != g.end() && ib != g.end()) {
                        int c = std::min(ia->second, ib->second);
                        k.q += 2 * c;
                        ia->second -= c;
                        ib->second -= c;
                        if (ia->second == 0) g.erase(ia);
                        if (ib->second == 0) g.erase(n - a);
                    }
                }
                if (n % 2 == 0) {
                    auto ih = g.find(n / 2);
                    if (ih != g.end() && ih->second >= 2) {
                        k.q += 2 * (ih->second / 2);
                        ih->second %= 2;
                        if (ih->second == 0) g.erase(ih);
                    }
                }
                k.gauss = std::move(g);
            }
            Rat v = v0;
            auto it = out.find(k);
            if (it == out.end()) {
                if (v != 0) out.emplace(std::move(k), std::move(v));
            } else {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
        }
        terms_ = std::move(out);
    }
};

struct Assignment {
    std::optional<Scalar> phi;
    std::map<std::pair<int, int>, Scalar> alpha;  // canonical keys i<j
};

inline Scalar Scalar::substituted(const Assignment& as) const {
    Scalar out;
    out.gauss_n_ = gauss_n_;
    for (const auto& [k, v] : terms_) {
        Scalar term = from_rat(v) * q_pow(k.q);
        if (k.phi != 0) {
            term = term * (as.phi ? as.phi->pow(k.phi) : phi_pow(k.phi));
        }
        for (const auto& [p, e] : k.alpha) {
            auto it = as.alpha.find(p);
            if (it != as.alpha.end()) {
                term = term * it->second.pow(e);
            } else {
                Scalar g;
                ScalarMono m;
                m.alpha[p] = e;
                g.terms_[m] = 1;
                term = term * g;
            }
        }
        if (!k.gauss.empty()) {
            Scalar g;
            g.gauss_n_ = gauss_n_;
            ScalarMono m;
            m.gauss = k.gauss;
            g.terms_[m] = 1;
            term = term * g;
        }
        out += term;
    }
    out.normalize();
    return out;
}

}  // namespace colorice
