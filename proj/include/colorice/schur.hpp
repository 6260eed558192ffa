#pragma once

/*
  Schur polynomials by two independent routes: tableau enumeration and the
  bialternant quotient.  Both are exact; agreement of the two is itself a
  test oracle for the divided-difference machinery.
*/

#include "laurent.hpp"

namespace colorice {

using Partition = std::vector<long long>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) return false;
    return p.empty() || p.back() >= 0;
}

inline long long partition_weight(const Partition& p) {
    long long s = 0;
    for (long long x : p) s += x;
    return s;
}

// All partitions of total size exactly d with at most `rows` parts and each
// part at most `maxpart` (maxpart < 0 means unbounded).
inline std::vector<Partition> partitions_of(long long d, int rows, long long maxpart = -1) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, long long rem, long long cap, int slots) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (slots == 0) return;
        for (long long p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, d, maxpart < 0 ? d : std::min(d, maxpart), rows);
    return out;
}

// Schur polynomial via semistandard tableaux with entries 1..r.
inline Laurent schur_ssyt(const Partition& lambda, int r) {
    if (!is_partition(lambda)) throw LaurentError("schur_ssyt: not a partition");
    Partition shape;
    for (long long p : lambda)
        if (p > 0) shape.push_back(p);
    if (static_cast<int>(shape.size()) > r) return Laurent::zero(r);
    if (shape.empty()) return Laurent::one(r);

    const int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> tab(rows);
    for (int i = 0; i < rows; ++i) tab[i].assign(static_cast<std::size_t>(shape[i]), 0);

    Laurent out = Laurent::zero(r);
    std::vector<int> weight(r, 0);
    auto rec = [&](auto&& self, int row, int col) -> void {
        if (row == rows) {
            out += Laurent::term(weight, Scalar::one());
            return;
        }
        int nrow = row, ncol = col + 1;
        if (ncol >= static_cast<int>(shape[row])) {
            nrow = row + 1;
            ncol = 0;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, tab[row][col - 1]);           // weak rows
        if (row > 0 && col < static_cast<int>(shape[row - 1]))
            lo = std::max(lo, tab[row - 1][col] + 1);                // strict columns
        for (int v = lo; v <= r; ++v) {
            tab[row][col] = v;
            ++weight[v - 1];
            self(self, nrow, ncol);
            --weight[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Alternant: sum over permutations of sgn(w) z^{w(nu)}.
inline Laurent alternant(const std::vector<long long>& nu, int r) {
    Laurent out = Laurent::zero(r);
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (idx[i] > idx[j]) sign = -sign;
        std::vector<int> exps(r);
        for (int i = 0; i < r; ++i) exps[i] = static_cast<int>(nu[idx[i]]);
        out += Laurent::term(std::move(exps), Scalar::integer(sign));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

// Schur polynomial as a_{lambda+rho} / a_rho, dividing out the Vandermonde
// factors one binomial at a time.
inline Laurent schur_bialternant(const Partition& lambda, int r) {
    if (!is_partition(lambda)) throw LaurentError("schur_bialternant: not a partition");
    if (static_cast<int>(lambda.size()) > r) {
        for (std::size_t i = r; i < lambda.size(); ++i)
            if (lambda[i] > 0) return Laurent::zero(r);
    }
    std::vector<long long> nu(r);
    for (int i = 0; i < r; ++i) {
        long long li = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
        nu[i] = li + (r - 1 - i);
    }
    Laurent out = alternant(nu, r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            out = exact_div(out, Laurent::var(r, i) - Laurent::var(r, j));
    return out;
}

}  // namespace colorice
