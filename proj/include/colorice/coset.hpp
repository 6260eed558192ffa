#pragma once

/*
  Symmetric-group utilities and the exit-color dictionary.

  Permutations are stored in one-line notation with 0-based values:
  w[i] = w(i).  Composition is (u*v)(i) = u(v(i)).  A permutation acts on a
  tuple by permuting positions: (w.x)[w(i)] = x[i], which makes the action
  a left action and matches Laurent::permute_vars.
*/

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace colorice {

using Perm = std::vector<int>;

inline Perm perm_identity(int r) {
    Perm w(r);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

inline bool is_identity(const Perm& w) {
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] != i) return false;
    return true;
}

inline Perm perm_compose(const Perm& u, const Perm& v) {
    Perm w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = u[v[i]];
    return w;
}

inline Perm perm_inverse(const Perm& w) {
    Perm inv(w.size());
    for (int i = 0; i < static_cast<int>(w.size()); ++i) inv[w[i]] = i;
    return inv;
}

inline int perm_length(const Perm& w) {
    int len = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++len;
    return len;
}

inline Perm longest_element(int r) {
    Perm w(r);
    for (int i = 0; i < r; ++i) w[i] = r - 1 - i;
    return w;
}

inline Perm transposition(int r, int i) {
    Perm w = perm_identity(r);
    std::swap(w[i], w[i + 1]);
    return w;
}

template <typename T>
std::vector<T> perm_act(const Perm& w, const std::vector<T>& x) {
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[w[i]] = x[i];
    return out;
}

// Reduced word: w equals the composition s[word[0]] * s[word[1]] * ... .
inline std::vector<int> reduced_word(Perm w) {
    std::vector<int> rev;
    const int r = static_cast<int>(w.size());
    while (!is_identity(w)) {
        for (int i = 0; i + 1 < r; ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);  // w := w * s_i
                rev.push_back(i);
                break;
            }
        }
    }
    return {rev.rbegin(), rev.rend()};
}

// Weakly decreasing representative of the orbit of a tuple.
template <typename T>
std::vector<T> dominant_rep(std::vector<T> x) {
    std::sort(x.begin(), x.end(), std::greater<T>());
    return x;
}

// The shortest w with perm_act(w, dominant_rep(x)) == x: occurrences of each
// repeated value are matched in order, which avoids gratuitous inversions.
template <typename T>
Perm shortest_arranging_perm(const std::vector<T>& x) {
    const int r = static_cast<int>(x.size());
    std::vector<T> rep = dominant_rep(x);
    std::vector<bool> used(r, false);
    Perm w(r);
    for (int j = 0; j < r; ++j) {  // positions of rep, left to right
        int target = -1;
        for (int i = 0; i < r; ++i) {
            if (!used[i] && x[i] == rep[j]) {
                target = i;
                break;
            }
        }
        if (target < 0) throw std::logic_error("shortest_arranging_perm: not a rearrangement");
        used[target] = true;
        w[j] = target;
    }
    return w;
}

// lambda is w-almost dominant when lambda_i - lambda_{i+1} >= 0 whenever
// w^{-1}(i) < w^{-1}(i+1) and >= -1 otherwise.
inline bool almost_dominant(const std::vector<long long>& lambda, const Perm& w) {
    Perm inv = perm_inverse(w);
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
        long long gap = lambda[i] - lambda[i + 1];
        if (inv[i] < inv[i + 1] ? gap < 0 : gap < -1) return false;
    }
    return true;
}

}  // namespace colorice
