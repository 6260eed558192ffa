#pragma once

/*
  Vertex weight tables.

  Every vertex has four edges (left, top, right, bottom); labels are EMPTY
  or a color index.  All tables conserve labels: the output pair is a
  permutation of the input pair, so a vertex has at most two admissible
  output configurations for given inputs.  Vertical edges only ever carry
  the color attached to their column.

  Families:
    Colored      - palette indices 1..m, column k carries color -k mod m
                   (as a value in 1..m); paths travel down/right.
    Supercolored - palette indices 0..m-1, column k carries k mod m;
                   paths travel down/right.  Identical shape to Colored
                   under index negation.
    DeltaPrime   - metaplectic supercolored table with z^n in place of z.
    Delta        - metaplectic supercolored table with a uniform z on the
                   a2/b2/c1 classes.
    Gamma        - metaplectic table with reversed horizontal flow: paths
                   travel down/left and the z sits on vertices whose left
                   edge is uncolored.
*/

#include "specialize.hpp"

namespace colorice {

constexpr int EMPTY = -1;

enum class Family { Colored, Supercolored, DeltaPrime, Delta, Gamma };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Colored: return "colored";
        case Family::Supercolored: return "supercolored";
        case Family::DeltaPrime: return "delta-prime";
        case Family::Delta: return "delta";
        case Family::Gamma: return "gamma";
    }
    return "?";
}

// weight = coeff * z_row^zdeg; coeff == 0 marks an inadmissible vertex
struct VertexWeight {
    Scalar coeff;
    int zdeg = 0;
    bool admissible() const { return !coeff.is_zero(); }
};

inline VertexWeight inadmissible() { return {Scalar::zero(), 0}; }

// Shared six-class classifier for the down/right families.  The caller
// provides the three class-dependent weights that vary between tables.
struct DownRightTable {
    // a2 with left color i, column color j (i != j handled by the table)
    std::function<VertexWeight(int i, int j)> a2;
    VertexWeight b1;
    std::function<VertexWeight(bool same)> b2;  // same = traveling color == column color
    VertexWeight c1;
};

inline VertexWeight down_right_weight(const DownRightTable& tbl, int colcol, int left, int top,
                                      int right, int bottom) {
    if (top != EMPTY && top != colcol) return inadmissible();
    if (bottom != EMPTY && bottom != colcol) return inadmissible();
    if (left == EMPTY && top == EMPTY) {  // a1
        if (right != EMPTY || bottom != EMPTY) return inadmissible();
        return {Scalar::one(), 0};
    }
    if (left != EMPTY && top != EMPTY) {  // a2
        if (right != left || bottom != top) return inadmissible();
        return tbl.a2(left, top);
    }
    if (left == EMPTY) {  // top colored: b1 or c2
        if (right == EMPTY && bottom == top) return tbl.b1;
        if (right == top && bottom == EMPTY) return {Scalar::one(), 0};  // c2
        return inadmissible();
    }
    // left colored, top empty: b2 or c1
    if (right == left && bottom == EMPTY) return tbl.b2(left == colcol);
    if (right == EMPTY && bottom == colcol && left == colcol) return tbl.c1;
    return inadmissible();
}

// Colored table; colors 1..m, alpha pairing on negated indices.
inline VertexWeight colored_weight(int m, const Specialization& spec, int colcol, int left,
                                   int top, int right, int bottom) {
    const Scalar phi = spec.phi_value();
    DownRightTable tbl;
    tbl.a2 = [&](int i, int j) -> VertexWeight {
        if (i == j) return {phi * Scalar::q_pow(1), 1};
        return {phi * spec.alpha_value_at(-i, -j, m), 0};
    };
    tbl.b1 = {-(phi * Scalar::q_pow(-1)), 0};
    tbl.b2 = [](bool same) -> VertexWeight { return {Scalar::one(), same ? 1 : 0}; };
    tbl.c1 = {-(phi * Scalar::q_pow(-1)) * (Scalar::one() - Scalar::q_pow(2)), 1};
    return down_right_weight(tbl, colcol, left, top, right, bottom);
}

// Supercolored table; supercolors 0..m-1, alpha pairing on plain indices.
inline VertexWeight supercolored_weight(int m, const Specialization& spec, int colsc, int left,
                                        int top, int right, int bottom) {
    const Scalar phi = spec.phi_value();
    DownRightTable tbl;
    tbl.a2 = [&](int i, int j) -> VertexWeight {
        if (i == j) return {phi * Scalar::q_pow(1), 1};
        return {phi * spec.alpha_value_at(i, j, m), 0};
    };
    tbl.b1 = {-(phi * Scalar::q_pow(-1)), 0};
    tbl.b2 = [](bool same) -> VertexWeight { return {Scalar::one(), same ? 1 : 0}; };
    tbl.c1 = {-(phi * Scalar::q_pow(-1)) * (Scalar::one() - Scalar::q_pow(2)), 1};
    return down_right_weight(tbl, colsc, left, top, right, bottom);
}

// Metaplectic supercolored table carrying z^n (n = Gauss modulus = palette).
inline VertexWeight delta_prime_weight(int n, int colsc, int left, int top, int right,
                                       int bottom) {
    DownRightTable tbl;
    tbl.a2 = [&](int i, int j) -> VertexWeight {
        if (i == j) return {-Scalar::q_pow(2), n};
        return {Scalar::gauss_gen(i - j, n), 0};
    };
    tbl.b1 = {Scalar::one(), 0};
    tbl.b2 = [&](bool same) -> VertexWeight { return {Scalar::one(), same ? n : 0}; };
    tbl.c1 = {Scalar::one() - Scalar::q_pow(2), n};
    return down_right_weight(tbl, colsc, left, top, right, bottom);
}

// Metaplectic supercolored table with a uniform z on a2, b2 and c1.
inline VertexWeight delta_weight(int n, int colsc, int left, int top, int right, int bottom) {
    DownRightTable tbl;
    tbl.a2 = [&](int i, int j) -> VertexWeight {
        if (i == j) return {-Scalar::q_pow(2), 1};
        return {Scalar::gauss_gen(i - j, n), 1};
    };
    tbl.b1 = {Scalar::one(), 0};
    tbl.b2 = [](bool) -> VertexWeight { return {Scalar::one(), 1}; };
    tbl.c1 = {Scalar::one() - Scalar::q_pow(2), 1};
    return down_right_weight(tbl, colsc, left, top, right, bottom);
}

// Reversed-flow metaplectic table: inputs {top, right}, outputs {left,
// bottom}; z appears exactly on vertices whose left edge is uncolored.
inline VertexWeight gamma_weight(int n, int colsc, int left, int top, int right, int bottom) {
    if (top != EMPTY && top != colsc) return inadmissible();
    if (bottom != EMPTY && bottom != colsc) return inadmissible();
    if (top == EMPTY && right == EMPTY) {  // a1 or nothing
        if (left != EMPTY || bottom != EMPTY) return inadmissible();
        return {Scalar::one(), 1};
    }
    if (top != EMPTY && right != EMPTY) {  // a2
        if (left != right || bottom != top) return inadmissible();
        if (top == right) return {-Scalar::q_pow(2), 0};
        return {Scalar::gauss_gen(top - right, n), 0};
    }
    if (right == EMPTY) {  // top colored: b1 or c2
        if (left == EMPTY && bottom == top) return {Scalar::one(), 1};  // b1
        if (left == top && bottom == EMPTY) return {Scalar::one(), 0};  // c2
        return inadmissible();
    }
    // right colored, top empty: b2 or c1
    if (left == right && bottom == EMPTY) return {Scalar::one(), 0};  // b2
    if (left == EMPTY && bottom == colsc && right == colsc)
        return {Scalar::one() - Scalar::q_pow(2), 1};  // c1
    return inadmissible();
}

}  // namespace colorice
