#pragma once

/*
  Named specializations of the generic coefficient ring.

  Generic     : Phi and alpha[i,j] stay symbolic.
  Iwahori     : Phi -> q^-1, every canonical alpha[i,j] (i<j) -> q.
  Metaplectic : requires palette size m == Gauss modulus n;
                Phi -> -q, canonical alpha[i,j] (i<j) -> -g[n-(j-i)]/q.
*/

#include "scalar.hpp"

namespace colorice {

enum class Mode { Generic, Iwahori, Metaplectic };

inline const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Generic: return "generic";
        case Mode::Iwahori: return "iwahori";
        case Mode::Metaplectic: return "metaplectic";
    }
    return "?";
}

struct Specialization {
    Mode mode = Mode::Generic;
    int gauss_n = 0;  // metaplectic only

    static Specialization generic() { return {Mode::Generic, 0}; }
    static Specialization iwahori() { return {Mode::Iwahori, 0}; }
    static Specialization metaplectic(int n) { return {Mode::Metaplectic, n}; }

    Scalar phi_value() const {
        switch (mode) {
            case Mode::Generic: return Scalar::phi_pow(1);
            case Mode::Iwahori: return Scalar::q_pow(-1);
            case Mode::Metaplectic: return -Scalar::q_pow(1);
        }
        throw ScalarError("bad mode");
    }

    // Value of the canonical generator alpha[i,j], 1 <= i < j <= m.
    Scalar alpha_value(int i, int j, int m) const {
        switch (mode) {
            case Mode::Generic: return Scalar::alpha_gen(i, j, m);
            case Mode::Iwahori: return Scalar::q_pow(1);
            case Mode::Metaplectic: {
                if (m != gauss_n)
                    throw ScalarError("metaplectic specialization needs palette == modulus");
                return -(Scalar::gauss_gen(i - j, gauss_n) * Scalar::q_pow(-1));
            }
        }
        throw ScalarError("bad mode");
    }

    // alpha with arbitrary (periodically reduced) indices.
    Scalar alpha_value_at(long long i, long long j, int m) const {
        int a = res_pos(i, m), b = res_pos(j, m);
        if (a == b) return Scalar::one();
        if (a < b) return alpha_value(a, b, m);
        return alpha_value(b, a, m).inverse();
    }

    // Hecke parameter: v = q^-2 in the Iwahori world, v = q^2 metaplectic.
    Scalar v_value() const {
        switch (mode) {
            case Mode::Iwahori: return Scalar::q_pow(-2);
            case Mode::Metaplectic: return Scalar::q_pow(2);
            default: throw ScalarError("v is only defined under a specialization");
        }
    }

    Assignment assignment(int m) const {
        Assignment as;
        if (mode == Mode::Generic) return as;
        as.phi = phi_value();
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) as.alpha[{i, j}] = alpha_value(i, j, m);
        return as;
    }
};

}  // namespace colorice
