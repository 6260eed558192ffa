#include <catch2/catch_amalgamated.hpp>

#include "colorice/fock.hpp"

using namespace colorice;

namespace {

Scalar mphi_q() { return -(Scalar::phi_pow(1) * Scalar::q_pow(-1)); }

Scalar spow(const Scalar& s, long long e) { return detail::scalar_pow(s, e); }

FockVector one_word(std::vector<long long> parts, long long tail, Scalar c = Scalar::one()) {
    FockVector v;
    WedgeWord w;
    w.tail_top = tail;
    w.parts = std::move(parts);
    v.add(w, c);
    return v;
}

long long raw_energy(const std::vector<long long>& entries, long long tail) {
    const long long c = static_cast<long long>(entries.size());
    long long s = 0;
    for (long long e : entries) s += e;
    return s - c * tail - c * (c + 1) / 2;
}

std::vector<std::vector<long long>> strict_basis(long long emax, int lmax) {
    std::vector<std::vector<long long>> out;
    for (int len = 0; len <= lmax; ++len)
        for (long long e = 0; e <= emax; ++e)
            for (auto& lam : detail::strict_partitions_of_energy(e, len)) out.push_back(lam);
    return out;
}

}  // namespace

TEST_CASE("wedge word gradings") {
    REQUIRE(word_level(from_partition({})) == 0);
    REQUIRE(word_energy(from_partition({})) == 0);
    REQUIRE(word_level(from_partition({0})) == 1);
    REQUIRE(word_energy(from_partition({0})) == 0);
    for (int m = 1; m <= 3; ++m) {
        REQUIRE(word_level(from_partition({m})) == 1);
        REQUIRE(word_energy(from_partition({m})) == m);
    }
    REQUIRE(word_level(from_partition({2, 1})) == 2);
    REQUIRE(word_energy(from_partition({2, 1})) == 2);
    // staircases are vacuum states of higher level
    REQUIRE(from_partition({2, 1, 0}).parts.empty());
    REQUIRE(from_partition({2, 1, 0}).tail_top == 2);
    REQUIRE(word_level(from_partition({2, 1, 0})) == 3);
    REQUIRE(word_energy(from_partition({2, 1, 0})) == 0);
    REQUIRE(to_partition_label(from_partition({2, 1, 0})) == std::vector<long long>{2, 1, 0});
    REQUIRE(to_partition_label(from_partition({5, 3})) == std::vector<long long>{5, 3});
}

TEST_CASE("straightening basics") {
    for (int m = 1; m <= 3; ++m) {
        // already ordered word: itself, coefficient 1
        REQUIRE(straighten(m, {4, 2}, -1) == one_word({4, 2}, -1));
        // repeated index annihilates
        REQUIRE(straighten(m, {3, 3}, -1).is_zero());
        // congruent indices: plain antisymmetry
        REQUIRE(straighten(m, {0, m}, -1) == (-Scalar::one()) * straighten(m, {m, 0}, -1));
        // entry at or below the tail annihilates the word
        REQUIRE(straighten(m, {4, -1}, -1).is_zero());
        REQUIRE(straighten(m, {4, -3}, -1).is_zero());
    }
    // tail absorption
    REQUIRE(straighten(2, {1, 0}, -1) == one_word({}, 1));
}

TEST_CASE("straightening matches the hand-expanded exchange rule") {
    // m=2: u_0 ^ u_3 = -q alpha(0,3) u_3 ^ u_0 + (q^2-1) u_2 ^ u_1
    FockVector got = straighten(2, {0, 3}, -1);
    FockVector want;
    want += (-(Scalar::q_pow(1) * Scalar::alpha_gen(0, 3, 2))) * one_word({3}, 0);
    want += (Scalar::q_pow(2) - Scalar::one()) * one_word({2, 1}, -1);
    REQUIRE(got == want);

    // m=2: adjacent non-congruent indices swap with no corrections
    REQUIRE(straighten(2, {0, 1}, -2) ==
            (-(Scalar::q_pow(1) * Scalar::alpha_gen(0, 1, 2))) * one_word({1, 0}, -2));

    // m=3: u_0 ^ u_4 has a single correction (the second sum is empty)
    got = straighten(3, {0, 4}, -1);
    want = FockVector{};
    want += (-(Scalar::q_pow(1) * Scalar::alpha_gen(0, 4, 3))) * one_word({4}, 0);
    want += (Scalar::q_pow(2) - Scalar::one()) * one_word({3, 1}, -1);
    REQUIRE(got == want);

    // m=2: u_0 ^ u_5 has one correction from each sum
    got = straighten(2, {0, 5}, -1);
    want = FockVector{};
    want += (-(Scalar::q_pow(1) * Scalar::alpha_gen(0, 5, 2))) * one_word({5}, 0);
    want += (Scalar::q_pow(2) - Scalar::one()) * one_word({4, 1}, -1);
    want += (-(Scalar::q_pow(2) - Scalar::one()) * Scalar::alpha_gen(0, 5, 2) *
             Scalar::q_pow(1)) *
            one_word({3, 2}, -1);
    REQUIRE(got == want);
}

TEST_CASE("straightening is idempotent, energy-preserving and confluent") {
    for (int m = 1; m <= 3; ++m) {
        std::vector<std::vector<long long>> words;
        for (long long a = -2; a <= 4; ++a)
            for (long long b = -2; b <= 4; ++b) {
                words.push_back({a, b});
                for (long long c = -2; c <= 4; ++c) words.push_back({a, b, c});
            }
        for (const auto& w : words) {
            FockVector lhs = straighten(m, w, -1, Scalar::one(), true);
            // confluence: rightmost-first rewriting agrees
            FockVector rhs = straighten(m, w, -1, Scalar::one(), false);
            REQUIRE(lhs == rhs);
            const long long e = raw_energy(w, -1);
            for (const auto& [word, c] : lhs.terms) {
                REQUIRE(!c.is_zero());
                REQUIRE(word_energy(word) == e);
                REQUIRE(word_level(word) == static_cast<long long>(w.size()));
                // idempotence: canonical words straighten to themselves
                std::vector<long long> again = word.parts;
                REQUIRE(straighten(m, again, word.tail_top) == one_word(word.parts, word.tail_top));
            }
        }
    }
}

TEST_CASE("exchange rule composes with its inverse") {
    // Solve the two-slot relation for the ordered pair and substitute the
    // expansion back in; the composition must be the identity.
    for (int m = 2; m <= 3; ++m)
        for (long long l = -2; l <= 2; ++l)
            for (long long k = l + 1; k <= l + 2 * m + 1; ++k) {
                if ((k - l) % m == 0) continue;
                auto reps = detail::exchange_pairs(m, l, k);
                // reps[0] is the swap term; the rest are corrections
                Scalar s = std::get<0>(reps[0]);
                FockVector corrections;
                for (size_t t = 1; t < reps.size(); ++t)
                    corrections +=
                        std::get<0>(reps[t]) *
                        one_word({std::get<1>(reps[t]), std::get<2>(reps[t])}, k - 100);
                // u_k ^ u_l = s^{-1} (u_l ^ u_k - corrections)
                FockVector recovered =
                    s.inverse() * (straighten(m, {l, k}, k - 100) +
                                   (-Scalar::one()) * corrections);
                REQUIRE(recovered == one_word({k, l}, k - 100));
            }
}

TEST_CASE("currents") {
    TruncationParams tp;
    tp.energy_bound = 12;
    for (int m = 1; m <= 3; ++m) {
        REQUIRE(current_apply(m, 1, ket({}), tp).is_zero());
        REQUIRE(current_apply(m, 1, ket({m}), tp) == ket({0}));
        REQUIRE(current_apply(m, 2, ket({m}), tp).is_zero());
    }
    // J_1 annihilates every energy-zero state
    for (int m = 1; m <= 3; ++m)
        for (const auto& lam : strict_basis(0, 4))
            REQUIRE(current_apply(m, 1, ket(lam), tp).is_zero());
}

TEST_CASE("raising currents") {
    TruncationParams tp;
    tp.energy_bound = 12;
    // J_{-1}|empty> for m=2, straightened by hand
    FockVector got = current_apply(2, -1, ket({}), tp);
    FockVector want;
    want += one_word({1}, -2);
    want += (-(Scalar::q_pow(1) * Scalar::alpha_gen(-1, 0, 2))) * one_word({0, -1}, -3);
    REQUIRE(got == want);

    // raising family commutes
    for (int m = 1; m <= 2; ++m)
        for (const auto& lam : strict_basis(2, 2)) {
            FockVector a = current_apply(m, -2, current_apply(m, -1, ket(lam), tp), tp);
            FockVector b = current_apply(m, -1, current_apply(m, -2, ket(lam), tp), tp);
            REQUIRE(a == b);
        }

    // truncation overflow is reported, not silent
    TruncationParams small;
    small.energy_bound = 1;
    REQUIRE_THROWS_AS(current_apply(2, -1, ket({}), small), FockError);
}

TEST_CASE("lowering currents commute") {
    TruncationParams tp;
    tp.energy_bound = 6;
    tp.length_bound = 4;
    for (int m = 1; m <= 3; ++m) {
        auto rep = verify_current_commutativity(m, 3, tp);
        INFO("palette " << m);
        for (const auto& v : rep.violations) INFO(v);
        REQUIRE(rep.ok);
        REQUIRE(rep.states_checked > 0);
        REQUIRE(rep.pairs_checked > 0);
    }
}

TEST_CASE("hamiltonian exponential series") {
    TruncationParams tp;
    tp.energy_bound = 12;
    tp.degree_bound = 2;
    for (int m = 1; m <= 3; ++m) {
        auto series = hamiltonian_exp(m, ket({m}), tp);
        REQUIRE(series[0] == ket({m}));
        REQUIRE(series[1] == (Scalar::one() - Scalar::q_pow(2)) * ket({0}));
        REQUIRE(series[2].is_zero());
    }
    // exp(H) o exp(H) == exp(2H) degree by degree
    tp.degree_bound = 3;
    for (int m = 1; m <= 2; ++m)
        for (const auto& lam : strict_basis(4, 2)) {
            auto once = hamiltonian_exp(m, ket(lam), tp);
            std::vector<FockVector> twice(static_cast<size_t>(tp.degree_bound) + 1);
            for (int b = 0; b <= tp.degree_bound; ++b) {
                auto inner = hamiltonian_exp(m, once[static_cast<size_t>(b)], tp);
                for (int a = 0; a + b <= tp.degree_bound; ++a)
                    twice[static_cast<size_t>(a + b)] += inner[static_cast<size_t>(a)];
            }
            auto doubled = hamiltonian_exp(m, ket(lam), tp, Scalar::integer(2));
            for (int d = 0; d <= tp.degree_bound; ++d)
                REQUIRE(twice[static_cast<size_t>(d)] == doubled[static_cast<size_t>(d)]);
        }
}

TEST_CASE("transfer elements") {
    // frozen values
    REQUIRE(transfer_element(2, {}, {}) == Laurent::term({0}, Scalar::one()));
    for (int m = 1; m <= 3; ++m) {
        REQUIRE(transfer_element(m, {0}, {0}) == Laurent::term({0}, mphi_q()));
        REQUIRE(transfer_element(m, {0}, {m}) ==
                Laurent::term({1}, mphi_q() * (Scalar::one() - Scalar::q_pow(2))));
    }
    REQUIRE(transfer_element(2, {1, 0}, {2, 1}) ==
            Laurent::term({1}, -(Scalar::phi_pow(2) * Scalar::q_pow(-1)) *
                                   (Scalar::one() - Scalar::q_pow(2)) *
                                   Scalar::alpha_gen(2, 1, 2)));
    // structural zeros
    REQUIRE(transfer_element(2, {}, {0}).is_zero());
    REQUIRE(transfer_element(2, {1}, {2}).is_zero());
    REQUIRE(transfer_element(2, {1}, {0}).is_zero());

    // single-monomial shape with zeta-degree (|lambda|-|mu|)/m
    for (int m = 1; m <= 3; ++m)
        for (const auto& lam : strict_basis(5, 2))
            for (const auto& mu : strict_basis(5, 2)) {
                Laurent t = transfer_element(m, mu, lam);
                if (t.is_zero()) continue;
                long long diff = 0;
                for (long long p : lam) diff += p;
                for (long long p : mu) diff -= p;
                REQUIRE(t.terms().size() == 1);
                REQUIRE(diff % m == 0);
                REQUIRE(t.terms().begin()->first == std::vector<int>{static_cast<int>(diff / m)});
            }

    // diagonal elements
    for (int m = 1; m <= 3; ++m)
        for (const auto& lam : strict_basis(4, 3))
            REQUIRE(transfer_element(m, lam, lam) ==
                    Laurent::term({0}, spow(mphi_q(), static_cast<long long>(lam.size()))));
}

TEST_CASE("transfer specializations and shift covariance") {
    for (int m = 2; m <= 3; ++m) {
        const Specialization iw = Specialization::iwahori();
        const Specialization met = Specialization::metaplectic(m);
        const Assignment iw_as = iw.assignment(m);
        const Assignment met_as = met.assignment(m);
        for (const auto& lam : strict_basis(4, 2))
            for (const auto& mu : strict_basis(4, 2)) {
                Laurent gen = transfer_element(m, mu, lam);
                REQUIRE(transfer_element(m, mu, lam, iw) == gen.substituted(iw_as));
                REQUIRE(transfer_element(m, mu, lam, met) == gen.substituted(met_as));
            }
    }
    for (int m = 1; m <= 3; ++m) {
        REQUIRE(verify_shift_covariance(m, {}, {}));
        REQUIRE(verify_shift_covariance(m, {0}, {m}));
        REQUIRE(verify_shift_covariance(m, {1, 0}, {2, 1}));
        REQUIRE(verify_shift_covariance(m, {0}, {2 * m}));
        REQUIRE(verify_shift_covariance(m, {2, 0}, {3, 1}));
    }
}

TEST_CASE("transfer matrix equals the exponentiated Hamiltonian") {
    for (int m = 1; m <= 3; ++m) {
        TruncationParams tp;
        tp.energy_bound = 4;
        tp.degree_bound = 2;
        tp.length_bound = 3;
        auto rep = verify_transfer_hamiltonian(m, tp);
        INFO("palette " << m);
        for (const auto& v : rep.violations) INFO(v);
        REQUIRE(rep.ok);
        REQUIRE(rep.kets_checked > 0);
        REQUIRE(rep.elements_checked > 0);
    }
}
