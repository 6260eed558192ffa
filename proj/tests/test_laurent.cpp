#include <catch2/catch_amalgamated.hpp>

#include "colorice/laurent.hpp"
#include "colorice/specialize.hpp"

using namespace colorice;

namespace {
Laurent z(int i, int e = 1) { return Laurent::var(2, i, e); }
}  // namespace

TEST_CASE("ring operations") {
    Laurent f = z(0) + z(1);
    Laurent g = z(0) - z(1);
    CHECK(f * g == z(0, 2) - z(1, 2));
    CHECK(f - f == Laurent::zero(2));
    CHECK(f * Laurent::one(2) == f);
    CHECK((Scalar::q_pow(1) * f).coefficient({1, 0}) == Scalar::q_pow(1));
    CHECK_THROWS_AS(f + Laurent::one(3), LaurentError);
    CHECK(Laurent::var(2, 0, -1) * z(0) == Laurent::one(2));
}

TEST_CASE("variable relabelings") {
    Laurent f = Scalar::q_pow(1) * z(0, 2) + z(1, -1);
    CHECK(f.swap_vars(0) == Scalar::q_pow(1) * z(1, 2) + z(0, -1));
    CHECK(f.reverse_vars() == f.swap_vars(0));
    CHECK(f.power_subst(3) == Scalar::q_pow(1) * z(0, 6) + z(1, -3));

    Laurent h = Laurent::var(3, 0) * Laurent::var(3, 1, 2) * Laurent::var(3, 2, 3);
    // cycle 0 -> 1 -> 2 -> 0
    CHECK(h.permute_vars({1, 2, 0}) ==
          Laurent::var(3, 1) * Laurent::var(3, 2, 2) * Laurent::var(3, 0, 3));
    CHECK(h.reverse_vars() ==
          Laurent::var(3, 2) * Laurent::var(3, 1, 2) * Laurent::var(3, 0, 3));
}

TEST_CASE("exact division") {
    CHECK(exact_div(z(0, 2) - z(1, 2), z(0) - z(1)) == z(0) + z(1));
    // numerator arising in the divided-difference operators
    Laurent num = Scalar::q_pow(-2) * (z(1) * (z(0) - z(1)));
    CHECK(exact_div(num, z(1) - z(0)) == -(Scalar::q_pow(-2) * z(1)));
    // Laurent division (negative exponents in the quotient)
    CHECK(exact_div(z(0) - z(1), z(0, 1) * z(1, 1)) == z(1, -1) - z(0, -1));
    CHECK(exact_div(Laurent::zero(2), z(0) - z(1)).is_zero());
    CHECK_THROWS_AS(exact_div(z(0) - z(1), z(0) + z(1)), LaurentError);
    CHECK_THROWS_AS(exact_div(Laurent::one(2), Laurent::zero(2)), LaurentError);
    // divisor leading coefficient must be invertible
    Laurent bad = (Scalar::q_pow(1) + Scalar::one()) * z(0) + z(1);
    CHECK_THROWS_AS(exact_div(bad * bad, bad), LaurentError);

    // three-variable alternant divided by its Vandermonde factors, sequentially
    auto zz = [](int i, int e) { return Laurent::var(3, i, e); };
    auto alt = Laurent::zero(3);
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    int sign[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p)
        alt += Scalar::integer(sign[p]) *
               (zz(perm[p][0], 2) * zz(perm[p][1], 1) * zz(perm[p][2], 0));
    Laurent q = alt;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
        q = exact_div(q, Laurent::var(3, i) - Laurent::var(3, j));
    CHECK(q == Laurent::one(3));
}

TEST_CASE("coefficient substitution on polynomials") {
    Laurent f = Scalar::phi_pow(1) * Scalar::q_pow(1) * z(0) -
                Scalar::phi_pow(1) * Scalar::q_pow(-1) * z(1);
    CHECK(f.substituted(Specialization::iwahori().assignment(1)) ==
          z(0) - Scalar::q_pow(-2) * z(1));
    CHECK(f.substituted(Specialization::metaplectic(1).assignment(1)) ==
          z(1) - Scalar::q_pow(2) * z(0));
}

TEST_CASE("truncation and printing") {
    Laurent f = z(0, 3) + z(0) * z(1, 2) + Laurent::one(2);
    CHECK(f.truncate_var(0, 1) == z(0) * z(1, 2) + Laurent::one(2));
    CHECK(f.truncate_var(1, 0) == z(0, 3) + Laurent::one(2));
    CHECK(Laurent::zero(2).to_string() == "0");
    CHECK((z(0) - z(1)).to_string() == "(1)*z1 + (-1)*z2");
}
