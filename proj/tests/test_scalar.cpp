#include <catch2/catch_amalgamated.hpp>

#include "colorice/scalar.hpp"
#include "colorice/specialize.hpp"

using namespace colorice;

TEST_CASE("rational constants behave like a field") {
    Scalar a = Scalar::from_rat(Rat(6, 4));
    Scalar b = Scalar::from_rat(Rat(-1, 3));
    CHECK((a * b).as_rational() == Rat(-1, 2));
    CHECK((a + b).as_rational() == Rat(7, 6));
    CHECK((a - a).is_zero());
    CHECK(a.inverse().as_rational() == Rat(2, 3));
    CHECK(Scalar::integer(0).is_zero());
    CHECK(Scalar::one().is_one());
}

TEST_CASE("q and Phi are independent invertible symbols") {
    Scalar x = Scalar::q_pow(3) * Scalar::q_pow(-1);
    CHECK(x == Scalar::q_pow(2));
    CHECK(Scalar::q_pow(2) * Scalar::q_pow(-2) == Scalar::one());
    CHECK(Scalar::phi_pow(1) * Scalar::phi_pow(1) == Scalar::phi_pow(2));
    CHECK(Scalar::phi_pow(1) != Scalar::q_pow(1));
    CHECK(Scalar::q_pow(1).pow(-3) == Scalar::q_pow(-3));
    Scalar s = Scalar::q_pow(1) + Scalar::one();
    CHECK(s.pow(2) == Scalar::q_pow(2) + Scalar::integer(2) * Scalar::q_pow(1) + Scalar::one());
    CHECK_THROWS_AS(s.inverse(), ScalarError);
}

TEST_CASE("alpha symbols are canonical under the pairing relations") {
    // alpha[i,i] = 1
    CHECK(Scalar::alpha_gen(2, 2, 3) == Scalar::one());
    // alpha[i,j]*alpha[j,i] = 1
    CHECK(Scalar::alpha_gen(1, 2, 3) * Scalar::alpha_gen(2, 1, 3) == Scalar::one());
    // periodic index reduction
    CHECK(Scalar::alpha_gen(-1, -2, 2) == Scalar::alpha_gen(1, 2, 2));
    CHECK(Scalar::alpha_gen(-2, -1, 2) == Scalar::alpha_gen(1, 2, 2).inverse());
    CHECK(Scalar::alpha_gen(4, 5, 3) == Scalar::alpha_gen(1, 2, 3));
    // reduction to the same class collapses to 1
    CHECK(Scalar::alpha_gen(1, 4, 3) == Scalar::one());
    CHECK(Scalar::alpha_gen(1, 2, 3).inverse() == Scalar::alpha_gen(2, 1, 3));
}

TEST_CASE("Gauss symbols reduce by the complementary-pair rules") {
    const int n = 3;
    CHECK(Scalar::gauss_gen(1, n) * Scalar::gauss_gen(2, n) == Scalar::q_pow(2));
    CHECK(Scalar::gauss_gen(1, n, -1) == Scalar::gauss_gen(2, n) * Scalar::q_pow(-2));
    CHECK(Scalar::gauss_gen(1, n) * Scalar::gauss_gen(1, n) == Scalar::gauss_gen(1, n, 2));
    CHECK(Scalar::gauss_gen(4, n) == Scalar::gauss_gen(1, n));
    CHECK(Scalar::gauss_gen(-1, n) == Scalar::gauss_gen(2, n));
    CHECK_THROWS_AS(Scalar::gauss_gen(0, n), ScalarError);
    CHECK_THROWS_AS(Scalar::gauss_gen(3, n), ScalarError);

    // even modulus: the self-complementary symbol squares to q^2
    CHECK(Scalar::gauss_gen(2, 4).pow(2) == Scalar::q_pow(2));
    CHECK(Scalar::gauss_gen(2, 4).pow(3) == Scalar::q_pow(2) * Scalar::gauss_gen(2, 4));
    CHECK(Scalar::gauss_gen(2, 4).inverse() == Scalar::gauss_gen(2, 4) * Scalar::q_pow(-2));

    // moduli may not mix
    CHECK_THROWS_AS(Scalar::gauss_gen(1, 3) * Scalar::gauss_gen(1, 4), ScalarError);
    // but Gauss-free scalars adopt the modulus of the other factor
    CHECK(Scalar::q_pow(1) * Scalar::gauss_gen(1, 3) == Scalar::gauss_gen(1, 3) * Scalar::q_pow(1));
}

TEST_CASE("specialization assignments hit the frozen values") {
    auto iw = Specialization::iwahori().assignment(2);
    auto met = Specialization::metaplectic(2).assignment(2);

    Scalar f = Scalar::phi_pow(1) * Scalar::alpha_gen(-2, -1, 2);
    CHECK(f.substituted(iw) == Scalar::q_pow(-2));
    CHECK(f.substituted(met) == Scalar::gauss_gen(1, 2));

    // Phi*q and Phi/q under Iwahori
    CHECK((Scalar::phi_pow(1) * Scalar::q_pow(1)).substituted(iw) == Scalar::one());
    CHECK((Scalar::phi_pow(1) * Scalar::q_pow(-1)).substituted(iw) == Scalar::q_pow(-2));

    // metaplectic at n=1 has no alpha content and Phi = -q
    auto met1 = Specialization::metaplectic(1).assignment(1);
    Scalar g = Scalar::phi_pow(1) * Scalar::q_pow(1);
    CHECK(g.substituted(met1) == -Scalar::q_pow(2));

    // a symbolic generator without an assignment survives substitution
    Assignment only_phi;
    only_phi.phi = Scalar::q_pow(-1);
    Scalar h = Scalar::phi_pow(2) * Scalar::alpha_gen(1, 2, 3);
    CHECK(h.substituted(only_phi) == Scalar::q_pow(-2) * Scalar::alpha_gen(1, 2, 3));

    // metaplectic alpha values invert consistently: alpha[2,1] -> (-g[1]/q)^-1
    CHECK(Specialization::metaplectic(2).alpha_value_at(2, 1, 2) ==
          -(Scalar::gauss_gen(1, 2) * Scalar::q_pow(-1)));
}

TEST_CASE("printing is deterministic and readable") {
    CHECK(Scalar::zero().to_string() == "0");
    CHECK(Scalar::one().to_string() == "1");
    CHECK((-Scalar::q_pow(2)).to_string() == "-q^2");
    Scalar s = Scalar::phi_pow(1) * Scalar::q_pow(1) - Scalar::from_rat(Rat(1, 2));
    CHECK(s.to_string() == "-1/2 + q*Phi");
    CHECK((Scalar::gauss_gen(1, 3, 2) * Scalar::alpha_gen(1, 2, 3)).to_string() ==
          "a[1,2]*g[1]^2");
}
