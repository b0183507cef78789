#include "doctest.h"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "fivefold/qfield.hpp"
#include "test_util.hpp"

using namespace fivefold;

namespace {
Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 20);
    return Rat(num(rng), den(rng));
}
QuadExt random_quad(std::mt19937& rng) { return QuadExt(random_rat(rng), random_rat(rng)); }
} // namespace

TEST_CASE("golden ratio identities") {
    QuadExt tau = quad_tau();
    CHECK(tau * tau == QuadExt(Rat(3, 2), Rat(1, 2)));        // tau^2 = (3+sqrt5)/2
    CHECK(tau * tau == tau + QuadExt(Rat(1)));                 // tau^2 = tau + 1
    CHECK(quad_inv(QuadExt(Rat(1)) + tau) == QuadExt(Rat(2)) - tau);  // 1/(1+tau) = 2-tau
    CHECK(quad_lambda_s() * quad_lambda_u() == QuadExt(Rat(1)));
    CHECK(quad_lambda_u() == tau * tau);
    CHECK(quad_lambda_s() == quad_inv(tau * tau));
    CHECK(2 * quad_zeta().a + quad_eta().a == 1);
    CHECK(Rat(2) * quad_zeta().b + quad_eta().b == 0);  // 2*zeta + eta = 1 exactly
}

TEST_CASE("exact sign decisions") {
    QuadExt tau = quad_tau();
    CHECK(quad_sign(2 * Rat(1) * tau - QuadExt(Rat(3))) == 1);   // 2tau > 3 since 5 > 4
    CHECK(quad_sign(QuadExt(Rat(5)) - Rat(3) * tau) == 1);       // 5 > 3tau since 49 > 45
    CHECK(quad_sign(QuadExt()) == 0);
    CHECK(quad_sign(QuadExt(Rat(-2), Rat(0))) == -1);
    CHECK(quad_sign(QuadExt(Rat(0), Rat(-1))) == -1);
    CHECK(quad_sign(QuadExt(Rat(9, 4), Rat(-1))) == 1);   // 81/16 > 5
    CHECK(quad_sign(QuadExt(Rat(2), Rat(-1))) == -1);     // 4 < 5
    CHECK(quad_sign(quad_tau() - quad_lambda_s()) == 1);
}

TEST_CASE("quad_sign agrees with 50-digit evaluation on random samples") {
    using Dec = boost::multiprecision::cpp_dec_float_50;
    const Dec s5 = sqrt(Dec(5));
    std::mt19937 rng(20260818);
    for (int i = 0; i < 10000; ++i) {
        QuadExt x = random_quad(rng);
        Dec v = Dec(rat_num(x.a)) / Dec(rat_den(x.a)) + (Dec(rat_num(x.b)) / Dec(rat_den(x.b))) * s5;
        int ref = v == 0 ? 0 : (v > 0 ? 1 : -1);
        // Nonzero values of this size are far above 50-digit rounding error.
        if (x.a == 0 && x.b == 0) ref = 0;
        CHECK(quad_sign(x) == ref);
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(97);
    for (int i = 0; i < 200; ++i) {
        QuadExt x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        if (!x.is_zero()) CHECK(x * quad_inv(x) == QuadExt(Rat(1)));
    }
    CHECK(fault_name([] { quad_inv(QuadExt()); }) == "DivisionByZero");
    CHECK(fault_name([] { QuadExt(Rat(1)) / QuadExt(); }) == "DivisionByZero");
}

TEST_CASE("lattice conversions: frozen examples") {
    // (5 - sqrt5)/10 = zeta -> coefficients (1, 0)
    QuadExt zeta(Rat(1, 2), Rat(-1, 10));
    CHECK(cat_of_quad(zeta) == CatLatticeElem(1, 0));
    // 1 = 2*zeta + eta -> (2, 1)
    CHECK(cat_of_quad(QuadExt(Rat(1))) == CatLatticeElem(2, 1));
    // tau - 1 -> -1 + 1*tau
    CHECK(golden_of_quad(quad_tau() - QuadExt(Rat(1))) == GoldenInt(-1, 1));
    CHECK(golden_of_quad(quad_tau()) == GoldenInt(0, 1));

    CHECK(fault_name([] { golden_of_quad(QuadExt(Rat(1, 3))); }) == "NotInLattice");
    CHECK(fault_name([] { cat_of_quad(QuadExt(Rat(0), Rat(1, 3))); }) == "NotInLattice");
    CHECK(fault_name([] { quad_to_lattice(quad_tau(), LatticeBasis::dyadic); }) == "NotInLattice");
}

TEST_CASE("lattice round trips on random coefficients") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coeff(-1000, 1000);
    for (int i = 0; i < 300; ++i) {
        GoldenInt g(coeff(rng), coeff(rng));
        CHECK(golden_of_quad(embed(g)) == g);
        CatLatticeElem c(coeff(rng), coeff(rng));
        CHECK(cat_of_quad(embed(c)) == c);
        CHECK(is_in_golden_lattice(embed(g)));
        CHECK(is_in_cat_lattice(embed(c)));
    }
}

TEST_CASE("stable_scale: frozen examples and the embedding identity") {
    CHECK(stable_scale(CatLatticeElem(1, 0)) == CatLatticeElem(2, -1));
    CHECK(stable_scale(CatLatticeElem(0, 1)) == CatLatticeElem(-1, 1));
    CHECK(stable_scale(CatLatticeElem(0, 0)) == CatLatticeElem(0, 0));

    // embed(stable_scale(c)) == lambda_s * embed(c), i.e. multiplication by
    // the stable eigenvalue really is this integer map on coefficients.
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> coeff(-500, 500);
    for (int i = 0; i < 300; ++i) {
        CatLatticeElem c(coeff(rng), coeff(rng));
        CHECK(embed(stable_scale(c)) == quad_lambda_s() * embed(c));
    }
}

TEST_CASE("dyadic canonical form") {
    DyadicRat d = dyadic_of_rat(Rat(3, 8));
    CHECK(d == DyadicRat(3, 3));
    CHECK(dyadic_of_rat(Rat(6, 8)) == DyadicRat(3, 2));
    CHECK(dyadic_of_rat(Rat(5)) == DyadicRat(5, 0));
    CHECK(DyadicRat(Int(6), 3) == DyadicRat(3, 2));    // constructor canonicalizes
    CHECK(DyadicRat(Int(0), 7) == DyadicRat(0, 0));
    CHECK(dyadic_of_rat(Rat(0)) == DyadicRat(0, 0));
    CHECK(fault_name([] { dyadic_of_rat(Rat(1, 3)); }) == "NotInLattice");
    CHECK(DyadicRat(3, 3).value() == Rat(3, 8));
}

TEST_CASE("string forms") {
    CHECK(rat_to_string(Rat(-3, 2)) == "-3/2");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_from_string("-3/2") == Rat(-3, 2));
    CHECK(fault_name([] { rat_from_string("x"); }) == "BadArgument");
    CHECK(quad_to_string(quad_tau()) == "1/2 + 1/2*sqrt5");
    CHECK(quad_to_string(QuadExt(Rat(2), Rat(-1))) == "2 - sqrt5");
    CHECK(quad_to_string(QuadExt()) == "0");
    CHECK(quad_approx(quad_tau()).substr(0, 16) == "1.61803398874989");
}
