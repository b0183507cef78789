#include "doctest.h"

#include <random>

#include "fivefold/spectral.hpp"
#include "test_util.hpp"

using namespace fivefold;

TEST_CASE("char_poly: frozen and random 2x2") {
    RatMatrix fib{{1, 1}, {1, 0}};
    CHECK(char_poly(fib) == std::vector<Rat>{-1, -1, 1});  // x^2 - x - 1

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> e(-9, 9);
    for (int i = 0; i < 100; ++i) {
        Rat a = e(rng), b = e(rng), c = e(rng), d = e(rng);
        RatMatrix m{{a, b}, {c, d}};
        std::vector<Rat> expect{a * d - b * c, -(a + d), 1};
        CHECK(char_poly(m) == expect);
    }

    RatMatrix bad(2, 3);
    CHECK(fault_name([&] { char_poly(bad); }) == "NonSquareMatrix");
}

TEST_CASE("char_poly on a 3x3 with known determinant and trace") {
    RatMatrix m{{2, 0, 1}, {0, 3, 0}, {1, 0, 2}};
    auto p = char_poly(m);
    REQUIRE(p.size() == 4);
    CHECK(p[3] == 1);
    CHECK(p[2] == -7);       // -(trace)
    CHECK(p[0] == -9);       // -det for odd dimension; det = 3*(4-1) = 9
    // Exact eigenvalues 1 and 3: the polynomial vanishes there.
    CHECK(poly_eval(p, Rat(1)) == 0);
    CHECK(poly_eval(p, Rat(3)) == 0);
}

TEST_CASE("dominant_quadratic_root") {
    // x^2 - x - 1 -> tau
    CHECK(dominant_quadratic_root({-1, -1, 1}) == quad_tau());
    // x^2 - 3x + 1 -> (3+sqrt5)/2
    CHECK(dominant_quadratic_root({1, -3, 1}) == quad_lambda_u());
    // Rational dominant roots are fine: (x-2) and (x+6)(x-1).
    CHECK(dominant_quadratic_root({-2, 1}) == QuadExt(Rat(2)));
    CHECK(dominant_quadratic_root({-6, 5, 1}) == QuadExt(Rat(-6)));
    // With smaller factors attached: (x^2 - x - 1) * (x^2 + 1) * x
    // = x^5 - x^4 + 0x^3 - x^2 - x... compute: (x^2-x-1)(x^2+1) = x^4 - x^3 + 0x^2 - x - 1,
    // times x: coefficients ascending {0, -1, -1, 0, -1, 1}.
    CHECK(dominant_quadratic_root({0, -1, -1, 0, -1, 1}) == quad_tau());

    CHECK(fault_name([] { dominant_quadratic_root({1, 0, 1}); }) == "DominantRootNotQuadratic");   // ±i
    CHECK(fault_name([] { dominant_quadratic_root({-2, 0, 1}); }) == "DominantRootNotQuadratic");  // ±sqrt2
    CHECK(fault_name([] { dominant_quadratic_root({-5, 0, 1}); }) == "DominantRootNotQuadratic");  // tie ±sqrt5
    // Cubic minimal polynomial x^3 - x - 1 (plastic number).
    CHECK(fault_name([] { dominant_quadratic_root({-1, -1, 0, 1}); }) == "DominantRootNotQuadratic");
}

TEST_CASE("perron_vector: exact eigenvectors") {
    RatMatrix m{{2, 1}, {1, 1}};
    auto p = char_poly(m);
    QuadExt lam = dominant_quadratic_root(p);
    CHECK(lam == quad_lambda_u());
    CHECK(poly_eval_quad(p, lam) == QuadExt());

    QuadVec v = perron_vector(m, lam, Normalization::sum_one);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == quad_tau() - QuadExt(Rat(1)));      // tau - 1
    CHECK(v[1] == QuadExt(Rat(2)) - quad_tau());      // 2 - tau
    // Exact eigen equation M v = lambda v.
    QuadVec mv = mat_apply(m, v);
    for (int i = 0; i < 2; ++i) CHECK(mv[i] == lam * v[i]);
    // Entries positive, sum exactly one.
    CHECK(quad_sign(v[0]) == 1);
    CHECK(quad_sign(v[1]) == 1);
    CHECK(v[0] + v[1] == QuadExt(Rat(1)));

    QuadVec w = perron_vector(m, lam, Normalization::last_one);
    CHECK(w[1] == QuadExt(Rat(1)));
    CHECK(w[0] == quad_tau());

    CHECK(fault_name([&] { perron_vector(m, QuadExt(Rat(1)), Normalization::sum_one); }) ==
          "NotAnEigenvalue");
    RatMatrix id = RatMatrix::identity(2);
    CHECK(fault_name([&] { perron_vector(id, QuadExt(Rat(1)), Normalization::sum_one); }) ==
          "EigenspaceNotOneDimensional");
}

TEST_CASE("matrix_power and rank") {
    RatMatrix fib{{1, 1}, {1, 0}};
    RatMatrix f8 = matrix_power(fib, 8);
    CHECK(f8 == RatMatrix{{34, 21}, {21, 13}});
    CHECK(matrix_power(fib, 0) == RatMatrix::identity(2));

    CHECK(matrix_rank(RatMatrix::identity(5)) == 5);
    CHECK(matrix_rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(matrix_rank(RatMatrix{{Rat(1, 2), Rat(1, 3)}, {Rat(1, 5), Rat(1, 7)}}) == 2);
    CHECK(matrix_rank(RatMatrix(3, 4)) == 0);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    for (int i = 0; i < 50; ++i) {
        RatMatrix m(4, 5);
        for (auto& x : m.a) x = Rat(e(rng), den(rng));
        CHECK(matrix_rank(m) == matrix_rank(m.transpose()));
    }
}
