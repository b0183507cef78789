#pragma once

// Exact dense linear algebra, characteristic polynomials, and eigendata for
// the small substitution/transition matrices this project works with.
// Everything decision-making is exact; floating point appears only inside
// dominant_quadratic_root as a root localizer whose guesses are verified
// exactly before anything is returned.

#include <cstddef>
#include <optional>
#include <vector>

#include "fivefold/qfield.hpp"

namespace fivefold {

struct RatMatrix {
    std::size_t rows{0};
    std::size_t cols{0};
    std::vector<Rat> a;  // row-major

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> init);

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    bool is_square() const { return rows == cols; }

    static RatMatrix identity(std::size_t n);
    RatMatrix transpose() const;
};

bool operator==(const RatMatrix& x, const RatMatrix& y);
RatMatrix operator+(const RatMatrix& x, const RatMatrix& y);
RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);

using QuadVec = std::vector<QuadExt>;

// y = M * v over Q(sqrt5).
QuadVec mat_apply(const RatMatrix& m, const QuadVec& v);
// Integer vector variant for dimension bookkeeping (entries of m must be
// integers; the product is exact).
std::vector<Int> mat_apply_int(const RatMatrix& m, const std::vector<Int>& v);

// Monic characteristic polynomial det(lambda*I - M), coefficients ascending:
// index i holds the coefficient of lambda^i, the last entry is 1.
// Computed by the Samuelson-Berkowitz division-free scheme.
// Throws NonSquareMatrix.
std::vector<Rat> char_poly(const RatMatrix& m);

Rat poly_eval(const std::vector<Rat>& p, const Rat& x);
QuadExt poly_eval_quad(const std::vector<Rat>& p, const QuadExt& x);

// The unique real root of maximal modulus, which must lie in Q(sqrt5).
// A Durand-Kerner sweep localizes the roots; the dominant one is then
// reconstructed exactly (as a rational, or via the rational trace/product of
// a quadratic factor that must divide p exactly with discriminant 5*square)
// and verified by exact evaluation.  Throws DominantRootNotQuadratic when no
// such root exists (complex dominance, modulus ties, degree > 2 minimal
// polynomial, or a quadratic irrationality outside Q(sqrt5)).
QuadExt dominant_quadratic_root(const std::vector<Rat>& monic_ascending);

enum class Normalization { sum_one, last_one };

// One-dimensional eigenspace representative of M for the exact eigenvalue
// lambda, scaled so entries sum to one / the last entry is one.  Throws
// NotAnEigenvalue (kernel of M - lambda*I is trivial) or
// EigenspaceNotOneDimensional (kernel dimension > 1).
QuadVec perron_vector(const RatMatrix& m, const QuadExt& lambda, Normalization norm);

// Rank over Q: rows are cleared to integers, then Bareiss fraction-free
// elimination counts pivots.
std::size_t matrix_rank(const RatMatrix& m);

// M^n by repeated squaring; n = 0 gives the identity.  Throws NonSquareMatrix.
RatMatrix matrix_power(const RatMatrix& m, unsigned long n);

} // namespace fivefold
