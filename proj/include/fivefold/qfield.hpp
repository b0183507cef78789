#pragma once

// Exact arithmetic in Q(sqrt5) and the integer lattices the rest of the
// library lives on:
//
//   golden lattice   Z + tau*Z,          tau = (1+sqrt5)/2
//   zeta-eta lattice zeta*Z + eta*Z,     zeta = 1/2 - sqrt5/10, eta = sqrt5/5
//   dyadic rationals Z[1/2]
//
// Every quantity is exact; nothing in this header touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "fivefold/errors.hpp"

namespace fivefold {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);

// sign of a rational: -1, 0, +1.
int rat_sign(const Rat& r);

// "p/q" (or just "p" when q == 1); parse the same forms back.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// x = a + b*sqrt(5) with a, b rational.  The representation is unique
// because sqrt5 is irrational, so == is coefficientwise.
struct QuadExt {
    Rat a{};
    Rat b{};

    QuadExt() = default;
    QuadExt(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadExt(Rat a_) : a(std::move(a_)) {}
    explicit QuadExt(long v) : a(v) {}

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    // Galois conjugate a - b*sqrt5.
    QuadExt conj() const { return QuadExt(a, -b); }

    // Field norm a^2 - 5 b^2 (rational).
    Rat norm() const { return a * a - 5 * b * b; }
};

bool operator==(const QuadExt& x, const QuadExt& y);
bool operator!=(const QuadExt& x, const QuadExt& y);
QuadExt operator+(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x);
QuadExt operator*(const QuadExt& x, const QuadExt& y);
QuadExt operator*(const Rat& c, const QuadExt& x);
// Exact division; throws DivisionByZero when y == 0.
QuadExt operator/(const QuadExt& x, const QuadExt& y);

QuadExt quad_inv(const QuadExt& x);
QuadExt quad_pow(QuadExt x, unsigned long e);

// Exact sign of a + b*sqrt5 as a real number: -1, 0, +1.  Decided by integer
// case analysis only (compare a^2 with 5 b^2 in the mixed-sign cases).
int quad_sign(const QuadExt& x);

// sign(x - y); handy comparison helper.
int quad_cmp(const QuadExt& x, const QuadExt& y);

// Human-readable exact form, e.g. "3/2 + 1/2*sqrt5", "-1", "2*sqrt5".
std::string quad_to_string(const QuadExt& x);

// Decimal approximation with `digits` significant digits (used only for
// display when explicitly requested; never for decisions).
std::string quad_approx(const QuadExt& x, unsigned digits = 20);

// Named constants.
QuadExt quad_tau();       // (1+sqrt5)/2, tau^2 = tau + 1
QuadExt quad_lambda_s();  // (3-sqrt5)/2, stable cat eigenvalue = tau^-2
QuadExt quad_lambda_u();  // (3+sqrt5)/2, unstable cat eigenvalue = tau^2
QuadExt quad_zeta();      // 1/2 - sqrt5/10
QuadExt quad_eta();       // sqrt5/5;  2*zeta + eta = 1
QuadExt quad_sqrt5();

// m + n*tau with m, n integers.
struct GoldenInt {
    Int m{};
    Int n{};
    GoldenInt() = default;
    GoldenInt(Int m_, Int n_) : m(std::move(m_)), n(std::move(n_)) {}
    bool operator==(const GoldenInt& o) const { return m == o.m && n == o.n; }
};

// n*zeta + m*eta with n, m integers.
struct CatLatticeElem {
    Int n{};
    Int m{};
    CatLatticeElem() = default;
    CatLatticeElem(Int n_, Int m_) : n(std::move(n_)), m(std::move(m_)) {}
    bool operator==(const CatLatticeElem& o) const { return n == o.n && m == o.m; }
};

// p / 2^k in canonical form: k == 0, or p odd.
struct DyadicRat {
    Int p{};
    unsigned k{};
    DyadicRat() = default;
    DyadicRat(Int p_, unsigned k_);  // canonicalizes
    bool operator==(const DyadicRat& o) const { return p == o.p && k == o.k; }
    Rat value() const;
};

QuadExt embed(const GoldenInt& g);
QuadExt embed(const CatLatticeElem& c);

// Exact membership tests + conversions; throw NotInLattice on failure.
// x = m + n*tau  iff  2b and a - b are integers (then n = 2b, m = a - b).
GoldenInt golden_of_quad(const QuadExt& x);
// x = n*zeta + m*eta  iff  2a and 5b + a are integers (then n = 2a, m = 5b + a).
CatLatticeElem cat_of_quad(const QuadExt& x);
// r = p/2^k; throws NotInLattice when the reduced denominator is not a power of two.
DyadicRat dyadic_of_rat(const Rat& r);

bool is_in_golden_lattice(const QuadExt& x);
bool is_in_cat_lattice(const QuadExt& x);

// Multiplication by lambda_s preserves the zeta-eta lattice:
//   lambda_s * (n*zeta + m*eta) = (2n - m)*zeta + (m - n)*eta.
CatLatticeElem stable_scale(const CatLatticeElem& c);

enum class LatticeBasis { golden, cat, dyadic };

// Tagged lattice element for uniform serialization.
struct LatticeElem {
    LatticeBasis basis{};
    Int c0{};  // golden: m,  cat: n,  dyadic: p
    Int c1{};  // golden: n,  cat: m,  dyadic: k
};

LatticeElem quad_to_lattice(const QuadExt& x, LatticeBasis basis);
const char* basis_name(LatticeBasis b);

} // namespace fivefold
