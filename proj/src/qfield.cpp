#include "fivefold/qfield.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <iomanip>
#include <sstream>

namespace fivefold {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Int rat_num(const Rat& r) { return numerator(r); }
Int rat_den(const Rat& r) { return denominator(r); }

int rat_sign(const Rat& r) { return r.sign(); }

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        return r;
    } catch (const std::exception&) {
        fail(fault::BadArgument, "cannot parse rational '" + s + "'");
    }
}

bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

QuadExt operator+(const QuadExt& x, const QuadExt& y) { return QuadExt(x.a + y.a, x.b + y.b); }
QuadExt operator-(const QuadExt& x, const QuadExt& y) { return QuadExt(x.a - y.a, x.b - y.b); }
QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    // (a + b s)(c + d s) = (ac + 5bd) + (ad + bc) s,  s = sqrt5.
    return QuadExt(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a);
}

QuadExt operator*(const Rat& c, const QuadExt& x) { return QuadExt(c * x.a, c * x.b); }

QuadExt quad_inv(const QuadExt& x) {
    if (x.is_zero()) fail(fault::DivisionByZero, "inverse of zero in Q(sqrt5)");
    // 1/x = conj(x) / norm(x); the norm is nonzero for x != 0 since sqrt5
    // is irrational.
    Rat n = x.norm();
    return QuadExt(x.a / n, -x.b / n);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * quad_inv(y); }

QuadExt quad_pow(QuadExt x, unsigned long e) {
    QuadExt r(Rat(1));
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

int quad_sign(const QuadExt& x) {
    int sa = rat_sign(x.a);
    int sb = rat_sign(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: a + b*sqrt5 and a - b*sqrt5 have product a^2 - 5 b^2,
    // and the sign of the larger-magnitude part wins.
    int sn = rat_sign(x.a * x.a - 5 * x.b * x.b);
    return sn == 0 ? 0 : (sn > 0 ? sa : sb);
}

int quad_cmp(const QuadExt& x, const QuadExt& y) { return quad_sign(x - y); }

std::string quad_to_string(const QuadExt& x) {
    if (x.b == 0) return rat_to_string(x.a);
    std::string bpart;
    Rat babs = x.b < 0 ? Rat(-x.b) : x.b;
    if (babs == 1)
        bpart = "sqrt5";
    else
        bpart = rat_to_string(babs) + "*sqrt5";
    if (x.a == 0) return (x.b < 0 ? "-" : "") + bpart;
    return rat_to_string(x.a) + (x.b < 0 ? " - " : " + ") + bpart;
}

std::string quad_approx(const QuadExt& x, unsigned digits) {
    using Dec = boost::multiprecision::cpp_dec_float_50;
    Dec a = Dec(numerator(x.a)) / Dec(denominator(x.a));
    Dec b = Dec(numerator(x.b)) / Dec(denominator(x.b));
    Dec v = a + b * sqrt(Dec(5));
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits)) << v;
    return os.str();
}

QuadExt quad_tau() { return QuadExt(Rat(1, 2), Rat(1, 2)); }
QuadExt quad_lambda_s() { return QuadExt(Rat(3, 2), Rat(-1, 2)); }
QuadExt quad_lambda_u() { return QuadExt(Rat(3, 2), Rat(1, 2)); }
QuadExt quad_zeta() { return QuadExt(Rat(1, 2), Rat(-1, 10)); }
QuadExt quad_eta() { return QuadExt(Rat(0), Rat(1, 5)); }
QuadExt quad_sqrt5() { return QuadExt(Rat(0), Rat(1)); }

DyadicRat::DyadicRat(Int p_, unsigned k_) : p(std::move(p_)), k(k_) {
    while (k > 0 && p % 2 == 0) {
        p /= 2;
        --k;
    }
}

Rat DyadicRat::value() const {
    Int den = Int(1) << k;
    return Rat(p, den);
}

QuadExt embed(const GoldenInt& g) {
    // m + n*tau = (m + n/2) + (n/2) sqrt5.
    return QuadExt(Rat(g.m) + Rat(g.n, 2), Rat(g.n, 2));
}

QuadExt embed(const CatLatticeElem& c) {
    // n*zeta + m*eta = n/2 + (2m - n)/10 * sqrt5.
    return QuadExt(Rat(c.n, 2), Rat(2 * c.m - c.n, 10));
}

namespace {
bool integral(const Rat& r, Int& out) {
    if (denominator(r) != 1) return false;
    out = numerator(r);
    return true;
}
} // namespace

GoldenInt golden_of_quad(const QuadExt& x) {
    Int n, m;
    if (!integral(2 * x.b, n) || !integral(x.a - x.b, m))
        fail(fault::NotInLattice, quad_to_string(x) + " is not in Z + tau*Z");
    return GoldenInt(m, n);
}

CatLatticeElem cat_of_quad(const QuadExt& x) {
    Int n, m;
    if (!integral(2 * x.a, n) || !integral(5 * x.b + x.a, m))
        fail(fault::NotInLattice, quad_to_string(x) + " is not in zeta*Z + eta*Z");
    return CatLatticeElem(n, m);
}

DyadicRat dyadic_of_rat(const Rat& r) {
    Int den = denominator(r);
    unsigned k = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++k;
    }
    if (den != 1)
        fail(fault::NotInLattice, rat_to_string(r) + " is not a dyadic rational");
    return DyadicRat(numerator(r), k);
}

bool is_in_golden_lattice(const QuadExt& x) {
    Int t;
    return integral(2 * x.b, t) && integral(x.a - x.b, t);
}

bool is_in_cat_lattice(const QuadExt& x) {
    Int t;
    return integral(2 * x.a, t) && integral(5 * x.b + x.a, t);
}

CatLatticeElem stable_scale(const CatLatticeElem& c) {
    return CatLatticeElem(2 * c.n - c.m, c.m - c.n);
}

LatticeElem quad_to_lattice(const QuadExt& x, LatticeBasis basis) {
    LatticeElem e;
    e.basis = basis;
    switch (basis) {
    case LatticeBasis::golden: {
        GoldenInt g = golden_of_quad(x);
        e.c0 = g.m;
        e.c1 = g.n;
        break;
    }
    case LatticeBasis::cat: {
        CatLatticeElem c = cat_of_quad(x);
        e.c0 = c.n;
        e.c1 = c.m;
        break;
    }
    case LatticeBasis::dyadic: {
        if (x.b != 0)
            fail(fault::NotInLattice, quad_to_string(x) + " is irrational, not dyadic");
        DyadicRat d = dyadic_of_rat(x.a);
        e.c0 = d.p;
        e.c1 = Int(d.k);
        break;
    }
    }
    return e;
}

const char* basis_name(LatticeBasis b) {
    switch (b) {
    case LatticeBasis::golden: return "golden";
    case LatticeBasis::cat: return "zeta-eta";
    case LatticeBasis::dyadic: return "dyadic";
    }
    return "?";
}

} // namespace fivefold
