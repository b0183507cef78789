#include "fivefold/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace fivefold {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    a.reserve(rows * cols);
    for (const auto& row : init) {
        if (row.size() != cols)
            fail(fault::ShapeMismatch, "ragged matrix initializer");
        for (const auto& v : row) a.push_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        fail(fault::ShapeMismatch, "matrix addition shape mismatch");
    RatMatrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols != y.rows)
        fail(fault::ShapeMismatch, "matrix product shape mismatch");
    RatMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

QuadVec mat_apply(const RatMatrix& m, const QuadVec& v) {
    if (m.cols != v.size())
        fail(fault::ShapeMismatch, "matrix-vector shape mismatch");
    QuadVec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            r[i] = r[i] + m.at(i, j) * v[j];
    return r;
}

std::vector<Int> mat_apply_int(const RatMatrix& m, const std::vector<Int>& v) {
    if (m.cols != v.size())
        fail(fault::ShapeMismatch, "matrix-vector shape mismatch");
    std::vector<Int> r(m.rows, Int(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            Rat t = m.at(i, j) * Rat(v[j]);
            if (rat_den(t) != 1)
                fail(fault::ShapeMismatch, "non-integer entry in integer matrix product");
            r[i] += rat_num(t);
        }
    return r;
}

std::vector<Rat> char_poly(const RatMatrix& m) {
    if (!m.is_square())
        fail(fault::NonSquareMatrix, "characteristic polynomial needs a square matrix");
    std::size_t n = m.rows;
    if (n == 0) return {Rat(1)};

    // Samuelson-Berkowitz: grow the leading principal minor one row at a
    // time; each step multiplies the current coefficient vector by a Toeplitz
    // matrix whose first column is [1, -d, -R C, -R A C, -R A^2 C, ...] built
    // from the new border row R, column C and corner d.  No divisions occur.
    std::vector<Rat> c{Rat(1), -m.at(0, 0)};  // descending, leading 1 first
    for (std::size_t r = 2; r <= n; ++r) {
        std::size_t k = r - 1;  // size of the previous block
        std::vector<Rat> q(r + 1);
        q[0] = 1;
        q[1] = -m.at(k, k);
        // v walks through A^j * C.
        std::vector<Rat> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = m.at(i, k);
        for (std::size_t j = 2; j <= r; ++j) {
            Rat dot = 0;
            for (std::size_t i = 0; i < k; ++i) dot += m.at(k, i) * v[i];
            q[j] = -dot;
            if (j == r) break;
            std::vector<Rat> w(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t t = 0; t < k; ++t) w[i] += m.at(i, t) * v[t];
            }
            v.swap(w);
        }
        std::vector<Rat> next(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j <= std::min(i, r - 1); ++j)
                s += q[i - j] * c[j];
            next[i] = s;
        }
        c.swap(next);
    }
    std::reverse(c.begin(), c.end());  // ascending, c.back() == 1
    return c;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

QuadExt poly_eval_quad(const std::vector<Rat>& p, const QuadExt& x) {
    QuadExt r;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + QuadExt(*it);
    return r;
}

namespace {

using Cx = std::complex<double>;

// Deterministic Durand-Kerner sweep; purely a root localizer.
std::vector<Cx> dk_roots(const std::vector<double>& monic_asc) {
    std::size_t deg = monic_asc.size() - 1;
    std::vector<Cx> z(deg);
    Cx seed(0.4, 0.9);
    Cx p = seed;
    for (std::size_t i = 0; i < deg; ++i, p *= seed) z[i] = p;
    auto eval = [&](Cx x) {
        Cx r = 0;
        for (std::size_t i = monic_asc.size(); i-- > 0;) r = r * x + monic_asc[i];
        return r;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (std::size_t i = 0; i < deg; ++i) {
            Cx den = 1;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) den *= (z[i] - z[j]);
            if (den == Cx(0)) den = Cx(1e-30, 0);
            Cx delta = eval(z[i]) / den;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

// Nearest rational with denominator <= max_den, via continued fractions.
std::optional<Rat> reconstruct_rational(double x, long long max_den) {
    if (!std::isfinite(x) || std::abs(x) > 1e15) return std::nullopt;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int i = 0; i < 64; ++i) {
        double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) break;
        long long ai = static_cast<long long>(fl);
        long long p2 = ai * p1 + p0;
        long long q2 = ai * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = v - fl;
        if (rem < 1e-12) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) return std::nullopt;
    Rat r{Int(p1), Int(q1)};
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - x) > 1e-7 * std::max(1.0, std::abs(x))) return std::nullopt;
    return r;
}

// Remainder of p (monic not required) divided by monic quadratic
// x^2 - tr*x + pr; returns {r0, r1} with remainder r1*x + r0.
std::pair<Rat, Rat> quad_divmod_rem(const std::vector<Rat>& p, const Rat& tr, const Rat& pr) {
    std::vector<Rat> r(p);
    while (r.size() >= 3) {
        Rat lead = r.back();
        std::size_t d = r.size() - 1;
        // subtract lead * x^(d-2) * (x^2 - tr x + pr)
        r[d] = 0;
        r[d - 1] += lead * tr;
        r[d - 2] -= lead * pr;
        r.pop_back();
        while (r.size() >= 3 && r.back() == 0) r.pop_back();
    }
    Rat c0 = r.size() > 0 ? r[0] : Rat(0);
    Rat c1 = r.size() > 1 ? r[1] : Rat(0);
    return {c0, c1};
}

// Is r a square of a rational?  If so return the nonnegative square root.
std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int n = rat_num(r), d = rat_den(r);
    Int sn = boost::multiprecision::sqrt(n);
    Int sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

double quad_to_double(const QuadExt& x) {
    double a = rat_num(x.a).convert_to<double>() / rat_den(x.a).convert_to<double>();
    double b = rat_num(x.b).convert_to<double>() / rat_den(x.b).convert_to<double>();
    return a + b * std::sqrt(5.0);
}

} // namespace

QuadExt dominant_quadratic_root(const std::vector<Rat>& p) {
    if (p.size() < 2 || p.back() != 1)
        fail(fault::BadArgument, "dominant_quadratic_root expects a monic polynomial of degree >= 1");

    std::vector<double> pd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        pd[i] = rat_num(p[i]).convert_to<double>() / rat_den(p[i]).convert_to<double>();
    std::vector<Cx> roots = dk_roots(pd);

    double rho = 0;
    for (const auto& z : roots) rho = std::max(rho, std::abs(z));
    double scale = std::max(1.0, rho);

    // Cluster the roots attaining the maximal modulus (equal values collapse).
    std::vector<Cx> top;
    for (const auto& z : roots) {
        if (std::abs(z) < rho - 1e-8 * scale) continue;
        bool dup = false;
        for (const auto& t : top)
            if (std::abs(z - t) < 1e-7 * scale) dup = true;
        if (!dup) top.push_back(z);
    }
    if (top.size() != 1 || std::abs(top[0].imag()) > 1e-8 * scale)
        fail(fault::DominantRootNotQuadratic,
             "no unique real root of maximal modulus");
    double r = top[0].real();

    // Rational candidate first.
    if (auto cand = reconstruct_rational(r, 1000000)) {
        if (poly_eval(p, *cand) == 0) return QuadExt(*cand);
    }

    // Quadratic candidate: pair r with each other real root s, reconstruct
    // the rational trace and product, and demand exact divisibility.
    for (const auto& z : roots) {
        if (std::abs(z.imag()) > 1e-8 * scale) continue;
        double s = z.real();
        if (std::abs(s - r) < 1e-7 * scale) continue;
        auto tr = reconstruct_rational(r + s, 1000000);
        auto pr = reconstruct_rational(r * s, 1000000);
        if (!tr || !pr) continue;
        auto [c0, c1] = quad_divmod_rem(p, *tr, *pr);
        if (c0 != 0 || c1 != 0) continue;
        Rat disc = *tr * *tr - 4 * *pr;
        if (disc <= 0) continue;
        auto u = rat_sqrt(disc / 5);
        if (!u) fail(fault::DominantRootNotQuadratic,
                     "dominant root generates a quadratic field other than Q(sqrt5)");
        QuadExt x(*tr / 2, *u / 2);
        if (std::abs(quad_to_double(x) - r) > std::abs(quad_to_double(x.conj()) - r))
            x = x.conj();
        if (poly_eval_quad(p, x) == QuadExt())
            return x;
    }
    fail(fault::DominantRootNotQuadratic,
         "dominant root is not rational or quadratic over Q within Q(sqrt5)");
}

namespace {

// Reduced row echelon form over Q(sqrt5), in place; returns pivot columns.
std::vector<std::size_t> rref_quad(std::vector<QuadVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows.size(); ++j) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][j].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        QuadExt inv = quad_inv(rows[rank][j]);
        for (std::size_t c = j; c < cols; ++c) rows[rank][c] = inv * rows[rank][c];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][j].is_zero()) continue;
            QuadExt f = rows[i][j];
            for (std::size_t c = j; c < cols; ++c)
                rows[i][c] = rows[i][c] - f * rows[rank][c];
        }
        pivots.push_back(j);
        ++rank;
    }
    return pivots;
}

} // namespace

QuadVec perron_vector(const RatMatrix& m, const QuadExt& lambda, Normalization norm) {
    if (!m.is_square())
        fail(fault::NonSquareMatrix, "eigenvector of a non-square matrix");
    std::size_t n = m.rows;
    std::vector<QuadVec> rows(n, QuadVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = QuadExt(m.at(i, j));
            if (i == j) rows[i][j] = rows[i][j] - lambda;
        }
    std::vector<std::size_t> pivots = rref_quad(rows, n);
    std::size_t kdim = n - pivots.size();
    if (kdim == 0)
        fail(fault::NotAnEigenvalue, quad_to_string(lambda) + " is not an eigenvalue");
    if (kdim > 1)
        fail(fault::EigenspaceNotOneDimensional,
             "eigenspace for " + quad_to_string(lambda) + " has dimension " + std::to_string(kdim));

    // The single free column gets value 1; pivot variables read off the RREF.
    std::vector<bool> is_pivot(n, false);
    for (auto j : pivots) is_pivot[j] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    QuadVec v(n);
    v[free_col] = QuadExt(Rat(1));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = -rows[r][free_col];

    QuadExt denom;
    if (norm == Normalization::sum_one) {
        for (const auto& x : v) denom = denom + x;
    } else {
        denom = v.back();
    }
    if (denom.is_zero())
        fail(fault::BadArgument, "requested normalization divides by zero");
    QuadExt inv = quad_inv(denom);
    for (auto& x : v) x = inv * x;
    return v;
}

std::size_t matrix_rank(const RatMatrix& m) {
    std::size_t rows = m.rows, cols = m.cols;
    // Clear each row to integers (rank is untouched by row scaling).
    std::vector<std::vector<Int>> w(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            l = boost::multiprecision::lcm(l, rat_den(m.at(i, j)));
        for (std::size_t j = 0; j < cols; ++j) {
            Rat t = m.at(i, j) * Rat(l);
            w[i][j] = rat_num(t);
        }
    }
    // Bareiss fraction-free elimination.
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t sel = rank;
        while (sel < rows && w[sel][j] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(w[rank], w[sel]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t c = j + 1; c < cols; ++c)
                w[i][c] = (w[rank][j] * w[i][c] - w[i][j] * w[rank][c]) / prev;
            w[i][j] = 0;
        }
        prev = w[rank][j];
        ++rank;
    }
    return rank;
}

RatMatrix matrix_power(const RatMatrix& m, unsigned long n) {
    if (!m.is_square())
        fail(fault::NonSquareMatrix, "power of a non-square matrix");
    RatMatrix result = RatMatrix::identity(m.rows);
    RatMatrix base = m;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

} // namespace fivefold
