#include "fivefold/catmap.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "fivefold/errors.hpp"

namespace fivefold {

namespace {

RatMatrix cat_transition() {
    return RatMatrix{{1, 0, 1, 0, 1},
                     {1, 0, 1, 0, 1},
                     {1, 0, 1, 0, 1},
                     {0, 1, 0, 1, 0},
                     {0, 1, 0, 1, 0}};
}

void require(bool ok, const char* what) {
    if (!ok) {
        fail(fault::BadArgument,
             std::string("cat model consistency check failed: ") + what);
    }
}

bool quad_vec_equal(const QuadVec& x, const QuadVec& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return false;
    }
    return true;
}

QuadVec scale_vec(const QuadExt& c, const QuadVec& v) {
    QuadVec out;
    out.reserve(v.size());
    for (const QuadExt& x : v) out.push_back(c * x);
    return out;
}

CatModel build_model() {
    CatModel m;
    m.A = RatMatrix{{2, 1}, {1, 1}};
    m.lambda_u = quad_lambda_u();
    m.lambda_s = quad_lambda_s();

    const QuadExt one(1);
    const QuadExt tau = quad_tau();
    m.v_u = {tau, one};
    m.v_s = {one - tau, one};

    m.labels = {"A", "B00", "B01", "B10", "B11"};

    const QuadExt zeta = quad_zeta();
    const QuadExt eta = quad_eta();
    m.mu = {zeta, eta - zeta, zeta, QuadExt(2) * zeta - eta, eta - zeta};

    const QuadExt zero(0);
    const QuadExt ls = m.lambda_s;           // lambda_s
    const QuadExt lm = one - QuadExt(2) * ls;  // 1 - 2 lambda_s
    const QuadExt lc = one - ls;             // 1 - lambda_s
    m.a = {
        {ls, zero, ls, zero, ls},
        {lm, zero, lm, zero, lm},
        {ls, zero, ls, zero, ls},
        {zero, ls, zero, ls, zero},
        {zero, lc, zero, lc, zero},
    };

    // Determinant one.
    require(m.A.at(0, 0) * m.A.at(1, 1) - m.A.at(0, 1) * m.A.at(1, 0) == 1,
            "det A == 1");

    // Plane eigen-equations A * v = lambda * v.
    require(quad_vec_equal(mat_apply(m.A, m.v_u), scale_vec(m.lambda_u, m.v_u)),
            "A * v_u == lambda_u * v_u");
    require(quad_vec_equal(mat_apply(m.A, m.v_s), scale_vec(m.lambda_s, m.v_s)),
            "A * v_s == lambda_s * v_s");
    require(m.lambda_u * m.lambda_s == one, "lambda_u * lambda_s == 1");

    // Total measure one, entries positive and in the zeta-eta lattice.
    QuadExt total(0);
    for (const QuadExt& x : m.mu) {
        require(quad_sign(x) > 0, "mu entries positive");
        require(is_in_cat_lattice(x), "mu entries in the zeta-eta lattice");
        total = total + x;
    }
    require(total == one, "sum of mu == 1");

    // Column stochasticity and support match with the grammar.
    const RatMatrix t = cat_transition();
    for (std::size_t j = 0; j < 5; ++j) {
        QuadExt col(0);
        for (std::size_t i = 0; i < 5; ++i) {
            const bool allowed = t.at(i, j) == 1;
            require((quad_sign(m.a[i][j]) != 0) == allowed,
                    "support of a equals support of the grammar");
            require(quad_sign(m.a[i][j]) >= 0, "a entries nonnegative");
            col = col + m.a[i][j];
        }
        require(col == one, "columns of a sum to 1");
    }

    // Stationarity a * mu = mu.
    for (std::size_t i = 0; i < 5; ++i) {
        QuadExt row(0);
        for (std::size_t j = 0; j < 5; ++j) row = row + m.a[i][j] * m.mu[j];
        require(row == m.mu[i], "a * mu == mu");
    }

    return m;
}

} // namespace

const CatModel& cat_model() {
    static const CatModel model = build_model();
    return model;
}

Sft cat_sft() {
    return make_sft(cat_model().labels, cat_transition());
}

CylinderMeasure cylinder_measure(const Word& w) {
    const CatModel& m = cat_model();
    const Sft s = cat_sft();
    if (!is_admissible(s, w)) {
        fail(fault::InadmissibleWord,
             "cylinder word " + format_word(s, w) +
                 " contains a step forbidden by the grammar");
    }
    QuadExt value(1);
    if (!w.empty()) {
        value = m.mu[w[0]];
        for (std::size_t i = 1; i < w.size(); ++i) {
            value = m.a[w[i]][w[i - 1]] * value;
        }
    }
    return {value, cat_of_quad(value)};
}

DoubledModel doubled_model() {
    Sft pair = tensor_double(cat_sft());
    const RatMatrix t = cat_transition();
    RatMatrix a0(25, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            for (std::size_t k = 0; k < 5; ++k) {
                a0.at(i * 5 + j, k) = t.at(k, i) * t.at(j, k);
            }
        }
    }
    return {std::move(pair), std::move(a0)};
}

RatMatrix stage_dims_cat(unsigned long n) {
    if (n == 0) {
        RatMatrix ones(5, 5);
        for (Rat& x : ones.a) x = 1;
        return ones;
    }
    const RatMatrix t = cat_transition();
    const RatMatrix a1 = (t * t).transpose();
    if (n == 1) return a1;
    const RatMatrix ttilde = tensor_double(cat_sft()).transition;
    std::vector<Int> v(25);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            v[i * 5 + j] = rat_num(a1.at(i, j));
        }
    }
    for (unsigned long step = 1; step < n; ++step) {
        v = mat_apply_int(ttilde, v);
    }
    RatMatrix out(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            out.at(i, j) = Rat(v[i * 5 + j]);
        }
    }
    return out;
}

CatProjectors projectors() {
    CatProjectors p;
    p.pl = RatMatrix{{1, 1, 1, 0, 0}, {0, 0, 0, 1, 1}};
    p.pr = RatMatrix{{1, 0, 1, 0, 1}, {0, 1, 0, 1, 0}};
    p.z = RatMatrix{{2, 1}, {1, 1}};
    const RatMatrix t = cat_transition();
    if (!(p.pr * t == p.z * p.pr)) {
        fail(fault::BadArgument, "projector identity pr * T == Z * pr failed");
    }
    if (!(p.pl * t.transpose() == p.z * p.pl)) {
        fail(fault::BadArgument,
             "projector identity pl * T-transpose == Z * pl failed");
    }
    return p;
}

} // namespace fivefold
