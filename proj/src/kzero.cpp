#include "fivefold/kzero.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "fivefold/catmap.hpp"
#include "fivefold/errors.hpp"

namespace fivefold {

namespace {

const RatMatrix& step_matrix(const BratteliDiagram& d, unsigned long stage) {
    return stage < d.head.size() ? d.head[stage] : d.tail;
}

std::size_t rank_at_stage(const BratteliDiagram& d, unsigned long stage) {
    if (stage == 0) return d.initial_dims.size();
    return step_matrix(d, stage - 1).rows;
}

void check_element(const BratteliDiagram& d, const DimGroupElement& e) {
    if (e.vector.size() != rank_at_stage(d, e.stage)) {
        fail(fault::ShapeMismatch,
             "element vector length " + std::to_string(e.vector.size()) +
                 " does not match the rank at stage " + std::to_string(e.stage));
    }
}

DimGroupElement advance_to(const BratteliDiagram& d, DimGroupElement e,
                           unsigned long target) {
    check_element(d, e);
    while (e.stage < target) {
        e.vector = k0_map(step_matrix(d, e.stage), e.vector);
        ++e.stage;
    }
    return e;
}

void validate_diagram(const BratteliDiagram& d) {
    if (d.initial_dims.empty()) fail(fault::BadArgument, "diagram has no stage-0 blocks");
    for (const Int& n : d.initial_dims) {
        if (n <= 0) fail(fault::BadArgument, "stage-0 dimensions must be positive");
    }
    std::size_t rank = d.initial_dims.size();
    for (const RatMatrix& m : d.head) {
        if (m.cols != rank) fail(fault::ShapeMismatch, "head multiplicity shapes do not chain");
        rank = m.rows;
    }
    if (!d.tail.is_square() || d.tail.rows != rank) {
        fail(fault::ShapeMismatch, "tail multiplicity matrix does not fit the final rank");
    }
}

QuadExt quad_of_int(const Int& v) { return QuadExt(Rat(v)); }

// Dominant-eigenvector functional of a square multiplicity matrix, as the
// left Perron vector (eigenvector of the transpose).
QuadVec tail_functional(const RatMatrix& tail, Normalization norm) {
    const QuadExt lambda = dominant_quadratic_root(char_poly(tail));
    return perron_vector(tail.transpose(), lambda, norm);
}

const ScaledDimensionGroup& cat_closed_form_cached() {
    static const ScaledDimensionGroup g = k0_closed_form(K0Model::cat);
    return g;
}

} // namespace

BratteliDiagram builtin_diagram(K0Model model) {
    BratteliDiagram d;
    switch (model) {
    case K0Model::penrose:
        d.initial_dims = {1};
        d.head = {RatMatrix{{1}, {1}}};
        d.tail = RatMatrix{{1, 1}, {1, 0}};
        break;
    case K0Model::cat: {
        DoubledModel dm = doubled_model();
        d.initial_dims = std::vector<Int>(5, 1);
        d.head = {dm.entry};
        d.tail = dm.shift.transition;
        break;
    }
    case K0Model::baker:
        d.initial_dims = {1, 1};
        d.head = {};
        d.tail = RatMatrix{{1, 1}, {1, 1}};
        break;
    case K0Model::compact_unit:
        d.initial_dims = {1};
        d.head = {RatMatrix{{1}, {1}}};
        d.tail = RatMatrix{{1, 0}, {1, 1}};
        break;
    }
    validate_diagram(d);
    return d;
}

std::vector<Int> stage_dims(const BratteliDiagram& d, unsigned long n) {
    DimGroupElement e{0, d.initial_dims};
    return advance_to(d, std::move(e), n).vector;
}

ScaledDimensionGroup k0_of_finite(const std::vector<Int>& dims) {
    for (const Int& n : dims) {
        if (n <= 0) fail(fault::BadArgument, "finite-stage dimensions must be positive");
    }
    ScaledDimensionGroup g;
    g.rank = dims.size();
    g.unit_class = dims;
    g.scale_bound = QuadExt(0);
    std::string box;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) box += " x ";
        box += "[0," + dims[i].str() + "]";
    }
    g.embedding = "(Z^" + std::to_string(dims.size()) + ", N^" +
                  std::to_string(dims.size()) + ", " + box + ")";
    return g;
}

std::vector<Int> k0_map(const RatMatrix& a, const std::vector<Int>& x) {
    if (a.cols != x.size()) {
        fail(fault::ShapeMismatch,
             "multiplicity matrix with " + std::to_string(a.cols) +
                 " columns applied to a vector of length " + std::to_string(x.size()));
    }
    return mat_apply_int(a, x);
}

bool dl_equal(const BratteliDiagram& d, const DimGroupElement& x,
              const DimGroupElement& y) {
    const unsigned long target =
        std::max({x.stage, y.stage, static_cast<unsigned long>(d.head.size())});
    DimGroupElement a = advance_to(d, x, target);
    DimGroupElement b = advance_to(d, y, target);
    // Kernels of tail powers stabilize after at most rank steps, so classes
    // that ever merge have merged by then.
    for (std::size_t j = 0; j <= d.tail.rows; ++j) {
        if (a.vector == b.vector) return true;
        a.vector = k0_map(d.tail, a.vector);
        b.vector = k0_map(d.tail, b.vector);
    }
    return a.vector == b.vector;
}

DimGroupElement dl_add(const BratteliDiagram& d, const DimGroupElement& x,
                       const DimGroupElement& y) {
    const unsigned long target = std::max(x.stage, y.stage);
    DimGroupElement a = advance_to(d, x, target);
    DimGroupElement b = advance_to(d, y, target);
    for (std::size_t i = 0; i < a.vector.size(); ++i) a.vector[i] += b.vector[i];
    return a;
}

std::vector<Int> cat_canonical(const DimGroupElement& x) {
    const BratteliDiagram d = builtin_diagram(K0Model::cat);
    DimGroupElement e = advance_to(d, x, std::max(x.stage, 1ul));
    const CatProjectors p = projectors();
    // Fold the 25-vector (row-major 5x5) down to pl * X * pr^T.
    Int m[2][2] = {{0, 0}, {0, 0}};
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            const Int& v = e.vector[i * 5 + j];
            if (v == 0) continue;
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    if (p.pl.at(r, i) != 0 && p.pr.at(c, j) != 0) m[r][c] += v;
                }
            }
        }
    }
    // Anchor at stage 1: one inverse compression per deeper stage, with
    // Zinv = [1,-1;-1,2] acting on both sides (it is integral, so the
    // canonical coordinates stay integers).
    for (unsigned long s = e.stage; s > 1; --s) {
        const Int u = m[0][0], v = m[0][1], w = m[1][0], z = m[1][1];
        const Int a = u - w, b = v - z;        // Zinv * m
        const Int c = -u + 2 * w, dd = -v + 2 * z;
        m[0][0] = a - b;                        // ... * Zinv^T
        m[0][1] = -a + 2 * b;
        m[1][0] = c - dd;
        m[1][1] = -c + 2 * dd;
    }
    return {m[0][0], m[0][1], m[1][0], m[1][1]};
}

QuadExt functional_value(const ScaledDimensionGroup& g,
                         const std::vector<Int>& coords) {
    if (g.order_functional.empty() || g.order_functional.size() != coords.size()) {
        fail(fault::ShapeMismatch,
             "functional of rank " + std::to_string(g.order_functional.size()) +
                 " applied to " + std::to_string(coords.size()) + " coordinates");
    }
    QuadExt total(0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        total = total + Rat(coords[i]) * g.order_functional[i];
    }
    return total;
}

ScaledDimensionGroup k0_closed_form(K0Model model) {
    ScaledDimensionGroup g;
    switch (model) {
    case K0Model::penrose: {
        const BratteliDiagram d = builtin_diagram(model);
        g.rank = 2;
        g.order_functional = tail_functional(d.tail, Normalization::last_one);
        g.unit_class = stage_dims(d, 1);
        g.scale_bound = functional_value(g, g.unit_class);
        g.embedding =
            "Pi(x,y) = (tau-1)x + (2-tau)y identifies the limit with "
            "Z + tau*Z; cone {tau*x + y >= 0}, scale {0 <= tau*x + y <= tau+1}";
        break;
    }
    case K0Model::cat: {
        const CatProjectors p = projectors();
        // Left Perron vector of the compression Z, tensored with itself and
        // normalized to leading coordinate one, is the cone functional on
        // the canonical [u,v;w,z] coordinates.
        const QuadVec w = tail_functional(p.z, Normalization::last_one);
        QuadVec f;
        f.reserve(4);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t k = 0; k < 2; ++k) f.push_back(w[i] * w[k]);
        }
        const QuadExt lead = f[0];
        for (QuadExt& x : f) x = x / lead;
        g.rank = 4;
        g.order_functional = std::move(f);
        // Unit class: the stage-1 unit folded to canonical coordinates.
        const RatMatrix a1 = stage_dims_cat(1);
        std::vector<Int> unit25(25);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j) unit25[i * 5 + j] = rat_num(a1.at(i, j));
        }
        g.unit_class = cat_canonical(DimGroupElement{1, std::move(unit25)});
        g.scale_bound = functional_value(g, g.unit_class);
        g.embedding =
            "Pi([u,v;w,z]) = (functional value rescaled into zeta*Z + eta*Z, u, v); "
            "inverse (n,m,u,v) -> [u, v; 8n+13m-u-v, 5n+8m-u]";
        break;
    }
    case K0Model::baker: {
        const BratteliDiagram d = builtin_diagram(model);
        g.rank = 2;
        g.order_functional = tail_functional(d.tail, Normalization::sum_one);
        g.unit_class = stage_dims(d, 0);
        g.scale_bound = functional_value(g, g.unit_class);
        g.embedding =
            "class value (x+y)/2^(stage+1) identifies the limit with Z[1/2]; "
            "cone {x + y >= 0}, scale [0,1]";
        break;
    }
    case K0Model::compact_unit: {
        const BratteliDiagram d = builtin_diagram(model);
        g.rank = 2;
        g.order_functional = {};
        g.unit_class = stage_dims(d, 1);
        g.scale_bound = QuadExt(0);
        g.embedding =
            "cone {a > 0} union {a = 0, b >= 0}; scale {a = 0, b >= 0} union "
            "{a = 1, b <= stage}; the unit at stage s is (1, s)";
        break;
    }
    }
    if (!g.order_functional.empty() &&
        functional_value(g, g.unit_class) != g.scale_bound) {
        fail(fault::BadArgument, "scale bound does not equal functional(unit)");
    }
    return g;
}

bool dl_positive(K0Model model, const DimGroupElement& x) {
    const BratteliDiagram d = builtin_diagram(model);
    const unsigned long tail_start = static_cast<unsigned long>(d.head.size());
    const DimGroupElement e = advance_to(d, x, std::max(x.stage, tail_start));
    switch (model) {
    case K0Model::penrose: {
        const QuadExt tau = quad_tau();
        return quad_sign(tau * quad_of_int(e.vector[0]) + quad_of_int(e.vector[1])) >= 0;
    }
    case K0Model::cat:
        return quad_sign(functional_value(cat_closed_form_cached(),
                                          cat_canonical(e))) >= 0;
    case K0Model::baker:
        return e.vector[0] + e.vector[1] >= 0;
    case K0Model::compact_unit:
        return e.vector[0] > 0 || (e.vector[0] == 0 && e.vector[1] >= 0);
    }
    fail(fault::BadArgument, "unknown model");
}

bool dl_in_scale(K0Model model, const DimGroupElement& x) {
    const BratteliDiagram d = builtin_diagram(model);
    const unsigned long tail_start = static_cast<unsigned long>(d.head.size());
    const DimGroupElement e = advance_to(d, x, std::max(x.stage, tail_start));
    switch (model) {
    case K0Model::penrose: {
        const QuadExt tau = quad_tau();
        const QuadExt anchored =
            quad_pow(quad_inv(tau), e.stage - 1) *
            (tau * quad_of_int(e.vector[0]) + quad_of_int(e.vector[1]));
        return quad_sign(anchored) >= 0 &&
               quad_cmp(anchored, tau + QuadExt(1)) <= 0;
    }
    case K0Model::cat: {
        const ScaledDimensionGroup& g = cat_closed_form_cached();
        const QuadExt value = functional_value(g, cat_canonical(e));
        return quad_sign(value) >= 0 && quad_cmp(value, g.scale_bound) <= 0;
    }
    case K0Model::baker: {
        const Rat value = baker_value(e).value();
        return value >= 0 && value <= 1;
    }
    case K0Model::compact_unit:
        return (e.vector[0] == 0 && e.vector[1] >= 0) ||
               (e.vector[0] == 1 && e.vector[1] <= Int(e.stage));
    }
    fail(fault::BadArgument, "unknown model");
}

GoldenInt pi_embed_penrose(const Int& x, const Int& y) {
    const QuadExt tau = quad_tau();
    const QuadExt value =
        Rat(x) * (tau - QuadExt(1)) + Rat(y) * (QuadExt(2) - tau);
    return golden_of_quad(value);
}

CatPoint pi_embed_cat(const std::vector<Int>& uvwz) {
    if (uvwz.size() != 4) {
        fail(fault::ShapeMismatch, "cat embedding expects [u,v;w,z] coordinates");
    }
    const ScaledDimensionGroup& g = cat_closed_form_cached();
    const QuadExt alpha = functional_value(g, uvwz) / g.scale_bound;
    return {cat_of_quad(alpha), uvwz[0], uvwz[1]};
}

std::vector<Int> pi_invert_cat(const CatPoint& p) {
    const Int& n = p.alpha.n;
    const Int& m = p.alpha.m;
    return {p.u, p.v, 8 * n + 13 * m - p.u - p.v, 5 * n + 8 * m - p.u};
}

DyadicRat baker_value(const DimGroupElement& x) {
    const BratteliDiagram d = builtin_diagram(K0Model::baker);
    check_element(d, x);
    const Int num = x.vector[0] + x.vector[1];
    Int den = 1;
    den <<= (x.stage + 1);
    return dyadic_of_rat(Rat(num, den));
}

RatMatrix groupoid_block_product(
    const RatMatrix& f, const RatMatrix& g,
    const std::vector<std::vector<std::size_t>>& classes) {
    if (!f.is_square() || !g.is_square() || f.rows != g.rows) {
        fail(fault::ShapeMismatch, "block product needs equal square matrices");
    }
    const std::size_t n = f.rows;
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> class_of(n, unassigned);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t idx : classes[c]) {
            if (idx >= n) fail(fault::BadArgument, "class member out of range");
            if (class_of[idx] != unassigned) {
                fail(fault::BadArgument, "classes overlap at index " + std::to_string(idx));
            }
            class_of[idx] = c;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of[i] == unassigned) {
            fail(fault::BadArgument, "classes do not cover index " + std::to_string(i));
        }
    }
    auto check_support = [&](const RatMatrix& m, const char* which) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (m.at(i, j) != 0 && class_of[i] != class_of[j]) {
                    fail(fault::SupportViolation,
                         std::string(which) + " has a nonzero entry at (" +
                             std::to_string(i) + "," + std::to_string(j) +
                             ") outside the blocks");
                }
            }
        }
    };
    check_support(f, "left factor");
    check_support(g, "right factor");
    RatMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rat sum = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (class_of[k] != class_of[i]) continue;
                sum += f.at(i, k) * g.at(k, j);
            }
            h.at(i, j) = sum;
        }
    }
    return h;
}

} // namespace fivefold
