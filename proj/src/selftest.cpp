#include "fivefold/selftest.hpp"

#include <array>
#include <chrono>
#include <random>
#include <sstream>
#include <utility>

#include "fivefold/catmap.hpp"
#include "fivefold/errors.hpp"
#include "fivefold/kzero.hpp"
#include "fivefold/penrose.hpp"
#include "fivefold/qfield.hpp"
#include "fivefold/spectral.hpp"
#include "fivefold/symbolic.hpp"
#include "fivefold/tilegeom.hpp"

namespace fivefold {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// An expectation that did not hold; carries the explanation for the report.
struct CheckFail {
    std::string reason;
};

void need(bool condition, const std::string& reason) {
    if (!condition) throw CheckFail{reason};
}

// m + n*tau as an exact field element.
QuadExt gq(long m, long n) {
    return QuadExt(Rat(m)) + QuadExt(Rat(n)) * quad_tau();
}

QuadExt quad_abs(const QuadExt& x) { return quad_sign(x) < 0 ? -x : x; }

bool within(const QuadExt& value, const QuadExt& target, const Rat& tolerance) {
    return quad_cmp(quad_abs(value - target), QuadExt(tolerance)) < 0;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& p, const std::vector<Rat>& q) {
    std::vector<Rat> out(p.size() + q.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

QuadVec kron(const QuadVec& x, const QuadVec& y) {
    QuadVec out;
    out.reserve(x.size() * y.size());
    for (const auto& xi : x)
        for (const auto& yj : y) out.push_back(xi * yj);
    return out;
}

// Deterministic signed draw in [-1000, 1000].
Int draw_coord(std::mt19937_64& eng) {
    return Int(static_cast<long long>(eng() % 2001) - 1000);
}

// ---- check 1: the sixteen exact frequencies ------------------------------

std::string check_frequency_tables() {
    const auto t0 = Clock::now();
    const FrequencyTable proto = prototile_frequencies();
    const FrequencyTable edge = edge_frequencies();
    const FrequencyTable vert = vertex_frequencies();
    const double secs = seconds_since(t0);

    const QuadVec proto_expect = {gq(-1, 1), gq(2, -1)};
    const QuadVec edge_expect = {gq(-1, 1), gq(-6, 4), gq(2, -1), gq(5, -3),
                                 gq(2, -1), gq(-3, 2), gq(-3, 2)};
    const QuadVec vert_expect = {gq(-11, 7), gq(-29, 18), gq(2, -1), gq(-3, 2),
                                 gq(5, -3),  gq(-8, 5),   gq(13, -8)};
    need(proto.converted_values == proto_expect, "prototile frequencies differ");
    need(edge.converted_values == edge_expect, "edge frequencies differ");
    need(vert.converted_values == vert_expect, "vertex frequencies differ");

    for (const FrequencyTable* t : {&proto, &edge, &vert}) {
        QuadExt sum(0L);
        for (const auto& v : t->hat_values) sum = sum + v;
        need(sum == QuadExt(1L), t->kind + " hat values do not sum to one");
        need(t->labels.size() == t->hat_values.size(), t->kind + " label count mismatch");
    }
    need(edge.labels == std::vector<std::string>(edge_class_labels().begin(),
                                                 edge_class_labels().end()),
         "edge label order changed");
    need(vert.labels == std::vector<std::string>(vertex_class_labels().begin(),
                                                 vertex_class_labels().end()),
         "vertex label order changed");
    need(secs < 1.0, "frequency tables took one second or more");
    return "16 frequencies exact, hat rows sum to one";
}

// ---- check 2: characteristic polynomials ---------------------------------

std::string check_char_polys() {
    // lambda (lambda^2 + 1) (lambda^2 + 2/3 lambda + 2/9) (lambda^2 - 3 lambda + 1)
    const std::vector<Rat> lin = {Rat(0), Rat(1)};
    const std::vector<Rat> golden_factor = {Rat(1), Rat(-3), Rat(1)};
    const auto edge_expect = poly_mul(
        poly_mul(lin, {Rat(1), Rat(0), Rat(1)}),
        poly_mul({Rat(2, 9), Rat(2, 3), Rat(1)}, golden_factor));
    // lambda (lambda^2 + 1/2 lambda + 1/2) (lambda^2 + lambda + 1/2) (same)
    const auto vert_expect = poly_mul(
        poly_mul(lin, {Rat(1, 2), Rat(1, 2), Rat(1)}),
        poly_mul({Rat(1, 2), Rat(1), Rat(1)}, golden_factor));

    const auto edge_poly = char_poly(edge_inflation_matrix());
    const auto vert_poly = char_poly(vertex_inflation_matrix());
    need(edge_poly == edge_expect, "edge characteristic polynomial differs");
    need(vert_poly == vert_expect, "vertex characteristic polynomial differs");
    need(dominant_quadratic_root(edge_poly) == quad_lambda_u(),
         "edge dominant eigenvalue is not (3+sqrt5)/2");
    need(dominant_quadratic_root(vert_poly) == quad_lambda_u(),
         "vertex dominant eigenvalue is not (3+sqrt5)/2");
    return "both degree-7 factorizations and dominant root (3+sqrt5)/2";
}

// ---- check 3: the geometric sampling oracle ------------------------------

std::string check_geometric_oracle() {
    const auto t0 = Clock::now();
    const TrianglePatch patch = inflate(single_tile_patch(TileKind::L), 8);
    const TileCounts counts = count_tiles(patch);
    const auto edges = edge_histogram(patch);
    const auto verts = vertex_histogram(patch);
    const double secs = seconds_since(t0);
    need(secs < 10.0, "eight inflations took ten seconds or more");

    // The geometric engine must reproduce the count matrix's prediction.
    const RatMatrix m8 = matrix_power(prototile_count_matrix(), 8);
    need(Rat(counts.n_L) == m8.at(0, 0) && Rat(counts.n_S) == m8.at(1, 0),
         "tile counts disagree with the count matrix");

    const Int total = counts.n_L + counts.n_S;
    const QuadExt ratio((Rat(counts.n_L) / Rat(total)));
    need(within(ratio, gq(-1, 1), Rat(1, 100)),
         "prototile ratio further than 0.01 from tau - 1");

    QuadExt worst(0L);
    const auto check_fractions = [&worst](const std::array<Int, 7>& hist,
                                          const QuadVec& hats, const char* what) {
        Int sum(0);
        for (const auto& c : hist) sum += c;
        need(sum > 0, std::string(what) + " histogram is empty");
        for (std::size_t i = 0; i < hist.size(); ++i) {
            const QuadExt frac{Rat(hist[i]) / Rat(sum), Rat(0)};
            const QuadExt dev = quad_abs(frac - hats[i]);
            if (quad_cmp(dev, worst) > 0) worst = dev;
            need(quad_cmp(dev, QuadExt(Rat(1, 50))) < 0,
                 std::string(what) + " class fraction further than 0.02 from prediction");
        }
    };
    check_fractions(edges, edge_frequencies().hat_values, "edge");
    check_fractions(verts, vertex_frequencies().hat_values, "vertex");

    std::ostringstream os;
    os << total << " tiles, worst class deviation " << quad_approx(worst, 3);
    return os.str();
}

// ---- check 4: cat measures and cylinder totals ---------------------------

std::string check_cat_measures() {
    const CatModel& m = cat_model();
    const QuadExt one(1L);

    QuadExt mu_sum(0L);
    for (const auto& v : m.mu) mu_sum = mu_sum + v;
    need(mu_sum == one, "element measures do not sum to one");

    const std::size_t n = m.labels.size();
    for (std::size_t j = 0; j < n; ++j) {
        QuadExt col(0L);
        for (std::size_t i = 0; i < n; ++i) col = col + m.a[i][j];
        need(col == one, "a conditional column does not sum to one");
    }
    for (std::size_t i = 0; i < n; ++i) {
        QuadExt row(0L);
        for (std::size_t j = 0; j < n; ++j) row = row + m.a[i][j] * m.mu[j];
        need(row == m.mu[i], "the measure vector is not stationary");
    }
    for (const auto& v : m.mu) {
        const CatLatticeElem c = cat_of_quad(v);
        need(embed(c) == v, "an element measure left the zeta-eta lattice");
    }

    const Sft shift = cat_sft();
    const std::array<std::size_t, 8> expect_counts = {5, 13, 34, 89, 233, 610, 1597, 4181};
    for (unsigned long len = 1; len <= 8; ++len) {
        const auto words = enumerate_words(shift, len);
        need(words.size() == expect_counts[len - 1], "admissible word count differs");
        QuadExt sum(0L);
        for (const auto& w : words) {
            const CylinderMeasure cm = cylinder_measure(w);
            need(embed(cm.lattice) == cm.value, "a cylinder measure left the lattice");
            sum = sum + cm.value;
        }
        need(sum == one, "cylinder measures of one length do not sum to one");
    }
    return "6762 cylinder measures, every length sums to one exactly";
}

// ---- check 5: stage matrices and unitality -------------------------------

std::string check_stage_recursions() {
    const RatMatrix a1_expect = {{Rat(2), Rat(2), Rat(2), Rat(1), Rat(1)},
                                 {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
                                 {Rat(2), Rat(2), Rat(2), Rat(1), Rat(1)},
                                 {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
                                 {Rat(2), Rat(2), Rat(2), Rat(1), Rat(1)}};
    need(stage_dims_cat(1) == a1_expect, "stage-one matrix differs from the printed one");

    for (const K0Model model : {K0Model::penrose, K0Model::cat, K0Model::baker,
                                K0Model::compact_unit}) {
        const BratteliDiagram d = builtin_diagram(model);
        std::vector<Int> dims = d.initial_dims;
        for (unsigned long stage = 0; stage < 12; ++stage) {
            const RatMatrix& step = stage < d.head.size() ? d.head[stage] : d.tail;
            const std::vector<Int> next = k0_map(step, dims);
            need(next == stage_dims(d, stage + 1), "stage recursion is not unital");
            for (const auto& entry : next)
                need(entry > 0, "a stage dimension vanished");
            dims = next;
        }
    }

    // penrose stages are consecutive Fibonacci pairs, baker stages powers of two
    Int fib_prev(1), fib_cur(1);
    const BratteliDiagram penrose = builtin_diagram(K0Model::penrose);
    const BratteliDiagram baker = builtin_diagram(K0Model::baker);
    for (unsigned long stage = 1; stage <= 12; ++stage) {
        const auto pd = stage_dims(penrose, stage);
        need(pd == std::vector<Int>{fib_cur, fib_prev}, "dims are not Fibonacci pairs");
        const Int tmp = fib_cur + fib_prev;
        fib_prev = fib_cur;
        fib_cur = tmp;
        const Int pow2 = Int(1) << stage;
        need(stage_dims(baker, stage) == std::vector<Int>{pow2, pow2},
             "dims are not a power-of-two pair");
    }
    return "stage-one matrix exact, twelve unital stages for all four diagrams";
}

// ---- check 6: doubled-shift spectral structure ---------------------------

std::string check_doubled_spectrum() {
    const DoubledModel dm = doubled_model();
    const RatMatrix& tt = dm.shift.transition;
    need(matrix_rank(tt) == 4, "doubled transition matrix does not have rank four");

    const RatMatrix t = cat_sft().transition;
    const RatMatrix tT = t.transpose();
    const QuadVec left_u = perron_vector(tT, quad_lambda_u(), Normalization::last_one);
    const QuadVec left_s = perron_vector(tT, quad_lambda_s(), Normalization::last_one);
    const QuadVec right_u = perron_vector(t, quad_lambda_u(), Normalization::last_one);
    const QuadVec right_s = perron_vector(t, quad_lambda_s(), Normalization::last_one);

    // The doubled matrix acts on x (x) y as (T-transpose x) (x) (T y), so the
    // four products below realize the nonzero spectrum {u^2, s^2, 1, 1}.
    const std::array<std::pair<QuadVec, QuadExt>, 4> eigen = {
        std::make_pair(kron(left_u, right_u), quad_lambda_u() * quad_lambda_u()),
        std::make_pair(kron(left_s, right_s), quad_lambda_s() * quad_lambda_s()),
        std::make_pair(kron(left_u, right_s), QuadExt(1L)),
        std::make_pair(kron(left_s, right_u), QuadExt(1L))};
    for (const auto& [vec, lambda] : eigen) {
        const QuadVec image = mat_apply(tt, vec);
        for (std::size_t i = 0; i < vec.size(); ++i)
            need(image[i] == lambda * vec[i], "an exact eigen-equation fails");
    }

    const CatProjectors proj = projectors();
    need(proj.pr * t == proj.z * proj.pr, "the forward projector does not intertwine");
    need(proj.pl * tT == proj.z * proj.pl, "the backward projector does not intertwine");
    return "rank 4, eigenvalues {1, 1, (3-sqrt5)^2/4, (3+sqrt5)^2/4}, projectors intertwine";
}

// ---- check 7: penrose scaled dimension group -----------------------------

std::string check_penrose_group() {
    const ScaledDimensionGroup g = k0_closed_form(K0Model::penrose);
    need(g.rank == 2, "penrose group rank is not two");
    need(g.order_functional == QuadVec{quad_tau(), QuadExt(1L)},
         "cone functional is not (tau, 1)");
    need(g.scale_bound == gq(1, 1), "scale bound is not tau + 1");
    need(g.unit_class == std::vector<Int>{Int(1), Int(1)}, "unit class is not (1, 1)");

    const DimGroupElement unit{1, {Int(1), Int(1)}};
    need(functional_value(g, unit.vector) == g.scale_bound,
         "the unit does not sit exactly on the scale boundary");
    need(dl_positive(K0Model::penrose, unit) && dl_in_scale(K0Model::penrose, unit),
         "the unit is not in the scale");

    const DimGroupElement inside{1, {Int(2), Int(-3)}};
    need(dl_positive(K0Model::penrose, inside) && dl_in_scale(K0Model::penrose, inside),
         "(2, -3) should lie in the scale");
    const DimGroupElement outside{1, {Int(1), Int(-2)}};
    need(!dl_positive(K0Model::penrose, outside), "(1, -2) should not be positive");
    return "functional (tau, 1), bound tau + 1, membership examples verified";
}

// ---- check 8: cat scaled dimension group and lattice bijection -----------

std::string check_cat_group() {
    const ScaledDimensionGroup g = k0_closed_form(K0Model::cat);
    need(g.rank == 4, "cat group rank is not four");
    need(g.unit_class == std::vector<Int>{Int(13), Int(8), Int(8), Int(5)},
         "unit class is not [13, 8; 8, 5]");
    const QuadExt bound = functional_value(g, g.unit_class);
    need(bound == QuadExt(Rat(25, 2), Rat(11, 2)),
         "unit functional value is not (25 + 11 sqrt5)/2");
    need(bound == g.scale_bound, "scale bound differs from the unit value");

    std::mt19937_64 eng(20260818u);
    for (int trial = 0; trial < 100; ++trial) {
        const std::vector<Int> quad = {draw_coord(eng), draw_coord(eng),
                                       draw_coord(eng), draw_coord(eng)};
        need(pi_invert_cat(pi_embed_cat(quad)) == quad,
             "invert after embed is not the identity");
        const CatPoint p{CatLatticeElem{draw_coord(eng), draw_coord(eng)},
                         draw_coord(eng), draw_coord(eng)};
        const CatPoint q = pi_embed_cat(pi_invert_cat(p));
        need(q.alpha == p.alpha && q.u == p.u && q.v == p.v,
             "embed after invert is not the identity");
    }
    return "bound (25 + 11 sqrt5)/2, 100 round trips in both directions";
}

// ---- check 9: baker and compacts-plus-unit groups ------------------------

std::string check_baker_and_compacts() {
    need(baker_value({0, {Int(1), Int(1)}}) == DyadicRat{Int(1), 0},
         "(1, 1) at stage zero is not the canonical 1");
    need(baker_value({3, {Int(5), Int(2)}}) == DyadicRat{Int(7), 4},
         "(5, 2) at stage three is not the canonical 7/16");
    need(baker_value({2, {Int(3), Int(1)}}) == DyadicRat{Int(1), 1},
         "(3, 1) at stage two is not the canonical 1/2");

    // The scale is exactly the dyadic interval [0, 1]:
    // 0 <= (x0 + x1)/2^(s+1) <= 1, boundary included.
    for (unsigned long stage = 0; stage <= 3; ++stage) {
        const Int full = Int(1) << (stage + 1);
        for (long x0 = -4; x0 <= 8; ++x0) {
            for (long x1 = -4; x1 <= 8; ++x1) {
                const DimGroupElement e{stage, {Int(x0), Int(x1)}};
                const Int s = Int(x0) + Int(x1);
                need(dl_positive(K0Model::baker, e) == (s >= 0),
                     "baker positivity differs from the value sign");
                need(dl_in_scale(K0Model::baker, e) == (s >= 0 && s <= full),
                     "baker scale differs from the dyadic interval [0, 1]");
            }
        }
    }

    const auto positive = [](long a, long b, unsigned long stage) {
        return dl_positive(K0Model::compact_unit, {stage, {Int(a), Int(b)}});
    };
    const auto in_scale = [](long a, long b, unsigned long stage) {
        return dl_in_scale(K0Model::compact_unit, {stage, {Int(a), Int(b)}});
    };
    need(positive(1, -2, 1) && in_scale(1, -2, 1), "(1, -2) should lie in the scale");
    need(!positive(0, -1, 1), "(0, -1) should not be positive");
    need(positive(0, 3, 1) && in_scale(0, 3, 1), "(0, 3) should lie in the scale");
    need(positive(2, 0, 1) && !in_scale(2, 0, 1), "(2, 0) should be positive but unscaled");
    need(!in_scale(1, 3, 1) && in_scale(1, 3, 3),
         "(1, 3) should enter the scale only from stage three on");
    return "canonical dyadics, interval scale, two-branch membership examples";
}

// ---- check 10: groupoid block product ------------------------------------

std::string check_groupoid_product() {
    const std::vector<std::vector<std::size_t>> classes = {{0, 1, 2}, {3, 4}};
    const std::size_t n = 5;
    std::mt19937_64 eng(20260818u);

    const auto draw_supported = [&]() {
        RatMatrix f(n, n);
        for (const auto& cls : classes)
            for (const std::size_t i : cls)
                for (const std::size_t j : cls)
                    f.at(i, j) = Rat(static_cast<long long>(eng() % 19) - 9);
        return f;
    };

    for (int trial = 0; trial < 50; ++trial) {
        const RatMatrix f = draw_supported();
        const RatMatrix g = draw_supported();
        const RatMatrix product = groupoid_block_product(f, g, classes);

        // Brute-force convolution over the equivalence relation.
        RatMatrix oracle(n, n);
        for (const auto& cls : classes) {
            for (const std::size_t m : cls) {
                for (std::size_t q = 0; q < n; ++q) {
                    Rat sum(0);
                    for (const std::size_t k : cls) sum += f.at(m, k) * g.at(k, q);
                    oracle.at(m, q) = sum;
                }
            }
        }
        need(product == oracle, "block product differs from the convolution oracle");
        need(product == f * g, "block product differs from dense multiplication");
    }
    return "50 random supported pairs match the convolution oracle";
}

struct Check {
    int number;
    const char* title;
    std::string (*body)();
};

constexpr std::array<Check, 10> kChecks = {{
    {1, "prototile, edge, and vertex frequency tables", check_frequency_tables},
    {2, "inflation matrix characteristic polynomials", check_char_polys},
    {3, "geometric sampling oracle at eight inflations", check_geometric_oracle},
    {4, "cat map measures and cylinder totals", check_cat_measures},
    {5, "stage matrices and diagram unitality", check_stage_recursions},
    {6, "doubled shift spectral structure", check_doubled_spectrum},
    {7, "penrose scaled dimension group", check_penrose_group},
    {8, "cat scaled dimension group and lattice bijection", check_cat_group},
    {9, "baker and compacts-plus-unit scaled groups", check_baker_and_compacts},
    {10, "groupoid block product", check_groupoid_product},
}};

} // namespace

std::vector<CriterionResult> run_selftest() {
    std::vector<CriterionResult> out;
    out.reserve(kChecks.size() + 1);
    double total = 0.0;
    bool all_passed = true;
    for (const Check& check : kChecks) {
        CriterionResult r;
        r.number = check.number;
        r.title = check.title;
        const auto t0 = Clock::now();
        try {
            r.detail = check.body();
            r.passed = true;
        } catch (const CheckFail& f) {
            r.passed = false;
            r.detail = f.reason;
        } catch (const Fault& f) {
            r.passed = false;
            r.detail = std::string("unexpected fault: ") + f.what();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        r.seconds = seconds_since(t0);
        total += r.seconds;
        all_passed = all_passed && r.passed;
        out.push_back(std::move(r));
    }

    CriterionResult summary;
    summary.number = 11;
    summary.title = "complete battery within time budget";
    summary.seconds = total;
    summary.passed = all_passed && total < 60.0;
    if (!all_passed) {
        summary.detail = "a previous check failed";
    } else if (total >= 60.0) {
        summary.detail = "total wall time reached sixty seconds";
    } else {
        summary.detail = "all checks passed within budget";
    }
    out.push_back(std::move(summary));
    return out;
}

std::string format_selftest_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "pass" : "FAIL") << "  " << r.number << "  " << r.title;
    if (!r.passed) os << "  (" << r.detail << ")";
    return os.str();
}

bool selftest_all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace fivefold
