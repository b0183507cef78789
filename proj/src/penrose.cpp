#include "fivefold/penrose.hpp"

#include <map>
#include <utility>

#include "fivefold/errors.hpp"

namespace fivefold {

// ---------------------------------------------------------------------------
// Count matrices and frequency tables.
// ---------------------------------------------------------------------------

RatMatrix prototile_count_matrix() {
    return RatMatrix{{2, 1}, {1, 1}};
}

RatMatrix edge_inflation_matrix() {
    const Rat t(1, 3), u(2, 3);
    return RatMatrix{{u, u, 1, t, t, 0, u},
                     {0, 1, 0, 1, 0, 1, 1},
                     {0, 1, 0, 1, 0, 1, 0},
                     {0, 0, 0, 0, 1, 0, 0},
                     {u, u, u, u, u, u, u},
                     {1, 0, 0, 0, 0, 0, 0},
                     {1, 0, 0, 0, 0, 0, 0}};
}

RatMatrix vertex_inflation_matrix() {
    const Rat h(1, 2), f(5, 2), g(3, 2);
    return RatMatrix{{0, 1, 0, 0, 0, 1, 1},
                     {1, 0, 0, 0, 0, 0, 0},
                     {f, f, h, h, g, g, 2},
                     {f, 0, 0, 1, g, 0, 0},
                     {0, 0, 1, 0, 0, 0, 0},
                     {0, 0, 0, 1, 0, 0, 0},
                     {0, 0, 0, 0, 1, 0, 0}};
}

namespace {

// Dominant eigenvector (sum one) of an inflation matrix.
QuadVec hat_vector(const RatMatrix& m) {
    const QuadExt lambda = dominant_quadratic_root(char_poly(m));
    return perron_vector(m, lambda, Normalization::sum_one);
}

FrequencyTable make_table(std::string kind, std::vector<std::string> labels,
                          const RatMatrix& m, const std::vector<Rat>& factors) {
    FrequencyTable t;
    t.kind = std::move(kind);
    t.labels = std::move(labels);
    t.hat_values = hat_vector(m);
    t.converted_values.reserve(t.hat_values.size());
    for (std::size_t i = 0; i < t.hat_values.size(); ++i)
        t.converted_values.push_back(factors[i] * t.hat_values[i]);
    return t;
}

} // namespace

FrequencyTable prototile_frequencies() {
    return make_table("prototile", {tile_kind_name(TileKind::L), tile_kind_name(TileKind::S)},
                      prototile_count_matrix(), {1, 1});
}

FrequencyTable edge_frequencies() {
    const auto& l = edge_class_labels();
    const Rat g(3, 2);
    return make_table("edge", {l.begin(), l.end()}, edge_inflation_matrix(),
                      {3, 3, 3, g, g, 3, 3});
}

FrequencyTable vertex_frequencies() {
    const auto& l = vertex_class_labels();
    return make_table("vertex", {l.begin(), l.end()}, vertex_inflation_matrix(),
                      {5, 5, 1, 1, 1, 1, 1});
}

QuadExt inflate_motif_frequency(const QuadExt& kappa) {
    return (QuadExt(2) - quad_tau()) * kappa;
}

MotifFrequency motif_frequency(unsigned k, const Int& n_L, const Int& n_S,
                               const std::array<Int, 7>& n_edge,
                               const std::array<Int, 7>& n_vertex) {
    if (n_L < 0 || n_S < 0)
        fail(fault::BadArgument, "motif counts must be nonnegative");
    for (int i = 0; i < 7; ++i)
        if (n_edge[i] < 0 || n_vertex[i] < 0)
            fail(fault::BadArgument, "motif counts must be nonnegative");

    const FrequencyTable proto = prototile_frequencies();
    const FrequencyTable edges = edge_frequencies();
    const FrequencyTable verts = vertex_frequencies();
    QuadExt sum = Rat(n_L) * proto.converted_values[0] + Rat(n_S) * proto.converted_values[1];
    for (int i = 0; i < 7; ++i) {
        sum = sum + Rat(n_edge[i]) * edges.converted_values[i];
        sum = sum + Rat(n_vertex[i]) * verts.converted_values[i];
    }
    MotifFrequency out;
    out.value = quad_pow(QuadExt(2) - quad_tau(), k) * sum;
    out.golden = golden_of_quad(out.value);
    return out;
}

// ---------------------------------------------------------------------------
// Subshifts and recoding.
// ---------------------------------------------------------------------------

Sft penrose_sft() {
    return make_sft({tile_kind_name(TileKind::L), tile_kind_name(TileKind::S)},
                    RatMatrix{{1, 1}, {1, 0}});
}

Sft penrose_block_sft() {
    return make_sft({"l", "s"}, RatMatrix{{1, 1}, {1, 1}});
}

namespace {

constexpr std::size_t SYM_L = 0;  // "L" in penrose_sft, "l" in the block shift
constexpr std::size_t SYM_S = 1;

void require_admissible(const Word& w) {
    const Sft sft = penrose_sft();
    if (!is_admissible(sft, w))
        fail(fault::InadmissibleWord, "word breaks the S->L successor rule");
}

} // namespace

Word recode(const Word& w) {
    require_admissible(w);
    Word out;
    out.reserve(w.size());
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] == SYM_L) {
            out.push_back(SYM_L);
            i += 1;
        } else {
            if (i + 1 >= w.size())
                fail(fault::DanglingS, "trailing S has no following L to close the block");
            // admissibility guarantees w[i+1] == L
            out.push_back(SYM_S);
            i += 2;
        }
    }
    return out;
}

Word recode_inverse(const Word& w) {
    Word out;
    out.reserve(w.size() * 2);
    for (std::size_t sym : w) {
        if (sym == SYM_L) {
            out.push_back(SYM_L);
        } else if (sym == SYM_S) {
            out.push_back(SYM_S);
            out.push_back(SYM_L);
        } else {
            fail(fault::SymbolOutOfRange, "block words use symbols l, s only");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Word <-> patch dictionary.
// ---------------------------------------------------------------------------

namespace {

// Seed triangle of a given kind at a given parity (legs tau for the acute
// shape, 1 for the obtuse one; the dictionary only needs *some* valid seed).
TrianglePatch seed_patch(TileKind kind, Parity parity) {
    const CycloPoint zero(0, 0, 0, 0);
    const CycloPoint one(1, 0, 0, 0);
    const CycloPoint zeta3(0, 0, 0, 1);
    const CycloPoint tau(1, 0, 1, -1);
    TrianglePatch p;
    if (triangle_shape(kind, parity) == TriShape::acute)
        p.triangles.push_back(make_triangle(kind, parity, zero, tau, cyclo_mul_zeta(tau)));
    else
        p.triangles.push_back(make_triangle(kind, parity, zero, one, zeta3));
    return p;
}

TileKind kind_of_symbol(std::size_t sym) {
    return sym == SYM_L ? TileKind::L : TileKind::S;
}

} // namespace

TrianglePatch sequence_to_patch(const Word& w) {
    if (w.empty())
        fail(fault::InadmissibleWord, "the empty word addresses no tile");
    if (w.size() > 25)
        fail(fault::EnumerationLimitExceeded, "words longer than 25 letters are not materialized");
    require_admissible(w);

    const std::size_t n = w.size();
    TrianglePatch patch =
        seed_patch(kind_of_symbol(w[n - 1]), (n - 1) % 2 == 0 ? Parity::even : Parity::odd);
    std::size_t marked = 0;
    for (std::size_t step = 1; step < n; ++step) {
        const std::size_t want = w[n - 1 - step];
        DecomposeTrace trace;
        patch = decompose_traced(patch, trace);
        bool found = false;
        for (std::size_t j = 0; j < patch.triangles.size(); ++j) {
            if (trace.parent[j] == marked &&
                patch.triangles[j].kind == kind_of_symbol(want)) {
                marked = j;
                found = true;
                break;
            }
        }
        if (!found)
            fail(fault::InadmissibleWord, "no child of the addressed kind exists");
    }
    patch.marked = marked;
    return patch;
}

// ---------------------------------------------------------------------------
// Composition (inverse substitution): regroup the tiles of a decomposed
// patch into their parents.  The split parent is always of kind L; its S
// child determines the partner L child by shared vertices, every unpaired L
// child is the relabel of an S parent.
// ---------------------------------------------------------------------------

namespace {

struct TripleLess {
    bool operator()(const std::array<CycloPoint, 3>& x,
                    const std::array<CycloPoint, 3>& y) const {
        for (int i = 0; i < 3; ++i) {
            if (cyclo_less(x[i], y[i])) return true;
            if (cyclo_less(y[i], x[i])) return false;
        }
        return false;
    }
};

CycloPoint tau2_minus_tau(const CycloPoint& x, const CycloPoint& y) {
    // tau^2 * x - tau * y
    return cyclo_sub(cyclo_mul_tau(cyclo_mul_tau(x)), cyclo_mul_tau(y));
}

TrianglePatch compose_traced(const TrianglePatch& p, std::vector<std::size_t>& parent_of) {
    if (p.triangles.empty())
        fail(fault::BadArgument, "cannot compose an empty patch");
    const Parity child_parity = p.triangles.front().parity;
    for (const auto& t : p.triangles)
        if (t.parity != child_parity)
            fail(fault::BadArgument, "cannot compose a patch of mixed parities");
    const Parity parent_parity = flip(child_parity);
    const bool parent_acute = triangle_shape(TileKind::L, parent_parity) == TriShape::acute;

    // Index every tile by its exact vertex triple.
    std::map<std::array<CycloPoint, 3>, std::size_t, TripleLess> by_vertices;
    for (std::size_t i = 0; i < p.triangles.size(); ++i)
        if (!by_vertices.emplace(p.triangles[i].v, i).second)
            fail(fault::BadArgument, "patch contains a duplicated tile");

    TrianglePatch out;
    parent_of.assign(p.triangles.size(), 0);
    std::vector<char> consumed(p.triangles.size(), 0);
    for (std::size_t i = 0; i < p.triangles.size(); ++i) {
        if (consumed[i]) continue;
        const Triangle& t = p.triangles[i];
        if (t.kind == TileKind::S) {
            // The split rule determines the partner L child exactly:
            //   acute parent (A,b1,b2) -> S(b2,P,b1), L(P,A,b2) with
            //     P = A + (b1-A)/tau, hence A = tau^2*P - tau*b1;
            //   obtuse parent -> L(b2,A,N), S(N,A,b1) with
            //     N = b2 + (b1-b2)/tau, hence b2 = tau^2*N - tau*b1.
            const std::array<CycloPoint, 3> partner =
                parent_acute
                    ? std::array<CycloPoint, 3>{t.v[1], tau2_minus_tau(t.v[1], t.v[2]), t.v[0]}
                    : std::array<CycloPoint, 3>{tau2_minus_tau(t.v[0], t.v[2]), t.v[1], t.v[0]};
            const auto it = by_vertices.find(partner);
            if (it == by_vertices.end())
                fail(fault::BadArgument, "S tile has no partner L tile to compose with");
            const std::size_t j = it->second;
            const Triangle& l = p.triangles[j];
            if (l.kind != TileKind::L || consumed[j])
                fail(fault::BadArgument, "S tile has no partner L tile to compose with");
            const Triangle parent =
                parent_acute
                    ? make_triangle(TileKind::L, parent_parity, l.v[1], t.v[2], t.v[0])
                    : make_triangle(TileKind::L, parent_parity, t.v[1], t.v[2], l.v[0]);
            consumed[i] = consumed[j] = 1;
            parent_of[i] = parent_of[j] = out.triangles.size();
            out.triangles.push_back(parent);
        }
    }
    for (std::size_t i = 0; i < p.triangles.size(); ++i) {
        if (consumed[i]) continue;
        const Triangle& t = p.triangles[i];
        // Leftover L children are relabeled S parents; leftover S children
        // would have been consumed above.
        const Triangle parent = make_triangle(TileKind::S, parent_parity, t.v[0], t.v[1], t.v[2]);
        consumed[i] = 1;
        parent_of[i] = out.triangles.size();
        out.triangles.push_back(parent);
    }
    if (p.marked) out.marked = parent_of[*p.marked];
    return out;
}

} // namespace

Word patch_to_sequence(const TrianglePatch& p, std::size_t length) {
    if (!p.marked)
        fail(fault::BadArgument, "the patch has no marked tile to read a word from");
    if (length == 0)
        fail(fault::BadArgument, "a word must have at least one letter");
    if (*p.marked >= p.triangles.size())
        fail(fault::BadArgument, "marked index out of range");

    Word w;
    w.reserve(length);
    TrianglePatch cur = p;
    w.push_back(cur.triangles[*cur.marked].kind == TileKind::L ? SYM_L : SYM_S);
    for (std::size_t step = 1; step < length; ++step) {
        std::vector<std::size_t> parent_of;
        cur = compose_traced(cur, parent_of);
        w.push_back(cur.triangles[*cur.marked].kind == TileKind::L ? SYM_L : SYM_S);
    }
    return w;
}

} // namespace fivefold
