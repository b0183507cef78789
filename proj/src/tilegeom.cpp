#include "fivefold/tilegeom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

#include "fivefold/errors.hpp"

namespace fivefold {

// ---------------------------------------------------------------------------
// Ring arithmetic.  Reduction rules: zeta^4 = zeta^3 - zeta^2 + zeta - 1,
// zeta^5 = -1, zeta^6 = -zeta.
// ---------------------------------------------------------------------------

CycloPoint cyclo_add(const CycloPoint& x, const CycloPoint& y) {
    return CycloPoint(x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]);
}

CycloPoint cyclo_sub(const CycloPoint& x, const CycloPoint& y) {
    return CycloPoint(x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]);
}

CycloPoint cyclo_neg(const CycloPoint& x) {
    return CycloPoint(-x.c[0], -x.c[1], -x.c[2], -x.c[3]);
}

CycloPoint cyclo_mul(const CycloPoint& x, const CycloPoint& y) {
    Int d[7];
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            d[i + j] += x.c[i] * y.c[j];
    return CycloPoint(d[0] - d[4] - d[5], d[1] + d[4] - d[6], d[2] - d[4], d[3] + d[4]);
}

CycloPoint cyclo_mul_zeta(const CycloPoint& x) {
    return CycloPoint(-x.c[3], x.c[0] + x.c[3], x.c[1] - x.c[3], x.c[2] + x.c[3]);
}

// tau = zeta + zeta^-1 = 1 + zeta^2 - zeta^3, so z*tau = z + z*zeta^2 - z*zeta^3.
CycloPoint cyclo_mul_tau(const CycloPoint& x) {
    const CycloPoint z2 = cyclo_mul_zeta(cyclo_mul_zeta(x));
    const CycloPoint z3 = cyclo_mul_zeta(z2);
    return cyclo_add(x, cyclo_sub(z2, z3));
}

// 1/tau = tau - 1 = zeta^2 - zeta^3.
CycloPoint cyclo_mul_tau_inv(const CycloPoint& x) {
    const CycloPoint z2 = cyclo_mul_zeta(cyclo_mul_zeta(x));
    const CycloPoint z3 = cyclo_mul_zeta(z2);
    return cyclo_sub(z2, z3);
}

// conj(zeta) = zeta^-1 = 1 - zeta + zeta^2 - zeta^3, conj(zeta^2) = -zeta^3,
// conj(zeta^3) = -zeta^2.
CycloPoint cyclo_conj(const CycloPoint& x) {
    return CycloPoint(x.c[0] + x.c[1], -x.c[1], x.c[1] - x.c[3], -x.c[1] - x.c[2]);
}

bool cyclo_less(const CycloPoint& x, const CycloPoint& y) {
    for (int i = 0; i < 4; ++i) {
        if (x.c[i] != y.c[i]) return x.c[i] < y.c[i];
    }
    return false;
}

// cos(pi/5) = tau/2, cos(2pi/5) = (tau-1)/2, cos(3pi/5) = (1-tau)/2.
QuadExt cyclo_re(const CycloPoint& x) {
    const QuadExt half_tau(Rat(1, 4), Rat(1, 4));        // tau/2
    const QuadExt half_tau1(Rat(-1, 4), Rat(1, 4));      // (tau-1)/2
    return QuadExt(Rat(x.c[0])) + Rat(x.c[1]) * half_tau + Rat(x.c[2] - x.c[3]) * half_tau1;
}

// sin(k*pi/5) = sin(pi/5) * (1, tau, tau) for k = 1, 2, 3.
QuadExt cyclo_im_units(const CycloPoint& x) {
    return QuadExt(Rat(x.c[1])) + Rat(x.c[2] + x.c[3]) * quad_tau();
}

QuadExt cyclo_abs2(const CycloPoint& x) {
    const CycloPoint m = cyclo_mul(cyclo_conj(x), x);
    if (!cyclo_im_units(m).is_zero())
        fail(fault::BadArgument, "conj(z)*z has a nonzero imaginary part");
    return cyclo_re(m);
}

QuadExt cyclo_cross_units(const CycloPoint& u, const CycloPoint& v) {
    return cyclo_im_units(cyclo_mul(cyclo_conj(u), v));
}

std::string cyclo_to_string(const CycloPoint& x) {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += x.c[i].str();
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Triangles.
// ---------------------------------------------------------------------------

const char* tile_kind_name(TileKind k) { return k == TileKind::L ? "L" : "S"; }

TriShape triangle_shape(TileKind kind, Parity parity) {
    return (kind == TileKind::L) == (parity == Parity::even) ? TriShape::acute
                                                             : TriShape::obtuse;
}

Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

Triangle make_triangle(TileKind kind, Parity parity, const CycloPoint& apex,
                       const CycloPoint& b1, const CycloPoint& b2) {
    const CycloPoint leg1 = cyclo_sub(b1, apex);
    const CycloPoint leg2 = cyclo_sub(b2, apex);
    const QuadExt cross = cyclo_cross_units(leg1, leg2);
    if (quad_sign(cross) == 0)
        fail(fault::BadArgument, "degenerate triangle: apex and base are collinear");

    const QuadExt legs2 = cyclo_abs2(leg1);
    if (cyclo_abs2(leg2) != legs2)
        fail(fault::BadArgument, "legs A-b1 and A-b2 differ in length");

    const QuadExt base2 = cyclo_abs2(cyclo_sub(b2, b1));
    const TriShape shape = triangle_shape(kind, parity);
    const QuadExt want = shape == TriShape::acute
                             ? (QuadExt(2) - quad_tau()) * legs2   // base = legs/tau
                             : (QuadExt(1) + quad_tau()) * legs2;  // base = legs*tau
    if (base2 != want)
        fail(fault::BadArgument, "base length does not match the isoceles shape");

    Triangle t;
    t.kind = kind;
    t.parity = parity;
    t.chi = quad_sign(cross) > 0 ? Chirality::plus : Chirality::minus;
    t.v = {apex, b1, b2};
    return t;
}

QuadExt triangle_area_units(const Triangle& t) {
    QuadExt cr = cyclo_cross_units(cyclo_sub(t.v[1], t.v[0]), cyclo_sub(t.v[2], t.v[0]));
    if (quad_sign(cr) < 0) cr = -cr;
    return Rat(1, 2) * cr;
}

TrianglePatch single_tile_patch(TileKind kind) {
    const CycloPoint zero(0, 0, 0, 0);
    TrianglePatch p;
    if (kind == TileKind::L) {
        const CycloPoint tau(1, 0, 1, -1);
        p.triangles.push_back(
            make_triangle(TileKind::L, Parity::even, zero, tau, cyclo_mul_zeta(tau)));
    } else {
        p.triangles.push_back(make_triangle(TileKind::S, Parity::even, zero,
                                            CycloPoint(1, 0, 0, 0), CycloPoint(0, 0, 0, 1)));
    }
    return p;
}

TrianglePatch decompose_traced(const TrianglePatch& p, DecomposeTrace& trace) {
    TrianglePatch out;
    trace.parent.clear();
    out.triangles.reserve(p.triangles.size() * 2);
    for (std::size_t i = 0; i < p.triangles.size(); ++i) {
        const Triangle& t = p.triangles[i];
        const Parity np = flip(t.parity);
        if (p.marked && *p.marked == i) out.marked = out.triangles.size();
        if (t.kind == TileKind::S) {
            out.triangles.push_back(make_triangle(TileKind::L, np, t.v[0], t.v[1], t.v[2]));
            trace.parent.push_back(i);
        } else if (triangle_shape(t.kind, t.parity) == TriShape::acute) {
            // Split the leg A-b1 at P, |A-P| = legs/tau.
            const CycloPoint P = cyclo_add(t.v[0], cyclo_mul_tau_inv(cyclo_sub(t.v[1], t.v[0])));
            out.triangles.push_back(make_triangle(TileKind::S, np, t.v[2], P, t.v[1]));
            out.triangles.push_back(make_triangle(TileKind::L, np, P, t.v[0], t.v[2]));
            trace.parent.push_back(i);
            trace.parent.push_back(i);
        } else {
            // Split the base b2-b1 at N, |b2-N| = base/tau.
            const CycloPoint N = cyclo_add(t.v[2], cyclo_mul_tau_inv(cyclo_sub(t.v[1], t.v[2])));
            out.triangles.push_back(make_triangle(TileKind::L, np, t.v[2], t.v[0], N));
            out.triangles.push_back(make_triangle(TileKind::S, np, N, t.v[0], t.v[1]));
            trace.parent.push_back(i);
            trace.parent.push_back(i);
        }
    }
    return out;
}

TrianglePatch decompose(const TrianglePatch& p) {
    DecomposeTrace unused;
    return decompose_traced(p, unused);
}

TrianglePatch inflate(const TrianglePatch& p, unsigned steps) {
    TrianglePatch cur = p;
    for (unsigned s = 0; s < steps; ++s) {
        for (auto& t : cur.triangles)
            for (auto& v : t.v) v = cyclo_mul_tau(v);
        cur = decompose(cur);
        cur = decompose(cur);
    }
    return cur;
}

TileCounts count_tiles(const TrianglePatch& p) {
    TileCounts c;
    for (const auto& t : p.triangles)
        (t.kind == TileKind::L ? c.n_L : c.n_S) += 1;
    return c;
}

QuadExt patch_area_units(const TrianglePatch& p) {
    QuadExt total;
    for (const auto& t : p.triangles) total = total + triangle_area_units(t);
    return total;
}

// ---------------------------------------------------------------------------
// Edge and vertex classification.
//
// Edge sides are named by their role in the isoceles shape: the axis leg
// (role 0), the other leg (role 1) and the base (role 2).  In the acute
// triangle the axis is A-b1; in the obtuse one it is A-b2.  A flank is the
// pair (shape, role) of one incident triangle, encoded 0..5; an interior
// edge is classified by its unordered flank pair.
// ---------------------------------------------------------------------------

namespace {

struct CycloLess {
    bool operator()(const CycloPoint& x, const CycloPoint& y) const { return cyclo_less(x, y); }
};

struct EdgeKey {
    CycloPoint a, b;  // a < b lexicographically
    bool operator==(const EdgeKey& o) const { return a == o.a && b == o.b; }
};

struct EdgeKeyLess {
    bool operator()(const EdgeKey& x, const EdgeKey& y) const {
        if (cyclo_less(x.a, y.a)) return true;
        if (cyclo_less(y.a, x.a)) return false;
        return cyclo_less(x.b, y.b);
    }
};

EdgeKey make_edge_key(const CycloPoint& p, const CycloPoint& q) {
    return cyclo_less(p, q) ? EdgeKey{p, q} : EdgeKey{q, p};
}

// Edge slots of a triangle: 0 = (v0,v1), 1 = (v0,v2), 2 = (v1,v2).
int edge_role(TriShape sh, int slot) {
    static const int acute_role[3] = {0, 1, 2};
    static const int obtuse_role[3] = {1, 0, 2};
    return sh == TriShape::acute ? acute_role[slot] : obtuse_role[slot];
}

int flank_code(TriShape sh, int slot) {
    return (sh == TriShape::obtuse ? 3 : 0) + edge_role(sh, slot);
}

// Unordered flank pairs (sorted codes) of the seven interior edge classes,
// in label order k, k', d, t, l', r, r'.
int edge_class_of_pair(int lo, int hi) {
    if (lo == 0 && hi == 0) return 0;
    if (lo == 1 && hi == 1) return 1;
    if (lo == 3 && hi == 3) return 2;
    if (lo == 1 && hi == 5) return 3;
    if (lo == 2 && hi == 4) return 4;
    if (lo == 5 && hi == 5) return 5;
    if (lo == 2 && hi == 2) return 6;
    return -1;
}

// Corner slots reuse vertex indices: 0 = apex, 1 = b1, 2 = b2.  The code
// distinguishes shape (acute 0..2, obtuse 3..5); the angle at a corner in
// units of pi/5 depends only on the code.
int corner_code(const Triangle& t, int slot) {
    return (triangle_shape(t.kind, t.parity) == TriShape::obtuse ? 3 : 0) + slot;
}

int corner_units(int code) {
    static const int units[6] = {1, 2, 2, 3, 1, 1};
    return units[code];
}

struct CornerRef {
    std::size_t tile;
    int slot;
};

std::array<EdgeKey, 2> corner_edges(const Triangle& t, int slot) {
    const EdgeKey e01 = make_edge_key(t.v[0], t.v[1]);
    const EdgeKey e02 = make_edge_key(t.v[0], t.v[2]);
    const EdgeKey e12 = make_edge_key(t.v[1], t.v[2]);
    switch (slot) {
        case 0: return {e01, e02};
        case 1: return {e01, e12};
        default: return {e02, e12};
    }
}

// Walk the fan of corners around an interior vertex as a single cycle
// (consecutive corners share an edge) and return the corner-code sequence
// canonicalized up to rotation and reflection.
std::string fan_signature(const TrianglePatch& p, const std::vector<CornerRef>& corners) {
    const std::size_t n = corners.size();
    std::vector<std::array<EdgeKey, 2>> ckeys(n);
    std::map<EdgeKey, std::vector<std::size_t>, EdgeKeyLess> incident;
    for (std::size_t i = 0; i < n; ++i) {
        ckeys[i] = corner_edges(p.triangles[corners[i].tile], corners[i].slot);
        incident[ckeys[i][0]].push_back(i);
        incident[ckeys[i][1]].push_back(i);
    }
    for (const auto& [key, cs] : incident) {
        (void)key;
        if (cs.size() != 2)
            fail(fault::UnclassifiableNeighborhood,
                 "an edge at an interior vertex is not flanked by exactly two corners");
    }

    std::vector<int> seq;
    seq.reserve(n);
    std::vector<char> seen(n, 0);
    std::size_t cur = 0;
    EdgeKey enter = ckeys[0][0];
    for (std::size_t step = 0; step < n; ++step) {
        if (seen[cur])
            fail(fault::UnclassifiableNeighborhood,
                 "corners around a vertex do not form a single cycle");
        seen[cur] = 1;
        seq.push_back(corner_code(p.triangles[corners[cur].tile], corners[cur].slot));
        const EdgeKey exit = ckeys[cur][0] == enter ? ckeys[cur][1] : ckeys[cur][0];
        const auto& cs = incident[exit];
        cur = cs[0] == cur ? cs[1] : cs[0];
        enter = exit;
    }
    if (cur != 0)
        fail(fault::UnclassifiableNeighborhood,
             "corners around a vertex do not form a single cycle");

    std::string best;
    const auto consider = [&](const std::vector<int>& s) {
        for (std::size_t rot = 0; rot < n; ++rot) {
            std::string cand(n, '0');
            for (std::size_t i = 0; i < n; ++i)
                cand[i] = static_cast<char>('0' + s[(rot + i) % n]);
            if (best.empty() || cand < best) best = cand;
        }
    };
    consider(seq);
    std::vector<int> rev(seq.rbegin(), seq.rend());
    consider(rev);
    return best;
}

using VertexMap = std::map<CycloPoint, std::vector<CornerRef>, CycloLess>;

VertexMap collect_corners(const TrianglePatch& p) {
    VertexMap verts;
    for (std::size_t i = 0; i < p.triangles.size(); ++i)
        for (int slot = 0; slot < 3; ++slot)
            verts[p.triangles[i].v[slot]].push_back(CornerRef{i, slot});
    return verts;
}

int vertex_units(const TrianglePatch& p, const std::vector<CornerRef>& corners) {
    int units = 0;
    for (const auto& c : corners)
        units += corner_units(corner_code(p.triangles[c.tile], c.slot));
    return units;
}

// star type by dart/kite composition; -1 when no star matches.
int star_type_of_counts(long darts, long kites) {
    if (darts == 0 && kites == 5) return 0;  // sun
    if (darts == 5 && kites == 0) return 1;  // star
    if (darts == 1 && kites == 2) return 2;  // ace
    if (darts == 2 && kites == 2) return 3;  // deuce
    if (darts == 2 && kites == 3) return 4;  // jack
    if (darts == 1 && kites == 4) return 5;  // queen
    if (darts == 3 && kites == 2) return 6;  // king
    return -1;
}

// The quadrilateral kite is an acute triangle plus its mirror twin across
// the axis leg, the dart an obtuse one plus its twin; paired corners sit on
// the axis (apex-apex or base-base), lone corners on the sides.  Counting
// corners of each code therefore counts kites and darts around the vertex.
bool dart_kite_counts(const std::vector<int>& codes, long& darts, long& kites) {
    long cnt[6] = {0, 0, 0, 0, 0, 0};
    for (int c : codes) ++cnt[c];
    if (cnt[0] % 2 || cnt[1] % 2 || cnt[3] % 2 || cnt[5] % 2) return false;
    kites = cnt[0] / 2 + cnt[1] / 2 + cnt[2];
    darts = cnt[3] / 2 + cnt[5] / 2 + cnt[4];
    return true;
}

// Atlas: canonical fan signature -> star type, built once from a large
// inflation (all seven stars occur in it) and reused for classification.
std::map<std::string, int> build_vertex_atlas() {
    std::map<std::string, int> atlas;
    TrianglePatch p = inflate(single_tile_patch(TileKind::L), 7);
    for (int depth = 7;; ++depth) {
        const VertexMap verts = collect_corners(p);
        for (const auto& [pt, corners] : verts) {
            (void)pt;
            if (vertex_units(p, corners) != 10) continue;
            std::vector<int> codes;
            codes.reserve(corners.size());
            for (const auto& c : corners)
                codes.push_back(corner_code(p.triangles[c.tile], c.slot));
            long darts = 0, kites = 0;
            if (!dart_kite_counts(codes, darts, kites))
                fail(fault::BadArgument, "reference tiling produced an unpairable vertex star");
            const int type = star_type_of_counts(darts, kites);
            if (type < 0)
                fail(fault::BadArgument, "reference tiling produced an unknown vertex star");
            const std::string sig = fan_signature(p, corners);
            const auto [it, inserted] = atlas.emplace(sig, type);
            if (!inserted && it->second != type)
                fail(fault::BadArgument, "vertex star signature is ambiguous");
        }
        std::array<bool, 7> have{};
        std::size_t distinct = 0;
        for (const auto& [sig, type] : atlas) {
            (void)sig;
            if (!have[type]) {
                have[type] = true;
                ++distinct;
            }
        }
        if (distinct == 7) return atlas;
        if (depth == 10)
            fail(fault::BadArgument, "vertex star atlas incomplete after deep inflation");
        p = inflate(p, 1);
    }
}

const std::map<std::string, int>& vertex_atlas() {
    static const std::map<std::string, int> atlas = build_vertex_atlas();
    return atlas;
}

} // namespace

const std::array<std::string, 7>& edge_class_labels() {
    static const std::array<std::string, 7> labels = {"k", "k'", "d", "t", "l'", "r", "r'"};
    return labels;
}

const std::array<std::string, 7>& vertex_class_labels() {
    static const std::array<std::string, 7> labels = {"sun",  "star",  "ace", "deuce",
                                                      "jack", "queen", "king"};
    return labels;
}

std::array<Int, 7> edge_histogram(const TrianglePatch& p) {
    std::map<EdgeKey, std::vector<int>, EdgeKeyLess> edges;
    for (const auto& t : p.triangles) {
        const TriShape sh = triangle_shape(t.kind, t.parity);
        edges[make_edge_key(t.v[0], t.v[1])].push_back(flank_code(sh, 0));
        edges[make_edge_key(t.v[0], t.v[2])].push_back(flank_code(sh, 1));
        edges[make_edge_key(t.v[1], t.v[2])].push_back(flank_code(sh, 2));
    }
    std::array<Int, 7> hist{};
    for (const auto& [key, flanks] : edges) {
        (void)key;
        if (flanks.size() == 1) continue;  // boundary
        if (flanks.size() != 2)
            fail(fault::UnclassifiableNeighborhood, "an edge is flanked by more than two tiles");
        const int lo = std::min(flanks[0], flanks[1]);
        const int hi = std::max(flanks[0], flanks[1]);
        const int cls = edge_class_of_pair(lo, hi);
        if (cls < 0)
            fail(fault::UnclassifiableNeighborhood, "interior edge with an unknown flank pair");
        hist[cls] += 1;
    }
    return hist;
}

std::array<Int, 7> vertex_histogram(const TrianglePatch& p) {
    const auto& atlas = vertex_atlas();
    const VertexMap verts = collect_corners(p);
    std::array<Int, 7> hist{};
    for (const auto& [pt, corners] : verts) {
        (void)pt;
        const int units = vertex_units(p, corners);
        if (units < 10) continue;  // boundary
        if (units > 10)
            fail(fault::UnclassifiableNeighborhood, "corner angles exceed a full turn");
        const std::string sig = fan_signature(p, corners);
        const auto it = atlas.find(sig);
        if (it == atlas.end())
            fail(fault::UnclassifiableNeighborhood, "interior vertex star not in the atlas");
        hist[it->second] += 1;
    }
    return hist;
}

// ---------------------------------------------------------------------------
// SVG rendering (display only; the doubles here never feed back into any
// exact computation).
// ---------------------------------------------------------------------------

namespace {

struct XY {
    double x, y;
};

XY cyclo_to_xy(const CycloPoint& v) {
    static const double cos36 = 0.80901699437494742410;
    static const double sin36 = 0.58778525229247312917;
    static const double cos72 = 0.30901699437494742410;
    static const double sin72 = 0.95105651629515357212;
    const double c0 = v.c[0].convert_to<double>();
    const double c1 = v.c[1].convert_to<double>();
    const double c2 = v.c[2].convert_to<double>();
    const double c3 = v.c[3].convert_to<double>();
    return XY{c0 + c1 * cos36 + (c2 - c3) * cos72, c1 * sin36 + (c2 + c3) * sin72};
}

std::string fmt_fixed(double v, int prec) {
    double eps = 0.5;
    for (int i = 0; i < prec; ++i) eps /= 10.0;
    if (std::fabs(v) < eps) v = 0.0;  // avoid "-0.0000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

} // namespace

std::string render_svg(const TrianglePatch& p, const StyleOptions& style) {
    double minx = 0.0, maxx = 0.0, miny = 0.0, maxy = 0.0;
    bool first = true;
    for (const auto& t : p.triangles) {
        for (const auto& v : t.v) {
            const XY q = cyclo_to_xy(v);
            if (first) {
                minx = maxx = q.x;
                miny = maxy = q.y;
                first = false;
            } else {
                minx = std::min(minx, q.x);
                maxx = std::max(maxx, q.x);
                miny = std::min(miny, q.y);
                maxy = std::max(maxy, q.y);
            }
        }
    }
    const double width = (maxx - minx) * style.scale + 2.0 * style.margin;
    const double height = (maxy - miny) * style.scale + 2.0 * style.margin;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    svg += fmt_fixed(width, 2);
    svg += "\" height=\"";
    svg += fmt_fixed(height, 2);
    svg += "\" viewBox=\"0 0 ";
    svg += fmt_fixed(width, 2);
    svg += " ";
    svg += fmt_fixed(height, 2);
    svg += "\">\n<g stroke=\"";
    svg += style.stroke;
    svg += "\" stroke-width=\"";
    svg += fmt_fixed(style.stroke_width, 2);
    svg += "\" stroke-linejoin=\"round\">\n";
    for (std::size_t i = 0; i < p.triangles.size(); ++i) {
        const Triangle& t = p.triangles[i];
        const bool is_marked = p.marked && *p.marked == i;
        svg += "<polygon points=\"";
        for (int slot = 0; slot < 3; ++slot) {
            const XY q = cyclo_to_xy(t.v[slot]);
            if (slot) svg += " ";
            svg += fmt_fixed((q.x - minx) * style.scale + style.margin, 4);
            svg += ",";
            svg += fmt_fixed((maxy - q.y) * style.scale + style.margin, 4);
        }
        svg += "\" fill=\"";
        svg += is_marked ? style.fill_marked : (t.kind == TileKind::L ? style.fill_L : style.fill_S);
        svg += "\"/>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace fivefold
