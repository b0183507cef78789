#pragma once

// Exact planar geometry for the two golden triangles and their subdivision
// rule, carried out in the cyclotomic ring Z[zeta], zeta = e^{i*pi/5} (a
// primitive 10th root of unity).  Every vertex of every tile stays in this
// ring, so incidence tests, areas, and neighborhood classification are exact;
// floating point appears only in the SVG renderer.
//
// Conventions (fixed; everything downstream depends on them):
//   * Triangles are stored apex first: v[0] = apex A, v[1] = b1, v[2] = b2,
//     the two legs being A-b1 and A-b2.
//   * kind L/S names the substitution role, parity counts subdivision steps
//     mod 2.  At even parity L is the acute (36-72-72) isoceles triangle and
//     S the obtuse (108-36-36) one; every subdivision step flips the parity
//     and with it the kind <-> shape match.
//   * One subdivision step maps S -> L (a relabel, same vertices) and splits
//     L into two children; leg lengths shrink by 1/tau along L lineages.
//     Child order is fixed (see decompose) so traces are deterministic.
//   * inflate = scale by tau, then subdivide twice.  Tile size and parity
//     are preserved while the patch grows; (n_L, n_S) evolve by [[2,1],[1,1]].
//   * Edges come in seven interior classes and vertices in seven interior
//     stars; both are classified purely combinatorially from the exact
//     geometry (see edge_histogram / vertex_histogram).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fivefold/qfield.hpp"

namespace fivefold {

// z = c[0] + c[1]*zeta + c[2]*zeta^2 + c[3]*zeta^3 with integer coefficients;
// zeta^4 = zeta^3 - zeta^2 + zeta - 1 and zeta^5 = -1 reduce higher powers.
// The representation is unique (1, zeta, zeta^2, zeta^3 are a Z-basis), so
// == is coefficientwise.
struct CycloPoint {
    std::array<Int, 4> c{};

    CycloPoint() = default;
    CycloPoint(Int c0, Int c1, Int c2, Int c3)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    bool operator==(const CycloPoint& o) const { return c == o.c; }
    bool operator!=(const CycloPoint& o) const { return !(*this == o); }
};

CycloPoint cyclo_add(const CycloPoint& x, const CycloPoint& y);
CycloPoint cyclo_sub(const CycloPoint& x, const CycloPoint& y);
CycloPoint cyclo_neg(const CycloPoint& x);
CycloPoint cyclo_mul(const CycloPoint& x, const CycloPoint& y);
CycloPoint cyclo_mul_zeta(const CycloPoint& x);   // multiply by zeta
CycloPoint cyclo_mul_tau(const CycloPoint& x);    // multiply by tau = zeta + zeta^-1
CycloPoint cyclo_mul_tau_inv(const CycloPoint& x);  // multiply by 1/tau = tau - 1
CycloPoint cyclo_conj(const CycloPoint& x);       // complex conjugation

// Strict lexicographic order on coefficients; used only to canonicalize
// dictionary keys, no geometric meaning.
bool cyclo_less(const CycloPoint& x, const CycloPoint& y);

// Real part as an element of Q(sqrt5).
QuadExt cyclo_re(const CycloPoint& x);
// Imaginary part in units of sin(pi/5):  Im z = im_units(z) * sin(pi/5).
QuadExt cyclo_im_units(const CycloPoint& x);
// |z|^2, exact (the imaginary part of conj(z)*z vanishes identically).
QuadExt cyclo_abs2(const CycloPoint& x);
// Cross product Im(conj(u) * v) in units of sin(pi/5); positive when v lies
// counterclockwise from u.
QuadExt cyclo_cross_units(const CycloPoint& u, const CycloPoint& v);

std::string cyclo_to_string(const CycloPoint& x);

enum class TileKind : unsigned char { L, S };
enum class Parity : unsigned char { even, odd };
enum class Chirality : signed char { plus = 1, minus = -1 };
enum class TriShape : unsigned char { acute, obtuse };

const char* tile_kind_name(TileKind k);

// Which geometric shape a (kind, parity) pair has.
TriShape triangle_shape(TileKind kind, Parity parity);
Parity flip(Parity p);

struct Triangle {
    TileKind kind{};
    Parity parity{};
    Chirality chi{};
    std::array<CycloPoint, 3> v{};  // apex, b1, b2
};

// Validates the isoceles shape demanded by (kind, parity): equal legs,
// base^2 = legs^2 * (2 - tau) for acute / legs^2 * (1 + tau) for obtuse, and
// nondegeneracy; derives the chirality from the orientation of (b1, b2)
// around the apex.  Throws BadArgument on any violation.
Triangle make_triangle(TileKind kind, Parity parity, const CycloPoint& apex,
                       const CycloPoint& b1, const CycloPoint& b2);

// Unsigned area in units of sin(pi/5) (exact).
QuadExt triangle_area_units(const Triangle& t);

struct TrianglePatch {
    std::vector<Triangle> triangles;
    std::optional<std::size_t> marked;  // index into triangles
};

// The canonical seed tile of the given kind, at even parity, chirality plus:
//   L: apex 0, b1 = tau, b2 = tau*zeta      (acute, legs tau)
//   S: apex 0, b1 = 1,   b2 = zeta^3        (obtuse, legs 1)
TrianglePatch single_tile_patch(TileKind kind);

// parent[i] = index of the tile of which child i is a piece.
struct DecomposeTrace {
    std::vector<std::size_t> parent;
};

// One subdivision step applied to every tile.  Child order per parent is
// fixed:  S(A,b1,b2)      -> L(A,b1,b2);
//         acute  L, with P = A + (b1-A)/tau:  S(b2,P,b1), L(P,A,b2);
//         obtuse L, with N = b2 + (b1-b2)/tau: L(b2,A,N), S(N,A,b1).
// A marked parent passes the mark to its first child.
TrianglePatch decompose(const TrianglePatch& p);
TrianglePatch decompose_traced(const TrianglePatch& p, DecomposeTrace& trace);

// steps inflations: each scales by tau and subdivides twice.
TrianglePatch inflate(const TrianglePatch& p, unsigned steps);

struct TileCounts {
    Int n_L{};
    Int n_S{};
};
TileCounts count_tiles(const TrianglePatch& p);

// Total area in units of sin(pi/5) (exact; conserved by decompose,
// multiplied by tau^2 by each inflation).
QuadExt patch_area_units(const TrianglePatch& p);

// The seven interior edge classes, in fixed order.
const std::array<std::string, 7>& edge_class_labels();
// The seven interior vertex stars, in fixed order.
const std::array<std::string, 7>& vertex_class_labels();

// Count interior edges of each class (an edge is interior when exactly two
// tiles flank it; boundary edges are skipped).  An interior edge whose flank
// pair matches no class means the patch is not a valid piece of a tiling:
// UnclassifiableNeighborhood.
std::array<Int, 7> edge_histogram(const TrianglePatch& p);

// Count interior vertices of each star type.  A vertex is interior when its
// corner angles sum to a full turn; the cyclic corner sequence is then
// canonicalized (up to rotation and reflection) and looked up in an atlas
// built once from a large inflation.  Unmatched interior stars throw
// UnclassifiableNeighborhood.
std::array<Int, 7> vertex_histogram(const TrianglePatch& p);

struct StyleOptions {
    double scale = 40.0;      // ring units -> pixels
    double margin = 10.0;     // pixels
    std::string fill_L = "#c8d8f0";
    std::string fill_S = "#f0d8c8";
    std::string fill_marked = "#ffd700";
    std::string stroke = "#333333";
    double stroke_width = 1.0;
};

// Deterministic standalone SVG 1.1 document (byte-identical for identical
// inputs): one polygon per tile in patch order, y axis flipped so the
// mathematical orientation is upward.
std::string render_svg(const TrianglePatch& p, const StyleOptions& style = {});

} // namespace fivefold
