#pragma once

// Bratteli diagrams and the ordered K-theory they generate: stage dimension
// vectors, direct-limit dimension-group arithmetic with predictable tails,
// closed-form scaled dimension groups for the four built-in models
// (penrose, cat, baker, compact_unit), the lattice embeddings Pi with the
// exact inverse for the cat model, and the finite groupoid-algebra block
// product.

#include <cstddef>
#include <string>
#include <vector>

#include "fivefold/qfield.hpp"
#include "fivefold/spectral.hpp"

namespace fivefold {

// Layered multiplicity data.  Stage 0 carries initial_dims; passing from
// stage n to n+1 applies head[n] while heads last and the tail matrix
// forever after, so the diagram is eventually constant.
struct BratteliDiagram {
    std::vector<Int> initial_dims;
    std::vector<RatMatrix> head;
    RatMatrix tail;
};

enum class K0Model { penrose, cat, baker, compact_unit };

// The four validated built-in diagrams:
//
//   penrose       1  -> (1,1) by [1;1], then [1,1;1,0] forever
//   cat           five ones -> 25 entries by the doubling entry matrix,
//                 then the doubled transition matrix forever
//   baker         (1,1), no head, [1,1;1,1] forever
//   compact_unit  1 -> (1,1) by [1;1], then [1,0;1,1] forever
BratteliDiagram builtin_diagram(K0Model model);

// Exact dimension vector after n multiplicity applications.
std::vector<Int> stage_dims(const BratteliDiagram& d, unsigned long n);

// Element of the direct limit: an integer vector attached to a stage whose
// rank it must match.
struct DimGroupElement {
    unsigned long stage{};
    std::vector<Int> vector;
};

// Closed form of a scaled ordered group.  When order_functional is
// non-empty the positive cone is the half-space {functional >= 0} (boundary
// included) and the scale is {0 <= functional <= scale_bound}, with the
// functional anchored at stage max(1, number of head steps) and rescaled by
// the tail eigenvalue for deeper stages.  When order_functional is empty
// the cone is not a half-space and membership goes through dl_positive /
// dl_in_scale (the compact_unit branch predicate, or the finite coordinate
// box from k0_of_finite).
struct ScaledDimensionGroup {
    std::size_t rank{};
    QuadVec order_functional;
    QuadExt scale_bound;
    std::vector<Int> unit_class;
    std::string embedding;
};

// The scaled group of a single finite stage with block dimension vector
// `dims`: rank = #blocks, cone = componentwise nonnegative, scale = the box
// [0, dims[0]] x ... x [0, dims[k-1]].  Throws BadArgument unless every
// entry is positive.
ScaledDimensionGroup k0_of_finite(const std::vector<Int>& dims);

// One multiplicity application x -> A*x.  Throws ShapeMismatch.
std::vector<Int> k0_map(const RatMatrix& a, const std::vector<Int>& x);

// Direct-limit arithmetic.  Elements are advanced with the diagram's step
// matrices to a common stage automatically; equality additionally pushes up
// to rank-many further steps, since kernels of tail powers stabilize by
// then.  Throws ShapeMismatch when a vector does not match its stage rank.
bool dl_equal(const BratteliDiagram& d, const DimGroupElement& x,
              const DimGroupElement& y);
DimGroupElement dl_add(const BratteliDiagram& d, const DimGroupElement& x,
                       const DimGroupElement& y);

// Exact membership in the positive cone / the scale of the built-in model
// the element belongs to.  The element is advanced into the tail region
// first; decisions are made by exact sign computations (penrose, cat,
// baker) or the explicit two-branch predicate (compact_unit, whose tail is
// not primitive, so its cone is not a half-space).
bool dl_positive(K0Model model, const DimGroupElement& x);
bool dl_in_scale(K0Model model, const DimGroupElement& x);

// Closed-form scaled dimension group of a built-in model.  The cone
// functional is recomputed from the dominant eigenvector of the tail matrix
// (restricted to its range for the cat model) and the scale bound as the
// functional value of the unit class; nothing is hard-coded.
ScaledDimensionGroup k0_closed_form(K0Model model);

// The functional value <g.order_functional, coords>.  Throws ShapeMismatch
// on length mismatch or when the group has no functional.
QuadExt functional_value(const ScaledDimensionGroup& g,
                         const std::vector<Int>& coords);

// Canonical rank-four coordinates of a cat element: fold the stage vector
// with the two projectors to a 2x2 integer matrix [u,v;w,z] (flattened
// row-major) and anchor it at stage 1 by applying the inverse compression
// once per deeper stage.  Classes are equal in the limit exactly when their
// canonical coordinates agree.
std::vector<Int> cat_canonical(const DimGroupElement& x);

// Image of a cat element under the lattice embedding: the functional value
// rescaled into the zeta-eta lattice, together with the two coordinates
// (u, v) that complete it to a bijection.
struct CatPoint {
    CatLatticeElem alpha;
    Int u;
    Int v;
};

// penrose: (x, y) -> the golden-lattice coordinates of (tau-1)x + (2-tau)y.
GoldenInt pi_embed_penrose(const Int& x, const Int& y);

// cat: [u,v;w,z] (canonical stage-1 coordinates, flattened) -> CatPoint.
// Throws ShapeMismatch unless exactly four coordinates are given.
CatPoint pi_embed_cat(const std::vector<Int>& uvwz);

// Exact inverse of pi_embed_cat:
//   (n*zeta + m*eta, u, v) -> [u, v; 8n+13m-u-v, 5n+8m-u].
std::vector<Int> pi_invert_cat(const CatPoint& p);

// Dyadic value of a baker element: (x + y) / 2^(stage+1), canonicalized.
DyadicRat baker_value(const DimGroupElement& x);

// Convolution product of two functions supported on the equivalence
// relation of `classes` (a partition of {0..n-1}):
//   (f*g)(m, q) = sum over k ~ m of f(m, k) g(k, q),
// which equals blockwise matrix multiplication.  Throws ShapeMismatch for
// non-matching square shapes, BadArgument when classes is not a partition,
// and SupportViolation when f or g has a nonzero entry outside the blocks.
RatMatrix groupoid_block_product(const RatMatrix& f, const RatMatrix& g,
                                 const std::vector<std::vector<std::size_t>>& classes);

} // namespace fivefold
