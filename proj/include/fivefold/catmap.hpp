#pragma once

// Exact symbolic model of the hyperbolic torus automorphism induced by the
// integer matrix [2,1;1,1]: its eigendata, the five-element generating
// Markov partition (labelled A, B00, B01, B10, B11), the transition
// grammar, the column-stochastic conditional-measure matrix, cylinder
// measures landing in the zeta-eta lattice, the doubled one-sided shift
// with its 25x5 entry matrix, the stage-dimension recursion, and the pair
// of rank-two projectors that compress the grammar onto its spectral core.
//
// All tables are verified against each other at first use (determinant,
// eigen-equations, total measure, column stochasticity, stationarity,
// projector intertwining); a violation aborts with BadArgument because the
// tables are compile-time constants and any mismatch is a build defect.

#include <string>
#include <vector>

#include "fivefold/qfield.hpp"
#include "fivefold/spectral.hpp"
#include "fivefold/symbolic.hpp"

namespace fivefold {

// Complete exact data of the five-rectangle Markov model.
//
//   A          2x2 torus matrix [2,1;1,1], determinant one
//   lambda_u   unstable eigenvalue (3+sqrt5)/2
//   lambda_s   stable eigenvalue  (3-sqrt5)/2
//   v_u, v_s   plane eigenvectors (tau, 1) and (1-tau, 1)
//   labels     partition-element names A, B00, B01, B10, B11
//   mu         invariant areas of the five elements; they sum to one and
//              each lies in the zeta-eta lattice
//   a          5x5 conditional matrix: a[i][j] is the fraction of element j
//              mapped into element i in one step, so every column sums to
//              one, the support equals the grammar's, and a * mu = mu
struct CatModel {
    RatMatrix A;
    QuadExt lambda_u;
    QuadExt lambda_s;
    QuadVec v_u;
    QuadVec v_s;
    std::vector<std::string> labels;
    QuadVec mu;
    std::vector<QuadVec> a;
};

// The verified model singleton.
const CatModel& cat_model();

// The 5-symbol grammar shift: transition.at(i, j) == 1 means the step
// j -> i is allowed; thirteen transitions are allowed in total and the
// square of the matrix is entrywise positive.
Sft cat_sft();

// Exact invariant measure of one cylinder set, together with its integer
// coordinates in the zeta-eta lattice.
struct CylinderMeasure {
    QuadExt value;
    CatLatticeElem lattice;
};

// Measure of the cylinder of the word w = (w[0], w[1], ...), read in time
// order: mu(w[0]) times the conditional factors a[w[i]][w[i-1]].  The empty
// word denotes the whole space and has measure one.  Throws
// InadmissibleWord when a step is forbidden by the grammar.
CylinderMeasure cylinder_measure(const Word& w);

// One-sided doubling of the grammar: the 25-symbol pair shift (first pair
// coordinate runs backward in time, second forward) plus the 25x5 entry
// matrix A0 with A0[(i,j), k] = T[k,i] * T[j,k], which refines each coarse
// symbol k into the coherent past/future pairs (i, j) around it.
struct DoubledModel {
    Sft shift;        // transition matrix below is called T-tilde
    RatMatrix entry;  // 25x5, rows indexed like the pair alphabet
};

DoubledModel doubled_model();

// Stage matrices of the refinement recursion as 5x5 integer matrices
// indexed (backward symbol, forward symbol):
//
//   stage 0   all ones (one-dimensional blocks, reshaped for uniformity)
//   stage 1   (T*T)-transpose, equivalently the row sums of A0
//   stage n+1 T-tilde applied to stage n flattened row-major, matching the
//             pair shift's symbol order
//
// Entries are nonnegative integers, strictly positive from stage 1 on.
RatMatrix stage_dims_cat(unsigned long n);

// The two 2x5 projectors and the 2x2 compression Z = [2,1;1,1]:
//
//   pl = [1,1,1,0,0; 0,0,0,1,1]     pr = [1,0,1,0,1; 0,1,0,1,0]
//
// They satisfy pr * T = Z * pr and pl * T-transpose = Z * pl exactly, and
// their kernels are exactly the null spaces of T-transpose and T, so they
// realize the grammar's action on its rank-two core.
struct CatProjectors {
    RatMatrix pl;
    RatMatrix pr;
    RatMatrix z;
};

CatProjectors projectors();

} // namespace fivefold
