#pragma once

// Closed-form results for the triangle tiling: prototile/edge/vertex
// frequency tables obtained from the inflation count matrices, the motif
// frequency calculus, the L/S subshift, the word <-> patch dictionary, and
// the l/s block recoding.  All frequencies are computed from the matrices by
// exact eigenvector extraction, never hard-coded.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fivefold/qfield.hpp"
#include "fivefold/spectral.hpp"
#include "fivefold/symbolic.hpp"
#include "fivefold/tilegeom.hpp"

namespace fivefold {

struct FrequencyTable {
    std::string kind;  // "prototile" | "edge" | "vertex"
    std::vector<std::string> labels;
    QuadVec hat_values;        // dominant eigenvector, normalized to sum 1
    QuadVec converted_values;  // per-tile frequencies (symmetry factors applied)
};

// Exact inflation count matrices.  Row/column order matches the label order
// of the corresponding frequency table.
RatMatrix prototile_count_matrix();   // [[2,1],[1,1]]: counts per inflation
RatMatrix edge_inflation_matrix();    // 7x7, labels k, k', d, t, l', r, r'
RatMatrix vertex_inflation_matrix();  // 7x7, labels sun ... king

// kappa_L = tau - 1, kappa_S = 2 - tau as the Perron vector of the count
// matrix; for prototiles hat and converted values coincide.
FrequencyTable prototile_frequencies();
// Dominant eigenvector of the edge inflation matrix (sum one), converted to
// per-tile frequencies by the reflection-symmetry factors: x3 for the five
// mirror-edge classes {k, k', d, r, r'}, x3/2 for the two chiral ones {t, l'}.
FrequencyTable edge_frequencies();
// Dominant eigenvector of the vertex inflation matrix (sum one), converted
// by the rotation-symmetry factors: x5 for the fivefold stars {sun, star},
// x1 for the rest.
FrequencyTable vertex_frequencies();

// Frequency of the once-inflated motif: (2 - tau) * kappa.
QuadExt inflate_motif_frequency(const QuadExt& kappa);

struct MotifFrequency {
    QuadExt value;
    GoldenInt golden;  // the same number written as m + n*tau
};

// (2-tau)^k * (kappa_L n_L + kappa_S n_S + sum_e kappa_e n_edge[e]
//              + sum_v kappa_v n_vertex[v]); counts must be nonnegative.
MotifFrequency motif_frequency(unsigned k, const Int& n_L, const Int& n_S,
                               const std::array<Int, 7>& n_edge,
                               const std::array<Int, 7>& n_vertex);

// The L/S subshift: after S only L may follow; transition [[1,1],[1,0]].
Sft penrose_sft();
// The recoded shift on the blocks l = L and s = SL: the full 2-shift.
Sft penrose_block_sft();

// {L,S}-word -> {l,s}-word by the block rule l = L, s = SL.  Throws
// InadmissibleWord when the input breaks the subshift rule and DanglingS
// when a trailing S has no following L to pair with.
Word recode(const Word& w);
// {l,s}-word -> {L,S}-word.  Total: every block word decodes, and
// recode(recode_inverse(w)) == w.
Word recode_inverse(const Word& w);

// Build the patch addressed by a word read fine-to-coarse: w[0] is the kind
// of the preferred tile, w[i] the kind of its i-th composition ancestor, the
// last letter the seed of which the whole patch is the full decomposition.
// The result carries the preferred tile as `marked` and sits at even parity.
// Throws InadmissibleWord (empty or rule-breaking word) and
// EnumerationLimitExceeded for words longer than 25 letters.
TrianglePatch sequence_to_patch(const Word& w);

// Inverse dictionary: recover the length-`length` word of a marked patch by
// successive compositions (exact inverse substitution).  Throws BadArgument
// when the patch cannot be composed that often (no marked tile, mixed
// parities, or tiles that do not regroup into parents).
Word patch_to_sequence(const TrianglePatch& p, std::size_t length);

} // namespace fivefold
