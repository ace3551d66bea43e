// Reduced colored Gassner matrices of braid generators and words, and the
// unreduced n x n extension recovered from the reduced matrix.
#pragma once

#include "cpf/braid.hpp"
#include "cpf/laurent.hpp"

namespace cpf {

/// (n-1) x (n-1) matrix over the mu-variable Laurent ring attached to a
/// colored braid, together with the color sequences at its two boundaries.
struct GassnerMatrix {
    PolyMatrix mat;
    ColorSeq source;
    ColorSeq target;
    bool operator==(const GassnerMatrix&) const = default;
};

/// Reduced colored Gassner matrix of the single letter sigma_i^sign on n
/// strands with the given source colors. The positive matrix carries the
/// variable colored by the over-crossing strand; the negative one is its
/// closed-form block inverse (checked against the product in debug builds).
GassnerMatrix generator_matrix(int n, int i, int sign, const ColorSeq& source);

/// Matrix of a whole word. Letters act as an anti-representation: reading
/// the word left to right, each new letter's matrix multiplies from the left.
GassnerMatrix word_matrix(const ColoredBraid& b);

/// The unreduced n x n matrix [[B, 0], [v, 1]] of a closed-colorable braid,
/// where B is the reduced matrix and the row v is recovered from the rows
/// r_i of B - I via the exact division
///   v = -(sum_i (t_{c_1}...t_{c_i} - 1) r_i) / (t_{c_1}...t_{c_n} - 1).
/// A NotDivisibleError here signals a convention bug, never valid input.
PolyMatrix unreduced_extend(const ColoredBraid& b);

}  // namespace cpf
