#include "cpf/potential.hpp"

#include <cassert>

namespace cpf {

namespace {

// Splits the numerator into the final Potential, handling the knot case.
Potential assemble(const ColoredBraid& b, LaurentPoly numerator) {
    const ClosureInfo info = closure_info(b);
    const std::size_t nv = static_cast<std::size_t>(b.color_count());
    const LaurentPoly den = closure_denominator(b);

    Potential out;
    out.components = info.component_count();
    if (out.components >= 2) {
        out.kind = PotentialKind::polynomial;
        out.value = exact_div(numerator, den);
        return out;
    }
    // One closure component forces a single color by surjectivity.
    assert(b.color_count() == 1);
    out.kind = PotentialKind::knot_fraction;
    out.knot_color = b.bottom().colors.front();
    const std::size_t k = static_cast<std::size_t>(out.knot_color);
    const LaurentPoly t_minus_tinv =
        LaurentPoly::variable(nv, k) - LaurentPoly::variable(nv, k, -1);
    out.value = exact_div(numerator * t_minus_tinv, den);
    return out;
}

}  // namespace

std::string Potential::denominator_text() const {
    if (kind == PotentialKind::polynomial) return "1";
    return "t" + std::to_string(knot_color) + " - t" + std::to_string(knot_color) + "^-1";
}

std::string Potential::to_text() const {
    if (kind == PotentialKind::polynomial) return value.to_text();
    return "(" + value.to_text() + ") / (" + denominator_text() + ")";
}

LaurentPoly closure_denominator(const ColoredBraid& b) {
    const std::size_t nv = static_cast<std::size_t>(b.color_count());
    ExponentVec exps(nv, 0);
    for (int c : b.bottom().colors) exps[static_cast<std::size_t>(c - 1)] += 1;
    ExponentVec neg(exps);
    for (auto& x : neg) x = -x;
    return LaurentPoly::monomial(nv, exps, 1) - LaurentPoly::monomial(nv, neg, 1);
}

Potential potential_function(const ColoredBraid& b) {
    if (!b.is_closed())
        throw std::invalid_argument("potential_function requires a closed-colorable braid");
    const int n = b.strand_count();
    const std::size_t nv = static_cast<std::size_t>(b.color_count());
    const GassnerMatrix g = word_matrix(b);
    const LaurentPoly det =
        determinant(g.mat - PolyMatrix::identity(static_cast<std::size_t>(n - 1), nv));
    LaurentPoly numerator = monomial_weight(b) * det.square_variables();
    if (n % 2 == 0) numerator = -numerator;  // (-1)^{n+1}
    return assemble(b, std::move(numerator));
}

LaurentPoly axis_potential(const ColoredBraid& b) {
    if (!b.is_closed())
        throw std::invalid_argument("axis_potential requires a closed-colorable braid");
    const int n = b.strand_count();
    const std::size_t nv = static_cast<std::size_t>(b.color_count());
    const std::size_t ext = nv + 1;  // the axis variable x lives at index mu+1

    PolyMatrix scaled = word_matrix(b).mat.extend_vars(ext);
    const LaurentPoly x_inv = LaurentPoly::variable(ext, ext, -1);
    for (std::size_t r = 0; r < scaled.rows(); ++r)
        for (std::size_t c = 0; c < scaled.cols(); ++c) scaled.at(r, c) *= x_inv;
    const LaurentPoly det =
        determinant(scaled - PolyMatrix::identity(static_cast<std::size_t>(n - 1), ext));

    LaurentPoly out = monomial_weight(b).extend_vars(ext) * det.square_variables() *
                      LaurentPoly::variable(ext, ext, n - 1);
    if (n % 2 == 0) out = -out;  // (-1)^{n-1}
    return out;
}

Potential potential_via_axis(const ColoredBraid& b) {
    const std::size_t nv = static_cast<std::size_t>(b.color_count());
    const LaurentPoly at_axis_one =
        axis_potential(b).specialize_one(nv + 1).restrict_vars(nv);
    return assemble(b, at_axis_one);
}

}  // namespace cpf
