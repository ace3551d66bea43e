// The Conway potential function of the closure of a colored braid, computed
// from the reduced colored Gassner matrix, plus the independent braid-axis
// route used as a cross-check.
#pragma once

#include "cpf/braid.hpp"
#include "cpf/gassner.hpp"
#include "cpf/laurent.hpp"

namespace cpf {

enum class PotentialKind { polynomial, knot_fraction };

/// The computed invariant. For closures with at least two components the
/// value is the potential itself; for a knot (one component, which forces a
/// single color) the value is the Alexander-Conway polynomial D_L, i.e. the
/// numerator over the implied symbolic denominator t_k - t_k^{-1}.
struct Potential {
    PotentialKind kind = PotentialKind::polynomial;
    int components = 0;
    LaurentPoly value;
    int knot_color = 0;  // the single color when kind == knot_fraction

    std::string denominator_text() const;
    std::string to_text() const;
    bool operator==(const Potential&) const = default;
};

/// t_{c_1}...t_{c_n} - t_{c_1}^{-1}...t_{c_n}^{-1}, colors with multiplicity.
LaurentPoly closure_denominator(const ColoredBraid& b);

/// Potential of the closure of a closed-colorable braid:
///   (-1)^{n+1} <beta> g(det(B - I_{n-1})) / (t_{c_1}...t_{c_n} - t_{c_1}^{-1}...t_{c_n}^{-1})
/// with B the reduced colored Gassner matrix, <beta> the crossing-weight
/// monomial and g the exponent-doubling map. Both divisions (link and knot
/// case) are exact; a failure is an internal invariant violation.
Potential potential_function(const ColoredBraid& b);

/// Potential of the closure together with the braid axis, as a polynomial in
/// mu+1 variables whose last variable x belongs to the axis:
///   (-1)^{n-1} x^{n-1} <beta> g(det(x^{-1} B - I_{n-1})).
LaurentPoly axis_potential(const ColoredBraid& b);

/// Second route to potential_function: specialize the axis variable of
/// axis_potential to 1 and divide out the closure denominator (Torres-style
/// normalization). Agrees with the direct route exactly.
Potential potential_via_axis(const ColoredBraid& b);

}  // namespace cpf
