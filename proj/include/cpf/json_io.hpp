// JSON forms of the core types. Coefficients travel as decimal strings so
// arbitrary-precision values survive the round trip.
#pragma once

#include <json.hpp>

#include "cpf/braid.hpp"
#include "cpf/gassner.hpp"
#include "cpf/laurent.hpp"
#include "cpf/potential.hpp"
#include "cpf/verify.hpp"

namespace cpf {

// {"nvars":2,"terms":[{"coeff":"-1","exp":[-1,-1]},{"coeff":"1","exp":[1,1]}]}
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

// Row-major entry list with the boundary color sequences attached.
nlohmann::json gassner_to_json(const GassnerMatrix& g);

// {"components":k,"kind":"polynomial"|"knot_fraction","value":...,"denominator":"1"|"t1 - t1^-1"}
nlohmann::json potential_to_json(const Potential& p);

// {"word":[-1,-1],"bottom":[1,2],"top":[1,2],"perm":[1,2],"components":2}
nlohmann::json braid_to_json(const ColoredBraid& b);

nlohmann::json report_to_json(const verify::CheckReport& r);

}  // namespace cpf
