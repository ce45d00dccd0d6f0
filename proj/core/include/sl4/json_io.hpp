#pragma once

#include <nlohmann/json.hpp>

#include "sl4/cone.hpp"
#include "sl4/lorentz.hpp"
#include "sl4/types.hpp"

namespace sl4 {

/// Key order is preserved on output so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// RealMatrix4 <-> array of 16 numbers, row-major
Json to_json(const RealMatrix4& m);
RealMatrix4 real_matrix_from_json(const Json& j);

// ComplexMatrix4 <-> array of 16 [re, im] pairs, row-major
Json to_json(const ComplexMatrix4& m);
ComplexMatrix4 complex_matrix_from_json(const Json& j);

// StokesVector <-> array of 4 numbers
Json to_json(const StokesVector& s);
StokesVector stokes_vector_from_json(const Json& j);

// PolarizationState <-> {"intensity": x, "p": [a, b, c]}
Json to_json(const PolarizationState& ps);
PolarizationState polarization_state_from_json(const Json& j);

// ParamInterval <-> {"lo": number|"-inf", "hi": number|"+inf",
//                    "lo_closed": bool, "hi_closed": bool, "empty": bool}
Json to_json(const ParamInterval& iv);
ParamInterval param_interval_from_json(const Json& j);

Json to_json(const VariantRange& r);
Json to_json(const EllipsoidSpec& e);
Json to_json(const AdmissibilityReport& r);

}  // namespace sl4
