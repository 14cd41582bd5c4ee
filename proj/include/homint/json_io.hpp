#pragma once

#include <string>

#include <json.hpp>

#include "homint/interpolate.hpp"
#include "homint/poly.hpp"

namespace homint {

using Json = nlohmann::json;

// Polynomial file format:
//   { "n": int, "degree": int,
//     "terms": [ { "exps": [int, ...], "coeff": "decimal" }, ... ],
//     "modulus": "decimal" (optional) }
// Coefficients (and every other big integer) travel as decimal strings;
// readers also accept plain JSON integers for convenience. Terms must
// be homogeneous of the stated degree; violations are rejected.
Json poly_to_json(const HomogeneousPoly& f);
HomogeneousPoly poly_from_json(const Json& j);

// Instance file format:
//   { "points": [ [coord, ...], ... ],
//     "targets": [ "decimal", ... ] (optional, default all ones) }
InterpolationInstance instance_from_json(const Json& j);
Json instance_to_json(const InterpolationInstance& inst);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

HomogeneousPoly read_poly_file(const std::string& path);
InterpolationInstance read_instance_file(const std::string& path);

}  // namespace homint
