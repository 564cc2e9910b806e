#pragma once

#include <string>

#include "loglocal/toric.hpp"

namespace loglocal {

/* Geometry config: a JSON object with a top-level "factors" array. Each entry
   carries "weights" (positive integers), optionally "rays" (one integer
   vector per weight) and "group_order" (default 1). When rays are omitted the
   factor must be a true weighted projective space: well-formed weights, group
   order 1, fan constructed canonically. Errors carry the JSON path. */
NefToricProduct geometry_from_json_text(const std::string& text);
NefToricProduct geometry_from_json_file(const std::string& path);

// Deterministic JSON echo of the stored geometry (ordered keys).
std::string geometry_to_json(const NefToricProduct& x, int indent = 2);

// The `describe` payload: dimensions, divisor order, torus weights,
// recomputed group orders, point constant, and the validation report.
std::string describe_geometry_json(const NefToricProduct& x,
                                   const ValidationReport& report, int indent = 2);

}  // namespace loglocal
