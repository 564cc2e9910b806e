#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loglocal/toric.hpp"

namespace loglocal {

// Built-in geometries used by the self test and the test suites: projective
// spaces and products of them, the weighted plane P(1,1,2), and a fake plane
// (a Z/3 quotient of P^2 with rays (3,-2), (0,1), (-3,1)).
std::vector<std::pair<std::string, NefToricProduct>> standard_fleet();

NefToricProduct fleet_geometry(const std::string& name);

}  // namespace loglocal
