#pragma once

#include <string>
#include <vector>

#include "ratsos/mpoly.hpp"

namespace ratsos {

/// Human-readable form in descending graded-lex order, e.g.
/// "x^3 + x*y^2 + 3/2*y - 1". Variables without a name print as x1, x2, ...
std::string to_string(const RatPoly& p, const std::vector<std::string>& names);
std::string to_string(const MQPoly& p, const std::vector<std::string>& names);

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names);

}  // namespace ratsos
