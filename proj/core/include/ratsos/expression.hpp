#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ratsos/mpoly.hpp"

namespace ratsos {

/// Parses an expression with + - * ^, parentheses and rational literals
/// ("3" or "3/2") over the given variables. ^ takes a nonnegative integer
/// literal; there is no implicit multiplication. Errors are ParseError with
/// a 1-based line and column.
RatPoly parse_expression(std::string_view text, const std::vector<std::string>& variables,
                         std::size_t line = 1);

}  // namespace ratsos
