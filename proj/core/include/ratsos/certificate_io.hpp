#pragma once

#include <string>
#include <string_view>

#include "ratsos/certificate.hpp"

namespace ratsos {

/// JSON with a fixed key order; rationals as "n/d" strings, polynomial
/// terms as ["n/d", [exponents]] in descending graded-lex order.
std::string to_json(const Certificate& cert);

/// Throws ParseError on malformed documents (line/column refer to the JSON
/// text when the JSON itself is invalid).
Certificate certificate_from_json(std::string_view text);

/// Display form: one square per line.
std::string to_text(const Certificate& cert);

}  // namespace ratsos
