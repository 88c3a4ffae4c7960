#include "ratsos/format.hpp"

#include <sstream>

namespace ratsos {

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
    if (e[i] > 1) os << "^" << e[i];
  }
  return first ? "1" : os.str();
}

std::string to_string(const RatPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    const Rat magnitude = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = total_degree(e) == 0;
    if (constant) {
      os << magnitude.str();
    } else if (magnitude == Rat(1)) {
      os << monomial_string(e, names);
    } else {
      os << magnitude.str() << "*" << monomial_string(e, names);
    }
  }
  return os.str();
}

std::string to_string(const MQPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (total_degree(e) != 0) os << "*" << monomial_string(e, names);
  }
  return os.str();
}

}  // namespace ratsos
