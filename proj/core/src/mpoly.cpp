#include "ratsos/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace ratsos {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0U);
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MQPoly to_mq(const RatPoly& p, const ContextPtr& context) {
  return p.map_coefficients([&](const Rat& c) { return MQElem(context, c); });
}

RatPoly to_rat(const MQPoly& p) {
  return p.map_coefficients([](const MQElem& c) {
    if (!c.is_rational()) throw UsageError("coefficient " + c.str() + " is not rational");
    return c.rational_part();
  });
}

bool is_rational(const MQPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& term) { return term.second.is_rational(); });
}

MQPoly reembed(const MQPoly& p, const ContextPtr& target) {
  return p.map_coefficients([&](const MQElem& c) { return c.reembed(target); });
}

}  // namespace ratsos
