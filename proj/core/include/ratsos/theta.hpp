#pragma once

#include <cstddef>
#include <vector>

#include "ratsos/mpoly.hpp"
#include "ratsos/unipoly.hpp"

namespace ratsos {

/// p = sum_{i < r} q_i theta^i in Q[x]/(u(theta)), r = deg u.
struct ThetaPoly {
  std::vector<RatPoly> q;
  UniPoly u;

  std::size_t nvars() const { return q.empty() ? 0 : q.front().nvars(); }
  bool is_zero() const;
  friend bool operator==(const ThetaPoly&, const ThetaPoly&) = default;
};

/// Coefficient vectors of theta^k mod u for k = 0..max_power.
std::vector<std::vector<Rat>> theta_power_table(const UniPoly& u, std::size_t max_power);

/// Splits p, whose last variable is theta, by theta-degree and reduces
/// theta powers modulo monic u.
ThetaPoly theta_expand(const RatPoly& p, const UniPoly& u);

ThetaPoly theta_zero(std::size_t nvars, const UniPoly& u);
ThetaPoly theta_add(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly theta_scale(const ThetaPoly& a, const Rat& c);
/// Product modulo u.
ThetaPoly theta_multiply(const ThetaPoly& a, const ThetaPoly& b);

}  // namespace ratsos
