#include "ratsos/theta.hpp"

#include <algorithm>

#include "ratsos/error.hpp"

namespace ratsos {

namespace {

void require_monic(const UniPoly& u) {
  if (u.degree() < 1 || !u.is_monic()) {
    throw PreconditionError("field polynomial must be monic of degree >= 1, got " + u.str());
  }
}

std::size_t field_degree(const UniPoly& u) { return static_cast<std::size_t>(u.degree()); }

/// Folds the coefficient vector `full` (any length) into degree < r.
std::vector<RatPoly> reduce(std::vector<RatPoly> full, const UniPoly& u, std::size_t nvars) {
  const std::size_t r = field_degree(u);
  std::vector<RatPoly> out(r, RatPoly(nvars));
  if (full.size() <= r) {
    std::move(full.begin(), full.end(), out.begin());
    return out;
  }
  const auto table = theta_power_table(u, full.size() - 1);
  for (std::size_t k = 0; k < full.size(); ++k) {
    if (full[k].is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) {
      if (!table[k][i].is_zero()) out[i] += full[k] * table[k][i];
    }
  }
  return out;
}

}  // namespace

bool ThetaPoly::is_zero() const {
  return std::all_of(q.begin(), q.end(), [](const RatPoly& p) { return p.is_zero(); });
}

std::vector<std::vector<Rat>> theta_power_table(const UniPoly& u, std::size_t max_power) {
  require_monic(u);
  const std::size_t r = field_degree(u);
  std::vector<std::vector<Rat>> table;
  table.reserve(max_power + 1);
  std::vector<Rat> current(r, Rat(0));
  current[0] = Rat(1);
  table.push_back(current);
  for (std::size_t k = 1; k <= max_power; ++k) {
    // multiply by theta, then replace theta^r by -(u_0 + ... + u_{r-1} theta^{r-1})
    const Rat overflow = current[r - 1];
    for (std::size_t i = r - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = Rat(0);
    if (!overflow.is_zero()) {
      for (std::size_t i = 0; i < r; ++i) current[i] -= overflow * u.coeff(i);
    }
    table.push_back(current);
  }
  return table;
}

ThetaPoly theta_expand(const RatPoly& p, const UniPoly& u) {
  require_monic(u);
  if (p.nvars() == 0) throw UsageError("theta_expand needs theta as the last variable");
  const std::size_t n = p.nvars() - 1;
  std::vector<RatPoly> by_power;
  Exponents e(n);
  for (const auto& [exps, c] : p.terms()) {
    const std::size_t k = exps[n];
    if (by_power.size() <= k) by_power.resize(k + 1, RatPoly(n));
    std::copy(exps.begin(), exps.end() - 1, e.begin());
    by_power[k].add_term(e, c);
  }
  return ThetaPoly{reduce(std::move(by_power), u, n), u};
}

ThetaPoly theta_zero(std::size_t nvars, const UniPoly& u) {
  require_monic(u);
  return ThetaPoly{std::vector<RatPoly>(field_degree(u), RatPoly(nvars)), u};
}

ThetaPoly theta_add(const ThetaPoly& a, const ThetaPoly& b) {
  if (!(a.u == b.u) || a.q.size() != b.q.size()) throw UsageError("theta polynomials over different fields");
  ThetaPoly out = a;
  for (std::size_t i = 0; i < out.q.size(); ++i) out.q[i] += b.q[i];
  return out;
}

ThetaPoly theta_scale(const ThetaPoly& a, const Rat& c) {
  ThetaPoly out = a;
  for (auto& q : out.q) q *= c;
  return out;
}

ThetaPoly theta_multiply(const ThetaPoly& a, const ThetaPoly& b) {
  if (!(a.u == b.u) || a.q.size() != b.q.size()) throw UsageError("theta polynomials over different fields");
  const std::size_t r = a.q.size();
  const std::size_t n = a.nvars();
  std::vector<RatPoly> full(2 * r - 1, RatPoly(n));
  for (std::size_t i = 0; i < r; ++i) {
    if (a.q[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (b.q[j].is_zero()) continue;
      full[i + j] += a.q[i] * b.q[j];
    }
  }
  return ThetaPoly{reduce(std::move(full), a.u, n), a.u};
}

}  // namespace ratsos
