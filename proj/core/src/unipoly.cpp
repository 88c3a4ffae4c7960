#include "ratsos/unipoly.hpp"

#include <sstream>

#include "ratsos/error.hpp"

namespace ratsos {

UniPoly::UniPoly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rat> coefficients) : coeffs_(coefficients) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> coeffs(degree + 1, Rat(0));
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::from_roots(const std::vector<Rat>& roots) {
  UniPoly out{Rat(1)};
  for (const auto& r : roots) out = out * UniPoly{-r, Rat(1)};
  return out;
}

const Rat& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat UniPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty()) return {};
  return *this * leading().inverse();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) { return *this += -rhs; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(UniPoly a, const Rat& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::string UniPoly::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rat magnitude = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << magnitude.str();
      continue;
    }
    if (magnitude != Rat(1)) os << magnitude.str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {UniPoly{}, a};
  std::vector<Rat> quot(rem.size() - db, Rat(0));
  const Rat inv_lead = bc.back().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Rat factor = rem[k] * inv_lead;
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * bc[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const UniPoly& u) {
  if (u.is_zero()) return false;
  return gcd(u, u.derivative()).degree() == 0;
}

std::vector<Rat> newton_power_sums(const UniPoly& u, std::size_t count) {
  if (u.degree() < 1 || !u.is_monic()) {
    throw PreconditionError("newton_power_sums requires a monic polynomial of degree >= 1, got " +
                            u.str());
  }
  const auto r = static_cast<std::size_t>(u.degree());
  // u = x^r + a_{r-1} x^{r-1} + ... + a_0
  std::vector<Rat> p(count + 1, Rat(0));
  p[0] = Rat(static_cast<long>(r));
  for (std::size_t m = 1; m <= count; ++m) {
    Rat acc(0);
    if (m <= r) acc -= Rat(static_cast<long>(m)) * u.coeff(r - m);
    const std::size_t upto = std::min(m - 1, r);
    for (std::size_t i = 1; i <= upto; ++i) acc -= u.coeff(r - i) * p[m - i];
    p[m] = acc;
  }
  return p;
}

Rat cauchy_bound(const UniPoly& u) {
  if (u.degree() < 1) return Rat(1);
  const Rat& lead = u.leading();
  Rat best(0);
  for (int i = 0; i < u.degree(); ++i) {
    const Rat ratio = abs(u.coeff(static_cast<std::size_t>(i)) / lead);
    if (ratio > best) best = ratio;
  }
  return Rat(1) + best;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& u) {
  std::vector<UniPoly> seq;
  if (u.is_zero()) return seq;
  seq.push_back(u);
  UniPoly next = u.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    next = -divmod(seq[seq.size() - 2], seq.back()).second;
  }
  return seq;
}

std::size_t sign_variations(const std::vector<UniPoly>& sturm, const Rat& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : sturm) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_real_roots(const std::vector<UniPoly>& sturm, const Rat& lo, const Rat& hi) {
  const auto vlo = sign_variations(sturm, lo);
  const auto vhi = sign_variations(sturm, hi);
  return vlo >= vhi ? vlo - vhi : 0;
}

namespace {

void require_squarefree(const UniPoly& u) {
  const UniPoly g = gcd(u, u.derivative());
  if (g.degree() > 0) {
    throw NotSquarefreeError("polynomial " + u.str() + " is not squarefree: gcd(u, u') = " +
                             g.str());
  }
}

/// Smallest power of two >= b.
Rat dyadic_ceiling(const Rat& b) {
  Rat d(1);
  while (d < b) d *= Rat(2);
  return d;
}

/// A dyadic point strictly inside (lo, hi) where u does not vanish, trying
/// the midpoint first and then quarter points, eighth points, ...
Rat split_point(const UniPoly& u, const Rat& lo, const Rat& hi) {
  const Rat width = hi - lo;
  for (long denom = 2;; denom *= 2) {
    for (long j = 1; j < denom; j += 2) {
      const Rat x = lo + width * Rat(j, denom);
      if (u.sign_at(x) != 0) return x;
    }
  }
}

void isolate(const UniPoly& u, const std::vector<UniPoly>& sturm, const Rat& lo, const Rat& hi,
             std::size_t roots, std::vector<Interval>& out) {
  if (roots == 0) return;
  if (roots == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rat mid = split_point(u, lo, hi);
  const auto left = count_real_roots(sturm, lo, mid);
  isolate(u, sturm, lo, mid, left, out);
  isolate(u, sturm, mid, hi, roots - left, out);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const UniPoly& u) {
  if (u.is_zero()) throw PreconditionError("cannot isolate the roots of the zero polynomial");
  if (u.is_constant()) return {};
  require_squarefree(u);
  const auto sturm = sturm_sequence(u);
  const Rat bound = dyadic_ceiling(cauchy_bound(u));
  std::vector<Interval> out;
  isolate(u, sturm, -bound, bound, count_real_roots(sturm, -bound, bound), out);
  return out;
}

bool is_totally_real(const UniPoly& u) {
  if (u.is_constant()) throw PreconditionError("is_totally_real requires a nonconstant polynomial");
  require_squarefree(u);
  const auto sturm = sturm_sequence(u);
  const Rat bound = dyadic_ceiling(cauchy_bound(u));
  return count_real_roots(sturm, -bound, bound) == static_cast<std::size_t>(u.degree());
}

}  // namespace ratsos
