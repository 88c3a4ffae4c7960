#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratsos/rational.hpp"

namespace ratsos {

/// Dense univariate polynomial over Q, constant term first, trailing zeros
/// trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coefficients);
  UniPoly(std::initializer_list<Rat> coefficients);

  static UniPoly monomial(const Rat& c, std::size_t degree);
  /// prod (x - r) over the given roots.
  static UniPoly from_roots(const std::vector<Rat>& roots);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rat(1); }

  const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;
  int sign_at(const Rat& x) const { return (*this)(x).sign(); }

  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string str(std::string_view var = "x") const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

/// Quotient and remainder; throws DomainError for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);
bool is_squarefree(const UniPoly& u);

/// p_0, ..., p_count: power sums of the roots of monic u, with multiplicity,
/// from Newton's identities.
std::vector<Rat> newton_power_sums(const UniPoly& u, std::size_t count);

/// 1 + max |a_i / a_r|. Every complex root has modulus strictly below it.
Rat cauchy_bound(const UniPoly& u);

struct Interval {
  Rat lo;
  Rat hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::vector<UniPoly> sturm_sequence(const UniPoly& u);
std::size_t sign_variations(const std::vector<UniPoly>& sturm, const Rat& x);
/// Distinct real roots in (lo, hi]; exact when neither endpoint is a root.
std::size_t count_real_roots(const std::vector<UniPoly>& sturm, const Rat& lo, const Rat& hi);

/// Sorted, pairwise-disjoint intervals with dyadic endpoints, one per real
/// root. Throws NotSquarefreeError when gcd(u, u') is nonconstant.
std::vector<Interval> isolate_real_roots(const UniPoly& u);

/// True iff u is squarefree and all of its roots are real. Throws
/// NotSquarefreeError for non-squarefree u, PreconditionError for constants.
bool is_totally_real(const UniPoly& u);

}  // namespace ratsos
