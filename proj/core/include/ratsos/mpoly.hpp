#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ratsos/error.hpp"
#include "ratsos/multiquadratic.hpp"
#include "ratsos/rational.hpp"

namespace ratsos {

using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order: total degree first, then lex with the first
/// declared variable largest.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in a fixed number of variables. Zero coefficients are
/// never stored; terms iterate in ascending graded-lex order.
template <class Coeff>
class MPoly {
 public:
  using TermMap = std::map<Exponents, Coeff, GrlexLess>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Coeff& c) {
    MPoly out(nvars);
    out.add_term(Exponents(nvars, 0), c);
    return out;
  }
  static MPoly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw UsageError("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    MPoly out(nvars);
    out.add_term(e, Coeff(Rat(1)));
    return out;
  }
  static MPoly monomial(const Exponents& e, const Coeff& c) {
    MPoly out(e.size());
    out.add_term(e, c);
    return out;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  unsigned degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }
  const Exponents& leading_exponents() const { return leading_term().first; }
  const Coeff& leading_coefficient() const { return leading_term().second; }

  Coeff coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add_term(const Exponents& e, const Coeff& c) {
    if (e.size() != nvars_) throw UsageError("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Coeff&>()))>;
    MPoly<Out> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  MPoly operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  MPoly& operator+=(const MPoly& rhs) {
    check_shape(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& rhs) {
    check_shape(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  MPoly& operator*=(const Coeff& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    TermMap out;
    for (auto& [e, x] : terms_) {
      Coeff y = x * c;
      if (!y.is_zero()) out.emplace(e, std::move(y));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Coeff& c) { return a *= c; }
  friend MPoly operator*(const Coeff& c, MPoly a) { return a *= c; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_shape(b);
    MPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  MPoly& operator*=(const MPoly& rhs) { return *this = *this * rhs; }

  /// p^2 using the symmetric half of the pairwise products.
  MPoly square() const {
    MPoly out(nvars_);
    Exponents e(nvars_);
    for (auto i = terms_.begin(); i != terms_.end(); ++i) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = 2 * i->first[k];
      out.add_term(e, i->second * i->second);
      auto j = i;
      for (++j; j != terms_.end(); ++j) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = i->first[k] + j->first[k];
        Coeff cross = i->second * j->second;
        out.add_term(e, cross + cross);
      }
    }
    return out;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  const typename TermMap::value_type& leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return *terms_.rbegin();
  }
  void check_shape(const MPoly& other) const {
    if (nvars_ != other.nvars_) throw UsageError("polynomials have different variable counts");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

template <class Coeff>
MPoly<Coeff> pow(const MPoly<Coeff>& base, unsigned exponent) {
  MPoly<Coeff> result = MPoly<Coeff>::constant(base.nvars(), Coeff(Rat(1)));
  MPoly<Coeff> b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b = b.square();
  }
  return result;
}

using RatPoly = MPoly<Rat>;
using MQPoly = MPoly<MQElem>;

template <class Coeff>
struct Weighted {
  Rat weight;
  MPoly<Coeff> poly;
};

/// sum_i weight_i * poly_i^2, exactly. All polynomials must share the
/// variable count (and generator context, for MQElem coefficients).
template <class Coeff>
MPoly<Coeff> expand_weighted_squares(std::size_t nvars, const std::vector<Weighted<Coeff>>& terms) {
  MPoly<Coeff> out(nvars);
  for (const auto& t : terms) {
    if (t.poly.nvars() != nvars) throw UsageError("weighted square has the wrong variable count");
    out += t.poly.square() * Coeff(t.weight);
  }
  return out;
}

MQPoly to_mq(const RatPoly& p, const ContextPtr& context = nullptr);
/// Throws UsageError if a coefficient has a nonzero irrational coordinate.
RatPoly to_rat(const MQPoly& p);
bool is_rational(const MQPoly& p);
MQPoly reembed(const MQPoly& p, const ContextPtr& target);

}  // namespace ratsos
