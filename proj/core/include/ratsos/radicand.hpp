#pragma once

#include "ratsos/rational.hpp"

namespace ratsos {

/// n = squarefree * root^2, root > 0. `squarefree` may be 1 or -1.
struct SquarefreeDecomposition {
  Integer squarefree;
  Integer root;
};

/// Trial-division squarefree extraction. Throws DomainError for n = 0.
SquarefreeDecomposition squarefree_part(const Integer& n);

bool is_squarefree(const Integer& n);

/// A nonzero squarefree integer other than 1; the value under a formal
/// square root generator.
class Radicand {
 public:
  explicit Radicand(Integer value);

  const Integer& value() const noexcept { return value_; }

  friend bool operator==(const Radicand& a, const Radicand& b) { return a.value_ == b.value_; }

 private:
  Integer value_;
};

/// The square root of a rational q written as coefficient * sqrt(radicand)
/// with radicand squarefree. radicand == 1 means the root is rational; a
/// value of 0 only occurs for q = 0.
struct RadicalForm {
  Integer radicand;
  Rat coefficient;

  bool is_rational() const { return radicand == 1 || coefficient.is_zero(); }
  friend bool operator==(const RadicalForm&, const RadicalForm&) = default;
};

/// sqrt(n/d) = sqrt(n*d)/d, then n*d is reduced by squarefree_part.
RadicalForm sqrt_normal_form(const Rat& q);

}  // namespace ratsos
