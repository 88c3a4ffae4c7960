#include "ratsos/radicand.hpp"

#include <cstdint>
#include <limits>

#include "ratsos/error.hpp"

namespace ratsos {

namespace {

SquarefreeDecomposition squarefree_native(std::uint64_t m) {
  std::uint64_t squarefree = 1;
  std::uint64_t root = 1;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) squarefree *= p;
  }
  squarefree *= m;
  Integer s;
  Integer r;
  mpz_import(s.get_mpz_t(), 1, 1, sizeof(squarefree), 0, 0, &squarefree);
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(root), 0, 0, &root);
  return {s, r};
}

SquarefreeDecomposition squarefree_big(Integer m) {
  Integer squarefree = 1;
  Integer root = 1;
  for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) squarefree *= p;
  }
  squarefree *= m;
  return {squarefree, root};
}

}  // namespace

SquarefreeDecomposition squarefree_part(const Integer& n) {
  if (n == 0) throw DomainError("squarefree_part of zero");
  const Integer magnitude = ::abs(n);
  SquarefreeDecomposition out;
  if (mpz_sizeinbase(magnitude.get_mpz_t(), 2) <= 63) {
    std::uint64_t m = 0;
    mpz_export(&m, nullptr, 1, sizeof(m), 0, 0, magnitude.get_mpz_t());
    out = squarefree_native(m);
  } else {
    out = squarefree_big(magnitude);
  }
  if (n < 0) out.squarefree = -out.squarefree;
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  return squarefree_part(n).root == 1;
}

Radicand::Radicand(Integer value) : value_(std::move(value)) {
  if (value_ == 0 || value_ == 1) {
    throw DomainError("radicand must be nonzero and different from 1, got " + value_.get_str());
  }
  if (!is_squarefree(value_)) {
    throw DomainError("radicand " + value_.get_str() + " is not squarefree");
  }
}

RadicalForm sqrt_normal_form(const Rat& q) {
  if (q.is_zero()) return {Integer(0), Rat(0)};
  const Integer n = q.numerator();
  const Integer d = q.denominator();
  const auto [s, c] = squarefree_part(n * d);
  return {s, Rat(c, d)};
}

}  // namespace ratsos
