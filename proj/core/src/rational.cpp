#include "ratsos/rational.hpp"

#include <ostream>

#include "ratsos/error.hpp"

namespace ratsos {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    return Rat(to_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  return Rat(to_integer(num), to_integer(den));
}

Rat Rat::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rat out;
  out.value_ = 1 / value_;
  out.value_.canonicalize();
  return out;
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rat::fraction_str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::operator-() const {
  Rat out;
  out.value_ = -value_;
  return out;
}

Rat& Rat::operator+=(const Rat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

Rat pow(const Rat& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rat(num, den);
}

Integer floor(const Rat& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return out;
}

Integer ceil(const Rat& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

}  // namespace ratsos
