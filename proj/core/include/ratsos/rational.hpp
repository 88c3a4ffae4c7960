#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ratsos {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : value_(v) {}
  Rat(long v) : value_(v) {}
  Rat(const Integer& v) : value_(v) {}
  Rat(long num, long den);
  Rat(const Integer& num, const Integer& den);

  /// Accepts "n" or "n/d" with an optional leading sign on n.
  static Rat parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rat inverse() const;
  double to_double() const { return value_.get_d(); }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;
  /// Always "n/d", including "n/1".
  std::string fraction_str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rat abs(const Rat& x);
Rat pow(const Rat& base, unsigned exponent);
Integer floor(const Rat& x);
Integer ceil(const Rat& x);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace ratsos
