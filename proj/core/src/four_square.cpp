#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ratsos/descent.hpp"
#include "ratsos/error.hpp"

namespace ratsos {

namespace {

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

/// Legendre: n is a sum of three squares unless n = 4^a (8b + 7).
bool is_three_square(Integer n) {
  if (n == 0) return true;
  while (mpz_divisible_2exp_p(n.get_mpz_t(), 2) != 0) n >>= 2;
  return mpz_fdiv_ui(n.get_mpz_t(), 8) != 7;
}

/// A nontrivial factor of the odd composite n (Pollard rho, Floyd cycle
/// detection, increasing constants).
Integer rho_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2;
    Integer y = 2;
    Integer d = 1;
    const auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::map<Integer, unsigned> factor(Integer n) {
  std::map<Integer, unsigned> out;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  factor_into(n, out);
  return out;
}

struct Gaussian {
  Integer re;
  Integer im;

  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gaussian conj() const { return {re, -im}; }
};

Gaussian gaussian_pow(Gaussian base, unsigned e) {
  Gaussian out{1, 0};
  while (e > 0) {
    if (e & 1U) out = out * base;
    base = base * base;
    e >>= 1U;
  }
  return out;
}

/// a + bi with a^2 + b^2 = p for a prime p = 1 (mod 4) (Hermite-Serret).
Gaussian split_prime(const Integer& p) {
  Integer c = 2;
  while (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) ++c;
  Integer t;
  const Integer e = (p - 1) / 4;
  mpz_powm(t.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  Integer a = p;
  Integer b = t;
  while (b * b > p) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return {b, isqrt(p - b * b)};
}

/// The representation m = x^2 + y^2 with x >= y >= 0 and the largest x <= cap.
std::optional<std::pair<Integer, Integer>> two_square(const Integer& m, const Integer& cap) {
  if (m == 0) return std::make_pair(Integer(0), Integer(0));
  std::vector<Gaussian> reps{{1, 0}};
  for (const auto& [p, a] : factor(m)) {
    if (p == 2) {
      for (auto& z : reps) z = z * gaussian_pow({1, 1}, a);
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      if (a % 2 != 0) return std::nullopt;
      Integer scale;
      mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), a / 2);
      for (auto& z : reps) z = z * Gaussian{scale, 0};
    } else {
      const Gaussian pi = split_prime(p);
      std::vector<Gaussian> next;
      for (unsigned k = 0; k <= a; ++k) {
        const Gaussian part = gaussian_pow(pi, k) * gaussian_pow(pi.conj(), a - k);
        for (const auto& z : reps) next.push_back(z * part);
      }
      reps = std::move(next);
    }
  }
  std::optional<std::pair<Integer, Integer>> best;
  for (const auto& z : reps) {
    Integer x = abs(z.re);
    Integer y = abs(z.im);
    if (x < y) std::swap(x, y);
    if (x <= cap && (!best || x > best->first)) best = std::make_pair(x, y);
  }
  return best;
}

/// Fills w[pos..3] with a non-increasing run bounded by cap whose squares
/// sum to rest. Candidates are tried largest first.
bool search(const Integer& rest, std::size_t pos, const Integer& cap, std::array<Integer, 4>& w) {
  const std::size_t slots = 4 - pos;
  // a multiple of 8 (of 4, with fewer than four slots) only has
  // representations with every term even
  if (rest != 0 && mpz_divisible_2exp_p(rest.get_mpz_t(), slots == 4 ? 3 : 2) != 0) {
    if (!search(rest >> 2, pos, cap >> 1, w)) return false;
    for (std::size_t i = pos; i < 4; ++i) w[i] <<= 1;
    return true;
  }
  if (slots == 2) {
    const auto xy = two_square(rest, cap);
    if (!xy) return false;
    w[2] = xy->first;
    w[3] = xy->second;
    return true;
  }
  if (slots == 3 && !is_three_square(rest)) return false;
  Integer x = isqrt(rest);
  if (x > cap) x = cap;
  // x^2 * slots >= rest, otherwise the remaining slots cannot reach rest
  for (; x >= 0 && x * x * static_cast<unsigned long>(slots) >= rest; --x) {
    w[pos] = x;
    if (search(rest - x * x, pos + 1, x, w)) return true;
  }
  return false;
}

}  // namespace

std::array<Integer, 4> four_square(const Integer& n) {
  if (n <= 0) throw DomainError("four_square needs a positive integer, got " + n.get_str());
  std::array<Integer, 4> w;
  if (!search(n, 0, isqrt(n), w)) throw InternalError("no four-square decomposition of " + n.get_str());
  return w;
}

}  // namespace ratsos
