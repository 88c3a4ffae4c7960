#include <gtest/gtest.h>

#include <cmath>

#include "ratsos/error.hpp"
#include "ratsos/unipoly.hpp"
#include "test_support.hpp"

namespace ratsos {
namespace {

using testing::Rng;

const UniPoly kCubic{1, -3, 0, 1};  // x^3 - 3x + 1

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(UniPoly, TrimsAndReportsDegree) {
  EXPECT_EQ(UniPoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_TRUE(UniPoly({0, 0}).is_zero());
  EXPECT_EQ(kCubic.str("t"), "t^3 - 3*t + 1");
}

TEST(UniPoly, DivmodAndGcd) {
  const UniPoly a = UniPoly::from_roots(rats({1, 2, 3}));
  const UniPoly b = UniPoly::from_roots(rats({2, 5}));
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(gcd(a, b), UniPoly({-2, 1}));
}

TEST(NewtonPowerSums, Examples) {
  EXPECT_EQ(newton_power_sums(UniPoly::from_roots(rats({1, 2, 3})), 3), rats({3, 6, 14, 36}));
  EXPECT_EQ(newton_power_sums(kCubic, 4), rats({3, 0, 6, -3, 18}));
  EXPECT_EQ(newton_power_sums(UniPoly{2, 0, 1}, 4), rats({2, 0, -4, 0, 8}));
  EXPECT_EQ(newton_power_sums(UniPoly{-5, 1}, 2), rats({1, 5, 25}));
}

TEST(NewtonPowerSums, RequiresMonic) {
  EXPECT_THROW(newton_power_sums(UniPoly{1, 2}, 3), PreconditionError);
  EXPECT_THROW(newton_power_sums(UniPoly{3}, 3), PreconditionError);
}

TEST(NewtonPowerSums, MatchesExplicitRootSums) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = static_cast<std::size_t>(rng.integer(1, 8));
    std::vector<Rat> roots;
    for (std::size_t k = 0; k < d; ++k) roots.push_back(rng.rational(6, 3));
    const auto u = UniPoly::from_roots(roots);
    EXPECT_EQ(newton_power_sums(u, 2 * d + 2), testing::explicit_power_sums(roots, {}, 2 * d + 2));
  }
}

TEST(NewtonPowerSums, MatchesImaginaryPairs) {
  const auto u = testing::with_imaginary_pairs(rats({1}), {Rat(2), Rat(1, 3)});
  EXPECT_EQ(newton_power_sums(u, 9), testing::explicit_power_sums(rats({1}), {Rat(2), Rat(1, 3)}, 9));
}

TEST(IsolateRealRoots, CubicHasThreeOrderedIntervals) {
  const auto roots = isolate_real_roots(kCubic);
  ASSERT_EQ(roots.size(), 3u);
  const double expected[] = {-1.8793852415718, 0.3472963553339, 1.5320888862380};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_LT(roots[i].lo.to_double(), expected[i]);
    EXPECT_GT(roots[i].hi.to_double(), expected[i]);
    if (i > 0) {
      EXPECT_LE(roots[i - 1].hi, roots[i].lo);
    }
  }
}

TEST(IsolateRealRoots, NoRealRoots) { EXPECT_TRUE(isolate_real_roots(UniPoly{2, 0, 1}).empty()); }

TEST(IsolateRealRoots, StraddlesSqrtThree) {
  const auto roots = isolate_real_roots(UniPoly{-3, 0, 1});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LT(roots[0].lo.to_double(), -std::sqrt(3.0));
  EXPECT_GT(roots[0].hi.to_double(), -std::sqrt(3.0));
  EXPECT_LT(roots[1].lo.to_double(), std::sqrt(3.0));
  EXPECT_GT(roots[1].hi.to_double(), std::sqrt(3.0));
}

TEST(IsolateRealRoots, RejectsRepeatedRoots) {
  try {
    isolate_real_roots(UniPoly{1, -2, 1});
    FAIL() << "expected NotSquarefreeError";
  } catch (const NotSquarefreeError& e) {
    EXPECT_NE(std::string(e.what()).find("gcd"), std::string::npos);
  }
}

bool is_dyadic(const Rat& x) {
  const Integer d = x.denominator();
  return (d & (d - 1)) == 0;
}

TEST(IsolateRealRoots, PropertiesOnRandomProducts) {
  Rng rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const auto real_count = static_cast<std::size_t>(rng.integer(0, 6));
    const auto roots = rng.distinct_roots(real_count, 5);
    std::vector<Rat> imag;
    if (rng.coin()) imag.push_back(Rat(rng.integer(1, 9), rng.integer(1, 3)));
    UniPoly u = testing::with_imaginary_pairs(roots, imag);
    if (u.degree() < 1) continue;
    const auto iv = isolate_real_roots(u);
    ASSERT_EQ(iv.size(), real_count);

    const Rat B = cauchy_bound(u) + Rat(1);
    EXPECT_EQ(count_real_roots(sturm_sequence(u), -B, B), iv.size());

    auto sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < iv.size(); ++i) {
      EXPECT_LT(iv[i].lo, iv[i].hi);
      EXPECT_LT(iv[i].lo, sorted[i]);
      EXPECT_GT(iv[i].hi, sorted[i]);
      EXPECT_LT(u.sign_at(iv[i].lo) * u.sign_at(iv[i].hi), 0);
      EXPECT_TRUE(is_dyadic(iv[i].lo) && is_dyadic(iv[i].hi));
      if (i > 0) EXPECT_LE(iv[i - 1].hi, iv[i].lo);
    }
    EXPECT_EQ(is_totally_real(u), imag.empty());
  }
}

TEST(IsTotallyReal, Examples) {
  EXPECT_TRUE(is_totally_real(kCubic));
  EXPECT_FALSE(is_totally_real(UniPoly{2, 0, 1}));
  EXPECT_THROW(is_totally_real(UniPoly{1, -2, 1}), NotSquarefreeError);
  EXPECT_THROW(is_totally_real(UniPoly{4}), PreconditionError);
}

}  // namespace
}  // namespace ratsos
