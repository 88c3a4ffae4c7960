#include <gtest/gtest.h>

#include "ratsos/error.hpp"
#include "ratsos/multiquadratic.hpp"
#include "ratsos/radicand.hpp"
#include "ratsos/rational.hpp"
#include "test_support.hpp"

namespace ratsos {
namespace {

using testing::Rng;

TEST(Rat, LowestTermsAndPositiveDenominator) {
  const Rat a(6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(Rat(4, 2).str(), "2");
  EXPECT_EQ(Rat(4, 2).fraction_str(), "2/1");
}

TEST(Rat, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_EQ(Rat::parse("10/4"), Rat(5, 2));
  EXPECT_THROW(Rat::parse("1/0"), DomainError);
  EXPECT_THROW(Rat::parse("abc"), DomainError);
  EXPECT_THROW(Rat(1) / Rat(0), DomainError);
}

TEST(Rat, FloorAndCeil) {
  EXPECT_EQ(floor(Rat(-7, 2)), -4);
  EXPECT_EQ(ceil(Rat(-7, 2)), -3);
  EXPECT_EQ(ceil(Rat(6)), 6);
}

TEST(SquarefreePart, Examples) {
  auto d = squarefree_part(12);
  EXPECT_EQ(d.squarefree, 3);
  EXPECT_EQ(d.root, 2);
  d = squarefree_part(-18);
  EXPECT_EQ(d.squarefree, -2);
  EXPECT_EQ(d.root, 3);
  d = squarefree_part(49);
  EXPECT_EQ(d.squarefree, 1);
  EXPECT_EQ(d.root, 7);
  EXPECT_THROW(squarefree_part(0), DomainError);
}

TEST(SquarefreePart, ReassemblesAndIsSquarefreeBySampling) {
  Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    long n = rng.integer(-1000000, 1000000);
    if (n == 0) n = 1;
    const auto d = squarefree_part(n);
    EXPECT_EQ(d.squarefree * d.root * d.root, Integer(n)) << n;
    EXPECT_GT(d.root, 0);
    EXPECT_TRUE(testing::trial_squarefree(d.squarefree.get_si())) << n;
  }
}

TEST(SquarefreePart, LargeValues) {
  Integer big = Integer(10007) * 10007 * 6;
  mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), 90);
  const auto d = squarefree_part(big);
  EXPECT_EQ(d.squarefree, 6);
  Integer root = 10007;
  mpz_mul_2exp(root.get_mpz_t(), root.get_mpz_t(), 45);
  EXPECT_EQ(d.root, root);
}

TEST(Radicand, RejectsUnitZeroAndSquares) {
  EXPECT_NO_THROW(Radicand(-3));
  EXPECT_THROW(Radicand(1), DomainError);
  EXPECT_THROW(Radicand(0), DomainError);
  EXPECT_THROW(Radicand(8), DomainError);
}

TEST(SqrtNormalForm, FoldsDenominatorIntoRadicand) {
  const auto f = sqrt_normal_form(Rat(1, 2));
  EXPECT_EQ(f.radicand, 2);
  EXPECT_EQ(f.coefficient, Rat(1, 2));
  const auto g = sqrt_normal_form(Rat(3, 2));
  EXPECT_EQ(g.radicand, 6);
  EXPECT_EQ(g.coefficient, Rat(1, 2));
  const auto h = sqrt_normal_form(Rat(9, 4));
  EXPECT_TRUE(h.is_rational());
  EXPECT_EQ(h.coefficient, Rat(3, 2));
  const auto k = sqrt_normal_form(Rat(-12));
  EXPECT_EQ(k.radicand, -3);
  EXPECT_EQ(k.coefficient, Rat(2));
}

TEST(GeneratorContext, RejectsDuplicates) {
  EXPECT_THROW(GeneratorContext::make({Radicand(2), Radicand(2)}), UsageError);
  const auto ctx = GeneratorContext::make({Radicand(2), Radicand(3)});
  EXPECT_EQ(ctx->index_of(3), std::optional<std::size_t>(1));
  EXPECT_EQ(ctx->index_of(5), std::nullopt);
  EXPECT_EQ(ctx->subset_product(0b11), 6);
}

class MQElemTest : public ::testing::Test {
 protected:
  ContextPtr ctx = GeneratorContext::make({Radicand(2), Radicand(3)});
  MQElem s2 = MQElem::generator(ctx, 0);
  MQElem s3 = MQElem::generator(ctx, 1);
  MQElem one{ctx, Rat(1)};
};

TEST_F(MQElemTest, MultiplicationExamples) {
  EXPECT_EQ(s2 * s2, MQElem(Rat(2)));
  EXPECT_TRUE((s2 * s2).is_rational());
  EXPECT_EQ((one + s2) * (one - s2), MQElem(Rat(-1)));
  const MQElem s6 = s2 * s3;
  EXPECT_EQ(s6.coords().size(), 1u);
  EXPECT_EQ(s6.coordinate(0b11), Rat(1));
  EXPECT_EQ(s6 * s6, MQElem(Rat(6)));
}

TEST_F(MQElemTest, RadicalFindsProductsOfGenerators) {
  EXPECT_EQ(MQElem::radical(ctx, 6), s2 * s3);
  EXPECT_EQ(MQElem::radical(ctx, 12), Rat(2) * s3);
  EXPECT_EQ(MQElem::radical(ctx, 24), Rat(2) * (s2 * s3));
  EXPECT_THROW(MQElem::radical(ctx, 5), UsageError);
}

TEST_F(MQElemTest, ConjugateExamples) {
  const MQElem x = Rat(3) * one + Rat(5) * s2 + s3 + s2 * s3;
  const MQElem expected = Rat(3) * one - Rat(5) * s2 + s3 - s2 * s3;
  EXPECT_EQ(x.conjugate(0), expected);
  EXPECT_EQ(MQElem(ctx, Rat(7, 3)).conjugate(1), MQElem(Rat(7, 3)));
  EXPECT_EQ(x.conjugate(0).conjugate(0), x);
  EXPECT_THROW(x.conjugate(2), UsageError);
}

TEST_F(MQElemTest, SplitExamples) {
  const MQElem x = Rat(3) * one + Rat(5) * s2 + s3 + s2 * s3;
  const auto [a, b] = x.split(0);
  EXPECT_EQ(a, Rat(3) * one + s3);
  EXPECT_EQ(b, Rat(5) * one + s3);

  const auto [ra, rb] = MQElem(ctx, Rat(4)).split(1);
  EXPECT_EQ(ra, MQElem(Rat(4)));
  EXPECT_TRUE(rb.is_zero());

  const auto [ga, gb] = s2.split(0);
  EXPECT_TRUE(ga.is_zero());
  EXPECT_EQ(gb, MQElem(Rat(1)));
}

TEST_F(MQElemTest, MismatchedContextsAreUsageErrors) {
  const auto other = GeneratorContext::make({Radicand(5)});
  EXPECT_THROW(s2 * MQElem::generator(other, 0), UsageError);
  EXPECT_THROW(s2 + MQElem::generator(other, 0), UsageError);
  EXPECT_NO_THROW(s2 * MQElem(Rat(3)));
}

TEST(MQElemProperties, RingAxioms) {
  Rng rng(2024);
  const std::vector<ContextPtr> contexts = {
      GeneratorContext::make({Radicand(2), Radicand(3)}),
      GeneratorContext::make({Radicand(2), Radicand(6), Radicand(-3)}),
      GeneratorContext::make({Radicand(5), Radicand(-1), Radicand(7), Radicand(2)}),
  };
  for (const auto& ctx : contexts) {
    for (int i = 0; i < 200; ++i) {
      const MQElem x = rng.mq(ctx, 5);
      const MQElem y = rng.mq(ctx, 5);
      const MQElem z = rng.mq(ctx, 5);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x - x, MQElem(Rat(0)));
      EXPECT_EQ(x * MQElem(ctx, Rat(1)), x);
    }
  }
}

TEST(MQElemProperties, ConjugationIsAHomomorphism) {
  Rng rng(7);
  const auto ctx = GeneratorContext::make({Radicand(2), Radicand(6), Radicand(-3)});
  for (int i = 0; i < 200; ++i) {
    const MQElem x = rng.mq(ctx, 6);
    const MQElem y = rng.mq(ctx, 6);
    for (std::size_t g = 0; g < ctx->size(); ++g) {
      EXPECT_EQ(conjugate(x * y, g), conjugate(x, g) * conjugate(y, g));
      EXPECT_EQ(conjugate(x + y, g), conjugate(x, g) + conjugate(y, g));
    }
  }
}

TEST(MQElemProperties, SplitRecombines) {
  Rng rng(8);
  const auto ctx = GeneratorContext::make({Radicand(2), Radicand(3), Radicand(5)});
  for (int i = 0; i < 200; ++i) {
    const MQElem x = rng.mq(ctx, 6);
    for (std::size_t g = 0; g < ctx->size(); ++g) {
      const auto [a, b] = split(x, g);
      for (const auto& [s, c] : a.coords()) EXPECT_EQ(s & (Subset{1} << g), 0u);
      EXPECT_EQ(a.reembed(ctx) + MQElem::generator(ctx, g) * b.reembed(ctx), x);
    }
  }
}

}  // namespace
}  // namespace ratsos
