#include <gtest/gtest.h>

#include "liekring/branching.hpp"
#include "liekring/character.hpp"
#include "liekring/check/oracles.hpp"
#include "liekring/check/properties.hpp"
#include "liekring/spin10.hpp"
#include "liekring/weight.hpp"

using namespace liekring;

namespace {

const Spin10Blocks& blocks() { return spin10_blocks(); }

}  // namespace

TEST(WeightVector, StoresRationalCoordinatesInLowestTerms) {
  const WeightVector w({frac(1, 2), frac(-2, 4), Rational(3)});
  EXPECT_EQ(w[0], frac(1, 2));
  EXPECT_EQ(w[1], frac(-1, 2));
  EXPECT_EQ(w[2], Rational(3));
  EXPECT_EQ(w.to_string(), "(1/2,-1/2,3)");
  EXPECT_EQ(parse_weight(w.to_string()), w);
}

TEST(WeightVector, ArithmeticAndDot) {
  const WeightVector a = WeightVector::scaled({1, 1, 1}, 2);
  const WeightVector b({Rational(1), Rational(0), Rational(-1)});
  EXPECT_EQ(a + a, WeightVector({Rational(1), Rational(1), Rational(1)}));
  EXPECT_EQ(dot(a, b), Rational(0));
  EXPECT_EQ(dot(a, a), frac(3, 4));
  EXPECT_EQ(Rational(3) * b - b, b + b);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(WeightVector, DimensionMismatchThrows) {
  EXPECT_THROW(WeightVector::zero(2) + WeightVector::zero(3), DimensionMismatch);
}

TEST(WeightVector, ParseRejectsGarbage) {
  EXPECT_THROW(parse_weight("1,2"), ParseError);
  EXPECT_THROW(parse_weight("(1,x)"), ParseError);
  EXPECT_THROW(parse_weight("(1/0)"), ParseError);
}

TEST(FormalCharacter, ZeroMultiplicitiesAreDropped) {
  FormalCharacter chi(2);
  chi.add(WeightVector::unit(2, 0), 2);
  chi.add(WeightVector::unit(2, 0), -2);
  EXPECT_TRUE(chi.empty());
  EXPECT_EQ(chi.dimension(), 0);
}

TEST(FormalCharacter, MultiplyByTrivialIsIdentity) {
  EXPECT_EQ(FormalCharacter::trivial(5) * blocks().delta_plus, blocks().delta_plus);
}

TEST(FormalCharacter, CliffordProductOfHalfSpins) {
  const FormalCharacter prod = blocks().delta_plus * blocks().delta_minus;
  EXPECT_EQ(prod, blocks().one + blocks().lambda[2] + blocks().lambda[4]);
  EXPECT_EQ(prod.dimension(), 256);
  EXPECT_EQ(prod.multiplicity(WeightVector::zero(5)), 16);
}

TEST(FormalCharacter, SquareOfStandardHasDimension100) {
  EXPECT_EQ((blocks().lambda[1] * blocks().lambda[1]).dimension(), 100);
}

TEST(FormalCharacter, MultiplyRejectsMismatchedDimensions) {
  EXPECT_THROW(FormalCharacter::trivial(2) * FormalCharacter::trivial(3), DimensionMismatch);
  FormalCharacter a = FormalCharacter::trivial(2);
  EXPECT_THROW(a += FormalCharacter::trivial(3), DimensionMismatch);
}

TEST(Adams, FirstIsIdentity) { EXPECT_EQ(adams(1, blocks().delta_plus), blocks().delta_plus); }

TEST(Adams, ScalesWeights) {
  const FormalCharacter x1 = FormalCharacter::monomial(WeightVector::unit(5, 0));
  EXPECT_EQ(adams(2, x1), FormalCharacter::monomial(WeightVector({2, 0, 0, 0, 0})));
}

TEST(Adams, SecondOfStandardIsDoubledWeights) {
  FormalCharacter expected(5);
  for (std::size_t i = 0; i < 5; ++i) {
    expected.add(Rational(2) * WeightVector::unit(5, i), 1);
    expected.add(Rational(-2) * WeightVector::unit(5, i), 1);
  }
  EXPECT_EQ(adams(2, blocks().lambda[1]), expected);
}

TEST(Adams, ZeroIndexIsRejected) { EXPECT_THROW(adams(0, blocks().one), DomainError); }

TEST(ExteriorPower, ZerothIsTrivial) {
  EXPECT_EQ(exterior_power(0, blocks().delta_plus), FormalCharacter::trivial(5));
}

TEST(ExteriorPower, SecondOfStandardHas45Weights) {
  const FormalCharacter l2 = exterior_power(2, blocks().lambda[1]);
  EXPECT_EQ(l2.dimension(), 45);
  EXPECT_EQ(l2.multiplicity(WeightVector::zero(5)), 5);
  EXPECT_EQ(l2, check::lambda_by_subsets(2));
}

TEST(ExteriorPower, SecondOfHalfSpinIsLambda3) {
  EXPECT_EQ(exterior_power(2, blocks().delta_plus), blocks().lambda[3]);
  EXPECT_EQ(exterior_power(2, blocks().delta_minus), blocks().lambda[3]);
}

TEST(ExteriorPower, VanishesAboveDimension) {
  const FormalCharacter two = FormalCharacter::from_weights(1, {WeightVector({1}), WeightVector({-1})});
  EXPECT_TRUE(exterior_power(3, two).empty());
  EXPECT_EQ(exterior_power(2, two), FormalCharacter::trivial(1));
}

TEST(ExteriorPower, RejectsVirtualCharacters) {
  const FormalCharacter virt = FormalCharacter::monomial(WeightVector({1}), -1);
  EXPECT_THROW(exterior_power(2, virt), EffectivenessError);
}

TEST(ExteriorPower, AgreesWithOracleOnSeededCases) {
  check::Rng rng(11);
  const Verdict v = check::property_exterior_power(rng);
  EXPECT_TRUE(v.holds) << v.witness;
}

TEST(Conjugate, TrivialAndStandardAreSelfConjugate) {
  EXPECT_EQ(conjugate(blocks().one), blocks().one);
  EXPECT_EQ(conjugate(blocks().lambda[1]), blocks().lambda[1]);
}

TEST(Conjugate, ExchangesHalfSpins) { EXPECT_EQ(conjugate(blocks().delta_plus), blocks().delta_minus); }

TEST(Project, IdentityLeavesCharacterUnchanged) {
  EXPECT_EQ(project(blocks().delta_plus, RationalMatrix::identity(5)), blocks().delta_plus);
}

TEST(Project, Delta8PlusToSpin10TimesCircle) {
  GradedBlocks g;
  const FormalCharacter r = restrict_e8(delta8_plus_character());
  EXPECT_EQ(r.dimension(), 128);
  EXPECT_EQ(r, g.dp(3) + g.dm(-3) + Integer(3) * g.dp(-1) + Integer(3) * g.dm(1));
}

TEST(Project, DroppingXiSetsItToOne) {
  const FormalCharacter graded = with_xi(blocks().lambda[1], -2) + with_xi(blocks().delta_minus, 1);
  EXPECT_EQ(forget_xi(graded), blocks().lambda[1] + blocks().delta_minus);
}

TEST(Project, WrongSourceDimensionThrows) {
  EXPECT_THROW(project(blocks().one, RationalMatrix::identity(4)), DimensionMismatch);
}

TEST(TextFormat, RoundTrips) {
  const FormalCharacter chi = blocks().delta_plus - Integer(3) * blocks().lambda[1];
  EXPECT_EQ(parse_text(to_text(chi)), chi);
  EXPECT_EQ(parse_text("", 4), FormalCharacter(4));
  EXPECT_THROW(parse_text("3 (1,2)"), ParseError);
}
