#include <gtest/gtest.h>

#include "liekring/branching.hpp"
#include "liekring/check/properties.hpp"

using namespace liekring;

namespace {

const Spin10Blocks& blocks() { return spin10_blocks(); }

IrreducibleCache& d5_cache() {
  static IrreducibleCache cache(root_system(RootKind::D5));
  return cache;
}

}  // namespace

TEST(Restriction, TrivialStaysTrivial) {
  EXPECT_EQ(restrict_e8(FormalCharacter::trivial(8)), FormalCharacter::trivial(6));
  EXPECT_EQ(restrict_e6(FormalCharacter::trivial(8)), FormalCharacter::trivial(6));
}

TEST(Restriction, ProductOfAllCoordinates) {
  const FormalCharacter u = FormalCharacter::monomial(WeightVector::scaled({1, 1, 1, 1, 1, 1, 1, 1}, 2));
  EXPECT_EQ(restrict_e8(u), with_xi(FormalCharacter::monomial(WeightVector::scaled({1, 1, 1, 1, 1}, 2)), 3));
}

TEST(Restriction, E6MapRejectsNonE6Weights) {
  EXPECT_THROW(restrict_e6(FormalCharacter::monomial(WeightVector::unit(8, 5))), DomainError);
  EXPECT_THROW(restrict_e6(FormalCharacter::trivial(5)), DimensionMismatch);
}

TEST(Restriction, Delta8Plus) {
  const Verdict v = verify_delta8_restriction();
  EXPECT_TRUE(v.holds) << v.witness;
}

TEST(Restriction, MinusculeRepresentations) {
  for (const Verdict& v : verify_minuscule_restrictions()) EXPECT_TRUE(v.holds) << v.claim_id << ": " << v.witness;
}

TEST(Restriction, DecomposedVarpi1) {
  const Spin10S1Decomposition d = decompose_over_spin10_s1(restrict_e6(e6_fundamental_character(1)), d5_cache());
  Spin10S1Decomposition expected;
  expected.terms[{-2, lambda_weight(1)}] = 1;
  expected.terms[{1, delta_minus_weight()}] = 1;
  expected.terms[{4, WeightVector::zero(5)}] = 1;
  EXPECT_EQ(d, expected);
}

TEST(Restriction, DecomposedAdjointOfE6) {
  const Spin10S1Decomposition d = decompose_over_spin10_s1(restrict_e6(e6_fundamental_character(5)), d5_cache());
  Spin10S1Decomposition expected;
  expected.terms[{0, WeightVector::zero(5)}] = 1;
  expected.terms[{0, lambda_weight(2)}] = 1;
  expected.terms[{3, delta_plus_weight()}] = 1;
  expected.terms[{-3, delta_minus_weight()}] = 1;
  EXPECT_EQ(d, expected);
  EXPECT_TRUE(verify_adjoint_e6_restriction().holds);
}

TEST(Restriction, AdjointOfE8TermByTerm) {
  const Verdict v = verify_e8_adjoint_restriction();
  EXPECT_TRUE(v.holds) << v.witness;
  const Spin10S1Decomposition d = decompose_over_spin10_s1(restrict_e8(adjoint_character_e8()), d5_cache());
  EXPECT_EQ(d, expected_e8_adjoint_constituents());
  EXPECT_EQ(d.multiplicity(0, WeightVector::zero(5)), 9);
  EXPECT_EQ(d.multiplicity(4, WeightVector::zero(5)), 3);
}

TEST(Restriction, AdjointOfE8OverE6) {
  const Verdict v = verify_e8_to_e6();
  EXPECT_TRUE(v.holds) << v.witness;
}

TEST(CenterCongruence, HoldsOnE6Representations) {
  EXPECT_TRUE(verify_center_congruence().holds);
  EXPECT_TRUE(satisfies_center_congruence(restrict_e8(adjoint_character_e8())));
}

TEST(CenterCongruence, FailsOffTheQuotient) {
  EXPECT_FALSE(satisfies_center_congruence(with_xi(blocks().one, 1)));
  EXPECT_FALSE(satisfies_center_congruence(with_xi(blocks().lambda[1], 0)));
  EXPECT_TRUE(satisfies_center_congruence(with_xi(blocks().lambda[1], 2)));
  EXPECT_TRUE(satisfies_center_congruence(with_xi(blocks().delta_minus, 1)));
}

TEST(XiSlices, SplitAndRejoin) {
  const FormalCharacter v = restrict_e6(e6_fundamental_character(1));
  FormalCharacter back(6);
  for (const auto& [d, slice] : xi_slices(v)) back += with_xi(slice, d);
  EXPECT_EQ(back, v);
  EXPECT_EQ(xi_histogram(v), (std::map<long long, Integer>{{-2, 10}, {1, 16}, {4, 1}}));
}

TEST(RestrictionFormulas, AllSixFormulasHold) {
  for (const Verdict& v : verify_restriction_formulas()) EXPECT_TRUE(v.holds) << v.claim_id << ": " << v.witness;
}

TEST(RestrictionFormulas, HalfSpinOrientationOfAlphaAndBeta) {
  const RestrictedGenerators r = restricted_generators();
  const auto& b = blocks();
  EXPECT_EQ(r.alpha, b.one + b.lambda[1] + b.delta_minus);
  EXPECT_EQ(r.beta, b.one + b.lambda[1] + b.delta_plus);
  EXPECT_NE(r.alpha, b.one + b.lambda[1] + b.delta_plus);
  EXPECT_EQ(r.alpha - (b.one + b.lambda[1] + b.delta_plus), b.delta_minus - b.delta_plus);
  EXPECT_EQ(r.alpha.dimension(), 27);
}

TEST(RestrictionFormulas, DimensionBookkeeping) {
  const RestrictedGenerators r = restricted_generators();
  EXPECT_EQ(r.lambda2_alpha.dimension(), 45 + 120 + 160 + 10 + 16);
  EXPECT_EQ(r.lambda2_gamma.dimension(), 1 + 90 + 46 * 32 + 240 + 1200);
  EXPECT_EQ(r.lambda2_gamma.dimension(), binomial(78, 2));
}

TEST(RestrictionFormulas, FormulasEvaluateToRestrictions) {
  const RestrictionFormulas f = restriction_formulas();
  EXPECT_EQ(evaluate_on_spin10(f.gamma), restricted_generators().gamma);
  EXPECT_EQ(f.alpha.swap_half_spins(), f.beta);
  EXPECT_EQ(f.lambda2_alpha.swap_half_spins(), f.lambda2_beta);
  EXPECT_EQ(f.alpha.to_string(), "1 + lambda1 + Delta-");
}

TEST(GradedForms, ExteriorSquares) {
  for (const Verdict& v : verify_graded_exterior_squares()) EXPECT_TRUE(v.holds) << v.claim_id << ": " << v.witness;
}

TEST(GradedForms, HistogramOfLambda2Alpha) {
  const auto h = xi_histogram(exterior_power(2, restrict_e6(e6_fundamental_character(1))));
  EXPECT_EQ(h, (std::map<long long, Integer>{{-4, 45}, {-1, 160}, {2, 120 + 10}, {5, 16}}));
}

TEST(LambdaRing, RestrictionCommutesWithOperations) {
  EXPECT_TRUE(verify_lambda_ring_crosscheck().holds);
  const Verdict v = check::property_restriction_homomorphism();
  EXPECT_TRUE(v.holds) << v.witness;
}
