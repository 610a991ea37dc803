#include <gtest/gtest.h>

#include "liekring/branching.hpp"
#include "liekring/check/oracles.hpp"
#include "liekring/check/properties.hpp"
#include "liekring/decompose.hpp"
#include "liekring/freudenthal.hpp"
#include "liekring/spin10.hpp"

using namespace liekring;

namespace {

const RootSystem& e6() { return root_system(RootKind::E6); }
const RootSystem& d5() { return root_system(RootKind::D5); }

IrrDecomposition fundamentals(const RootSystem& rs, std::initializer_list<std::size_t> idx) {
  IrrDecomposition d{rs.kind(), {}};
  for (std::size_t i : idx) d.terms[rs.fundamental(i)] += 1;
  return d;
}

}  // namespace

TEST(Freudenthal, AdjointOfE6HasZeroWeightMultiplicitySix) {
  const FormalCharacter& adj = e6_fundamental_character(5);
  EXPECT_EQ(adj.dimension(), 78);
  EXPECT_EQ(adj.multiplicity(WeightVector::zero(8)), 6);
}

TEST(Freudenthal, StandardOfD5) {
  const FormalCharacter chi = irreducible_character(d5(), d5().fundamental(1));
  EXPECT_EQ(chi.size(), 10u);
  for (const auto& [w, m] : chi.terms()) EXPECT_EQ(m, 1);
}

TEST(Freudenthal, LargestFundamentalOfE6) {
  EXPECT_EQ(e6_fundamental_character(4).dimension(), 2925);
}

TEST(Freudenthal, DimensionsMatchWeylFormula) {
  for (std::size_t i = 1; i <= 6; ++i) {
    EXPECT_EQ(e6_fundamental_character(i).dimension(),
              weyl_dimension(e6(), DominantWeight(e6(), e6().fundamental(i))));
  }
}

TEST(Freudenthal, D5AgreesWithDirectConstructions) {
  const Verdict v = check::property_freudenthal_oracle();
  EXPECT_TRUE(v.holds) << v.witness;
}

TEST(Freudenthal, E8IrreduciblesAreOutOfScope) {
  const RootSystem& e8 = root_system(RootKind::E8);
  EXPECT_THROW(irreducible_character(e8, e8.fundamental(1)), UnsupportedScaleError);
}

TEST(AdjointE8, Shape) {
  const FormalCharacter adj = adjoint_character_e8();
  EXPECT_EQ(adj.dimension(), 248);
  EXPECT_EQ(adj.multiplicity(WeightVector::zero(8)), 8);
  EXPECT_EQ(adj.multiplicity(WeightVector({1, 1, 0, 0, 0, 0, 0, 0})), 1);
}

TEST(Decompose, SecondExteriorPowerOfVarpi1) {
  EXPECT_EQ(decompose(e6(), exterior_power(2, e6_fundamental_character(1))), fundamentals(e6(), {2}));
}

TEST(Decompose, SecondExteriorPowerOfVarpi6) {
  EXPECT_EQ(decompose(e6(), exterior_power(2, e6_fundamental_character(6))), fundamentals(e6(), {3}));
}

TEST(Decompose, SecondExteriorPowerOfAdjoint) {
  EXPECT_EQ(decompose(e6(), exterior_power(2, e6_fundamental_character(5))), fundamentals(e6(), {4, 5}));
}

TEST(Decompose, ThirdExteriorPowers) {
  EXPECT_EQ(decompose(e6(), exterior_power(3, e6_fundamental_character(1))), fundamentals(e6(), {4}));
  EXPECT_EQ(decompose(e6(), exterior_power(3, e6_fundamental_character(6))), fundamentals(e6(), {4}));
}

TEST(Decompose, IrreducibleRoundTrip) {
  IrreducibleCache cache(d5());
  for (const auto& w : check::d5_weight_pool()) {
    IrrDecomposition one{RootKind::D5, {}};
    one.terms[w] = 1;
    EXPECT_EQ(decompose(d5(), cache.get(w), cache), one) << w.to_string();
  }
}

TEST(Decompose, VirtualCharacters) {
  const auto& b = spin10_blocks();
  const IrrDecomposition d = decompose(d5(), b.delta_plus - Integer(2) * b.lambda[1]);
  EXPECT_EQ(d.multiplicity(delta_plus_weight()), 1);
  EXPECT_EQ(d.multiplicity(lambda_weight(1)), -2);
  EXPECT_EQ(d.terms.size(), 2u);
}

TEST(Decompose, RandomCombinationsRoundTrip) {
  check::Rng rng(3);
  IrreducibleCache cache(d5());
  const Verdict v = check::property_decompose(rng, cache);
  EXPECT_TRUE(v.holds) << v.witness;
}

TEST(Decompose, RejectsNonInvariantInput) {
  EXPECT_THROW(decompose(d5(), FormalCharacter::monomial(WeightVector::unit(5, 0))), InvarianceError);
}

TEST(Spin10Identity, HoldsWithDimensionBookkeeping) {
  const Spin10IdentityResult r = verify_spin10_identity();
  EXPECT_TRUE(r.verdict.holds) << r.verdict.witness;
  EXPECT_TRUE(r.difference.empty());
  EXPECT_EQ(r.lhs.dimension(), 1200);
  EXPECT_EQ(exterior_power(2, spin10_blocks().lambda[2]).dimension(), 990);
  EXPECT_EQ(r.lhs.multiplicity(WeightVector::zero(5)), 40);
}

TEST(WeightTypeTable, RowsMatch) {
  const std::vector<WeightTypeRow> expected = {{"+-xi+-xj+-xk+-xl", 80, 3, 1, 4},
                                               {"+-2xi+-xj+-xk", 240, 1, 0, 1},
                                               {"+-xi+-xj", 40, 11, 3, 14},
                                               {"+-2xi", 10, 4, 0, 4},
                                               {"0", 1, 30, 10, 40}};
  EXPECT_EQ(weight_type_rows(), expected);
}

TEST(WeightTypeTable, ClassificationRejectsOtherTypes) {
  EXPECT_THROW(classify_weight_type(WeightVector({3, 0, 0, 0, 0})), InternalConsistencyError);
}

TEST(Clifford, RelationHolds) {
  const Verdict v = verify_clifford_relation();
  EXPECT_TRUE(v.holds) << v.witness;
  EXPECT_EQ(Integer(16) * 16, 1 + 45 + 210);
}

TEST(WeylInvariance, AllConstructedIrreducibles) {
  IrreducibleCache cache(d5());
  const Verdict v = check::property_weyl_invariance(cache);
  EXPECT_TRUE(v.holds) << v.witness;
}

TEST(WeylInvariance, DetectsBrokenSymmetry) {
  FormalCharacter chi = spin10_blocks().lambda[1];
  chi.add(WeightVector::unit(5, 0), 1);
  EXPECT_FALSE(is_weyl_invariant(d5(), chi));
}

TEST(Properties, DimensionIsMultiplicative) {
  check::Rng rng(5);
  IrreducibleCache cache(d5());
  const Verdict v = check::property_dimension(rng, cache);
  EXPECT_TRUE(v.holds) << v.witness;
}

TEST(Properties, AdamsIsMultiplicative) {
  check::Rng rng(9);
  const Verdict v = check::property_adams(rng);
  EXPECT_TRUE(v.holds) << v.witness;
}
