#include <gtest/gtest.h>

#include "liekring/check/properties.hpp"
#include "liekring/int_poly.hpp"
#include "liekring/koszul.hpp"
#include "liekring/kring.hpp"
#include "liekring/smith.hpp"
#include "liekring/tangent.hpp"

using namespace liekring;

namespace {

const IntPoly t = IntPoly::variable();

IntPoly cube_shifted() { return (t - IntPoly(10)) * (t - IntPoly(10)) * (t - IntPoly(10)); }

}  // namespace

TEST(IntPoly, ArithmeticAndPrinting) {
  const IntPoly p = cube_shifted();
  EXPECT_EQ(p.to_string(), "t^3 - 30*t^2 + 300*t - 1000");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.evaluate(10), 0);
  EXPECT_EQ(p.shift(10), t * t * t);
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ((p - p).to_string(), "0");
}

TEST(IntPoly, ContentAndPrimitivePart) {
  const IntPoly p = IntPoly(-6) * t + IntPoly(4);
  EXPECT_EQ(p.content(), 2);
  EXPECT_EQ(p.primitive_part(), IntPoly(3) * t - IntPoly(2));
}

TEST(IntPoly, MonicDivision) {
  const auto [q, r] = divmod_monic(t * t * t + IntPoly(1), t - IntPoly(1));
  EXPECT_EQ(q, t * t + t + IntPoly(1));
  EXPECT_EQ(r, IntPoly(2));
  EXPECT_THROW(divmod_monic(t, IntPoly(2) * t), DomainError);
}

TEST(IntPoly, Gcd) {
  EXPECT_EQ(poly_gcd(IntPoly(2) * (t - IntPoly(1)) * (t + IntPoly(2)), IntPoly(4) * (t - IntPoly(1))),
            IntPoly(2) * (t - IntPoly(1)));
  EXPECT_EQ(poly_gcd(t, IntPoly(2)), IntPoly(1));
  EXPECT_EQ(poly_gcd(IntPoly(), -(t + IntPoly(3))), t + IntPoly(3));
  EXPECT_EQ(divide_exact(cube_shifted(), t - IntPoly(10)), (t - IntPoly(10)) * (t - IntPoly(10)));
  EXPECT_THROW(divide_exact(t + IntPoly(1), IntPoly(2)), InternalConsistencyError);
}

TEST(Smith, InvariantFactors) {
  EXPECT_EQ(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(smith_invariants({{0, 0}, {0, 0}}), std::vector<Integer>{});
  const ZModule m = cokernel({{2, 0}, {0, 3}}, 3);
  EXPECT_EQ(m.free_rank, std::optional<std::size_t>(1));
  EXPECT_EQ(m.torsion, (std::vector<Integer>{6}));
  EXPECT_EQ(m.to_string(), "Z + Z/6");
}

TEST(QuotientStructure, ExactAndTruncated) {
  EXPECT_EQ(quotient_z_structure({cube_shifted()}), (ZModule{3, {}, true}));
  EXPECT_EQ(quotient_z_structure({t, IntPoly(2)}).torsion, (std::vector<Integer>{2}));
  const ZModule z3 = quotient_z_structure({IntPoly(2) * t, IntPoly(2) * t * t + IntPoly(3)});
  EXPECT_EQ(z3.torsion, (std::vector<Integer>{3}));
  EXPECT_EQ(z3.free_rank, std::optional<std::size_t>(0));
  EXPECT_FALSE(z3.exact);
  EXPECT_FALSE(quotient_z_structure({}).free_rank.has_value());
  EXPECT_THROW(quotient_z_structure({IntPoly(2) * t}), InconclusiveError);
}

TEST(Koszul, CubeRelation) {
  const TorPresentation tor = koszul_tor(IntPoly(), cube_shifted());
  EXPECT_EQ(tor.h0.z_structure, (ZModule{3, {}, true}));
  EXPECT_EQ(tor.h1.generators, std::vector<std::string>{"X"});
  EXPECT_EQ(tor.h1.relations, tor.h0.relations);
  EXPECT_TRUE(tor.h2.is_zero());
  EXPECT_EQ(tor.euler_characteristic(), 0);
}

TEST(Koszul, UnitIdealKillsEverything) {
  for (const IntPoly& y : {IntPoly(), t, cube_shifted()}) {
    const TorPresentation tor = koszul_tor(IntPoly(1), y);
    EXPECT_TRUE(tor.h0.is_zero());
    EXPECT_TRUE(tor.h1.is_zero());
    EXPECT_TRUE(tor.h2.is_zero());
  }
}

TEST(Koszul, TwoTorsion) {
  const TorPresentation tor = koszul_tor(t, IntPoly(2));
  EXPECT_EQ(tor.h0.z_structure.torsion, (std::vector<Integer>{2}));
  EXPECT_EQ(tor.h0.z_structure.free_rank, std::optional<std::size_t>(0));
  EXPECT_TRUE(tor.h1.is_zero());
  EXPECT_TRUE(tor.h2.is_zero());
}

TEST(Koszul, BothZero) {
  const TorPresentation tor = koszul_tor(IntPoly(), IntPoly());
  EXPECT_EQ(tor.h0.b_rank, 1u);
  EXPECT_EQ(tor.h1.b_rank, 2u);
  EXPECT_EQ(tor.h2.b_rank, 1u);
  EXPECT_EQ(tor.euler_characteristic(), 0);
}

TEST(Koszul, CommonFactor) {
  const IntPoly g = t - IntPoly(1);
  const TorPresentation tor = koszul_tor(g * t, g * (t + IntPoly(1)));
  EXPECT_EQ(tor.h1.relations, std::vector<IntPoly>{g});
  EXPECT_TRUE(tor.h2.is_zero());
}

TEST(BImages, DerivedImages) {
  const BImages b = derive_b_images();
  EXPECT_EQ(b[Gen::DP], IntPoly(26) - t);
  EXPECT_EQ(b[Gen::DM], IntPoly(26) - t);
  EXPECT_EQ(b[Gen::L2], IntPoly(25) + IntPoly(2) * t);
  EXPECT_EQ(b[Gen::L3], t * t - IntPoly(28) * t + IntPoly(300));
  EXPECT_TRUE(b.xbar.is_zero());
  EXPECT_EQ(b.ybar, cube_shifted());
  EXPECT_EQ(b[Gen::L4].evaluate(10), 210);
  EXPECT_EQ(ybar_from_graded_form(b), b.ybar);
}

TEST(BImages, AugmentationVanishing) {
  const BImages b = derive_b_images();
  EXPECT_EQ(b.xbar.evaluate(10), 0);
  EXPECT_EQ(b.ybar.evaluate(10), 0);
  EXPECT_EQ(b[Gen::L2].evaluate(10), 45);
  EXPECT_EQ(b[Gen::L3].evaluate(10), 120);
  EXPECT_EQ(b[Gen::DP].evaluate(10), 16);
}

TEST(BImages, DerivationFailsWithoutUnitCoefficient) {
  RestrictionFormulas f = restriction_formulas();
  f.alpha = 1 + GenPoly::generator(Gen::L1) + Integer(2) * GenPoly::generator(Gen::DM);
  EXPECT_THROW(derive_b_images(f), DerivationError);
  f = restriction_formulas();
  f.gamma = 1 + GenPoly::generator(Gen::L2) * GenPoly::generator(Gen::L3);
  EXPECT_THROW(derive_b_images(f), DerivationError);
}

TEST(Generation, GeneratorRoundTrip) {
  check::Rng rng(17);
  const Verdict v = check::property_generator_round_trip(rng);
  EXPECT_TRUE(v.holds) << v.witness;
}

TEST(KRing, Presentation) {
  const BImages b = derive_b_images();
  const KRingPresentation k = kring_presentation(koszul_tor(b.xbar, b.ybar));
  EXPECT_TRUE(k.relation_is_u_cubed);
  EXPECT_EQ(k.relation_in_u.content(), 1);
  EXPECT_EQ(k.relation_in_u.degree(), 3);
  EXPECT_EQ(k.relation_in_u.leading(), 1);
  EXPECT_TRUE(k.k1_free_rank_one);
  EXPECT_EQ(k.k0_text, "K0 = Z[u]/(u^3), u = lambda1 - 10");
  EXPECT_EQ(k.k0_additive, (ZModule{3, {}, true}));
}

TEST(KRing, OtherRelationIsReportedAsSuch) {
  const KRingPresentation k = kring_presentation(koszul_tor(IntPoly(), t * t));
  EXPECT_FALSE(k.relation_is_u_cubed);
}

TEST(Tangent, ReportDerivesClass) {
  const TangentReport rep = verify_tangent_class();
  for (const Verdict& f : rep.facts) EXPECT_TRUE(f.holds) << f.claim_id << ": " << f.witness;
  EXPECT_TRUE(rep.conclusion.holds);
  EXPECT_EQ(rep.tau, (KOCombination{53, -2, 0}));
  EXPECT_EQ(rep.tau.to_string(), "53 - 2 lambda1_R");
  EXPECT_EQ(rep.r_alpha.rank(), 54);
  EXPECT_EQ(rep.dim_m, 33);
  EXPECT_EQ(rep.tau.rank(), 33);
  EXPECT_EQ(rep.immersion_dimension, 53);
  EXPECT_EQ(rep.nonimmersion_dimension, 40);
  EXPECT_EQ(rep.citation_note, "relies on cited external theorems");
}
