#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liekring/character.hpp"
#include "liekring/decompose.hpp"
#include "liekring/errors.hpp"
#include "liekring/freudenthal.hpp"
#include "liekring/rep_poly.hpp"
#include "liekring/root_system.hpp"
#include "liekring/spin10.hpp"
#include "liekring/verdict.hpp"

namespace liekring {

enum class RestrictionName {
  /// E8 torus (8 coordinates) to the torus of Spin(10) x S^1: (c1..c5, 2(c6+c7+c8)).
  E8ToSpin10S1,
  /// The same linear map on E6 weights, which must satisfy c6 = c7 = c8.
  E6ToSpin10S1,
  /// Forgets the circle coordinate xi.
  Spin10S1ToSpin10,
};

struct RestrictionMap {
  RestrictionName name;
  RationalMatrix matrix;
  bool requires_e6_weights = false;
};

inline RestrictionMap restriction_map(RestrictionName name) {
  if (name == RestrictionName::Spin10S1ToSpin10) {
    RationalMatrix m(5, 6);
    for (std::size_t i = 0; i < 5; ++i) m.at(i, i) = 1;
    return {name, m, false};
  }
  RationalMatrix m(6, 8);
  for (std::size_t i = 0; i < 5; ++i) m.at(i, i) = 1;
  for (std::size_t j = 5; j < 8; ++j) m.at(5, j) = 2;
  return {name, m, name == RestrictionName::E6ToSpin10S1};
}

inline FormalCharacter restrict_character(const FormalCharacter& chi, const RestrictionMap& map) {
  if (chi.ambient_dim() != map.matrix.cols()) {
    throw DimensionMismatch("restriction expects " + std::to_string(map.matrix.cols()) + " coordinates, got " +
                            std::to_string(chi.ambient_dim()));
  }
  if (map.requires_e6_weights) {
    for (const auto& [w, m] : chi.terms()) {
      if (w[5] != w[6] || w[6] != w[7]) throw DomainError("weight " + w.to_string() + " is not an E6 weight");
    }
  }
  return project(chi, map.matrix);
}

/// E6 character -> Spin(10) x S^1 character with xi as sixth coordinate.
inline FormalCharacter restrict_e6(const FormalCharacter& chi) {
  return restrict_character(chi, restriction_map(RestrictionName::E6ToSpin10S1));
}

inline FormalCharacter restrict_e8(const FormalCharacter& chi) {
  return restrict_character(chi, restriction_map(RestrictionName::E8ToSpin10S1));
}

inline FormalCharacter forget_xi(const FormalCharacter& chi) {
  return restrict_character(chi, restriction_map(RestrictionName::Spin10S1ToSpin10));
}

/// chi (x) xi^d for a Spin(10) character chi.
inline FormalCharacter with_xi(const FormalCharacter& chi, long long d) {
  if (chi.ambient_dim() != 5) throw DimensionMismatch("with_xi expects a Spin(10) character");
  FormalCharacter out(6);
  for (const auto& [w, m] : chi.terms()) {
    std::vector<Rational> c = w.coords();
    c.push_back(Rational(d));
    out.add(WeightVector(c), m);
  }
  return out;
}

/// Splits a Spin(10) x S^1 character by xi-degree.
inline std::map<long long, FormalCharacter> xi_slices(const FormalCharacter& chi) {
  if (chi.ambient_dim() != 6) throw DimensionMismatch("xi_slices expects a Spin(10) x S^1 character");
  std::map<long long, FormalCharacter> out;
  for (const auto& [w, m] : chi.terms()) {
    const Rational d = w[5];
    if (!is_integral(d)) throw DomainError("fractional xi-degree in " + w.to_string());
    std::vector<Rational> c = w.coords();
    c.pop_back();
    auto it = out.try_emplace(static_cast<long long>(numerator(d)), FormalCharacter(5)).first;
    it->second.add(WeightVector(c), m);
  }
  return out;
}

/// xi-degree -> dimension.
inline std::map<long long, Integer> xi_histogram(const FormalCharacter& chi) {
  std::map<long long, Integer> h;
  for (const auto& [d, slice] : xi_slices(chi)) h[d] = slice.dimension();
  return h;
}

inline std::string histogram_text(const std::map<long long, Integer>& h) {
  std::string s;
  for (const auto& [d, n] : h) {
    if (!s.empty()) s += ", ";
    s += "xi^" + std::to_string(d) + ": " + n.str();
  }
  return s;
}

/// Irreducible Spin(10) x S^1 constituents keyed by (xi-degree, Spin(10) highest weight).
struct Spin10S1Decomposition {
  std::map<std::pair<long long, WeightVector>, Integer> terms;

  Integer multiplicity(long long d, const WeightVector& lambda) const {
    auto it = terms.find({d, lambda});
    return it == terms.end() ? Integer(0) : it->second;
  }

  friend bool operator==(const Spin10S1Decomposition&, const Spin10S1Decomposition&) = default;

  std::string to_string() const {
    std::string s;
    for (const auto& [key, m] : terms) {
      s += m.str() + " * " + key.second.to_string() + " xi^" + std::to_string(key.first) + "\n";
    }
    return s;
  }
};

inline Spin10S1Decomposition decompose_over_spin10_s1(const FormalCharacter& chi, IrreducibleCache& d5) {
  Spin10S1Decomposition out;
  for (const auto& [d, slice] : xi_slices(chi)) {
    for (const auto& [lambda, m] : decompose(d5.root_system(), slice, d5).terms) out.terms.emplace(std::pair{d, lambda}, m);
  }
  return out;
}

/// A Spin(10) x S^1 weight descends to (Spin(10) x S^1)/Z4 iff 2(c1+...+c5) + d = 0 mod 4.
inline bool satisfies_center_congruence(const FormalCharacter& chi) {
  if (chi.ambient_dim() != 6) throw DimensionMismatch("congruence test expects a Spin(10) x S^1 character");
  for (const auto& [w, m] : chi.terms()) {
    Rational s = w[5];
    for (std::size_t i = 0; i < 5; ++i) s += 2 * w[i];
    if (!is_integral(s)) return false;
    if (numerator(s) % 4 != 0) return false;
  }
  return true;
}

/// Characters of the six fundamental E6 representations, computed once.
inline const std::array<FormalCharacter, 6>& e6_fundamental_characters() {
  static const std::array<FormalCharacter, 6> chars = [] {
    const RootSystem& e6 = root_system(RootKind::E6);
    std::array<FormalCharacter, 6> a{FormalCharacter(8), FormalCharacter(8), FormalCharacter(8),
                                     FormalCharacter(8), FormalCharacter(8), FormalCharacter(8)};
    for (std::size_t i = 1; i <= 6; ++i) a[i - 1] = irreducible_character(e6, e6.fundamental(i));
    return a;
  }();
  return chars;
}

/// chi_{varpi_i} for one-based i.
inline const FormalCharacter& e6_fundamental_character(std::size_t i) { return e6_fundamental_characters().at(i - 1); }

/// The even half-spin representation of Spin(16), 128 weights (+-1/2, ...).
inline FormalCharacter delta8_plus_character() {
  return FormalCharacter::from_weights(8, detail::even_half_spin_weights(8));
}

/// Spin(10) blocks, as Spin(10) x S^1 characters of xi-degree d.
struct GradedBlocks {
  const Spin10Blocks& b = spin10_blocks();
  FormalCharacter one(long long d) const { return with_xi(b.one, d); }
  FormalCharacter l(std::size_t k, long long d) const { return with_xi(b.lambda.at(k), d); }
  FormalCharacter dp(long long d) const { return with_xi(b.delta_plus, d); }
  FormalCharacter dm(long long d) const { return with_xi(b.delta_minus, d); }
};

/// Delta8+ restricted to Spin(10) x S^1 is Delta+ xi^3 + Delta- xi^-3 + 3 Delta+ xi^-1 + 3 Delta- xi.
inline Verdict verify_delta8_restriction() {
  GradedBlocks g;
  const FormalCharacter expected =
      g.dp(3) + g.dm(-3) + Integer(3) * g.dp(-1) + Integer(3) * g.dm(1);
  return compare_characters("delta8-restriction", restrict_e8(delta8_plus_character()), expected);
}

/// V = lambda1 xi^-2 + Delta- xi + xi^4 and its conjugate V'.
inline std::vector<Verdict> verify_minuscule_restrictions() {
  GradedBlocks g;
  return {
      compare_characters("eq-3.4-V", restrict_e6(e6_fundamental_character(1)), g.l(1, -2) + g.dm(1) + g.one(4)),
      compare_characters("eq-3.4-Vprime", restrict_e6(e6_fundamental_character(6)), g.l(1, 2) + g.dp(-1) + g.one(-4)),
  };
}

/// Adjoint of E6 restricted: 1 + lambda2 + Delta+ xi^3 + Delta- xi^-3.
inline Verdict verify_adjoint_e6_restriction() {
  GradedBlocks g;
  return compare_characters("eq-4.2", restrict_e6(e6_fundamental_character(5)),
                            g.one(0) + g.l(2, 0) + g.dp(3) + g.dm(-3));
}

/// The expected Spin(10) x S^1 constituents of the restricted E8 adjoint.
inline Spin10S1Decomposition expected_e8_adjoint_constituents() {
  Spin10S1Decomposition e;
  const WeightVector zero = WeightVector::zero(5);
  auto put = [&](long long d, const WeightVector& w, long long m) { e.terms[{d, w}] += m; };
  put(0, zero, 1 + 8);
  put(0, lambda_weight(2), 1);
  put(3, delta_plus_weight(), 1);
  put(-3, delta_minus_weight(), 1);
  put(-2, lambda_weight(1), 3);
  put(1, delta_minus_weight(), 3);
  put(4, zero, 3);
  put(2, lambda_weight(1), 3);
  put(-1, delta_plus_weight(), 3);
  put(-4, zero, 3);
  return e;
}

/// e8 = (1 + lambda2) + Delta+ xi^3 + Delta- xi^-3 + 8 + 3(V + V'), checked as characters
/// and constituent by constituent.
inline Verdict verify_e8_adjoint_restriction() {
  GradedBlocks g;
  const FormalCharacter v = g.l(1, -2) + g.dm(1) + g.one(4);
  const FormalCharacter vp = g.l(1, 2) + g.dp(-1) + g.one(-4);
  const FormalCharacter expected =
      g.one(0) + g.l(2, 0) + g.dp(3) + g.dm(-3) + Integer(8) * g.one(0) + Integer(3) * (v + vp);
  const FormalCharacter restricted = restrict_e8(adjoint_character_e8());
  Verdict verdict = compare_characters("eq-3.5", restricted, expected);
  if (verdict.holds) {
    IrreducibleCache d5(root_system(RootKind::D5));
    const Spin10S1Decomposition got = decompose_over_spin10_s1(restricted, d5);
    if (got != expected_e8_adjoint_constituents()) {
      verdict.holds = false;
      verdict.witness = "constituents differ:\n" + got.to_string();
    } else {
      verdict.witness += "; " + std::to_string(got.terms.size()) + " distinct constituents";
    }
  }
  return verdict;
}

/// e8 restricted to E6 is e6 + 3(V + V') + 8 (orthogonal projection onto the E6 span).
inline Verdict verify_e8_to_e6() {
  RationalMatrix p(8, 8);
  for (std::size_t i = 0; i < 5; ++i) p.at(i, i) = 1;
  for (std::size_t i = 5; i < 8; ++i) {
    for (std::size_t j = 5; j < 8; ++j) p.at(i, j) = frac(1, 3);
  }
  const RootSystem& e6 = root_system(RootKind::E6);
  const IrrDecomposition got = decompose(e6, project(adjoint_character_e8(), p));
  IrrDecomposition expected{RootKind::E6, {}};
  expected.terms[e6.fundamental(5)] = 1;
  expected.terms[e6.fundamental(1)] = 3;
  expected.terms[e6.fundamental(6)] = 3;
  expected.terms[WeightVector::zero(8)] = 8;
  Verdict v;
  v.claim_id = "eq-3.6";
  v.holds = got == expected;
  v.witness = v.holds ? "varpi5 + 3 varpi1 + 3 varpi6 + 8 trivial" : "got " + got.to_string();
  v.detail = got.to_string();
  return v;
}

/// Every fundamental E6 representation restricts to weights obeying the centre congruence.
inline Verdict verify_center_congruence() {
  Verdict v;
  v.claim_id = "center-congruence";
  v.holds = true;
  for (std::size_t i = 1; i <= 6; ++i) {
    if (!satisfies_center_congruence(restrict_e6(e6_fundamental_character(i)))) {
      v.holds = false;
      v.witness += "varpi" + std::to_string(i) + " violates 2(c1+...+c5) + d = 0 mod 4; ";
    }
  }
  if (v.holds) v.witness = "all six fundamental restrictions satisfy 2(c1+...+c5) + d = 0 mod 4";
  return v;
}

/// Generator values in R Spin(10) as characters.
inline std::array<FormalCharacter, kGenCount> spin10_generator_characters() {
  const auto& b = spin10_blocks();
  return {b.lambda[1], b.lambda[2], b.lambda[3], b.lambda[4], b.delta_plus, b.delta_minus};
}

inline FormalCharacter evaluate_on_spin10(const GenPoly& p) {
  const auto& one = spin10_blocks().one;
  return p.evaluate(spin10_generator_characters(), [&](const Integer& c) { return c * one; });
}

/// Restricted characters of alpha, beta, gamma and their second exterior powers over Spin(10).
struct RestrictedGenerators {
  FormalCharacter alpha{5}, beta{5}, gamma{5};
  FormalCharacter lambda2_alpha{5}, lambda2_beta{5}, lambda2_gamma{5};
};

inline RestrictedGenerators restricted_generators() {
  RestrictedGenerators r;
  r.alpha = forget_xi(restrict_e6(e6_fundamental_character(1)));
  r.beta = forget_xi(restrict_e6(e6_fundamental_character(6)));
  r.gamma = forget_xi(restrict_e6(e6_fundamental_character(5)));
  r.lambda2_alpha = exterior_power(2, r.alpha);
  r.lambda2_beta = exterior_power(2, r.beta);
  r.lambda2_gamma = exterior_power(2, r.gamma);
  return r;
}

/// The six restriction formulas, each compared with the computed character.
/// For alpha and beta the witness also records how the variant with the two
/// half-spin representations exchanged fares.
inline std::vector<Verdict> verify_restriction_formulas() {
  const RestrictionFormulas f = restriction_formulas();
  const RestrictedGenerators r = restricted_generators();
  std::vector<Verdict> out = {
      compare_characters("prop-4.2-i", r.alpha, evaluate_on_spin10(f.alpha)),
      compare_characters("prop-4.2-ii", r.beta, evaluate_on_spin10(f.beta)),
      compare_characters("prop-4.2-iii", r.gamma, evaluate_on_spin10(f.gamma)),
      compare_characters("prop-4.2-iv", r.lambda2_alpha, evaluate_on_spin10(f.lambda2_alpha)),
      compare_characters("prop-4.2-v", r.lambda2_beta, evaluate_on_spin10(f.lambda2_beta)),
      compare_characters("prop-4.2-vi", r.lambda2_gamma, evaluate_on_spin10(f.lambda2_gamma)),
  };
  const std::array<std::pair<const GenPoly*, const FormalCharacter*>, 2> swapped = {
      std::pair{&f.alpha, &r.alpha}, std::pair{&f.beta, &r.beta}};
  for (std::size_t i = 0; i < 2; ++i) {
    const GenPoly variant = swapped[i].first->swap_half_spins();
    const bool variant_holds = evaluate_on_spin10(variant) == *swapped[i].second;
    out[i].witness += "; formula " + swapped[i].first->to_string() + " holds, variant " + variant.to_string() +
                      (variant_holds ? " also holds" : " fails (off by Delta+ - Delta-)");
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const GenPoly* poly[] = {&f.alpha, &f.beta, &f.gamma, &f.lambda2_alpha, &f.lambda2_beta, &f.lambda2_gamma};
    if (i >= 2) out[i].witness += "; formula " + poly[i]->to_string();
  }
  return out;
}

/// Lambda^2 commutes with restriction: restricting the E6 characters of
/// Lambda^2 alpha = varpi2, Lambda^2 beta = varpi3, Lambda^2 gamma = varpi4 + varpi5
/// agrees with Lambda^2 of the restricted characters.
inline Verdict verify_lambda_ring_crosscheck() {
  const FormalCharacter a = restrict_e6(e6_fundamental_character(1));
  const FormalCharacter b = restrict_e6(e6_fundamental_character(6));
  const FormalCharacter g = restrict_e6(e6_fundamental_character(5));
  Verdict v;
  v.claim_id = "lambda-ring-crosscheck";
  const bool ok2 = restrict_e6(e6_fundamental_character(2)) == exterior_power(2, a);
  const bool ok3 = restrict_e6(e6_fundamental_character(3)) == exterior_power(2, b);
  const bool ok45 =
      restrict_e6(e6_fundamental_character(4) + e6_fundamental_character(5)) == exterior_power(2, g);
  v.holds = ok2 && ok3 && ok45;
  v.witness = std::string("varpi2 ") + (ok2 ? "ok" : "MISMATCH") + ", varpi3 " + (ok3 ? "ok" : "MISMATCH") +
              ", varpi4 + varpi5 " + (ok45 ? "ok" : "MISMATCH");
  return v;
}

/// Graded second exterior powers over Spin(10) x S^1.
inline std::vector<Verdict> verify_graded_exterior_squares() {
  GradedBlocks g;
  const auto& b = spin10_blocks();
  const FormalCharacter a = restrict_e6(e6_fundamental_character(1));
  const FormalCharacter bb = restrict_e6(e6_fundamental_character(6));
  const FormalCharacter c = restrict_e6(e6_fundamental_character(5));

  const FormalCharacter la = exterior_power(2, a);
  Verdict v43 = compare_characters(
      "eq-4.3", la, g.l(2, -4) + g.l(3, 2) + with_xi(b.lambda[1] * b.delta_minus, -1) + g.l(1, 2) + g.dm(5));
  v43.witness += "; " + histogram_text(xi_histogram(la));

  const FormalCharacter lb = exterior_power(2, bb);
  Verdict v44 = compare_characters(
      "eq-4.4", lb, g.l(2, 4) + g.l(3, -2) + with_xi(b.lambda[1] * b.delta_plus, 1) + g.l(1, -2) + g.dp(-5));
  v44.witness += "; " + histogram_text(xi_histogram(lb));

  const FormalCharacter lc = exterior_power(2, c);
  const FormalCharacter spin_part = (g.one(0) + g.l(2, 0)) * (g.dp(3) + g.dm(-3));
  Verdict v45 = compare_characters("eq-4.5", lc,
                                   g.l(2, 0) + spin_part + g.l(3, 6) + g.l(3, -6) +
                                       with_xi(exterior_power(2, b.lambda[2]) + b.delta_plus * b.delta_minus, 0));
  v45.witness += "; " + histogram_text(xi_histogram(lc));

  Verdict v47 = compare_characters("eq-4.7", lc,
                                   g.one(0) + Integer(2) * g.l(2, 0) + spin_part + g.l(3, 6) + g.l(3, -6) +
                                       with_xi(b.lambda[1] * b.lambda[3], 0));
  return {v43, v44, v45, v47};
}

}  // namespace liekring
