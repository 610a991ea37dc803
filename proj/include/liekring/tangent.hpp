#pragma once

#include <map>
#include <string>
#include <vector>

#include "liekring/branching.hpp"
#include "liekring/character.hpp"
#include "liekring/spin10.hpp"
#include "liekring/verdict.hpp"

namespace liekring {

/// Integer combination of the real classes 1, lambda1_R and V = r(Delta+) in RO Spin(10).
struct KOCombination {
  Integer one = 0;
  Integer lambda1_r = 0;
  Integer v = 0;

  friend bool operator==(const KOCombination&, const KOCombination&) = default;
  friend KOCombination operator+(KOCombination a, const KOCombination& b) {
    a.one += b.one;
    a.lambda1_r += b.lambda1_r;
    a.v += b.v;
    return a;
  }
  friend KOCombination operator-(KOCombination a, const KOCombination& b) {
    a.one -= b.one;
    a.lambda1_r -= b.lambda1_r;
    a.v -= b.v;
    return a;
  }

  /// Real dimension: 1, 10 and 32.
  Integer rank() const { return one + 10 * lambda1_r + 32 * v; }

  std::string to_string() const {
    std::string s;
    auto put = [&](const Integer& c, const std::string& name) {
      if (c == 0) return;
      const Integer mag = c < 0 ? Integer(-c) : c;
      std::string piece = name.empty() ? mag.str() : (mag == 1 ? name : mag.str() + " " + name);
      if (s.empty()) s = (c < 0 ? "-" : "") + piece;
      else s += (c < 0 ? " - " : " + ") + piece;
    };
    put(one, "");
    put(lambda1_r, "lambda1_R");
    put(v, "V");
    return s.empty() ? "0" : s;
  }
};

/// Complexification: 1 -> 1, lambda1_R -> lambda1, V -> Delta+ + Delta-.
inline FormalCharacter complexify(const KOCombination& k) {
  const auto& b = spin10_blocks();
  return k.one * b.one + k.lambda1_r * b.lambda[1] + k.v * (b.delta_plus + b.delta_minus);
}

struct TangentReport {
  std::vector<Verdict> facts;
  /// [tau] = [1 + V] from the Lie algebra computation.
  KOCombination tau_before;
  /// The realification of the restricted 27-dimensional representation.
  KOCombination r_alpha;
  /// [tau] after r_alpha is traded for the trivial bundle of its rank.
  KOCombination tau;
  long long dim_m = 0;
  long long immersion_dimension = 53;
  long long nonimmersion_dimension = 40;
  std::string citation_note = "relies on cited external theorems";
  std::vector<std::string> derivation;
  Verdict conclusion;
};

inline TangentReport verify_tangent_class() {
  const auto& b = spin10_blocks();
  TangentReport rep;

  const FormalCharacter gamma = forget_xi(restrict_e6(e6_fundamental_character(5)));
  rep.facts.push_back(compare_characters("prop-5.3-fact-1", gamma, b.one + b.lambda[2] + b.delta_plus + b.delta_minus));

  rep.facts.push_back(compare_characters("prop-5.3-fact-2", conjugate(b.delta_plus), b.delta_minus));

  const FormalCharacter alpha = forget_xi(restrict_e6(e6_fundamental_character(1)));
  const FormalCharacter c_r_alpha = alpha + conjugate(alpha);
  Verdict f3 = compare_characters("prop-5.3-fact-3", c_r_alpha,
                                  Integer(2) * (b.one + b.lambda[1]) + b.delta_plus + b.delta_minus);
  const bool minus_form = alpha == b.one + b.lambda[1] + b.delta_minus;
  f3.witness += std::string("; restriction of alpha is 1 + lambda1 + ") + (minus_form ? "Delta-" : "Delta+") +
                ", and either half-spin realifies to V";
  rep.facts.push_back(f3);

  // Lie(E6) - Lie(Spin(10)) complexifies to gamma - lambda2; lambda2 is real.
  rep.tau_before = KOCombination{1, 0, 1};
  rep.r_alpha = KOCombination{2, 2, 1};
  const bool lie_ok = complexify(rep.tau_before) == gamma - b.lambda[2] && conjugate(b.lambda[2]) == b.lambda[2];
  const bool alpha_ok = complexify(rep.r_alpha) == c_r_alpha;
  // 1, lambda1 and Delta+ + Delta- have disjoint weight supports, so complexification is injective on their span.
  const bool injective = b.lambda[1].multiplicity(WeightVector::zero(5)) == 0 &&
                         (b.delta_plus + b.delta_minus).multiplicity(WeightVector::zero(5)) == 0;

  // r_alpha is the restriction of a representation of E6, hence trivial of rank 54 over M.
  const KOCombination trivial_rank{rep.r_alpha.rank(), 0, 0};
  rep.tau = rep.tau_before - rep.r_alpha + trivial_rank;
  rep.dim_m = 78 - 45;

  rep.derivation = {
      "c(Lie E6 - Lie Spin(10)) = 1 + Delta+ + Delta- = c(1 + V), so [tau] = " + rep.tau_before.to_string(),
      "c(r(alpha')) = " + std::string("2 + 2 lambda1 + Delta+ + Delta- = c(") + rep.r_alpha.to_string() + ")",
      "[" + rep.r_alpha.to_string() + "] = [" + rep.r_alpha.rank().str() + "] in KO(M)",
      "[tau] = " + rep.tau.to_string() + ", rank " + rep.tau.rank().str() + " = dim M = 78 - 45 = " +
          std::to_string(rep.dim_m),
      "tau + 2 lambda1_R = 53 gives an immersion in R^53 (Hirsch); p2(M) != 0 rules out R^40 (" +
          rep.citation_note + ")",
  };

  bool facts_ok = true;
  for (const auto& f : rep.facts) facts_ok = facts_ok && f.holds;
  rep.conclusion.claim_id = "prop-5.3";
  rep.conclusion.holds = facts_ok && lie_ok && alpha_ok && injective && rep.tau == KOCombination{53, -2, 0} &&
                         rep.tau.rank() == rep.dim_m && rep.r_alpha.rank() == 54;
  rep.conclusion.witness = "[tau] = " + rep.tau.to_string() + " in KO(E6/Spin(10)), rank " + rep.tau.rank().str();
  for (const auto& line : rep.derivation) rep.conclusion.detail += line + "\n";
  return rep;
}

}  // namespace liekring
