#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "liekring/branching.hpp"
#include "liekring/character.hpp"
#include "liekring/check/oracles.hpp"
#include "liekring/decompose.hpp"
#include "liekring/freudenthal.hpp"
#include "liekring/kring.hpp"
#include "liekring/rep_poly.hpp"
#include "liekring/root_system.hpp"
#include "liekring/spin10.hpp"
#include "liekring/verdict.hpp"

namespace liekring::check {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Random character on 3 coordinates with entries in {-1, -1/2, 0, 1/2, 1}.
/// Effective ones have total dimension at most max_dim.
inline FormalCharacter random_character(Rng& rng, bool effective, long long max_dim = 30) {
  FormalCharacter chi(3);
  const long long terms = uniform(rng, 1, 6);
  long long budget = max_dim;
  for (long long t = 0; t < terms && budget > 0; ++t) {
    const WeightVector w =
        WeightVector::scaled({uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)}, 2);
    long long m = uniform(rng, 1, std::min<long long>(budget, 5));
    budget -= m;
    if (!effective && uniform(rng, 0, 2) == 0) m = -m;
    chi.add(w, m);
  }
  if (chi.empty()) chi.add(WeightVector::zero(3), 1);
  return chi;
}

/// Small dominant weights of D5 used by the randomized checks.
inline const std::vector<WeightVector>& d5_weight_pool() {
  static const std::vector<WeightVector> pool = [] {
    const RootSystem& d5 = root_system(RootKind::D5);
    const auto& p = d5.fundamental_weights();
    return std::vector<WeightVector>{WeightVector::zero(5), p[0], p[1], p[2], p[3], p[4],
                                     p[0] + p[0], p[0] + p[3], p[0] + p[4], p[3] + p[4],
                                     p[3] + p[3], p[4] + p[4], p[0] + p[1]};
  }();
  return pool;
}

inline Verdict summarize(std::string id, std::size_t cases, std::size_t failures, const std::string& first_failure) {
  Verdict v;
  v.claim_id = std::move(id);
  v.holds = failures == 0;
  v.witness = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
  if (!v.holds) v.witness += "; first: " + first_failure;
  return v;
}

/// exterior_power agrees with the elementary-symmetric oracle for k <= 3.
inline Verdict property_exterior_power(Rng& rng, std::size_t cases = 100) {
  std::size_t failures = 0;
  std::string first;
  for (std::size_t c = 0; c < cases; ++c) {
    const FormalCharacter chi = random_character(rng, true);
    const unsigned k = static_cast<unsigned>(uniform(rng, 0, 3));
    if (exterior_power(k, chi) != elementary_symmetric_oracle(k, chi)) {
      if (failures++ == 0) first = "k=" + std::to_string(k) + " on\n" + to_text(chi);
    }
  }
  return summarize("property-exterior-power", cases, failures, first);
}

/// psi^k(a b) = psi^k(a) psi^k(b) for k in [1, 6] on virtual characters.
inline Verdict property_adams(Rng& rng, std::size_t cases = 50) {
  std::size_t failures = 0;
  std::string first;
  for (std::size_t c = 0; c < cases; ++c) {
    const FormalCharacter a = random_character(rng, false), b = random_character(rng, false);
    const auto k = static_cast<unsigned>(uniform(rng, 1, 6));
    if (adams(k, a * b) != adams(k, a) * adams(k, b) && failures++ == 0) first = "k=" + std::to_string(k);
  }
  return summarize("property-adams", cases, failures, first);
}

/// dim(a b) = dim a * dim b on pairs of D5 irreducibles; also the Weyl
/// dimension formula against the character.
inline Verdict property_dimension(Rng& rng, IrreducibleCache& d5, std::size_t cases = 100) {
  const auto& pool = d5_weight_pool();
  std::size_t failures = 0;
  std::string first;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto& la = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(pool.size()) - 1))];
    const auto& lb = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(pool.size()) - 1))];
    const FormalCharacter& a = d5.get(la);
    const FormalCharacter& b = d5.get(lb);
    const RootSystem& rs = d5.root_system();
    const bool ok = (a * b).dimension() == a.dimension() * b.dimension() &&
                    a.dimension() == weyl_dimension(rs, DominantWeight(rs, la));
    if (!ok && failures++ == 0) first = la.to_string() + " x " + lb.to_string();
  }
  return summarize("property-dimension", cases, failures, first);
}

/// Every irreducible character built here is Weyl invariant.
inline Verdict property_weyl_invariance(IrreducibleCache& d5) {
  std::size_t cases = 0, failures = 0;
  std::string first;
  const RootSystem& e6 = root_system(RootKind::E6);
  for (std::size_t i = 1; i <= 6; ++i) {
    ++cases;
    if (!is_weyl_invariant(e6, e6_fundamental_character(i)) && failures++ == 0) first = "E6 varpi" + std::to_string(i);
  }
  for (const auto& w : d5_weight_pool()) {
    ++cases;
    if (!is_weyl_invariant(d5.root_system(), d5.get(w)) && failures++ == 0) first = "D5 " + w.to_string();
  }
  for (const auto& chi : spin10_blocks().lambda) {
    ++cases;
    if (!is_weyl_invariant(d5.root_system(), chi) && failures++ == 0) first = "exterior power of C^10";
  }
  ++cases;
  if (!is_weyl_invariant(root_system(RootKind::E8), adjoint_character_e8()) && failures++ == 0) first = "E8 adjoint";
  return summarize("property-weyl-invariance", cases, failures, first);
}

/// decompose(sum m_i chi_{lambda_i}) recovers the combination (at most 3 summands, m_i <= 3).
inline Verdict property_decompose(Rng& rng, IrreducibleCache& d5, std::size_t cases = 50) {
  const auto& pool = d5_weight_pool();
  std::size_t failures = 0;
  std::string first;
  for (std::size_t c = 0; c < cases; ++c) {
    IrrDecomposition combo{RootKind::D5, {}};
    const long long summands = uniform(rng, 1, 3);
    for (long long s = 0; s < summands; ++s) {
      const auto& w = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(pool.size()) - 1))];
      combo.terms[w] += uniform(rng, 1, 3);
    }
    if (decompose(d5.root_system(), reconstruct(combo, d5), d5) != combo && failures++ == 0) first = combo.to_string();
  }
  return summarize("property-decompose", cases, failures, first);
}

/// Freudenthal characters of D5 against direct constructions: Lambda^k(C^10) by
/// subsets, the half-spin representations by sign vectors.
inline Verdict property_freudenthal_oracle() {
  const RootSystem& d5 = root_system(RootKind::D5);
  const auto& p = d5.fundamental_weights();
  std::size_t failures = 0;
  std::string first;
  const std::vector<std::pair<std::string, bool>> checks = {
      {"Lambda^1", irreducible_character(d5, p[0]) == lambda_by_subsets(1)},
      {"Lambda^2", irreducible_character(d5, p[1]) == lambda_by_subsets(2)},
      {"Lambda^3", irreducible_character(d5, p[2]) == lambda_by_subsets(3)},
      {"Lambda^4", irreducible_character(d5, p[3] + p[4]) == lambda_by_subsets(4)},
      {"Lambda^5", irreducible_character(d5, p[3] + p[3]) + irreducible_character(d5, p[4] + p[4]) ==
                       lambda_by_subsets(5)},
      {"Delta+", irreducible_character(d5, delta_plus_weight()) == half_spin_by_signs(true)},
      {"Delta-", irreducible_character(d5, delta_minus_weight()) == half_spin_by_signs(false)},
  };
  for (const auto& [name, ok] : checks) {
    if (!ok && failures++ == 0) first = name;
  }
  return summarize("property-freudenthal-oracle", checks.size(), failures, first);
}

/// Restriction to Spin(10) x S^1 commutes with products and Lambda^2 on alpha, beta, gamma.
inline Verdict property_restriction_homomorphism() {
  const std::array<std::size_t, 3> gens = {1, 6, 5};
  std::size_t cases = 0, failures = 0;
  std::string first;
  for (std::size_t i : gens) {
    const FormalCharacter& chi = e6_fundamental_character(i);
    ++cases;
    if (restrict_e6(exterior_power(2, chi)) != exterior_power(2, restrict_e6(chi)) && failures++ == 0) {
      first = "Lambda^2 varpi" + std::to_string(i);
    }
    for (std::size_t j : gens) {
      if (j < i) continue;
      const FormalCharacter& psi = e6_fundamental_character(j);
      ++cases;
      if (restrict_e6(chi * psi) != restrict_e6(chi) * restrict_e6(psi) && failures++ == 0) {
        first = "varpi" + std::to_string(i) + " x varpi" + std::to_string(j);
      }
    }
  }
  return summarize("property-restriction-homomorphism", cases, failures, first);
}

/// Generator values lambda1, lambda2, lambda3, Delta+, Delta- at random integer
/// points survive evaluating the formulas for alpha, beta, gamma, Lambda^2 alpha
/// and solving back in Z[lambda1].
inline Verdict property_generator_round_trip(Rng& rng, std::size_t cases = 20) {
  const RestrictionFormulas f = restriction_formulas();
  std::size_t failures = 0;
  std::string first;
  for (std::size_t c = 0; c < cases; ++c) {
    std::array<Integer, kGenCount> point;
    for (auto& x : point) x = uniform(rng, -60, 60);
    auto eval = [&](const GenPoly& p) { return IntPoly(p.evaluate(point, [](const Integer& n) { return n; })); };
    const GenAssignment solved = solve_spin10_generators(f, eval(f.alpha), eval(f.beta), eval(f.gamma), eval(f.lambda2_alpha));
    const Integer t = point[static_cast<std::size_t>(Gen::L1)];
    bool ok = true;
    for (Gen g : {Gen::L1, Gen::L2, Gen::L3, Gen::DP, Gen::DM}) {
      ok = ok && solved[static_cast<std::size_t>(g)]->evaluate(t) == point[static_cast<std::size_t>(g)];
    }
    if (!ok && failures++ == 0) first = "lambda1 = " + t.str();
  }
  return summarize("lemma-5.1-generation", cases, failures, first);
}

}  // namespace liekring::check
