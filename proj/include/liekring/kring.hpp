#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liekring/errors.hpp"
#include "liekring/int_poly.hpp"
#include "liekring/koszul.hpp"
#include "liekring/rep_poly.hpp"
#include "liekring/verdict.hpp"

namespace liekring {

/// Partial assignment of generators of R Spin(10) to elements of B = Z[t].
using GenAssignment = std::array<std::optional<IntPoly>, kGenCount>;

namespace detail {

/// Writes p under `known` as a polynomial in the single unknown u: degree -> coefficient.
inline std::map<unsigned, IntPoly> collect_in_unknown(const GenPoly& p, const GenAssignment& known, Gen u) {
  std::map<unsigned, IntPoly> out;
  const auto ui = static_cast<std::size_t>(u);
  for (const auto& [e, c] : p.terms()) {
    IntPoly term(c);
    for (std::size_t i = 0; i < kGenCount; ++i) {
      if (i == ui || e[i] == 0) continue;
      if (!known[i]) throw DerivationError("relation involves two unknowns: " + p.to_string());
      for (unsigned k = 0; k < e[i]; ++k) term = term * *known[i];
    }
    out[e[ui]] += term;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace detail

/// Solves `relation = target` for its one unknown generator. The relation must be
/// linear in it with coefficient +-1.
inline Gen solve_for_unknown(const GenPoly& relation, const IntPoly& target, GenAssignment& known) {
  std::optional<Gen> unknown;
  for (std::size_t i = 0; i < kGenCount; ++i) {
    if (!known[i] && relation.involves(static_cast<Gen>(i))) {
      if (unknown) throw DerivationError("relation has more than one unknown: " + relation.to_string());
      unknown = static_cast<Gen>(i);
    }
  }
  if (!unknown) throw DerivationError("relation has no unknown: " + relation.to_string());
  auto coeffs = detail::collect_in_unknown(relation, known, *unknown);
  if (coeffs.empty() || coeffs.rbegin()->first != 1) {
    throw DerivationError("relation is not linear in " + gen_name(*unknown));
  }
  const IntPoly a1 = coeffs[1];
  const IntPoly a0 = coeffs.count(0) ? coeffs[0] : IntPoly();
  if (a1.degree() != 0 || abs(a1.leading()) != 1) {
    throw DerivationError("coefficient of " + gen_name(*unknown) + " is not a unit");
  }
  IntPoly value = target - a0;
  if (a1.leading() < 0) value = -value;
  known[static_cast<std::size_t>(*unknown)] = value;
  return *unknown;
}

inline IntPoly evaluate_in_b(const GenPoly& p, const GenAssignment& known) {
  std::array<IntPoly, kGenCount> values;
  for (std::size_t i = 0; i < kGenCount; ++i) {
    if (known[i]) values[i] = *known[i];
    else if (p.involves(static_cast<Gen>(i))) throw DerivationError("unassigned generator " + gen_name(static_cast<Gen>(i)));
  }
  return p.evaluate(values, [](const Integer& c) { return IntPoly(c); });
}

/// Given lambda1 = t and the images of alpha, beta, gamma and Lambda^2 alpha,
/// recovers every other generator: half-spin representations, lambda2, lambda3 from
/// the formulas, lambda4 from Delta+ Delta- = 1 + lambda2 + lambda4.
inline GenAssignment solve_spin10_generators(const RestrictionFormulas& f, const IntPoly& alpha, const IntPoly& beta,
                                             const IntPoly& gamma, const IntPoly& lambda2_alpha,
                                             std::vector<std::string>* log = nullptr) {
  GenAssignment known;
  known[static_cast<std::size_t>(Gen::L1)] = IntPoly::variable();
  std::vector<std::pair<const GenPoly*, const IntPoly*>> pending = {
      {&f.alpha, &alpha}, {&f.beta, &beta}, {&f.gamma, &gamma}, {&f.lambda2_alpha, &lambda2_alpha}};
  while (!pending.empty()) {
    bool progressed = false;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      std::size_t unknowns = 0;
      for (std::size_t i = 0; i < kGenCount; ++i) unknowns += !known[i] && it->first->involves(static_cast<Gen>(i));
      if (unknowns != 1) continue;
      const Gen g = solve_for_unknown(*it->first, *it->second, known);
      if (log) {
        log->push_back(it->first->to_string() + " = " + it->second->to_string() + "  =>  " + gen_name(g) +
                       " = " + known[static_cast<std::size_t>(g)]->to_string());
      }
      pending.erase(it);
      progressed = true;
      break;
    }
    if (!progressed) throw DerivationError("no relation with a single unknown remains");
  }
  const auto at = [&](Gen g) { return *known[static_cast<std::size_t>(g)]; };
  known[static_cast<std::size_t>(Gen::L4)] = at(Gen::DP) * at(Gen::DM) - IntPoly(1) - at(Gen::L2);
  if (log) log->push_back("Delta+ Delta- = 1 + lambda2 + lambda4  =>  lambda4 = " + at(Gen::L4).to_string());
  return known;
}

/// Images in B = Z[t] (t = lambda1) of the generators and of the two Koszul elements.
struct BImages {
  std::array<IntPoly, kGenCount> generators;
  IntPoly xbar;
  IntPoly ybar;
  std::vector<std::string> steps;

  const IntPoly& operator[](Gen g) const { return generators[static_cast<std::size_t>(g)]; }
};

/// alpha - 27, beta - 27, gamma - 78, Lambda^2 alpha - 351 map to zero; x = Lambda^2 beta - 351
/// and y = Lambda^2 gamma - 3003 are what remains.
inline BImages derive_b_images(const RestrictionFormulas& f = restriction_formulas()) {
  BImages b;
  const IntPoly d27(27), d78(78), d351(binomial(27, 2)), d3003(binomial(78, 2));
  const GenAssignment known = solve_spin10_generators(f, d27, d27, d78, d351, &b.steps);
  for (std::size_t i = 0; i < kGenCount; ++i) b.generators[i] = *known[i];
  b.xbar = evaluate_in_b(f.lambda2_beta, known) - d351;
  b.ybar = evaluate_in_b(f.lambda2_gamma, known) - d3003;
  b.steps.push_back("xbar = " + b.xbar.to_string());
  b.steps.push_back("ybar = " + b.ybar.to_string());
  return b;
}

/// ybar recomputed from the graded form of Lambda^2 gamma at xi = 1, with
/// Lambda^2(lambda2) = lambda1 lambda3 - lambda4.
inline IntPoly ybar_from_graded_form(const BImages& b) {
  const IntPoly l1 = b[Gen::L1], l2 = b[Gen::L2], l3 = b[Gen::L3], l4 = b[Gen::L4], dp = b[Gen::DP], dm = b[Gen::DM];
  return l2 + (IntPoly(1) + l2) * (dp + dm) + IntPoly(2) * l3 + (l1 * l3 - l4) + dp * dm - IntPoly(binomial(78, 2));
}

/// Presentation of K*(E6/Spin(10)) read off from Tor.
struct KRingPresentation {
  /// The generator of the relation ideal in K^0, rewritten in u = t - 10.
  IntPoly relation_in_u;
  bool relation_is_u_cubed = false;
  bool k1_free_rank_one = false;
  std::string k0_text;
  std::string k1_text;
  ZModule k0_additive;
};

inline KRingPresentation kring_presentation(const TorPresentation& tor) {
  KRingPresentation k;
  k.k0_additive = tor.h0.z_structure;
  if (tor.h0.relations.size() == 1) {
    k.relation_in_u = tor.h0.relations[0].shift(10);
    k.relation_is_u_cubed = k.relation_in_u == IntPoly(std::vector<Integer>{0, 0, 0, 1});
  }
  k.k1_free_rank_one = tor.h1.generators.size() == 1 && tor.h1.relations == tor.h0.relations;
  k.k0_text = k.relation_is_u_cubed ? "K0 = Z[u]/(u^3), u = lambda1 - 10"
                                    : "K0 = " + tor.h0.to_string() + " (t = lambda1)";
  k.k1_text = k.k1_free_rank_one ? "K1 = K0 . " + tor.h1.generators[0] + " (free of rank 1 over K0)"
                                 : "K1 = " + tor.h1.to_string();
  return k;
}

}  // namespace liekring
