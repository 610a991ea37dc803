#pragma once

#include <vector>

#include "liekring/character.hpp"
#include "liekring/errors.hpp"
#include "liekring/root_system.hpp"

namespace liekring::check {

/// e_k of the explicit weight multiset of an effective character, by the
/// item-by-item recursion e_j <- e_j + e_{j-1} * [w].
inline FormalCharacter elementary_symmetric_oracle(unsigned k, const FormalCharacter& chi) {
  if (!chi.is_effective()) throw EffectivenessError("oracle needs an effective character");
  const std::size_t n = chi.ambient_dim();
  std::vector<FormalCharacter> e(k + 1, FormalCharacter(n));
  e[0] = FormalCharacter::trivial(n);
  for (const auto& [w, m] : chi.terms()) {
    const FormalCharacter item = FormalCharacter::monomial(w);
    for (Integer copy = 0; copy < m; ++copy) {
      for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * item;
    }
  }
  return e[k];
}

/// Lambda^k of C^10 for Spin(10) by summing over k-subsets of the weights +-x_i.
inline FormalCharacter lambda_by_subsets(unsigned k) {
  std::vector<WeightVector> weights;
  for (std::size_t i = 0; i < 5; ++i) {
    weights.push_back(WeightVector::unit(5, i));
    weights.push_back(-WeightVector::unit(5, i));
  }
  FormalCharacter out(5);
  for (unsigned mask = 0; mask < (1u << weights.size()); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    WeightVector s = WeightVector::zero(5);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (mask & (1u << i)) s += weights[i];
    }
    out.add(s, 1);
  }
  return out;
}

/// Half-spin characters of Spin(10) from the 16 sign vectors (+-1/2, ...);
/// even = true selects an even number of minus signs.
inline FormalCharacter half_spin_by_signs(bool even) {
  FormalCharacter out(5);
  for (unsigned mask = 0; mask < 32; ++mask) {
    if ((__builtin_popcount(mask) % 2 == 0) != even) continue;
    std::vector<Rational> c(5, frac(1, 2));
    for (std::size_t i = 0; i < 5; ++i) {
      if (mask & (1u << i)) c[i] = -c[i];
    }
    out.add(WeightVector(c), 1);
  }
  return out;
}

}  // namespace liekring::check
