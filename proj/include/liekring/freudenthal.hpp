#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "liekring/character.hpp"
#include "liekring/errors.hpp"
#include "liekring/root_system.hpp"

namespace liekring {

namespace detail {

/// Dominant weights of V_lambda in evaluation order: decreasing <mu, rho>,
/// ties broken by decreasing lexicographic order.
inline std::vector<WeightVector> dominant_layers(const RootSystem& rs, const WeightVector& lambda) {
  std::set<WeightVector> seen{lambda};
  std::deque<WeightVector> queue{lambda};
  while (!queue.empty()) {
    WeightVector mu = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : rs.positive_roots()) {
      // Simply laced: <mu, alpha^vee> = <mu, alpha>. Every mu - k alpha, 0 <= k <= <mu, alpha^vee>,
      // is a weight, and its dominant conjugate lies below lambda.
      Rational n = 2 * dot(mu, a) / dot(a, a);
      for (Integer k = 1; k <= numerator(n); ++k) {
        WeightVector nu = dominant_representative(rs, mu - Rational(k) * a);
        if (seen.insert(nu).second) queue.push_back(std::move(nu));
      }
    }
  }
  std::vector<std::pair<Rational, WeightVector>> keyed;
  keyed.reserve(seen.size());
  for (const auto& w : seen) keyed.emplace_back(dot(w, rs.weyl_vector()), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return y.second < x.second;
  });
  std::vector<WeightVector> out;
  out.reserve(keyed.size());
  for (auto& [h, w] : keyed) out.push_back(std::move(w));
  return out;
}

}  // namespace detail

/// Multiplicities of the dominant weights of V_lambda by Freudenthal's recursion
///   (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) <mu + k alpha, alpha>.
inline std::map<WeightVector, Integer> dominant_multiplicities(const RootSystem& rs, const DominantWeight& lambda) {
  if (lambda.kind() != rs.kind()) throw DomainError("dominant weight belongs to another root system");
  if (rs.kind() == RootKind::E8) {
    throw UnsupportedScaleError("irreducible E8 characters other than the adjoint are not supported");
  }
  const WeightVector& top = lambda.coords();
  const std::vector<WeightVector> layers = detail::dominant_layers(rs, top);
  const WeightVector top_shift = top + rs.weyl_vector();
  const Rational top_norm = dot(top_shift, top_shift);

  std::map<WeightVector, Integer> mult;
  mult.emplace(top, 1);
  for (std::size_t idx = 1; idx < layers.size(); ++idx) {
    const WeightVector& mu = layers[idx];
    Rational sum = 0;
    for (const auto& a : rs.positive_roots()) {
      WeightVector nu = mu + a;
      for (;;) {
        auto it = mult.find(dominant_representative(rs, nu));
        if (it == mult.end()) break;  // alpha-strings are unbroken
        sum += Rational(it->second) * dot(nu, a);
        nu += a;
      }
    }
    const WeightVector shift = mu + rs.weyl_vector();
    const Rational gap = top_norm - dot(shift, shift);
    if (gap <= 0) throw InternalConsistencyError("Freudenthal denominator vanished at " + mu.to_string());
    const Rational m = 2 * sum / gap;
    if (!is_integral(m)) {
      throw InternalConsistencyError("Freudenthal multiplicity " + to_string(m) + " at " + mu.to_string());
    }
    if (m != 0) mult.emplace(mu, numerator(m));
  }
  return mult;
}

/// Full character of V_lambda: dominant multiplicities spread over Weyl orbits.
inline FormalCharacter irreducible_character(const RootSystem& rs, const DominantWeight& lambda) {
  FormalCharacter chi(rs.ambient_dim());
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda)) {
    for (const auto& w : weyl_orbit(rs, mu)) chi.add(w, m);
  }
  return chi;
}

inline FormalCharacter irreducible_character(const RootSystem& rs, const WeightVector& lambda) {
  return irreducible_character(rs, DominantWeight(rs, lambda));
}

/// The 248-dimensional adjoint of E8: the 240 roots and the zero weight eight times.
inline FormalCharacter adjoint_character_e8() {
  const RootSystem& rs = root_system(RootKind::E8);
  FormalCharacter chi = FormalCharacter::from_weights(8, rs.all_roots());
  chi.add(WeightVector::zero(8), 8);
  return chi;
}

/// True if every simple reflection permutes the terms of chi preserving multiplicities.
inline bool is_weyl_invariant(const RootSystem& rs, const FormalCharacter& chi) {
  if (chi.ambient_dim() != rs.ambient_dim()) return false;
  for (const auto& [w, m] : chi.terms()) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (chi.multiplicity(rs.reflect(w, i)) != m) return false;
    }
  }
  return true;
}

/// Memoizes irreducible characters for one root system. Not thread-safe;
/// give each thread its own cache.
class IrreducibleCache {
 public:
  explicit IrreducibleCache(const RootSystem& rs) : rs_(&rs) {}

  const RootSystem& root_system() const { return *rs_; }

  const FormalCharacter& get(const WeightVector& lambda) {
    auto it = cache_.find(lambda);
    if (it == cache_.end()) it = cache_.emplace(lambda, irreducible_character(*rs_, lambda)).first;
    return it->second;
  }

 private:
  const RootSystem* rs_;
  std::map<WeightVector, FormalCharacter> cache_;
};

}  // namespace liekring
