#pragma once

#include <map>
#include <optional>
#include <string>

#include "liekring/character.hpp"
#include "liekring/errors.hpp"
#include "liekring/freudenthal.hpp"
#include "liekring/root_system.hpp"

namespace liekring {

/// A virtual character written in the basis of irreducible characters:
/// highest weight -> multiplicity.
struct IrrDecomposition {
  RootKind kind{};
  std::map<WeightVector, Integer> terms;

  Integer multiplicity(const WeightVector& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? Integer(0) : it->second;
  }

  friend bool operator==(const IrrDecomposition&, const IrrDecomposition&) = default;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [w, m] : terms) {
      if (!first) s += ", ";
      first = false;
      s += w.to_string() + ": " + m.str();
    }
    return s + "}";
  }
};

/// Sum of mult * irreducible_character(lambda) over the decomposition.
inline FormalCharacter reconstruct(const IrrDecomposition& d, IrreducibleCache& cache) {
  FormalCharacter chi(cache.root_system().ambient_dim());
  for (const auto& [lambda, m] : d.terms) chi += m * cache.get(lambda);
  return chi;
}

/// Peels off highest weights: repeatedly takes the dominant term of largest
/// <w, rho> (ties: lexicographically largest), records its coefficient and
/// subtracts that multiple of the irreducible character.
inline IrrDecomposition decompose(const RootSystem& rs, const FormalCharacter& chi, IrreducibleCache& cache) {
  if (chi.ambient_dim() != rs.ambient_dim()) throw DimensionMismatch("character lives in the wrong ambient space");
  if (!is_weyl_invariant(rs, chi)) throw InvarianceError("character is not Weyl invariant for " + to_string(rs.kind()));

  IrrDecomposition out{rs.kind(), {}};
  FormalCharacter remaining = chi;
  const std::size_t bound = 4 * chi.size() + 16;
  for (std::size_t iter = 0; !remaining.empty(); ++iter) {
    if (iter > bound) throw InternalConsistencyError("decomposition did not terminate");
    std::optional<WeightVector> best;
    Rational best_height;
    for (const auto& [w, m] : remaining.terms()) {
      if (!rs.is_dominant(w)) continue;
      Rational h = dot(w, rs.weyl_vector());
      if (!best || h > best_height || (h == best_height && *best < w)) {
        best = w;
        best_height = h;
      }
    }
    if (!best) throw InternalConsistencyError("Weyl-invariant remainder without a dominant term");
    const Integer m = remaining.multiplicity(*best);
    out.terms.emplace(*best, m);
    remaining -= m * cache.get(*best);
  }
  return out;
}

inline IrrDecomposition decompose(const RootSystem& rs, const FormalCharacter& chi) {
  IrreducibleCache cache(rs);
  return decompose(rs, chi, cache);
}

}  // namespace liekring
