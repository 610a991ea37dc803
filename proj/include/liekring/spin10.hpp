#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "liekring/character.hpp"
#include "liekring/errors.hpp"
#include "liekring/freudenthal.hpp"
#include "liekring/root_system.hpp"
#include "liekring/verdict.hpp"

namespace liekring {

/// Highest weight (x1 + ... + x4 + x5)/2 of the half-spin representation with
/// an even number of minus signs among its weights.
inline WeightVector delta_plus_weight() { return WeightVector::scaled({1, 1, 1, 1, 1}, 2); }
inline WeightVector delta_minus_weight() { return WeightVector::scaled({1, 1, 1, 1, -1}, 2); }

/// x1 + ... + xk, the highest weight of Lambda^k of the standard representation.
inline WeightVector lambda_weight(std::size_t k) {
  WeightVector w = WeightVector::zero(5);
  for (std::size_t i = 0; i < k; ++i) w += WeightVector::unit(5, i);
  return w;
}

/// Characters of the generators of R Spin(10) and their relatives.
struct Spin10Blocks {
  FormalCharacter one{5};
  /// lambda[k] = Lambda^k(C^10), k = 0..5.
  std::array<FormalCharacter, 6> lambda{FormalCharacter(5), FormalCharacter(5), FormalCharacter(5),
                                        FormalCharacter(5), FormalCharacter(5), FormalCharacter(5)};
  FormalCharacter delta_plus{5};
  FormalCharacter delta_minus{5};
};

inline Spin10Blocks build_spin10_blocks() {
  const RootSystem& d5 = root_system(RootKind::D5);
  Spin10Blocks b;
  b.one = FormalCharacter::trivial(5);
  const FormalCharacter standard = irreducible_character(d5, lambda_weight(1));
  for (unsigned k = 0; k <= 5; ++k) b.lambda[k] = exterior_power(k, standard);
  b.delta_plus = irreducible_character(d5, delta_plus_weight());
  b.delta_minus = irreducible_character(d5, delta_minus_weight());
  return b;
}

inline const Spin10Blocks& spin10_blocks() {
  static const Spin10Blocks blocks = build_spin10_blocks();
  return blocks;
}

struct Spin10IdentityResult {
  Verdict verdict;
  FormalCharacter lhs{5};
  FormalCharacter rhs{5};
  FormalCharacter difference{5};
};

/// lambda1 * lambda3 = Lambda^2(lambda2) + lambda4 over D5.
inline Spin10IdentityResult verify_spin10_identity() {
  const auto& b = spin10_blocks();
  Spin10IdentityResult r;
  r.lhs = b.lambda[1] * b.lambda[3];
  r.rhs = exterior_power(2, b.lambda[2]) + b.lambda[4];
  r.difference = r.lhs - r.rhs;
  r.verdict = compare_characters("lemma-4.1", r.lhs, r.rhs);
  return r;
}

/// Delta+ Delta- = 1 + lambda2 + lambda4.
inline Verdict verify_clifford_relation() {
  const auto& b = spin10_blocks();
  return compare_characters("clifford-relation", b.delta_plus * b.delta_minus, b.one + b.lambda[2] + b.lambda[4]);
}

struct WeightTypeRow {
  std::string weight_type;
  long long count = 0;
  Integer mult_lambda2_u2;
  Integer mult_u4;
  Integer mult_u1_u3;

  friend bool operator==(const WeightTypeRow&, const WeightTypeRow&) = default;
};

/// Orbit types of weights in U1 (x) U3, in table order.
inline const std::array<std::string, 5>& weight_type_labels() {
  static const std::array<std::string, 5> labels = {"+-xi+-xj+-xk+-xl", "+-2xi+-xj+-xk", "+-xi+-xj", "+-2xi", "0"};
  return labels;
}

/// Index into weight_type_labels() from the sorted absolute coordinates.
inline std::size_t classify_weight_type(const WeightVector& w) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < w.size(); ++i) a.push_back(abs(w[i]));
  std::sort(a.begin(), a.end(), [](const Rational& x, const Rational& y) { return x > y; });
  auto is = [&](std::initializer_list<int> pattern) {
    std::size_t i = 0;
    for (int p : pattern) {
      if (a[i++] != p) return false;
    }
    return true;
  };
  if (w.size() == 5) {
    if (is({1, 1, 1, 1, 0})) return 0;
    if (is({2, 1, 1, 0, 0})) return 1;
    if (is({1, 1, 0, 0, 0})) return 2;
    if (is({2, 0, 0, 0, 0})) return 3;
    if (is({0, 0, 0, 0, 0})) return 4;
  }
  throw InternalConsistencyError("weight " + w.to_string() + " outside the five orbit types");
}

/// Weight census of Lambda^2(U2), U4 and U1 (x) U3 by orbit type. Within a
/// type every weight has the same multiplicity (Weyl invariance); this is checked.
inline std::vector<WeightTypeRow> weight_type_rows() {
  const auto& b = spin10_blocks();
  const FormalCharacter l2u2 = exterior_power(2, b.lambda[2]);
  const FormalCharacter& u4 = b.lambda[4];
  const FormalCharacter u1u3 = b.lambda[1] * b.lambda[3];

  std::vector<WeightTypeRow> rows(5);
  std::array<bool, 5> seen{};
  for (std::size_t t = 0; t < 5; ++t) rows[t].weight_type = weight_type_labels()[t];

  std::set<WeightVector> support;
  for (const auto* chi : {&l2u2, &u4, &u1u3}) {
    for (const auto& [w, m] : chi->terms()) support.insert(w);
  }
  for (const auto& w : support) {
    const std::size_t t = classify_weight_type(w);
    WeightTypeRow& row = rows[t];
    const Integer a = l2u2.multiplicity(w), b4 = u4.multiplicity(w), c = u1u3.multiplicity(w);
    if (!seen[t]) {
      row.mult_lambda2_u2 = a;
      row.mult_u4 = b4;
      row.mult_u1_u3 = c;
      seen[t] = true;
    } else if (row.mult_lambda2_u2 != a || row.mult_u4 != b4 || row.mult_u1_u3 != c) {
      throw InternalConsistencyError("multiplicity varies inside orbit type " + row.weight_type);
    }
    ++row.count;
  }
  return rows;
}

}  // namespace liekring
