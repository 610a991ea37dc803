#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liekring/errors.hpp"
#include "liekring/rational.hpp"
#include "liekring/weight.hpp"

namespace liekring {

enum class RootKind { E8, E6, D5 };

inline std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::E8: return "E8";
    case RootKind::E6: return "E6";
    case RootKind::D5: return "D5";
  }
  return "?";
}

namespace detail {

using RationalRows = std::vector<std::vector<Rational>>;

/// Gauss-Jordan inverse over the rationals; the input must be invertible.
inline RationalRows invert(RationalRows a) {
  const std::size_t n = a.size();
  RationalRows inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalConsistencyError("singular Gram matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// All vectors +-x_i +- x_j (i < j) in dimension n.
inline std::vector<WeightVector> integral_roots_d(std::size_t n) {
  std::vector<WeightVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          std::vector<Rational> c(n);
          c[i] = si;
          c[j] = sj;
          out.emplace_back(std::move(c));
        }
      }
    }
  }
  return out;
}

/// (sum eps_j x_j)/2 over all sign vectors with an even number of minus signs.
inline std::vector<WeightVector> even_half_spin_weights(std::size_t n) {
  std::vector<WeightVector> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<Rational> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = (mask >> j & 1u) ? frac(-1, 2) : frac(1, 2);
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace detail

/// Root datum for one of E8, E6, D5 in explicit coordinates.
///
/// E8 and E6 live in R^8, D5 in R^5. The E6 roots are the E8 roots orthogonal
/// to x6 - x7 and x7 - x8; simple roots follow the node labelling in which
/// 1-2-4-3-6 is the long arm and 5 branches off 4.
class RootSystem {
 public:
  RootKind kind() const { return kind_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return simple_roots_.size(); }
  const std::vector<WeightVector>& simple_roots() const { return simple_roots_; }
  const std::vector<WeightVector>& all_roots() const { return all_roots_; }
  const std::vector<WeightVector>& positive_roots() const { return positive_roots_; }
  const std::vector<WeightVector>& fundamental_weights() const { return fundamental_weights_; }
  const WeightVector& weyl_vector() const { return weyl_vector_; }

  /// varpi_i with the one-based index used in the node labelling.
  const WeightVector& fundamental(std::size_t i) const { return fundamental_weights_.at(i - 1); }
  const WeightVector& simple(std::size_t i) const { return simple_roots_.at(i - 1); }

  Rational inner(const WeightVector& a, const WeightVector& b) const { return dot(a, b); }

  /// <v, alpha_i^vee> for the zero-based simple root index i.
  Rational coroot_pairing(const WeightVector& v, std::size_t i) const {
    auto [p, q] = pairing_fraction(v, i);
    return Rational(Integer(p), Integer(q));
  }

  /// Simple reflection s_i(v) = v - <v, alpha_i^vee> alpha_i.
  WeightVector reflect(const WeightVector& v, std::size_t i) const {
    auto [p, q] = pairing_fraction(v, i);
    if (p == 0) return v;
    return v.minus_multiple(p, q, simple_roots_[i]);
  }

  bool is_dominant(const WeightVector& v) const {
    for (std::size_t i = 0; i < rank(); ++i) {
      if (dot_numerator(v, simple_roots_[i]) < 0) return false;
    }
    return true;
  }

  /// Coefficients of v in the simple-root basis; v must lie in the root span.
  std::vector<Rational> simple_coefficients(const WeightVector& v) const {
    std::vector<Rational> rhs(rank());
    for (std::size_t j = 0; j < rank(); ++j) rhs[j] = dot(v, simple_roots_[j]);
    std::vector<Rational> a(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t j = 0; j < rank(); ++j) a[i] += gram_inverse_[i][j] * rhs[j];
    }
    return a;
  }

  bool is_root(const WeightVector& v) const { return std::binary_search(all_roots_.begin(), all_roots_.end(), v); }

  friend RootSystem build_root_system(RootKind kind);

 private:
  // <v, alpha_i^vee> = 2 N(v, a) d_a / (d_v N(a, a)) in terms of shared-denominator numerators.
  std::pair<std::int64_t, std::int64_t> pairing_fraction(const WeightVector& v, std::size_t i) const {
    const WeightVector& a = simple_roots_[i];
    std::int64_t p = detail::checked_mul(2 * dot_numerator(v, a), a.denominator_lcm());
    if (p == 0) return {0, 1};
    std::int64_t q = detail::checked_mul(v.denominator_lcm(), root_norm_numerators_[i]);
    const std::int64_t g = std::gcd(p, q);
    return {p / g, q / g};
  }

  std::vector<std::int64_t> root_norm_numerators_;
  RootKind kind_{};
  std::size_t ambient_dim_{};
  std::vector<WeightVector> simple_roots_;
  std::vector<WeightVector> all_roots_;
  std::vector<WeightVector> positive_roots_;
  std::vector<WeightVector> fundamental_weights_;
  WeightVector weyl_vector_;
  std::vector<Rational> norms_;
  detail::RationalRows gram_inverse_;
};

inline RootSystem build_root_system(RootKind kind) {
  RootSystem rs;
  rs.kind_ = kind;
  using W = WeightVector;
  switch (kind) {
    case RootKind::E8: {
      rs.ambient_dim_ = 8;
      rs.all_roots_ = detail::integral_roots_d(8);
      for (auto& w : detail::even_half_spin_weights(8)) rs.all_roots_.push_back(std::move(w));
      rs.simple_roots_ = {
          W::scaled({1, -1, -1, -1, -1, -1, -1, 1}, 2), W::scaled({1, 1, 0, 0, 0, 0, 0, 0}),
          W::scaled({-1, 1, 0, 0, 0, 0, 0, 0}),         W::scaled({0, -1, 1, 0, 0, 0, 0, 0}),
          W::scaled({0, 0, -1, 1, 0, 0, 0, 0}),         W::scaled({0, 0, 0, -1, 1, 0, 0, 0}),
          W::scaled({0, 0, 0, 0, -1, 1, 0, 0}),         W::scaled({0, 0, 0, 0, 0, -1, 1, 0}),
      };
      break;
    }
    case RootKind::E6: {
      rs.ambient_dim_ = 8;
      const W a = W::scaled({0, 0, 0, 0, 0, 1, -1, 0});
      const W b = W::scaled({0, 0, 0, 0, 0, 0, 1, -1});
      std::vector<W> e8 = detail::integral_roots_d(8);
      for (auto& w : detail::even_half_spin_weights(8)) e8.push_back(std::move(w));
      for (auto& r : e8) {
        if (dot(r, a) == 0 && dot(r, b) == 0) rs.all_roots_.push_back(std::move(r));
      }
      rs.simple_roots_ = {
          W::scaled({1, 1, -1, -1, -1, -1, -1, -1}, 2), W::scaled({0, -1, 1, 0, 0, 0, 0, 0}),
          W::scaled({0, 1, 1, 0, 0, 0, 0, 0}),          W::scaled({0, 0, -1, 1, 0, 0, 0, 0}),
          W::scaled({0, 0, 0, -1, 1, 0, 0, 0}),         W::scaled({1, -1, -1, -1, -1, 1, 1, 1}, 2),
      };
      break;
    }
    case RootKind::D5: {
      rs.ambient_dim_ = 5;
      rs.all_roots_ = detail::integral_roots_d(5);
      rs.simple_roots_ = {
          W::scaled({1, -1, 0, 0, 0}), W::scaled({0, 1, -1, 0, 0}), W::scaled({0, 0, 1, -1, 0}),
          W::scaled({0, 0, 0, 1, -1}), W::scaled({0, 0, 0, 1, 1}),
      };
      break;
    }
  }
  std::sort(rs.all_roots_.begin(), rs.all_roots_.end());

  const std::size_t n = rs.simple_roots_.size();
  detail::RationalRows gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    rs.norms_.push_back(dot(rs.simple_roots_[i], rs.simple_roots_[i]));
    rs.root_norm_numerators_.push_back(dot_numerator(rs.simple_roots_[i], rs.simple_roots_[i]));
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = dot(rs.simple_roots_[i], rs.simple_roots_[j]);
  }
  rs.gram_inverse_ = detail::invert(gram);

  WeightVector two_rho = WeightVector::zero(rs.ambient_dim_);
  for (const auto& r : rs.all_roots_) {
    auto coeffs = rs.simple_coefficients(r);
    bool nonneg = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c >= 0; });
    bool nonpos = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c <= 0; });
    if (nonneg == nonpos) throw InternalConsistencyError("root " + r.to_string() + " is not signed in the simple basis");
    if (nonneg) {
      rs.positive_roots_.push_back(r);
      two_rho += r;
    }
  }
  rs.weyl_vector_ = frac(1, 2) * two_rho;

  // varpi_i = sum_j (G^-1)_ij (|alpha_j|^2 / 2) alpha_j, so that <varpi_i, alpha_j^vee> = delta_ij.
  for (std::size_t i = 0; i < n; ++i) {
    WeightVector w = WeightVector::zero(rs.ambient_dim_);
    for (std::size_t j = 0; j < n; ++j) {
      w += (rs.gram_inverse_[i][j] * rs.norms_[i] / 2) * rs.simple_roots_[j];
    }
    rs.fundamental_weights_.push_back(std::move(w));
  }
  return rs;
}

/// Process-wide immutable instance; construction happens once per kind.
inline const RootSystem& root_system(RootKind kind) {
  static const RootSystem e8 = build_root_system(RootKind::E8);
  static const RootSystem e6 = build_root_system(RootKind::E6);
  static const RootSystem d5 = build_root_system(RootKind::D5);
  switch (kind) {
    case RootKind::E8: return e8;
    case RootKind::E6: return e6;
    case RootKind::D5: return d5;
  }
  return d5;
}

/// A weight certified dominant for a particular root system.
class DominantWeight {
 public:
  DominantWeight(const RootSystem& rs, WeightVector coords) : kind_(rs.kind()), coords_(std::move(coords)) {
    if (coords_.size() != rs.ambient_dim()) throw DimensionMismatch("weight has wrong ambient dimension");
    if (!rs.is_dominant(coords_)) {
      throw DomainError("weight " + coords_.to_string() + " is not dominant for " + to_string(rs.kind()));
    }
  }

  RootKind kind() const { return kind_; }
  const WeightVector& coords() const { return coords_; }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

 private:
  RootKind kind_;
  WeightVector coords_;
};

/// dim V_lambda = prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>.
inline Integer weyl_dimension(const RootSystem& rs, const DominantWeight& lambda) {
  if (lambda.kind() != rs.kind()) throw DomainError("dominant weight belongs to another root system");
  const WeightVector shifted = lambda.coords() + rs.weyl_vector();
  Rational prod = 1;
  for (const auto& a : rs.positive_roots()) prod *= dot(shifted, a) / dot(rs.weyl_vector(), a);
  if (!is_integral(prod)) throw InternalConsistencyError("Weyl dimension formula gave " + to_string(prod));
  return numerator(prod);
}

namespace detail {

inline std::set<WeightVector> orbit_under(const RootSystem& rs, const WeightVector& w,
                                          const std::vector<std::size_t>& generators) {
  std::set<WeightVector> seen{w};
  std::deque<WeightVector> queue{w};
  while (!queue.empty()) {
    WeightVector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i : generators) {
      if (dot_numerator(v, rs.simple_roots()[i]) == 0) continue;
      WeightVector r = rs.reflect(v, i);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return seen;
}

}  // namespace detail

/// Closure of {w} under the simple reflections (breadth-first).
inline std::set<WeightVector> weyl_orbit(const RootSystem& rs, const WeightVector& w) {
  if (w.size() != rs.ambient_dim()) throw DimensionMismatch("weight has wrong ambient dimension");
  std::vector<std::size_t> all(rs.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return detail::orbit_under(rs, w, all);
}

/// |W| via the stabilizer chain W_S > W_{S - {k}} > ... where W_{S - {k}}
/// is the stabilizer in W_S of varpi_k. Each step is a small orbit, so this
/// also reaches E8.
inline Integer weyl_group_order_by_chain(const RootSystem& rs) {
  std::vector<std::size_t> gens(rs.rank());
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = i;
  Integer order = 1;
  while (!gens.empty()) {
    std::size_t k = gens.back();
    order *= detail::orbit_under(rs, rs.fundamental_weights()[k], gens).size();
    gens.pop_back();
  }
  return order;
}

/// |W| as the size of the orbit of rho, which has trivial stabilizer.
/// E8 (|W| = 696729600) only with allow_slow, and then through the stabilizer chain.
inline Integer weyl_group_order(const RootSystem& rs, bool allow_slow = false) {
  if (rs.kind() == RootKind::E8) {
    if (!allow_slow) throw UnsupportedScaleError("weyl_group_order(E8) requires allow_slow");
    return weyl_group_order_by_chain(rs);
  }
  return weyl_orbit(rs, rs.weyl_vector()).size();
}

/// Unique dominant weight in the Weyl orbit of w. Each reflection at a simple
/// root with negative pairing raises <w, rho>, so the loop terminates.
inline WeightVector dominant_representative(const RootSystem& rs, WeightVector w) {
  if (w.size() != rs.ambient_dim()) throw DimensionMismatch("weight has wrong ambient dimension");
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (dot_numerator(w, rs.simple_roots()[i]) < 0) {
        w = rs.reflect(w, i);
        moved = true;
      }
    }
    if (!moved) return w;
  }
}

}  // namespace liekring
