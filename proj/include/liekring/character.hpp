#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liekring/errors.hpp"
#include "liekring/rational.hpp"
#include "liekring/weight.hpp"

namespace liekring {

/// Virtual character: finitely supported map from weights to nonzero integers.
///
/// Terms are kept in lexicographic weight order, which doubles as the
/// canonical serialization order. Zero multiplicities are never stored.
class FormalCharacter {
 public:
  using Terms = std::map<WeightVector, Integer>;

  explicit FormalCharacter(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}

  /// The character of the trivial one-dimensional representation.
  static FormalCharacter trivial(std::size_t ambient_dim) {
    FormalCharacter c(ambient_dim);
    c.add(WeightVector::zero(ambient_dim), 1);
    return c;
  }

  static FormalCharacter monomial(const WeightVector& w, const Integer& mult = 1) {
    FormalCharacter c(w.size());
    c.add(w, mult);
    return c;
  }

  /// Each listed weight contributes multiplicity one; repeats accumulate.
  static FormalCharacter from_weights(std::size_t ambient_dim, const std::vector<WeightVector>& weights) {
    FormalCharacter c(ambient_dim);
    for (const auto& w : weights) c.add(w, 1);
    return c;
  }

  std::size_t ambient_dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Sum of multiplicities (the degree of the virtual representation).
  Integer dimension() const {
    Integer d = 0;
    for (const auto& [w, m] : terms_) d += m;
    return d;
  }

  Integer multiplicity(const WeightVector& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool is_effective() const {
    for (const auto& [w, m] : terms_) {
      if (m < 0) return false;
    }
    return true;
  }

  /// Accumulates mult into the coefficient of w, dropping the term if it cancels.
  FormalCharacter& add(const WeightVector& w, const Integer& mult) {
    if (w.size() != dim_) {
      throw DimensionMismatch("weight " + w.to_string() + " does not live in dimension " + std::to_string(dim_));
    }
    if (mult == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(w, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    check_same(o);
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    check_same(o);
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
  }

  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(const Integer& s, const FormalCharacter& a) {
    FormalCharacter r(a.dim_);
    if (s == 0) return r;
    for (const auto& [w, m] : a.terms_) r.terms_.emplace(w, s * m);
    return r;
  }
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b);

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void check_same(const FormalCharacter& o) const {
    if (o.dim_ != dim_) {
      throw DimensionMismatch("character ambient dimensions differ: " + std::to_string(dim_) + " vs " +
                              std::to_string(o.dim_));
    }
  }

 private:
  std::size_t dim_;
  Terms terms_;
};

/// Convolution product (tensor product of representations).
inline FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b) {
  a.check_same(b);
  FormalCharacter r(a.ambient_dim());
  for (const auto& [wa, ma] : a.terms()) {
    for (const auto& [wb, mb] : b.terms()) r.add(wa + wb, ma * mb);
  }
  return r;
}

inline FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) { return multiply(a, b); }

/// Adams operation psi^k: every weight is scaled by k.
inline FormalCharacter adams(unsigned k, const FormalCharacter& chi) {
  if (k == 0) throw DomainError("Adams operations are indexed by k >= 1");
  FormalCharacter r(chi.ambient_dim());
  const Rational s(k);
  for (const auto& [w, m] : chi.terms()) r.add(s * w, m);
  return r;
}

/// Complex conjugation: every weight is negated.
inline FormalCharacter conjugate(const FormalCharacter& chi) {
  FormalCharacter r(chi.ambient_dim());
  for (const auto& [w, m] : chi.terms()) r.add(-w, m);
  return r;
}

/// Image of chi under a linear map of weight coordinates; colliding images add.
inline FormalCharacter project(const FormalCharacter& chi, const RationalMatrix& map) {
  if (map.cols() != chi.ambient_dim()) {
    throw DimensionMismatch("projection expects source dimension " + std::to_string(map.cols()) + ", character has " +
                            std::to_string(chi.ambient_dim()));
  }
  FormalCharacter r(map.rows());
  for (const auto& [w, m] : chi.terms()) r.add(map.apply(w), m);
  return r;
}

/// Exterior power Lambda^k via Newton's identity
///   k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} psi^i(chi).
inline FormalCharacter exterior_power(unsigned k, const FormalCharacter& chi) {
  if (!chi.is_effective()) throw EffectivenessError("exterior power of a non-effective character");
  const std::size_t n = chi.ambient_dim();
  std::vector<FormalCharacter> e{FormalCharacter::trivial(n)};
  std::vector<FormalCharacter> psi{FormalCharacter(n)};
  for (unsigned i = 1; i <= k; ++i) psi.push_back(adams(i, chi));

  for (unsigned j = 1; j <= k; ++j) {
    FormalCharacter sum(n);
    for (unsigned i = 1; i <= j; ++i) {
      FormalCharacter term = multiply(e[j - i], psi[i]);
      if (i % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    FormalCharacter ej(n);
    for (const auto& [w, m] : sum.terms()) {
      Rational q(m, Integer(j));
      if (!is_integral(q)) {
        throw InternalConsistencyError("Newton identity produced non-integral multiplicity " + to_string(q) +
                                       " at weight " + w.to_string());
      }
      ej.add(w, numerator(q));
    }
    // Lambda^j vanishes once j exceeds the dimension; the recursion stays valid.
    e.push_back(std::move(ej));
  }
  return e[k];
}

/// One term per line: "mult * (c1,...,cn)", lexicographic weight order.
inline std::string to_text(const FormalCharacter& chi) {
  std::string out;
  for (const auto& [w, m] : chi.terms()) {
    out += m.str();
    out += " * ";
    out += w.to_string();
    out += '\n';
  }
  return out;
}

/// Inverse of to_text. The ambient dimension is taken from the first term
/// unless given explicitly (needed for the empty character).
inline FormalCharacter parse_text(std::string_view text, std::size_t ambient_dim = 0) {
  FormalCharacter chi(ambient_dim);
  bool dim_known = ambient_dim != 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto star = line.find('*');
    if (star == std::string_view::npos) throw ParseError("missing '*' in term: " + std::string(line));
    auto mult_text = line.substr(0, star);
    while (!mult_text.empty() && mult_text.back() == ' ') mult_text.remove_suffix(1);
    while (!mult_text.empty() && mult_text.front() == ' ') mult_text.remove_prefix(1);
    WeightVector w = parse_weight(line.substr(star + 1));
    if (!dim_known) {
      chi = FormalCharacter(w.size());
      dim_known = true;
    }
    chi.add(w, parse_integer(mult_text));
  }
  return chi;
}

}  // namespace liekring
