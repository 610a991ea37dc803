#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "liekring/errors.hpp"
#include "liekring/rational.hpp"

namespace liekring {

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalConsistencyError("weight coordinate overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalConsistencyError("weight coordinate overflow");
  return r;
}

inline std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw InternalConsistencyError("weight coordinate overflow: " + n.str());
  }
  return static_cast<std::int64_t>(n);
}

}  // namespace detail

/// A torus weight: exact rational coordinates in an ambient Euclidean space.
///
/// Weight coordinates c_j refer to the basis x_1, ..., x_n; the monomial of the
/// weight is prod u_j^(2 c_j). On the Spin(10) x S^1 torus the sixth
/// coordinate is the literal exponent d of xi^d.
///
/// Stored as integer numerators over one shared positive denominator, reduced
/// so that the gcd of denominator and numerators is 1. Coordinates in this
/// domain have denominators dividing 6 and stay small; arithmetic is checked
/// and throws instead of wrapping.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t dim) : num_(dim, 0) {}
  explicit WeightVector(const std::vector<Rational>& coords) {
    Integer den = 1;
    for (const auto& c : coords) den = boost::multiprecision::lcm(den, denominator(c));
    den_ = detail::to_int64(den);
    num_.reserve(coords.size());
    for (const auto& c : coords) num_.push_back(detail::to_int64(numerator(c) * (den / denominator(c))));
    normalize();
  }
  WeightVector(std::initializer_list<Rational> coords) : WeightVector(std::vector<Rational>(coords)) {}

  static WeightVector zero(std::size_t dim) { return WeightVector(dim); }

  /// Integer coordinates divided by a common denominator.
  static WeightVector scaled(std::initializer_list<long long> numerators, long long denominator = 1) {
    WeightVector w;
    w.num_.assign(numerators.begin(), numerators.end());
    w.den_ = denominator;
    if (w.den_ < 0) {
      w.den_ = -w.den_;
      for (auto& n : w.num_) n = -n;
    }
    w.normalize();
    return w;
  }

  /// Unit vector x_i, zero-based index.
  static WeightVector unit(std::size_t dim, std::size_t i) {
    WeightVector w(dim);
    w.num_.at(i) = 1;
    return w;
  }

  std::size_t size() const { return num_.size(); }
  Rational operator[](std::size_t i) const { return Rational(Integer(num_[i]), Integer(den_)); }
  std::vector<Rational> coords() const {
    std::vector<Rational> c;
    c.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) c.push_back((*this)[i]);
    return c;
  }

  /// Common denominator of all coordinates (1 for integral weights).
  std::int64_t denominator_lcm() const { return den_; }

  bool is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](std::int64_t n) { return n == 0; });
  }

  WeightVector& operator+=(const WeightVector& o) { return combine(o, 1); }
  WeightVector& operator-=(const WeightVector& o) { return combine(o, -1); }
  WeightVector& operator*=(const Rational& s) {
    const std::int64_t p = detail::to_int64(numerator(s));
    const std::int64_t q = detail::to_int64(denominator(s));
    for (auto& n : num_) n = detail::checked_mul(n, p);
    den_ = detail::checked_mul(den_, q);
    normalize();
    return *this;
  }

  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(const Rational& s, WeightVector a) { return a *= s; }
  friend WeightVector operator-(WeightVector a) {
    for (auto& n : a.num_) n = -n;
    return a;
  }

  friend Rational dot(const WeightVector& a, const WeightVector& b) {
    a.check_same(b);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.num_.size(); ++i) s = detail::checked_add(s, detail::checked_mul(a.num_[i], b.num_[i]));
    return Rational(Integer(s), Integer(detail::checked_mul(a.den_, b.den_)));
  }

  /// this - (p/q) * v without leaving fixed-width arithmetic.
  WeightVector minus_multiple(std::int64_t p, std::int64_t q, const WeightVector& v) const {
    check_same(v);
    WeightVector r;
    r.den_ = detail::checked_mul(detail::checked_mul(den_, v.den_), q);
    r.num_.resize(num_.size());
    const std::int64_t self_scale = detail::checked_mul(v.den_, q);
    for (std::size_t i = 0; i < num_.size(); ++i) {
      r.num_[i] = detail::checked_add(detail::checked_mul(num_[i], self_scale),
                                      -detail::checked_mul(detail::checked_mul(p, v.num_[i]), den_));
    }
    r.normalize();
    return r;
  }

  /// Raw integer inner product numerator; divide by denominator_lcm() of both factors.
  friend std::int64_t dot_numerator(const WeightVector& a, const WeightVector& b) {
    a.check_same(b);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.num_.size(); ++i) s = detail::checked_add(s, detail::checked_mul(a.num_[i], b.num_[i]));
    return s;
  }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Lexicographic on coordinates; this is the canonical term order.
  friend bool operator<(const WeightVector& a, const WeightVector& b) {
    const std::size_t n = std::min(a.num_.size(), b.num_.size());
    if (a.den_ == b.den_) {
      for (std::size_t i = 0; i < n; ++i) {
        if (a.num_[i] != b.num_[i]) return a.num_[i] < b.num_[i];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t l = detail::checked_mul(a.num_[i], b.den_);
        const std::int64_t r = detail::checked_mul(b.num_[i], a.den_);
        if (l != r) return l < r;
      }
    }
    return a.num_.size() < b.num_.size();
  }

  /// "(c1,...,cn)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (i) s += ",";
      s += liekring::to_string((*this)[i]);
    }
    return s + ")";
  }

 private:
  void check_same(const WeightVector& o) const {
    if (o.num_.size() != num_.size()) {
      throw DimensionMismatch("weight dimensions differ: " + std::to_string(num_.size()) + " vs " +
                              std::to_string(o.num_.size()));
    }
  }

  WeightVector& combine(const WeightVector& o, std::int64_t sign) {
    check_same(o);
    if (den_ == o.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = detail::checked_add(num_[i], sign * o.num_[i]);
    } else {
      const std::int64_t g = std::gcd(den_, o.den_);
      const std::int64_t mine = o.den_ / g;
      const std::int64_t theirs = den_ / g;
      for (std::size_t i = 0; i < num_.size(); ++i) {
        num_[i] = detail::checked_add(detail::checked_mul(num_[i], mine), sign * detail::checked_mul(o.num_[i], theirs));
      }
      den_ = detail::checked_mul(den_, mine);
    }
    normalize();
    return *this;
  }

  void normalize() {
    if (den_ == 1) return;
    std::int64_t g = den_;
    for (std::int64_t n : num_) {
      g = std::gcd(g, n);
      if (g == 1) return;
    }
    for (auto& n : num_) n /= g;
    den_ /= g;
  }

  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

/// Parses "(c1,...,cn)".
inline WeightVector parse_weight(std::string_view text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw ParseError("weight must be parenthesized: " + std::string(text));
  }
  std::vector<Rational> coords;
  auto body = text.substr(open + 1, close - open - 1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    auto piece = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return WeightVector(std::move(coords));
}

/// Exact rational matrix acting on weight coordinates (rows = target dimension).
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  WeightVector apply(const WeightVector& w) const {
    if (w.size() != cols_) {
      throw DimensionMismatch("matrix expects " + std::to_string(cols_) + " coordinates, got " +
                              std::to_string(w.size()));
    }
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (at(r, c) != 0) out[r] += at(r, c) * w[c];
      }
    }
    return WeightVector(std::move(out));
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace liekring
