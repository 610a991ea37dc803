#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liekring/errors.hpp"
#include "liekring/rational.hpp"

namespace liekring {

/// Polynomial in one variable over Z, coefficients stored from degree 0 upward
/// with no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(long long c) : c_{Integer(c)} { trim(); }  // NOLINT: integers embed as constants
  IntPoly(const Integer& c) : c_{c} { trim(); }      // NOLINT

  static IntPoly variable() { return IntPoly(std::vector<Integer>{0, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }
  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(out));
  }
  friend IntPoly operator*(const Integer& s, const IntPoly& a) { return IntPoly(s) * a; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// p(t + s).
  IntPoly shift(const Integer& s) const {
    IntPoly acc;
    const IntPoly lin = variable() + IntPoly(s);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + IntPoly(c_[i]);
    return acc;
  }

  /// gcd of the coefficients, 0 for the zero polynomial.
  Integer content() const {
    Integer g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
  }

  /// p / content(p) with positive leading coefficient.
  IntPoly primitive_part() const {
    if (is_zero()) return *this;
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> out(c_);
    for (auto& x : out) x /= g;
    return IntPoly(std::move(out));
  }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Integer& a = c_[i];
      if (a == 0) continue;
      const Integer mag = a < 0 ? Integer(-a) : a;
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      std::string piece = mono.empty() ? mag.str() : (mag == 1 ? mono : mag.str() + "*" + mono);
      if (s.empty()) {
        s = (a < 0 ? "-" : "") + piece;
      } else {
        s += (a < 0 ? " - " : " + ") + piece;
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

/// Division by a monic polynomial: p = q m + r with deg r < deg m.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& m) {
  if (!m.is_monic()) throw DomainError("divisor " + m.to_string() + " is not monic");
  std::vector<Integer> r = p.coefficients();
  const int dm = m.degree();
  if (p.degree() < dm) return {IntPoly(), p};
  std::vector<Integer> q(static_cast<std::size_t>(p.degree() - dm + 1));
  for (int i = p.degree(); i >= dm; --i) {
    const Integer lead = r[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    q[static_cast<std::size_t>(i - dm)] = lead;
    for (int j = 0; j <= dm; ++j) r[static_cast<std::size_t>(i - dm + j)] -= lead * m.coeff(static_cast<std::size_t>(j));
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  const Integer lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    std::vector<Integer> mono(static_cast<std::size_t>(shift) + 1);
    mono.back() = a.leading();
    a = lb * a - IntPoly(std::move(mono)) * b;
  }
  return a;
}

/// gcd in Z[t], normalized to positive leading coefficient (Z[t] is a UFD:
/// gcd = gcd(contents) * primitive gcd computed by primitive pseudo-remainders).
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part() * IntPoly(b.content());
  if (b.is_zero()) return a.primitive_part() * IntPoly(a.content());
  const Integer c = gcd(a.content(), b.content());
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = y;
    y = r.is_zero() ? r : r.primitive_part();
  }
  return c * x.primitive_part();
}

}  // namespace liekring
