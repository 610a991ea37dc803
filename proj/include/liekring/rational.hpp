#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "liekring/errors.hpp"

namespace liekring {

/// Arbitrary-precision integer used for every multiplicity and coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline Rational frac(long long p, long long q) { return Rational(Integer(p), Integer(q)); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Integer& n) { return n.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Integer parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("bad integer literal: " + std::string(text));
  }
  return Integer(std::string(text));
}

inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

/// C(n, k) for small nonnegative arguments.
inline Integer binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace liekring
