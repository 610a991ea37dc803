#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liekring/rational.hpp"

namespace liekring {

/// Generators of R Spin(10) appearing in the restriction formulas.
enum class Gen : std::size_t { L1 = 0, L2, L3, L4, DP, DM };

inline constexpr std::size_t kGenCount = 6;

inline std::string gen_name(Gen g) {
  static const std::array<std::string, kGenCount> names = {"lambda1", "lambda2", "lambda3",
                                                          "lambda4", "Delta+",  "Delta-"};
  return names[static_cast<std::size_t>(g)];
}

/// Polynomial with Integer coefficients in lambda1..lambda4, Delta+, Delta-.
class GenPoly {
 public:
  using Exponents = std::array<unsigned, kGenCount>;

  GenPoly() = default;

  static GenPoly constant(const Integer& c) {
    GenPoly p;
    if (c != 0) p.terms_[Exponents{}] = c;
    return p;
  }

  static GenPoly generator(Gen g) {
    Exponents e{};
    e[static_cast<std::size_t>(g)] = 1;
    GenPoly p;
    p.terms_[e] = 1;
    return p;
  }

  const std::map<Exponents, Integer>& terms() const { return terms_; }

  bool involves(Gen g) const {
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<std::size_t>(g)] > 0) return true;
    }
    return false;
  }

  GenPoly& operator+=(const GenPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  GenPoly& operator-=(const GenPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator+(GenPoly a, long long c) { return a += constant(c); }
  friend GenPoly operator+(long long c, GenPoly a) { return a += constant(c); }
  friend GenPoly operator*(const Integer& s, const GenPoly& a) {
    GenPoly out;
    for (const auto& [e, c] : a.terms_) out.add(e, s * c);
    return out;
  }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b) {
    GenPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < kGenCount; ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const GenPoly&, const GenPoly&) = default;

  /// Exchanges Delta+ and Delta-.
  GenPoly swap_half_spins() const {
    GenPoly out;
    for (const auto& [key, c] : terms_) {
      Exponents e = key;
      std::swap(e[static_cast<std::size_t>(Gen::DP)], e[static_cast<std::size_t>(Gen::DM)]);
      out.add(e, c);
    }
    return out;
  }

  /// Substitutes values[g] for each generator. `embed` maps an Integer into Ring.
  template <class Ring, class Embed>
  Ring evaluate(const std::array<Ring, kGenCount>& values, Embed embed) const {
    Ring acc = embed(Integer(0));
    for (const auto& [e, c] : terms_) {
      Ring term = embed(c);
      for (std::size_t i = 0; i < kGenCount; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) term = term * values[i];
      }
      acc += term;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Integer>> ordered(terms_.begin(), terms_.end());
    auto total = [](const Exponents& e) {
      unsigned n = 0;
      for (unsigned x : e) n += x;
      return n;
    };
    std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
      if (total(x.first) != total(y.first)) return total(x.first) < total(y.first);
      return x.first > y.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [e, c] : ordered) {
      std::string mono;
      for (std::size_t i = 0; i < kGenCount; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += gen_name(static_cast<Gen>(i));
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      Integer mag = c < 0 ? Integer(-c) : c;
      std::string piece = mono.empty() ? mag.str() : (mag == 1 ? mono : mag.str() + "*" + mono);
      if (first) {
        s += (c < 0 ? "-" : "") + piece;
      } else {
        s += (c < 0 ? " - " : " + ") + piece;
      }
      first = false;
    }
    return s;
  }

 private:
  void add(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exponents, Integer> terms_;
};

/// Images in R Spin(10) of the generators alpha, beta, gamma of R E6 and of
/// their second exterior powers.
struct RestrictionFormulas {
  GenPoly alpha;
  GenPoly beta;
  GenPoly gamma;
  GenPoly lambda2_alpha;
  GenPoly lambda2_beta;
  GenPoly lambda2_gamma;
};

inline RestrictionFormulas restriction_formulas() {
  const GenPoly l1 = GenPoly::generator(Gen::L1), l2 = GenPoly::generator(Gen::L2),
                l3 = GenPoly::generator(Gen::L3), dp = GenPoly::generator(Gen::DP),
                dm = GenPoly::generator(Gen::DM);
  RestrictionFormulas f;
  f.alpha = 1 + l1 + dm;
  f.beta = 1 + l1 + dp;
  f.gamma = 1 + l2 + dp + dm;
  f.lambda2_alpha = l2 + l3 + l1 * dm + l1 + dm;
  f.lambda2_beta = l2 + l3 + l1 * dp + l1 + dp;
  f.lambda2_gamma = 1 + Integer(2) * l2 + (1 + l2) * (dp + dm) + Integer(2) * l3 + l1 * l3;
  return f;
}

}  // namespace liekring
