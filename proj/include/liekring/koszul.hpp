#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "liekring/errors.hpp"
#include "liekring/int_poly.hpp"
#include "liekring/smith.hpp"

namespace liekring {

/// p / d in Z[t]; throws unless the division is exact.
inline IntPoly divide_exact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Integer> r = p.coefficients();
  if (p.degree() < d.degree()) {
    if (p.is_zero()) return IntPoly();
    throw InternalConsistencyError(d.to_string() + " does not divide " + p.to_string());
  }
  std::vector<Integer> q(static_cast<std::size_t>(p.degree() - d.degree() + 1));
  const Integer ld = d.leading();
  for (int i = p.degree(); i >= d.degree(); --i) {
    const Integer lead = r[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    if (lead % ld != 0) throw InternalConsistencyError(d.to_string() + " does not divide " + p.to_string());
    const Integer c = lead / ld;
    q[static_cast<std::size_t>(i - d.degree())] = c;
    for (int j = 0; j <= d.degree(); ++j) {
      r[static_cast<std::size_t>(i - d.degree() + j)] -= c * d.coeff(static_cast<std::size_t>(j));
    }
  }
  for (const auto& x : r) {
    if (x != 0) throw InternalConsistencyError(d.to_string() + " does not divide " + p.to_string());
  }
  return IntPoly(std::move(q));
}

namespace detail {

/// Z-span of t^k g, deg < n, as rows of coefficients reduced modulo the monic m (n = deg m).
inline void add_reduced_multiples(IntegerMatrix& rows, const IntPoly& g, const IntPoly& m) {
  const std::size_t n = static_cast<std::size_t>(m.degree());
  IntPoly cur = divmod_monic(g, m).second;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = cur.coeff(i);
    rows.push_back(std::move(row));
    cur = divmod_monic(cur * IntPoly::variable(), m).second;
  }
}

/// Z[t]_{<n} / (I intersected with Z[t]_{<n}), where I is approximated by the
/// multiples t^k g of degree < m (m >= n).
inline ZModule truncated_quotient(const std::vector<IntPoly>& gens, std::size_t n, std::size_t m) {
  // Columns ordered from degree m-1 down to 0, so an echelon form isolates low degrees.
  IntegerMatrix rows;
  for (const auto& g : gens) {
    for (int k = 0; g.degree() + k < static_cast<int>(m); ++k) {
      std::vector<Integer> row(m);
      for (std::size_t i = 0; i <= static_cast<std::size_t>(g.degree()); ++i) row[m - 1 - (i + k)] = g.coeff(i);
      rows.push_back(std::move(row));
    }
  }
  IntegerMatrix low;
  for (const auto& row : row_echelon(rows)) {
    bool high = false;
    for (std::size_t j = 0; j < m - n; ++j) high = high || row[j] != 0;
    if (!high) low.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m - n), row.end());
  }
  return cokernel(low, n);
}

}  // namespace detail

/// Additive structure of Z[t]/(gens). Exact when some generator has unit leading
/// coefficient. Otherwise the quotient in degree < N is computed for N and N+1,
/// each from multiples up to two depths; all four must agree (else
/// InconclusiveError) and the result is flagged exact = false.
inline ZModule quotient_z_structure(std::vector<IntPoly> gens) {
  std::erase_if(gens, [](const IntPoly& g) { return g.is_zero(); });
  if (gens.empty()) return ZModule{std::nullopt, {}, true};
  for (const auto& g : gens) {
    if (g.degree() == 0 && abs(g.leading()) == 1) return ZModule{};
  }
  for (const auto& g : gens) {
    if (abs(g.leading()) != 1) continue;
    const IntPoly m = g.leading() == 1 ? g : -g;
    if (m.degree() == 0) return ZModule{};
    IntegerMatrix rows;
    for (const auto& h : gens) detail::add_reduced_multiples(rows, h, m);
    return cokernel(rows, static_cast<std::size_t>(m.degree()));
  }
  int maxdeg = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
  const std::size_t n = static_cast<std::size_t>(2 * maxdeg + 4);
  const std::size_t depth = n + static_cast<std::size_t>(2 * maxdeg) + 2;
  ZModule a = detail::truncated_quotient(gens, n, depth);
  const bool stable = a == detail::truncated_quotient(gens, n, 2 * depth) &&
                      a == detail::truncated_quotient(gens, n + 1, depth + 1) &&
                      a == detail::truncated_quotient(gens, n + 1, 2 * depth + 1);
  if (!stable) {
    throw InconclusiveError("Z-structure of Z[t]/I did not stabilize in degree " + std::to_string(n));
  }
  a.exact = false;
  return a;
}

/// Direct sum over `generators` of copies of B/(relations), B = Z[t].
struct ModulePresentation {
  std::vector<std::string> generators;
  std::vector<IntPoly> relations;
  std::size_t b_rank = 0;
  ZModule z_structure;

  bool is_zero() const { return generators.empty(); }

  std::string to_string() const {
    if (generators.empty()) return "0";
    std::string quotient = "B";
    if (!relations.empty()) {
      quotient += "/(";
      for (std::size_t i = 0; i < relations.size(); ++i) quotient += (i ? ", " : "") + relations[i].to_string();
      quotient += ")";
    }
    std::string s;
    for (const auto& g : generators) s += (s.empty() ? "" : " + ") + quotient + (g == "1" ? "" : "." + g);
    return s;
  }
};

inline ModulePresentation make_module(std::vector<std::string> generators, std::vector<IntPoly> relations) {
  ModulePresentation m;
  const ZModule per = quotient_z_structure(relations);
  if (per.is_zero()) {
    m.z_structure = per;
    return m;
  }
  m.generators = std::move(generators);
  m.relations = std::move(relations);
  m.b_rank = m.relations.empty() ? m.generators.size() : 0;
  m.z_structure.exact = per.exact;
  if (per.free_rank) {
    m.z_structure.free_rank = *per.free_rank * m.generators.size();
  } else {
    m.z_structure.free_rank = std::nullopt;
  }
  for (std::size_t i = 0; i < m.generators.size(); ++i) {
    m.z_structure.torsion.insert(m.z_structure.torsion.end(), per.torsion.begin(), per.torsion.end());
  }
  return m;
}

/// Homology of the Koszul complex 0 -> B.XY -> B.X + B.Y -> B -> 0,
/// d X = xbar, d Y = ybar, d(XY) = xbar Y - ybar X.
struct TorPresentation {
  ModulePresentation h0, h1, h2;

  /// Alternating sum of B-ranks.
  long long euler_characteristic() const {
    return static_cast<long long>(h0.b_rank) - static_cast<long long>(h1.b_rank) +
           static_cast<long long>(h2.b_rank);
  }
};

inline TorPresentation koszul_tor(const IntPoly& xbar, const IntPoly& ybar) {
  TorPresentation t;
  if (xbar.is_zero() && ybar.is_zero()) {
    t.h0 = make_module({"1"}, {});
    t.h1 = make_module({"X", "Y"}, {});
    t.h2 = make_module({"XY"}, {});
  } else if (xbar.is_zero()) {
    t.h0 = make_module({"1"}, {ybar});
    t.h1 = make_module({"X"}, {ybar});
    t.h2 = ModulePresentation{};
  } else if (ybar.is_zero()) {
    t.h0 = make_module({"1"}, {xbar});
    t.h1 = make_module({"Y"}, {xbar});
    t.h2 = ModulePresentation{};
  } else {
    const IntPoly g = poly_gcd(xbar, ybar);
    const IntPoly xr = divide_exact(xbar, g), yr = divide_exact(ybar, g);
    t.h0 = make_module({"1"}, {xbar, ybar});
    t.h1 = make_module({"(" + yr.to_string() + ")X - (" + xr.to_string() + ")Y"}, {g});
    t.h2 = ModulePresentation{};
  }
  return t;
}

}  // namespace liekring
