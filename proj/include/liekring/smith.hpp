#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekring/rational.hpp"

namespace liekring {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Nonzero diagonal entries d1 | d2 | ... | dr (all positive) of the Smith normal form.
inline std::vector<Integer> smith_invariants(IntegerMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // Pivot: nonzero entry of least absolute value in the remaining block.
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (!piv || abs(a[i][j]) < abs(a[piv->first][piv->second]))) piv = {{i, j}};
        }
      }
      if (!piv) return diag;
      std::swap(a[t], a[piv->first]);
      for (auto& row : a) std::swap(row[t], row[piv->second]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and repeat.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < rows && !bad; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (!bad) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[*bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

/// Integer row echelon form: pivots in increasing column order, zero rows dropped.
/// The rows with pivot at column >= c span the lattice intersected with the
/// coordinate subspace of columns >= c.
inline IntegerMatrix row_echelon(IntegerMatrix a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < a.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> piv;
      for (std::size_t i = top; i < a.size(); ++i) {
        if (a[i][c] != 0 && (!piv || abs(a[i][c]) < abs(a[*piv][c]))) piv = i;
      }
      if (!piv) break;
      std::swap(a[top], a[*piv]);
      bool done = true;
      for (std::size_t i = top + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        const Integer q = a[i][c] / a[top][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[top][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) {
        ++top;
        break;
      }
    }
  }
  a.resize(top);
  return a;
}

/// Finitely generated abelian group Z^free (+) sum Z/torsion_i.
struct ZModule {
  /// nullopt means infinitely generated.
  std::optional<std::size_t> free_rank = 0;
  std::vector<Integer> torsion;
  /// False when the structure rests on a stabilized truncation rather than an exact reduction.
  bool exact = true;

  bool is_zero() const { return free_rank && *free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }

  friend bool operator==(const ZModule&, const ZModule&) = default;

  std::string to_string() const {
    if (!free_rank) return "free abelian of infinite rank";
    std::string s;
    if (*free_rank > 0) s = *free_rank == 1 ? "Z" : "Z^" + std::to_string(*free_rank);
    for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + d.str());
    return s.empty() ? "0" : s;
  }
};

/// Cokernel of the relation matrix (one relation per row) on Z^cols.
inline ZModule cokernel(const IntegerMatrix& relations, std::size_t cols) {
  ZModule m;
  const std::vector<Integer> d = relations.empty() ? std::vector<Integer>{} : smith_invariants(relations);
  m.free_rank = cols - d.size();
  for (const auto& x : d) {
    if (x != 1) m.torsion.push_back(x);
  }
  return m;
}

}  // namespace liekring
