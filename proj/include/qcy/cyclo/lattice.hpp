#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "qcy/cyclo/integer.hpp"

namespace qcy {

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;  // row-major

namespace detail {

inline void require_square(const IntMatrix& h) {
  for (const auto& row : h)
    if (row.size() != h.size()) throw InvalidArgument("matrix must be square");
}

inline void row_combine(IntVector& a, IntVector& b, Int p, Int q, Int r, Int s) {
  // (a, b) <- (p a + q b, r a + s b)
  for (std::size_t k = 0; k < a.size(); ++k) {
    Int na = checked_add(checked_mul(p, a[k]), checked_mul(q, b[k]));
    Int nb = checked_add(checked_mul(r, a[k]), checked_mul(s, b[k]));
    a[k] = na;
    b[k] = nb;
  }
}

}  // namespace detail

/// Diagonal of the Smith normal form of an integer matrix (length min(rows, cols)),
/// each entry non-negative and dividing the next.
inline IntVector elementary_divisors(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  IntVector d(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    // Each pass either finishes the pivot or leaves a remainder of smaller magnitude.
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (!best || std::llabs(a[i][j]) < std::llabs(a[best->first][best->second]))) best = {i, j};
      if (!best) return d;
      std::swap(a[t], a[best->first]);
      for (auto& row : a) std::swap(row[t], row[best->second]);
      const Int p = a[t][t];
      bool done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int q = a[i][t] / p;
        for (std::size_t k = t; k < cols; ++k) a[i][k] = checked_add(a[i][k], -checked_mul(q, a[t][k]));
        if (a[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int q = a[t][j] / p;
        for (std::size_t k = t; k < rows; ++k) a[k][j] = checked_add(a[k][j], -checked_mul(q, a[k][t]));
        if (a[t][j] != 0) done = false;
      }
      if (!done) continue;
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % p != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      for (std::size_t k = t; k < cols; ++k) a[t][k] = checked_add(a[t][k], a[*offender][k]);
    }
    d[t] = std::llabs(a[t][t]);
  }
  return d;
}

/// Size of the image of (Z/NZ)^m under H, from the elementary divisors d_i:
/// prod N / gcd(N, d_i).
inline Int image_size_by_divisors(const IntMatrix& h, Int modulus) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  detail::require_square(h);
  Int size = 1;
  for (Int d : elementary_divisors(h)) size = checked_mul(size, modulus / std::gcd(modulus, d));
  return size;
}

/// Size of the image of (Z/NZ)^m under H by walking every vector. Only for N^m small.
inline Int image_size_by_enumeration(const IntMatrix& h, Int modulus) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  detail::require_square(h);
  const std::size_t m = h.size();
  std::vector<char> seen(static_cast<std::size_t>(ipow(modulus, static_cast<unsigned>(m))), 0);
  IntVector v(m, 0);
  Int count = 0;
  for (;;) {
    Int code = 0;
    for (std::size_t i = 0; i < m; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < m; ++j) s = mod_floor(s + mod_floor(h[i][j], modulus) * v[j], modulus);
      code = code * modulus + s;
    }
    if (!seen[static_cast<std::size_t>(code)]) {
      seen[static_cast<std::size_t>(code)] = 1;
      ++count;
    }
    std::size_t k = 0;
    while (k < m && ++v[k] == modulus) v[k++] = 0;
    if (k == m) break;
  }
  return count;
}

inline constexpr Int kEnumerationLimit = 1'000'000;

/// Cardinality of the image of (Z/NZ)^m under H.
///
/// Computed from the elementary divisors; when N^m <= 10^6 the image is also
/// enumerated and the two counts must agree.
inline Int image_size(const IntMatrix& h, Int modulus) {
  const Int by_divisors = image_size_by_divisors(h, modulus);
  bool small = true;
  Int space = 1;
  for (std::size_t i = 0; i < h.size() && small; ++i) {
    space *= modulus;
    small = space <= kEnumerationLimit;
  }
  if (small && image_size_by_enumeration(h, modulus) != by_divisors)
    throw InternalDefect("image size: enumeration disagrees with elementary divisors");
  return by_divisors;
}

/// Row-style Hermite normal form of the lattice spanned by `generators`
/// (upper triangular, positive pivots, entries above a pivot reduced into [0, pivot)).
/// Zero rows are dropped.
inline IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (rows[pivot_row][c] == 0) {
        std::swap(rows[pivot_row], rows[i]);
        continue;
      }
      auto [g, x, y] = extended_gcd(rows[pivot_row][c], rows[i][c]);
      Int u = rows[pivot_row][c] / g, v = rows[i][c] / g;
      detail::row_combine(rows[pivot_row], rows[i], x, y, -v, u);
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& e : rows[pivot_row]) e = -e;
    const Int p = rows[pivot_row][c];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const Int q = rows[i][c] >= 0 ? rows[i][c] / p : -((-rows[i][c] + p - 1) / p);
      if (q == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = checked_add(rows[i][k], -checked_mul(q, rows[pivot_row][k]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

/// Generators, in Hermite normal form, of {e in Z^m : H e == 0 (mod N)}.
///
/// The lattice is the projection onto the first m coordinates of the integer kernel
/// of [H | N I]. Column-reducing the stacked matrix [[H, N I], [I, 0]] until the top
/// block is echelon leaves m columns with zero top part; their bottoms span the lattice.
inline IntMatrix kernel_lattice(const IntMatrix& h, Int modulus) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  detail::require_square(h);
  const std::size_t m = h.size();
  if (m == 0) return {};
  // Columns of the 2m x 2m stacked matrix, kept as vectors of length 2m.
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m; ++j) {
    IntVector col(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) col[i] = mod_floor(h[i][j], modulus);
    col[m + j] = 1;
    cols.push_back(std::move(col));
  }
  for (std::size_t i = 0; i < m; ++i) {
    IntVector col(2 * m, 0);
    col[i] = modulus;
    cols.push_back(std::move(col));
  }
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = lead + 1; j < cols.size(); ++j) {
      if (cols[j][r] == 0) continue;
      if (cols[lead][r] == 0) {
        std::swap(cols[lead], cols[j]);
        continue;
      }
      auto [g, x, y] = extended_gcd(cols[lead][r], cols[j][r]);
      Int u = cols[lead][r] / g, v = cols[j][r] / g;
      detail::row_combine(cols[lead], cols[j], x, y, -v, u);
    }
    if (cols[lead][r] != 0) ++lead;
  }
  IntMatrix generators;
  for (std::size_t j = lead; j < cols.size(); ++j) generators.emplace_back(cols[j].begin() + static_cast<long>(m), cols[j].end());
  // The lattice contains N Z^m; adding it keeps the HNF entries below N.
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m, 0);
    e[i] = modulus;
    generators.push_back(std::move(e));
  }
  return hermite_normal_form(std::move(generators));
}

/// Membership of v in the lattice spanned by an HNF basis.
inline bool lattice_contains(const IntMatrix& hnf, IntVector v) {
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    for (std::size_t k = 0; k < c; ++k)
      if (v[k] != 0) return false;
    if (v[c] % row[c] != 0) return false;
    const Int q = v[c] / row[c];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * row[k];
  }
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

}  // namespace qcy
