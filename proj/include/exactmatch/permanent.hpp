#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactmatch/core.hpp"
#include "exactmatch/exact_solver.hpp"

namespace exactmatch {

/// Square 0/1 matrix. Zero-selection inputs additionally have every row and
/// column summing to size/2; ryser_permanent and bregman_minc_bound accept
/// arbitrary square 0/1 matrices.
struct BinaryMatrix {
  int size = 0;
  std::vector<std::uint8_t> cells;  // row-major

  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    BinaryMatrix m;
    m.size = static_cast<int>(rows.size());
    m.cells.reserve(static_cast<std::size_t>(m.size) * m.size);
    for (int i = 0; i < m.size; ++i) {
      if (static_cast<int>(rows[i].size()) != m.size)
        throw Error(Errc::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                         std::to_string(rows[i].size()) + " entries, expected " +
                                         std::to_string(m.size),
                    i + 1);
      for (int v : rows[i]) {
        if (v != 0 && v != 1)
          throw Error(Errc::ParseError, "matrix entries must be 0 or 1", i + 1);
        m.cells.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return m;
  }

  int at(int r, int c) const { return cells[static_cast<std::size_t>(r) * size + c]; }

  std::vector<int> row_sums() const {
    std::vector<int> sums(size, 0);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) sums[i] += at(i, j);
    return sums;
  }

  /// Submatrix after deleting the given rows and columns.
  BinaryMatrix without(const std::vector<int>& drop_rows, const std::vector<int>& drop_cols) const {
    std::vector<char> row_gone(size, 0), col_gone(size, 0);
    for (int r : drop_rows) row_gone[r] = 1;
    for (int c : drop_cols) col_gone[c] = 1;
    BinaryMatrix minor;
    minor.size = size - static_cast<int>(drop_rows.size());
    for (int i = 0; i < size; ++i) {
      if (row_gone[i]) continue;
      for (int j = 0; j < size; ++j)
        if (!col_gone[j]) minor.cells.push_back(static_cast<std::uint8_t>(at(i, j)));
    }
    return minor;
  }

  bool operator==(const BinaryMatrix&) const = default;
};

/// Fixed mapping: 1-entries are blue edges, 0-entries red, so a nonzero
/// permanent is exactly an all-blue perfect matching. Requires balanced
/// row/column sums.
inline BalancedColoring coloring_from_matrix(const BinaryMatrix& m) {
  if (m.size == 0 || m.size % 2 != 0)
    throw Error(Errc::Unbalanced, "matrix size must be even and positive, got " +
                                      std::to_string(m.size));
  const int n = m.size / 2;
  std::vector<int> col_sums(m.size, 0);
  for (int i = 0; i < m.size; ++i) {
    int row_sum = 0;
    for (int j = 0; j < m.size; ++j) {
      row_sum += m.at(i, j);
      col_sums[j] += m.at(i, j);
    }
    if (row_sum != n)
      throw Error(Errc::Unbalanced, "row " + std::to_string(i + 1) + " sums to " +
                                        std::to_string(row_sum) + ", expected " +
                                        std::to_string(n),
                  i + 1);
  }
  for (int j = 0; j < m.size; ++j)
    if (col_sums[j] != n)
      throw Error(Errc::Unbalanced, "column " + std::to_string(j + 1) + " sums to " +
                                        std::to_string(col_sums[j]) + ", expected " +
                                        std::to_string(n),
                  j + 1);
  std::vector<std::vector<Color>> rows(m.size, std::vector<Color>(m.size));
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) rows[i][j] = m.at(i, j) == 1 ? Color::Blue : Color::Red;
  return BalancedColoring::validate(rows);
}

inline BinaryMatrix matrix_from_coloring(const BalancedColoring& c) {
  BinaryMatrix m;
  m.size = c.side();
  m.cells.reserve(static_cast<std::size_t>(m.size) * m.size);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) m.cells.push_back(c.blue(i, j) ? 1 : 0);
  return m;
}

/// Exact permanent by inclusion-exclusion over column subsets, walked in
/// Gray-code order so each step updates the row sums by one column. Integer
/// arithmetic throughout; guarded at size <= 24.
inline std::uint64_t ryser_permanent(const BinaryMatrix& m) {
  const int n = m.size;
  if (n > 24)
    throw Error(Errc::TooLarge, "permanent evaluation is limited to size <= 24, got " +
                                    std::to_string(n));
  if (n == 0) return 1;

  std::vector<std::int64_t> row_sum(n, 0);
  __int128 total = 0;
  std::uint32_t subset = 0;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t iter = 1; iter < limit; ++iter) {
    const std::uint32_t next = iter ^ (iter >> 1);
    const std::uint32_t changed = next ^ subset;
    const int col = std::countr_zero(changed);
    const int delta = (next & changed) ? 1 : -1;
    for (int i = 0; i < n; ++i) row_sum[i] += delta * m.at(i, col);
    subset = next;

    __int128 prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    // per(A) = sum over nonempty S of (-1)^(n - |S|) * prod_i rowsum_i(S)
    if ((n - std::popcount(next)) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  if (total < 0 || total > static_cast<__int128>(UINT64_MAX))
    throw std::overflow_error("permanent does not fit in 64 bits");
  return static_cast<std::uint64_t>(total);
}

/// Row-sum bound prod_i (r_i!)^(1/r_i); an all-zero row contributes the
/// empty-product factor 1.
inline double bregman_minc_bound(const BinaryMatrix& m) {
  double bound = 1.0;
  for (int r : m.row_sums()) {
    if (r == 0) continue;
    double factorial = 1.0;
    for (int t = 2; t <= r; ++t) factorial *= t;
    bound *= std::pow(factorial, 1.0 / r);
  }
  return bound;
}

/// k selected zero entries plus the 2n-k one-entries witnessing that the
/// minor left after deleting the selected rows and columns has nonzero
/// permanent. Both lists are sorted by row.
struct ZeroSelection {
  std::vector<std::pair<int, int>> zeros;
  std::vector<std::pair<int, int>> ones_witness;
};

/// Runs the matching solver for k red edges on the 1=blue/0=red coloring;
/// the red matching edges are the selected zeros and the blue ones form a
/// permutation of the minor, so its permanent is positive. k must be even
/// and at most size/2, which makes the matching always exist.
inline ZeroSelection select_zero_entries(const BinaryMatrix& m, int k) {
  const int n = m.size / 2;
  if (k < 0 || k > n || k % 2 != 0)
    throw Error(Errc::KOddOrOutOfRange,
                "k must be even with 0 <= k <= " + std::to_string(n) + ", got " +
                    std::to_string(k));
  const BalancedColoring c = coloring_from_matrix(m);
  const SolveResult result = solve(c, k);
  if (!result.found())
    throw std::logic_error("even red counts are always attainable on balanced input");
  ZeroSelection out;
  for (const auto& [i, j] : result.matching().edges()) {
    if (m.at(i, j) == 0)
      out.zeros.emplace_back(i, j);
    else
      out.ones_witness.emplace_back(i, j);
  }
  if (static_cast<int>(out.zeros.size()) != k)
    throw std::logic_error("zero selection does not match the requested k");
  return out;
}

}  // namespace exactmatch
