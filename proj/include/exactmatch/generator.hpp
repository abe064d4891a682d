#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "exactmatch/core.hpp"

namespace exactmatch {

/// Reproducibility contract: the same seed, steps and n always produce the
/// same instance, on every platform. The engine is std::mt19937_64 (fully
/// specified by the standard); indices are reduced with plain modulo because
/// std::uniform_int_distribution is implementation-defined.
struct GeneratorSeed {
  std::uint64_t seed = 0;
  long steps = 0;
};

namespace detail {

inline int draw_index(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

// Uniform ordered pair of distinct indices in [0, bound).
inline std::pair<int, int> draw_distinct(std::mt19937_64& rng, int bound) {
  const int a = draw_index(rng, bound);
  int b = draw_index(rng, bound - 1);
  if (b >= a) ++b;
  return {a, b};
}

#ifndef NDEBUG
inline bool line_balanced(const std::vector<std::vector<Color>>& m, int row, int col) {
  const int side = static_cast<int>(m.size());
  int red = 0;
  for (int t = 0; t < side; ++t) red += (row >= 0 ? m[row][t] : m[t][col]) == Color::Red ? 1 : 0;
  return red == side / 2;
}
#endif

}  // namespace detail

/// Two-block instance: red on {0..n-1} x {0..n-1} and {n..2n-1} x {n..2n-1},
/// blue elsewhere. Its blue graph is two disjoint complete n-by-n blocks, so
/// no perfect matching with an odd red count exists.
inline BalancedColoring make_lemma1_instance(int n) {
  const int side = 2 * n;
  std::vector<std::vector<Color>> rows(side, std::vector<Color>(side));
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      rows[i][j] = (i < n) == (j < n) ? Color::Red : Color::Blue;
  return BalancedColoring::validate(rows);
}

/// Edge (i, j) is blue iff (j - i) mod 2n lies in {0, ..., n-1}. The blue
/// graph is connected for n >= 2 (consecutive offsets chain the vertices);
/// at n = 1 the single offset leaves two matched edges, and indeed every
/// n = 1 instance is disconnected.
inline BalancedColoring make_circulant_instance(int n) {
  const int side = 2 * n;
  std::vector<std::vector<Color>> rows(side, std::vector<Color>(side));
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      const int offset = ((j - i) % side + side) % side;
      rows[i][j] = offset < n ? Color::Blue : Color::Red;
    }
  return BalancedColoring::validate(rows);
}

/// Seeded walk of `steps` attempted alternating-rectangle flips. A move picks
/// rows i != i' and columns j != j'; when the 2x2 minor alternates
/// (equal diagonals, opposite colors) all four entries are flipped, which
/// keeps every row and column balance intact. No uniformity of the resulting
/// distribution is claimed.
inline BalancedColoring randomize(const BalancedColoring& c, GeneratorSeed seed) {
  const int side = c.side();
  std::vector<std::vector<Color>> m(side, std::vector<Color>(side));
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) m[i][j] = c.color(i, j);

  std::mt19937_64 rng(seed.seed);
  for (long step = 0; step < seed.steps; ++step) {
    const auto [i, i2] = detail::draw_distinct(rng, side);
    const auto [j, j2] = detail::draw_distinct(rng, side);
    const bool alternating =
        m[i][j] == m[i2][j2] && m[i][j2] == m[i2][j] && m[i][j] != m[i][j2];
    if (!alternating) continue;
    m[i][j] = opposite(m[i][j]);
    m[i][j2] = opposite(m[i][j2]);
    m[i2][j] = opposite(m[i2][j]);
    m[i2][j2] = opposite(m[i2][j2]);
    assert(detail::line_balanced(m, i, -1) && detail::line_balanced(m, i2, -1) &&
           detail::line_balanced(m, -1, j) && detail::line_balanced(m, -1, j2));
  }
  return BalancedColoring::validate(m);
}

/// Seeded row/column relabeling of the two-block instance. The blue graph
/// stays a disjoint union of two complete n-by-n blocks under any relabeling,
/// so the output is guaranteed disconnected.
inline BalancedColoring make_disconnected_instance(int n, std::uint64_t seed) {
  const BalancedColoring base = make_lemma1_instance(n);
  const int side = 2 * n;
  std::vector<int> row_perm(side), col_perm(side);
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = side - 1; i > 0; --i) std::swap(row_perm[i], row_perm[detail::draw_index(rng, i + 1)]);
  for (int j = side - 1; j > 0; --j) std::swap(col_perm[j], col_perm[detail::draw_index(rng, j + 1)]);
  std::vector<std::vector<Color>> rows(side, std::vector<Color>(side));
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) rows[i][j] = base.color(row_perm[i], col_perm[j]);
  return BalancedColoring::validate(rows);
}

}  // namespace exactmatch
