#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "exactmatch/exactmatch.hpp"

namespace testutil {

using namespace exactmatch;

inline BalancedColoring from_strings(const std::vector<std::string>& rows) {
  std::vector<std::vector<Color>> colors;
  colors.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Color> r;
    r.reserve(row.size());
    for (char ch : row) r.push_back(ch == 'R' ? Color::Red : Color::Blue);
    colors.push_back(std::move(r));
  }
  return validate_coloring(colors);
}

// The two-block n = 2 instance: red on {1,2}x{1,2} and {3,4}x{3,4}.
inline BalancedColoring two_block_n2() { return make_lemma1_instance(2); }

inline BalancedColoring random_instance(int n, std::uint64_t seed, long steps = -1) {
  if (steps < 0) steps = 16L * (2 * n) * (2 * n);
  return randomize(make_circulant_instance(n), {seed, steps});
}

// Permutation-sum permanent, the independent cross-check for Ryser.
inline std::uint64_t naive_permanent(const BinaryMatrix& m) {
  if (m.size == 0) return 1;
  std::vector<int> perm(m.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    std::uint64_t prod = 1;
    for (int i = 0; i < m.size && prod != 0; ++i) prod *= m.at(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline BinaryMatrix random_binary_matrix(int size, std::mt19937_64& rng) {
  BinaryMatrix m;
  m.size = size;
  m.cells.resize(static_cast<std::size_t>(size) * size);
  for (auto& cell : m.cells) cell = static_cast<std::uint8_t>(rng() & 1);
  return m;
}

inline BinaryMatrix random_balanced_matrix(int n, std::uint64_t seed) {
  return matrix_from_coloring(random_instance(n, seed));
}

}  // namespace testutil
