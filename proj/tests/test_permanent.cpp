#include <cmath>

#include <doctest.h>

#include "helpers.hpp"

using namespace exactmatch;

namespace {

// 1 = blue image of the two-block n=2 instance.
BinaryMatrix two_block_matrix() {
  return BinaryMatrix::from_rows({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}});
}

}  // namespace

TEST_SUITE_BEGIN("permanent");

TEST_CASE("ryser on tiny matrices") {
  CHECK(ryser_permanent(BinaryMatrix::from_rows({{0, 1}, {1, 0}})) == 1);
  CHECK(ryser_permanent(BinaryMatrix::from_rows({{1, 1}, {1, 1}})) == 2);
  CHECK(ryser_permanent(BinaryMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(ryser_permanent(BinaryMatrix{}) == 1);
  CHECK(ryser_permanent(BinaryMatrix::from_rows({{0}})) == 0);
}

TEST_CASE("ryser counts the all-blue matchings of the two-block instance") {
  const BinaryMatrix m = two_block_matrix();
  CHECK(ryser_permanent(m) == 4);
  CHECK(ryser_permanent(m) == enumerate_spectrum(testutil::two_block_n2()).counts[0]);
}

TEST_CASE("ryser agrees with the permutation-sum oracle") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 200; ++round) {
    const int size = 1 + static_cast<int>(rng() % 7);
    const BinaryMatrix m = testutil::random_binary_matrix(size, rng);
    CHECK(ryser_permanent(m) == testutil::naive_permanent(m));
  }
}

TEST_CASE("ryser guard rejects size > 24") {
  BinaryMatrix m;
  m.size = 25;
  m.cells.assign(25 * 25, 1);
  try {
    ryser_permanent(m);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("row-sum bound on the two-block matrix is exactly 4") {
  CHECK(bregman_minc_bound(two_block_matrix()) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("an all-zero row contributes factor 1 to the bound") {
  const BinaryMatrix m = BinaryMatrix::from_rows({{0, 0}, {1, 1}});
  CHECK(bregman_minc_bound(m) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(ryser_permanent(m) == 0);
}

TEST_CASE("the permanent never exceeds the row-sum bound") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const int size = 1 + static_cast<int>(rng() % 7);
    const BinaryMatrix m = testutil::random_binary_matrix(size, rng);
    const double permanent = static_cast<double>(ryser_permanent(m));
    CHECK(permanent <= bregman_minc_bound(m) * (1.0 + 1e-9) + 1e-9);
  }
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const BinaryMatrix m = testutil::random_balanced_matrix(n, seed);
      const double permanent = static_cast<double>(ryser_permanent(m));
      CHECK(permanent <= bregman_minc_bound(m) * (1.0 + 1e-9) + 1e-9);
    }
}

TEST_CASE("coloring_from_matrix maps 1 to blue and 0 to red") {
  CHECK(coloring_from_matrix(two_block_matrix()) == testutil::two_block_n2());
}

TEST_CASE("coloring_from_matrix rejects unbalanced matrices") {
  try {
    coloring_from_matrix(BinaryMatrix::from_rows({{1, 1}, {1, 1}}));
    FAIL("expected Unbalanced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Unbalanced);
  }
  CHECK_THROWS_AS(coloring_from_matrix(BinaryMatrix::from_rows({{1}})), Error);
}

TEST_CASE("matrix and coloring views round-trip") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const BinaryMatrix m = testutil::random_balanced_matrix(n, seed);
      CHECK(matrix_from_coloring(coloring_from_matrix(m)) == m);
    }
}

TEST_CASE("select_zero_entries on the two-block matrix") {
  const BinaryMatrix m = two_block_matrix();
  const ZeroSelection selection = select_zero_entries(m, 2);
  REQUIRE(selection.zeros.size() == 2);
  CHECK(selection.ones_witness.size() == 2);
  std::vector<int> rows, cols;
  for (const auto& [r, c] : selection.zeros) {
    CHECK(m.at(r, c) == 0);
    rows.push_back(r);
    cols.push_back(c);
  }
  CHECK(rows[0] != rows[1]);
  CHECK(cols[0] != cols[1]);
  CHECK(ryser_permanent(m.without(rows, cols)) > 0);
}

TEST_CASE("select_zero_entries with k = 0 leaves a matrix of positive permanent") {
  const ZeroSelection selection = select_zero_entries(two_block_matrix(), 0);
  CHECK(selection.zeros.empty());
  CHECK(selection.ones_witness.size() == 4);
  CHECK(ryser_permanent(two_block_matrix()) > 0);
}

TEST_CASE("select_zero_entries rejects odd or out-of-range k") {
  const BinaryMatrix m = two_block_matrix();
  for (int k : {1, -2, 4}) {
    try {
      select_zero_entries(m, k);
      FAIL("expected KOddOrOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::KOddOrOutOfRange);
    }
  }
}

TEST_CASE("select_zero_entries keeps the minor's permanent positive on random matrices") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const BinaryMatrix m = testutil::random_balanced_matrix(n, seed);
      for (int k = 0; k <= n; k += 2) {
        const ZeroSelection selection = select_zero_entries(m, k);
        REQUIRE(static_cast<int>(selection.zeros.size()) == k);
        std::vector<int> rows, cols;
        std::vector<char> row_seen(m.size, 0), col_seen(m.size, 0);
        for (const auto& [r, c] : selection.zeros) {
          CHECK(m.at(r, c) == 0);
          CHECK_FALSE(row_seen[r]);
          CHECK_FALSE(col_seen[c]);
          row_seen[r] = col_seen[c] = 1;
          rows.push_back(r);
          cols.push_back(c);
        }
        const BinaryMatrix minor = m.without(rows, cols);
        CHECK(ryser_permanent(minor) > 0);
        // The witness edges form a permutation of the minor's one-entries.
        CHECK(static_cast<int>(selection.ones_witness.size()) == m.size - k);
        for (const auto& [r, c] : selection.ones_witness) CHECK(m.at(r, c) == 1);
      }
    }
}

TEST_SUITE_END();
