#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exactmatch {

/// Edge color in a two-colored K_{2n,2n}.
enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

/// Failure codes carried by Error.
enum class Errc {
  NotSquare,
  OddSize,
  UnbalancedRow,
  UnbalancedColumn,
  SizeMismatch,
  NotAPermutation,
  NoPerfectMatching,
  NotAllBlue,
  PigeonholeExhausted,
  InfeasibleParity,
  KOutOfRange,
  TooLarge,
  NotTwoComponents,
  Unbalanced,
  KOddOrOutOfRange,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, long where = -1)
      : std::runtime_error(message), code_(code), where_(where) {}

  Errc code() const { return code_; }
  /// 1-based row/column/line the failure points at, or -1 when not localized.
  long where() const { return where_; }

 private:
  Errc code_;
  long where_;
};

/// Red/blue coloring of the complete bipartite graph K_{2n,2n} in which every
/// vertex meets exactly n red and n blue edges. color(i, j) is the color of
/// the edge between left vertex i and right vertex j. The API is 0-based;
/// file formats and printed output are 1-based.
class BalancedColoring {
 public:
  /// Checks squareness, even side and per-row/per-column balance.
  static BalancedColoring validate(const std::vector<std::vector<Color>>& rows) {
    const int side = static_cast<int>(rows.size());
    if (side == 0) throw Error(Errc::NotSquare, "coloring is empty");
    for (int i = 0; i < side; ++i) {
      if (static_cast<int>(rows[i].size()) != side)
        throw Error(Errc::NotSquare,
                    "row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(side),
                    i + 1);
    }
    if (side % 2 != 0)
      throw Error(Errc::OddSize, "side must be even, got " + std::to_string(side));
    const int n = side / 2;
    for (int i = 0; i < side; ++i) {
      int red = 0;
      for (int j = 0; j < side; ++j) red += rows[i][j] == Color::Red ? 1 : 0;
      if (red != n)
        throw Error(Errc::UnbalancedRow,
                    "row " + std::to_string(i + 1) + " has " + std::to_string(red) +
                        " red entries, expected " + std::to_string(n),
                    i + 1);
    }
    for (int j = 0; j < side; ++j) {
      int red = 0;
      for (int i = 0; i < side; ++i) red += rows[i][j] == Color::Red ? 1 : 0;
      if (red != n)
        throw Error(Errc::UnbalancedColumn,
                    "column " + std::to_string(j + 1) + " has " + std::to_string(red) +
                        " red entries, expected " + std::to_string(n),
                    j + 1);
    }
    std::vector<Color> cells;
    cells.reserve(static_cast<std::size_t>(side) * side);
    for (const auto& row : rows) cells.insert(cells.end(), row.begin(), row.end());
    return BalancedColoring(n, std::move(cells));
  }

  int half_degree() const { return n_; }
  int side() const { return 2 * n_; }

  Color color(int left, int right) const {
    return cells_[static_cast<std::size_t>(left) * side() + right];
  }
  bool red(int left, int right) const { return color(left, right) == Color::Red; }
  bool blue(int left, int right) const { return color(left, right) == Color::Blue; }

  /// The same instance with the two colors exchanged. Balance is preserved,
  /// so no revalidation happens.
  BalancedColoring flipped() const {
    std::vector<Color> cells(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) cells[i] = opposite(cells_[i]);
    return BalancedColoring(n_, std::move(cells));
  }

  bool operator==(const BalancedColoring&) const = default;

 private:
  BalancedColoring(int n, std::vector<Color> cells) : n_(n), cells_(std::move(cells)) {}

  int n_;
  std::vector<Color> cells_;
};

inline BalancedColoring validate_coloring(const std::vector<std::vector<Color>>& rows) {
  return BalancedColoring::validate(rows);
}

/// Perfect matching of K_{2n,2n}, stored as the permutation sending each left
/// vertex to its partner. The edge list (i, right_of(i)) sorted by left index
/// is the canonical form used for equality.
class Matching {
 public:
  static Matching from_permutation(std::vector<int> right_of) {
    const int side = static_cast<int>(right_of.size());
    std::vector<char> seen(side, 0);
    for (int i = 0; i < side; ++i) {
      const int j = right_of[i];
      if (j < 0 || j >= side || seen[j])
        throw Error(Errc::NotAPermutation,
                    "right indices are not a permutation of 1.." + std::to_string(side));
      seen[j] = 1;
    }
    return Matching(std::move(right_of));
  }

  static Matching from_edges(const std::vector<std::pair<int, int>>& edges) {
    const int side = static_cast<int>(edges.size());
    std::vector<int> right_of(side, -1);
    for (const auto& [i, j] : edges) {
      if (i < 0 || i >= side || right_of[i] != -1)
        throw Error(Errc::NotAPermutation,
                    "left indices are not a permutation of 1.." + std::to_string(side));
      right_of[i] = j;
    }
    return from_permutation(std::move(right_of));
  }

  int side() const { return static_cast<int>(right_of_.size()); }
  int right_of(int left) const { return right_of_[left]; }
  const std::vector<int>& permutation() const { return right_of_; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(right_of_.size());
    for (int i = 0; i < side(); ++i) out.emplace_back(i, right_of_[i]);
    return out;
  }

  bool operator==(const Matching&) const = default;

 private:
  explicit Matching(std::vector<int> right_of) : right_of_(std::move(right_of)) {}

  std::vector<int> right_of_;
};

/// Red/blue split of a matching's edges under a coloring; red + blue = 2n.
struct ColorCount {
  int red = 0;
  int blue = 0;
  bool operator==(const ColorCount&) const = default;
};

inline ColorCount count_colors(const BalancedColoring& c, const Matching& m) {
  if (m.side() != c.side())
    throw Error(Errc::SizeMismatch, "matching has side " + std::to_string(m.side()) +
                                        ", coloring has side " + std::to_string(c.side()));
  int red = 0;
  for (int i = 0; i < c.side(); ++i) red += c.red(i, m.right_of(i)) ? 1 : 0;
  return {red, c.side() - red};
}

/// Witness that the blue graph splits into two complete n-by-n blocks: every
/// edge inside (a1, b1) and (a2, b2) is blue, every edge across is red. This
/// is the unique obstruction to perfect matchings with an odd red count.
struct DisconnectionCertificate {
  std::vector<int> a1, a2;  // left index sets, size n each
  std::vector<int> b1, b2;  // right index sets, size n each
  bool operator==(const DisconnectionCertificate&) const = default;
};

/// True iff all 4n^2 edges match the certificate's block pattern exactly.
/// Malformed partitions (wrong sizes, overlaps, out-of-range indices) yield
/// false rather than an error.
inline bool verify_certificate(const BalancedColoring& c, const DisconnectionCertificate& cert) {
  const int side = c.side();
  const int n = c.half_degree();
  if (static_cast<int>(cert.a1.size()) != n || static_cast<int>(cert.a2.size()) != n ||
      static_cast<int>(cert.b1.size()) != n || static_cast<int>(cert.b2.size()) != n)
    return false;
  std::vector<int> left_block(side, -1), right_block(side, -1);
  auto assign = [side](const std::vector<int>& ids, std::vector<int>& blocks, int tag) {
    for (int v : ids) {
      if (v < 0 || v >= side || blocks[v] != -1) return false;
      blocks[v] = tag;
    }
    return true;
  };
  if (!assign(cert.a1, left_block, 0) || !assign(cert.a2, left_block, 1) ||
      !assign(cert.b1, right_block, 0) || !assign(cert.b2, right_block, 1))
    return false;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      const Color expect = left_block[i] == right_block[j] ? Color::Blue : Color::Red;
      if (c.color(i, j) != expect) return false;
    }
  return true;
}

}  // namespace exactmatch
