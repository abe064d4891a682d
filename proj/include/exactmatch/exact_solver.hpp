#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exactmatch/blue_matcher.hpp"
#include "exactmatch/core.hpp"
#include "exactmatch/oracle.hpp"

namespace exactmatch {

/// Relabeled view of an all-blue perfect matching: position t pairs
/// left_order[t] with right_order[t], and positions 2s, 2s+1 form pair s.
/// Every position edge stays blue through all relabeling swaps.
struct PairDecomposition {
  std::vector<int> left_order;
  std::vector<int> right_order;

  int pair_count() const { return static_cast<int>(left_order.size()) / 2; }
  bool operator==(const PairDecomposition&) const = default;
};

/// Class of a pair by the colors of its two cross edges
/// (left[2s], right[2s+1]) and (left[2s+1], right[2s]).
enum class PairClass { AllBlueCross, SingleRed, DoubleRed };

/// Which position of each pair a relabeling swap exchanges. The swap moves
/// one (left, right) position of pair l and one of pair i wholesale, so the
/// position edges themselves never change color.
enum class SwapPattern : std::uint8_t {
  SecondWithSecond,
  SecondWithFirst,
  FirstWithSecond,
  FirstWithFirst,
};

struct PartnerMatch {
  int pair_index = -1;
  SwapPattern pattern = SwapPattern::SecondWithSecond;
};

struct SwapRecord {
  int pair_l = -1;
  int pair_i = -1;
  SwapPattern pattern = SwapPattern::SecondWithSecond;
};

/// Either a matching realizing the requested red count, or the disconnection
/// certificate proving no such matching exists (odd k only).
class SolveResult {
 public:
  static SolveResult make_found(Matching m, ColorCount count) {
    SolveResult r;
    r.matching_.emplace(std::move(m));
    r.count_ = count;
    return r;
  }
  static SolveResult make_impossible(DisconnectionCertificate cert) {
    SolveResult r;
    r.certificate_.emplace(std::move(cert));
    return r;
  }

  bool found() const { return matching_.has_value(); }
  const Matching& matching() const { return matching_.value(); }
  ColorCount count() const { return count_; }
  const DisconnectionCertificate& certificate() const { return certificate_.value(); }

 private:
  SolveResult() = default;

  std::optional<Matching> matching_;
  ColorCount count_{0, 0};
  std::optional<DisconnectionCertificate> certificate_;
};

/// Positions the matching edges: position t carries the t-th edge of the
/// canonical (left-sorted) matching, consecutive positions grouped in pairs.
inline PairDecomposition decompose(const BalancedColoring& c, const Matching& blue) {
  if (blue.side() != c.side())
    throw Error(Errc::SizeMismatch, "matching side does not match coloring side");
  for (int i = 0; i < c.side(); ++i)
    if (!c.blue(i, blue.right_of(i)))
      throw Error(Errc::NotAllBlue, "matching edge (" + std::to_string(i + 1) + ", " +
                                        std::to_string(blue.right_of(i) + 1) + ") is red");
  PairDecomposition d;
  d.left_order.resize(c.side());
  std::iota(d.left_order.begin(), d.left_order.end(), 0);
  d.right_order = blue.permutation();
  return d;
}

inline PairClass classify_pair(const BalancedColoring& c, const PairDecomposition& d, int s) {
  const int a = 2 * s, b = a + 1;
  const int reds = (c.red(d.left_order[a], d.right_order[b]) ? 1 : 0) +
                   (c.red(d.left_order[b], d.right_order[a]) ? 1 : 0);
  if (reds == 0) return PairClass::AllBlueCross;
  return reds == 1 ? PairClass::SingleRed : PairClass::DoubleRed;
}

/// Diagnostic: all 2n position edges are blue. Holds after decompose and is
/// preserved by every apply_swap.
inline bool position_edges_blue(const BalancedColoring& c, const PairDecomposition& d) {
  for (int t = 0; t < c.side(); ++t)
    if (!c.blue(d.left_order[t], d.right_order[t])) return false;
  return true;
}

namespace detail {

inline std::pair<int, int> swap_positions(int pair_l, int pair_i, SwapPattern p) {
  const bool l_second = p == SwapPattern::SecondWithSecond || p == SwapPattern::SecondWithFirst;
  const bool i_second = p == SwapPattern::SecondWithSecond || p == SwapPattern::FirstWithSecond;
  return {2 * pair_l + (l_second ? 1 : 0), 2 * pair_i + (i_second ? 1 : 0)};
}

// Would exchanging these positions leave BOTH touched pairs with at least one
// red cross edge? Position u leaves pair l (w stays), position v leaves
// pair i (z stays); afterwards pair l holds {w, v} and pair i holds {u, z}.
inline bool swap_helps(const BalancedColoring& c, const PairDecomposition& d, int pair_l,
                       int pair_i, SwapPattern p) {
  const auto [u, v] = swap_positions(pair_l, pair_i, p);
  const int w = u ^ 1, z = v ^ 1;
  const auto& left = d.left_order;
  const auto& right = d.right_order;
  const bool pair_l_gains_red = c.red(left[w], right[v]) || c.red(left[v], right[w]);
  const bool pair_i_gains_red = c.red(left[u], right[z]) || c.red(left[z], right[u]);
  return pair_l_gains_red && pair_i_gains_red;
}

}  // namespace detail

/// Smallest partner pair i != l (and the slot exchange) such that the swap
/// leaves both pairs with a red cross edge. On a pair whose cross edges are
/// all blue, the 2n red edges leaving its four vertices land in 2n - 2
/// two-edge boxes spread over the other pairs, so some box holds a double-red
/// pattern and the scan always succeeds on balanced input.
inline PartnerMatch find_partner(const BalancedColoring& c, const PairDecomposition& d,
                                 int pair_l) {
  static constexpr SwapPattern kPatterns[] = {
      SwapPattern::SecondWithSecond,
      SwapPattern::SecondWithFirst,
      SwapPattern::FirstWithSecond,
      SwapPattern::FirstWithFirst,
  };
  for (int i = 0; i < d.pair_count(); ++i) {
    if (i == pair_l) continue;
    for (SwapPattern p : kPatterns)
      if (detail::swap_helps(c, d, pair_l, i, p)) return {i, p};
  }
  throw Error(Errc::PigeonholeExhausted,
              "no double-red partner for pair " + std::to_string(pair_l + 1) +
                  "; input cannot be a balanced coloring");
}

/// Exchanges one position of pair l with one position of pair i in both
/// orders simultaneously. Applying the same swap twice is the identity.
inline PairDecomposition apply_swap(PairDecomposition d, int pair_l, int pair_i, SwapPattern p) {
  const auto [u, v] = detail::swap_positions(pair_l, pair_i, p);
  std::swap(d.left_order[u], d.left_order[v]);
  std::swap(d.right_order[u], d.right_order[v]);
  return d;
}

/// Repeatedly fixes the lowest all-blue-cross pair via find_partner +
/// apply_swap. Each swap makes both touched pairs non-all-blue and touches
/// nothing else, so the loop performs at most n swaps. An optional trace
/// records every swap for replay in tests.
inline PairDecomposition eliminate_all_blue_pairs(const BalancedColoring& c, PairDecomposition d,
                                                  std::vector<SwapRecord>* trace = nullptr) {
  const int pairs = d.pair_count();
  int swaps = 0;
  for (;;) {
    int l = -1;
    for (int s = 0; s < pairs; ++s)
      if (classify_pair(c, d, s) == PairClass::AllBlueCross) {
        l = s;
        break;
      }
    if (l < 0) return d;
    if (++swaps > pairs)
      throw Error(Errc::PigeonholeExhausted, "elimination exceeded n swaps");
    const PartnerMatch partner = find_partner(c, d, l);
    d = apply_swap(std::move(d), l, partner.pair_index, partner.pattern);
    if (trace) trace->push_back({l, partner.pair_index, partner.pattern});
  }
}

/// Lexicographically smallest ordered position pair (i, j) whose sub-board
/// has three blue edges and one red: (x_i, y_i), (x_j, y_j), (x_i, y_j) blue
/// and (x_j, y_i) red. Rewiring it trades two blue matching edges for one
/// red and one blue, the odd unit when every pair is double-red. Absence
/// means the position board is color-symmetric; on a connected blue graph a
/// single right-vertex interchange then exposes a breaker (see
/// select_matching), and on a disconnected one the board is two complete
/// blocks.
inline std::optional<std::pair<int, int>> find_odd_breaker(const BalancedColoring& c,
                                                           const PairDecomposition& d) {
  const int side = static_cast<int>(d.left_order.size());
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if (i == j) continue;
      if (c.blue(d.left_order[i], d.right_order[j]) &&
          c.red(d.left_order[j], d.right_order[i]))
        return std::make_pair(i, j);
    }
  return std::nullopt;
}

namespace detail {

inline SolveResult finish_selection(const BalancedColoring& c,
                                    std::vector<std::pair<int, int>> edges, int k) {
  Matching m = Matching::from_edges(std::move(edges));
  const ColorCount count = count_colors(c, m);
  if (count.red != k) throw std::logic_error("selection produced the wrong red count");
  return SolveResult::make_found(std::move(m), count);
}

// One red edge from the breaker rewiring, (k - 1) / 2 flipped double-red
// pairs for the rest, blue position edges everywhere else.
inline SolveResult select_with_breaker(const BalancedColoring& c, const PairDecomposition& d,
                                       int k, std::pair<int, int> breaker) {
  const auto [pi, pj] = breaker;
  assert(pi / 2 != pj / 2);
  const auto& left = d.left_order;
  const auto& right = d.right_order;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(c.side());
  edges.emplace_back(left[pj], right[pi]);          // the single red edge
  edges.emplace_back(left[pi], right[pj]);          // blue by the breaker condition
  edges.emplace_back(left[pi ^ 1], right[pi ^ 1]);  // leftover positions keep
  edges.emplace_back(left[pj ^ 1], right[pj ^ 1]);  // their blue edges
  int flips = (k - 1) / 2;                          // untouched pairs are all double-red
  for (int s = 0; s < d.pair_count(); ++s) {
    if (s == pi / 2 || s == pj / 2) continue;
    if (flips > 0) {
      edges.emplace_back(left[2 * s], right[2 * s + 1]);
      edges.emplace_back(left[2 * s + 1], right[2 * s]);
      --flips;
    } else {
      edges.emplace_back(left[2 * s], right[2 * s]);
      edges.emplace_back(left[2 * s + 1], right[2 * s + 1]);
    }
  }
  if (flips != 0)
    throw Error(Errc::InfeasibleParity,
                "not enough double-red pairs for k = " + std::to_string(k));
  return finish_selection(c, std::move(edges), k);
}

// Lowest single-red pair covers an odd k, then double-red pairs (two reds
// each) and further single-red pairs (one each) fill up the count.
inline SolveResult select_with_pairs(const BalancedColoring& c, const PairDecomposition& d,
                                     int k, const std::vector<int>& singles,
                                     const std::vector<int>& doubles) {
  const int n = d.pair_count();
  int red_left = k;
  int odd_single = -1;
  if (k % 2 == 1) {
    odd_single = singles.front();
    red_left -= 1;
  }
  std::vector<char> flip(n, 0);
  if (odd_single >= 0) flip[odd_single] = 1;
  for (int s : doubles) {
    if (red_left < 2) break;
    flip[s] = 1;
    red_left -= 2;
  }
  for (int s : singles) {
    if (red_left < 1) break;
    if (s == odd_single) continue;
    flip[s] = 1;
    red_left -= 1;
  }
  if (red_left != 0)
    throw Error(Errc::InfeasibleParity,
                "selection capacity exhausted for k = " + std::to_string(k));
  const auto& left = d.left_order;
  const auto& right = d.right_order;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(c.side());
  for (int s = 0; s < n; ++s) {
    if (flip[s]) {
      edges.emplace_back(left[2 * s], right[2 * s + 1]);
      edges.emplace_back(left[2 * s + 1], right[2 * s]);
    } else {
      edges.emplace_back(left[2 * s], right[2 * s]);
      edges.emplace_back(left[2 * s + 1], right[2 * s + 1]);
    }
  }
  return finish_selection(c, std::move(edges), k);
}

// Breaker-free boards are color-symmetric over positions. When the blue
// graph is nevertheless connected, some position i has two blue-linked
// positions j and l that are red-linked to each other; exchanging the right
// vertices of i and l keeps all position edges blue and turns (i, j) into a
// breaker. Only the two touched pairs change class, and each keeps at least
// one red cross edge.
inline PairDecomposition interchange_for_breaker(const BalancedColoring& c,
                                                 PairDecomposition d) {
  const int side = static_cast<int>(d.left_order.size());
  auto blue_sym = [&](int a, int b) {
    return c.blue(d.left_order[a], d.right_order[b]) &&
           c.blue(d.left_order[b], d.right_order[a]);
  };
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if (j == i || !blue_sym(i, j)) continue;
      for (int l = 0; l < side; ++l) {
        if (l == i || l == j || !blue_sym(i, l) || blue_sym(j, l)) continue;
        std::swap(d.right_order[i], d.right_order[l]);
        return d;
      }
    }
  throw std::logic_error("symmetric connected board without an intransitive triple");
}

}  // namespace detail

/// Builds a matching with exactly k red edges from an eliminated
/// decomposition (0 <= k <= n). A flipped double-red pair contributes its two
/// red cross edges; a flipped single-red pair contributes one red and one
/// blue cross edge; everything else keeps its blue position edges. Odd k
/// takes the lowest single-red pair first, or the odd breaker when no
/// single-red pair exists; a breaker-free connected board gains one through a
/// right-vertex interchange, and a breaker-free disconnected board yields the
/// certificate.
inline SolveResult select_matching(const BalancedColoring& c, const PairDecomposition& d, int k) {
  const int n = d.pair_count();
  if (k < 0 || k > n)
    throw Error(Errc::KOutOfRange, "select_matching requires 0 <= k <= n, got k = " +
                                       std::to_string(k));
  PairDecomposition board = d;
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<int> singles, doubles;
    for (int s = 0; s < n; ++s) {
      switch (classify_pair(c, board, s)) {
        case PairClass::AllBlueCross:
          throw std::logic_error(
              "pair with two blue cross edges; run eliminate_all_blue_pairs first");
        case PairClass::SingleRed:
          singles.push_back(s);
          break;
        case PairClass::DoubleRed:
          doubles.push_back(s);
          break;
      }
    }
    if (k % 2 != 1 || !singles.empty())
      return detail::select_with_pairs(c, board, k, singles, doubles);
    if (const auto breaker = find_odd_breaker(c, board))
      return detail::select_with_breaker(c, board, k, *breaker);
    const ComponentReport report = blue_components(c);
    if (report.components.size() == 2)
      return SolveResult::make_impossible(certificate_from_components(report));
    board = detail::interchange_for_breaker(c, std::move(board));
    // The adjusted board has a breaker (or fresh single-red pairs), so the
    // next iteration takes a terminal branch.
  }
  throw std::logic_error("breaker interchange did not converge");
}

namespace detail {

// Exhaustive search in lexicographic permutation order; (2n)! <= 24 here.
inline SolveResult exhaustive_solve(const BalancedColoring& c, int k) {
  const int side = c.side();
  std::vector<int> perm(side);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int red = 0;
    for (int i = 0; i < side; ++i) red += c.red(i, perm[i]) ? 1 : 0;
    if (red == k) {
      Matching m = Matching::from_permutation(perm);
      const ColorCount count = count_colors(c, m);
      return SolveResult::make_found(std::move(m), count);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Only odd k on a disconnected blue graph reaches this point.
  const ComponentReport report = blue_components(c);
  if (report.components.size() != 2)
    throw std::logic_error("no matching found although the blue graph is connected");
  return SolveResult::make_impossible(certificate_from_components(report));
}

// Full pipeline for k <= n.
inline SolveResult solve_reduced(const BalancedColoring& c, int k) {
  if (c.half_degree() <= 2) return exhaustive_solve(c, k);
  if (k % 2 == 1) {
    // Disconnection is the one obstruction for odd k, so check it up front;
    // the constructive path below then never has to fail.
    const ComponentReport report = blue_components(c);
    if (report.components.size() == 2)
      return SolveResult::make_impossible(certificate_from_components(report));
  }
  const Matching blue = perfect_blue_matching(blue_subgraph(c));
  PairDecomposition d = eliminate_all_blue_pairs(c, decompose(c, blue));
  return select_matching(c, d, k);
}

}  // namespace detail

/// Perfect matching with exactly k red edges, or the disconnection
/// certificate when k is odd and the blue graph is two complete blocks.
/// k > n is reduced to 2n - k on the color-swapped instance.
inline SolveResult solve(const BalancedColoring& c, int k) {
  const int side = c.side();
  const int n = c.half_degree();
  if (k < 0 || k > side)
    throw Error(Errc::KOutOfRange,
                "k must lie in 0..2n = " + std::to_string(side) + ", got " + std::to_string(k));

  SolveResult result = k <= n ? detail::solve_reduced(c, k)
                              : detail::solve_reduced(c.flipped(), side - k);
  if (result.found()) {
    const ColorCount count = count_colors(c, result.matching());
    if (count.red != k) throw std::logic_error("solver returned the wrong red count");
    return SolveResult::make_found(result.matching(), count);
  }

  DisconnectionCertificate cert = result.certificate();
  // A certificate computed on the color-swapped instance describes the red
  // blocks of the original; exchanging b1 and b2 reorients it to the blue ones.
  if (k > n) std::swap(cert.b1, cert.b2);
  if (!verify_certificate(c, cert))
    throw std::logic_error("solver produced a certificate that does not verify");
  return SolveResult::make_impossible(std::move(cert));
}

}  // namespace exactmatch
