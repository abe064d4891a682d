#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "exactmatch/blue_matcher.hpp"
#include "exactmatch/core.hpp"

namespace exactmatch {

/// counts[k] = number of perfect matchings with exactly k red edges.
struct Spectrum {
  std::vector<std::uint64_t> counts;  // indices 0..2n

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
  }
};

/// Brute-force tally over all (2n)! permutations, in lexicographic order.
/// Hard guard at n <= 5; beyond that the enumeration is not a desk-scale
/// oracle anymore.
inline Spectrum enumerate_spectrum(const BalancedColoring& c) {
  if (c.half_degree() > 5)
    throw Error(Errc::TooLarge, "spectrum enumeration is limited to n <= 5, got n = " +
                                    std::to_string(c.half_degree()));
  const int side = c.side();
  Spectrum s;
  s.counts.assign(side + 1, 0);
  std::vector<int> perm(side);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int red = 0;
    for (int i = 0; i < side; ++i) red += c.red(i, perm[i]) ? 1 : 0;
    ++s.counts[red];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

/// Connected components of the blue graph, each listed by its left and right
/// vertex sets (ascending). Components are ordered by smallest left vertex.
struct ComponentReport {
  struct Component {
    std::vector<int> left;
    std::vector<int> right;
  };
  std::vector<Component> components;
};

inline ComponentReport blue_components(const BalancedColoring& c) {
  const int side = c.side();
  const BipartiteSubgraph g = blue_subgraph(c);
  std::vector<std::vector<int>> right_adjacency(side);
  for (int i = 0; i < side; ++i)
    for (int j : g.adjacency[i]) right_adjacency[j].push_back(i);

  ComponentReport report;
  std::vector<char> left_seen(side, 0), right_seen(side, 0);
  for (int start = 0; start < side; ++start) {
    if (left_seen[start]) continue;
    ComponentReport::Component comp;
    std::vector<std::pair<bool, int>> stack{{true, start}};  // (is_left, vertex)
    left_seen[start] = 1;
    while (!stack.empty()) {
      const auto [is_left, v] = stack.back();
      stack.pop_back();
      if (is_left) {
        comp.left.push_back(v);
        for (int w : g.adjacency[v])
          if (!right_seen[w]) {
            right_seen[w] = 1;
            stack.emplace_back(false, w);
          }
      } else {
        comp.right.push_back(v);
        for (int w : right_adjacency[v])
          if (!left_seen[w]) {
            left_seen[w] = 1;
            stack.emplace_back(true, w);
          }
      }
    }
    std::sort(comp.left.begin(), comp.left.end());
    std::sort(comp.right.begin(), comp.right.end());
    report.components.push_back(std::move(comp));
  }
  // Every right vertex of a balanced coloring has blue degree n >= 1, so all
  // of them were reached above; an isolated right vertex can only appear on
  // hand-crafted inputs and would mean the traversal missed a component.
  for (int j = 0; j < side; ++j)
    if (!right_seen[j]) {
      report.components.push_back({{}, {j}});
      right_seen[j] = 1;
    }
  return report;
}

/// The A/B partition read off a two-component blue graph. The component
/// containing the smallest left vertex provides (a1, b1).
inline DisconnectionCertificate certificate_from_components(const ComponentReport& r) {
  if (r.components.size() != 2)
    throw Error(Errc::NotTwoComponents, "blue graph has " + std::to_string(r.components.size()) +
                                            " components, certificate needs exactly 2");
  DisconnectionCertificate cert;
  cert.a1 = r.components[0].left;
  cert.b1 = r.components[0].right;
  cert.a2 = r.components[1].left;
  cert.b2 = r.components[1].right;
  return cert;
}

}  // namespace exactmatch
