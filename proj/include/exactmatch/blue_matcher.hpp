#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "exactmatch/core.hpp"

namespace exactmatch {

/// One side class of a bipartite graph on 2n + 2n vertices. When extracted
/// from a BalancedColoring the graph is n-regular.
struct BipartiteSubgraph {
  int side = 0;                              // vertices per side
  std::vector<std::vector<int>> adjacency;   // per left vertex, ascending right neighbors
};

/// Spanning subgraph of the blue edges. Adjacency lists are ascending, which
/// makes everything downstream deterministic.
inline BipartiteSubgraph blue_subgraph(const BalancedColoring& c) {
  BipartiteSubgraph g;
  g.side = c.side();
  g.adjacency.resize(g.side);
  for (int i = 0; i < g.side; ++i) {
    g.adjacency[i].reserve(c.half_degree());
    for (int j = 0; j < g.side; ++j)
      if (c.blue(i, j)) g.adjacency[i].push_back(j);
  }
  return g;
}

/// |N(S)| >= |S| for the given left subset. Duplicate indices are ignored.
inline bool check_hall_condition(const BipartiteSubgraph& g, const std::vector<int>& subset) {
  std::vector<char> in_subset(g.side, 0), seen(g.side, 0);
  int size = 0, neighbors = 0;
  for (int u : subset) {
    if (in_subset[u]) continue;
    in_subset[u] = 1;
    ++size;
    for (int v : g.adjacency[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++neighbors;
      }
  }
  return neighbors >= size;
}

namespace detail {

// Hopcroft-Karp with ascending tie-breaking in both the BFS layering and the
// DFS augmentation, so the matching is a deterministic function of the input.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteSubgraph& g)
      : graph_(g),
        match_left_(g.side, kFree),
        match_right_(g.side, kFree),
        dist_(g.side, kInf) {}

  // Returns left -> right, or an incomplete assignment if no perfect matching exists.
  std::vector<int> run() {
    while (bfs()) {
      for (int u = 0; u < graph_.side; ++u)
        if (match_left_[u] == kFree) dfs(u);
    }
    return match_left_;
  }

 private:
  static constexpr int kFree = -1;
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < graph_.side; ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    dist_free_ = kInf;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (dist_[u] >= dist_free_) continue;
      for (int v : graph_.adjacency[u]) {
        const int w = match_right_[v];
        if (w == kFree) {
          if (dist_free_ == kInf) dist_free_ = dist_[u] + 1;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return dist_free_ != kInf;
  }

  bool dfs(int u) {
    for (int v : graph_.adjacency[u]) {
      const int w = match_right_[v];
      const bool extends = w == kFree ? dist_[u] + 1 == dist_free_
                                      : dist_[w] == dist_[u] + 1 && dfs(w);
      if (extends) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteSubgraph& graph_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
  int dist_free_ = kInf;
};

}  // namespace detail

/// Perfect matching using only edges of g. On subgraphs extracted from a
/// valid BalancedColoring one always exists; NoPerfectMatching therefore
/// signals a violated precondition (input not regular).
inline Matching perfect_blue_matching(const BipartiteSubgraph& g) {
  std::vector<int> match = detail::HopcroftKarp(g).run();
  for (int u = 0; u < g.side; ++u)
    if (match[u] < 0)
      throw Error(Errc::NoPerfectMatching,
                  "subgraph has no perfect matching; input was not an n-regular "
                  "extract of a balanced coloring");
  return Matching::from_permutation(std::move(match));
}

}  // namespace exactmatch
