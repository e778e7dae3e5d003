#pragma once

// Shared helpers for the test binaries: brute-force oracles kept
// deliberately independent of the library's own algorithms.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hb/dag.hpp"
#include "hb/hierarchy.hpp"
#include "hb/rng.hpp"

namespace test_support {

// Reachability by plain DFS, one source at a time.  reach[u][v] is true
// when a path of at least one edge leads from u to v.
inline std::vector<std::vector<bool>> brute_reachability(std::uint32_t n,
                                                         const hb::dag::edge_list& edges) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [from, to] : edges) adj[from].push_back(to);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::uint32_t src = 0; src < n; ++src) {
    std::vector<std::uint32_t> stack{src};
    std::vector<bool> seen(n, false);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto to : adj[v]) {
        if (seen[to]) continue;
        seen[to] = true;
        reach[src][to] = true;
        stack.push_back(to);
      }
    }
  }
  return reach;
}

// Random DAG: flip a coin for each pair (i, j), i < j, then relabel the
// nodes with a random permutation so edge direction does not leak node
// order.
inline hb::dag::edge_list random_dag(std::uint32_t n, double p_edge, hb::split_rng& rng) {
  std::vector<std::uint32_t> label(n);
  for (std::uint32_t i = 0; i < n; ++i) label[i] = i;
  for (std::uint32_t i = n; i > 1; --i)
    std::swap(label[i - 1], label[rng.below(i)]);

  hb::dag::edge_list edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.next_double() < p_edge) edges.emplace_back(label[i], label[j]);
  return edges;
}

// Balanced tree with the given branching factor and number of levels
// below the root; terms are named n0, n1, ... in breadth-first order.
inline hb::reference_hierarchy balanced_tree(std::uint32_t branching, std::uint32_t levels) {
  hb::reference_hierarchy h;
  std::uint32_t next = 0;
  h.terms.intern("n" + std::to_string(next++));
  std::vector<std::uint32_t> frontier{0};
  for (std::uint32_t level = 0; level < levels; ++level) {
    std::vector<std::uint32_t> next_frontier;
    for (const auto parent : frontier)
      for (std::uint32_t b = 0; b < branching; ++b) {
        const auto child = h.terms.intern("n" + std::to_string(next++));
        h.edges.push_back({parent, child, ""});
        next_frontier.push_back(child);
      }
    frontier = std::move(next_frontier);
  }
  h.validate();
  return h;
}

// Shortest undirected distances from one source, by breadth-first search.
inline std::vector<std::uint32_t> bfs_undirected(const hb::reference_hierarchy& h,
                                                 std::uint32_t source) {
  const auto adj = h.undirected_adjacency();
  constexpr auto unreached = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> dist(h.terms.size(), unreached);
  dist[source] = 0;
  std::vector<std::uint32_t> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (const auto to : adj[v])
      if (dist[to] == unreached) {
        dist[to] = dist[v] + 1;
        queue.push_back(to);
      }
  }
  return dist;
}

}  // namespace test_support
