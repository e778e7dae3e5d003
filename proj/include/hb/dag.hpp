#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hb/errors.hpp"

namespace hb::dag {

using edge_list = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
using adjacency = std::vector<std::vector<std::uint32_t>>;

inline adjacency build_adjacency(std::uint32_t n_nodes, const edge_list& edges) {
  adjacency adj(n_nodes);
  for (const auto& [from, to] : edges) {
    if (from >= n_nodes || to >= n_nodes)
      throw domain_error("build_adjacency: edge endpoint out of range");
    adj[from].push_back(to);
  }
  return adj;
}

// Kahn's algorithm.  Returns std::nullopt when the graph has a cycle.
inline std::optional<std::vector<std::uint32_t>> topological_order(const adjacency& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  std::vector<std::uint32_t> indegree(n, 0);
  for (const auto& out : adj)
    for (auto to : out) ++indegree[to];

  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::uint32_t v = 0; v < n; ++v)
    if (indegree[v] == 0) queue.push_back(v);

  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    order.push_back(v);
    for (auto to : adj[v])
      if (--indegree[to] == 0) queue.push_back(to);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

// One directed cycle, as a node sequence whose last edge returns to the
// first node.  Empty when the graph is acyclic.
inline std::vector<std::uint32_t> find_cycle(const adjacency& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  enum : std::uint8_t { unseen, active, done };
  std::vector<std::uint8_t> state(n, unseen);
  std::vector<std::uint32_t> parent(n, 0);

  for (std::uint32_t root = 0; root < n; ++root) {
    if (state[root] != unseen) continue;
    // Iterative DFS; stack holds (node, next child index).
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
    state[root] = active;
    while (!stack.empty()) {
      auto& [v, child] = stack.back();
      if (child == adj[v].size()) {
        state[v] = done;
        stack.pop_back();
        continue;
      }
      const auto to = adj[v][child++];
      if (state[to] == active) {
        std::vector<std::uint32_t> cycle{to};
        for (auto u = v; u != to; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (state[to] == unseen) {
        state[to] = active;
        parent[to] = v;
        stack.emplace_back(to, 0);
      }
    }
  }
  return {};
}

/**
 * Dense reachability table for a DAG.  reachable(u, v) is true when a
 * directed path of one or more edges leads from u to v; nodes do not reach
 * themselves.  Rows are filled in reverse topological order, so the build
 * touches each edge once plus one row-OR per edge.
 */
class closure {
 public:
  closure() = default;

  closure(std::uint32_t n_nodes, const edge_list& edges) : n_(n_nodes) {
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    const auto adj = build_adjacency(n_nodes, edges);
    const auto order = topological_order(adj);
    if (!order) throw integrity_error("closure: graph has a cycle");
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
      const auto u = *it;
      auto* row_u = row(u);
      for (auto v : adj[u]) {
        row_u[v / 64] |= 1ull << (v % 64);
        const auto* row_v = row(v);
        for (std::size_t w = 0; w < words_; ++w) row_u[w] |= row_v[w];
      }
    }
  }

  bool reachable(std::uint32_t u, std::uint32_t v) const {
    if (u >= n_ || v >= n_) throw domain_error("closure::reachable: node out of range");
    return (row(u)[v / 64] >> (v % 64)) & 1u;
  }

  // Number of ordered pairs (u, v) with u != v and u reaching v.
  std::uint64_t reachable_pair_count() const {
    std::uint64_t total = 0;
    for (auto word : bits_) total += static_cast<std::uint64_t>(__builtin_popcountll(word));
    return total;
  }

  std::uint32_t size() const { return n_; }

 private:
  const std::uint64_t* row(std::uint32_t u) const { return bits_.data() + std::size_t(u) * words_; }
  std::uint64_t* row(std::uint32_t u) { return bits_.data() + std::size_t(u) * words_; }

  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace hb::dag
