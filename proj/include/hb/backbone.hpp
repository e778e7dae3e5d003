#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hb/dag.hpp"
#include "hb/errors.hpp"
#include "hb/ids.hpp"
#include "hb/prune.hpp"
#include "hb/strength.hpp"

namespace hb {

struct backbone_edge {
  std::uint32_t parent, child;
  double alpha;
  double z;
  std::uint64_t n_parent, n_child, n_joint;
};

/**
 * Directed acyclic hierarchy over tags.  Every edge points from the more
 * frequent tag to the less frequent one and carries the strength and
 * z-score it was admitted with.  When parsimonious is set, edges implied
 * by longer paths have been moved to the removed audit list.
 */
struct hierarchical_backbone {
  id_map tags;
  std::uint64_t n_objects = 0;
  double z_th = 0.0;
  double alpha_th = 0.0;
  bool parsimonious = false;
  std::vector<backbone_edge> edges;    // sorted by (parent, child)
  std::vector<backbone_edge> removed;  // audit list from transitive reduction
};

namespace detail {

inline void check_backbone_integrity(const hierarchical_backbone& h) {
  dag::edge_list edges;
  edges.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    if (e.n_parent <= e.n_child)
      throw integrity_error("backbone edge " + h.tags.name(e.parent) + " -> " +
                            h.tags.name(e.child) + " does not descend in frequency");
    edges.emplace_back(e.parent, e.child);
  }
  const auto adj = dag::build_adjacency(h.tags.size(), edges);
  if (!dag::topological_order(adj)) {
    const auto cycle = dag::find_cycle(adj);
    std::string msg = "backbone contains a cycle:";
    for (auto v : cycle) msg += " " + h.tags.name(v);
    throw integrity_error(msg);
  }
}

}  // namespace detail

/**
 * Keep every directed pair whose strength is at least alpha_th, oriented
 * by the sign of the conditional-probability difference.  The threshold
 * must be positive: zero would admit undirected (equal-frequency) pairs.
 */
inline hierarchical_backbone build_backbone(const pruned_graph& g, double alpha_th) {
  if (!(alpha_th > 0.0))
    throw config_error("build_backbone: alpha threshold must be positive");

  hierarchical_backbone h;
  h.tags = g.tags;
  h.n_objects = g.n_objects;
  h.z_th = g.z_th;
  h.alpha_th = alpha_th;

  for (const auto& p : g.pairs) {
    const auto s = hierarchy_strength(g.tag_frequency[p.u], g.tag_frequency[p.v], p.n_uv,
                                      g.degree[p.u], g.degree[p.v], g.k_max);
    if (s.direction == flow_direction::none || s.alpha < alpha_th) continue;
    const auto parent = s.direction == flow_direction::forward ? p.u : p.v;
    const auto child = s.direction == flow_direction::forward ? p.v : p.u;
    h.edges.push_back({parent, child, s.alpha, p.z,
                       g.tag_frequency[parent], g.tag_frequency[child], p.n_uv});
  }
  std::sort(h.edges.begin(), h.edges.end(), [](const auto& a, const auto& b) {
    return a.parent < b.parent || (a.parent == b.parent && a.child < b.child);
  });

  detail::check_backbone_integrity(h);
  return h;
}

/**
 * Transitive reduction: drop every edge whose endpoints stay connected by
 * a longer path.  For a DAG the result is the unique minimal graph with
 * the same reachability.  An edge parent -> child is redundant exactly
 * when some other direct child of parent reaches child, tested against the
 * full graph's reachability table; removing all such edges at once is
 * sound because any witness path can itself be rewritten past its own
 * redundant edges.  Removed edges are appended to the audit list.
 */
inline hierarchical_backbone transitive_reduce(const hierarchical_backbone& h) {
  dag::edge_list edges;
  edges.reserve(h.edges.size());
  for (const auto& e : h.edges) edges.emplace_back(e.parent, e.child);
  const dag::closure reach(h.tags.size(), edges);  // throws on cycles

  std::vector<std::vector<std::uint32_t>> children(h.tags.size());
  for (const auto& e : h.edges) children[e.parent].push_back(e.child);

  hierarchical_backbone out;
  out.tags = h.tags;
  out.n_objects = h.n_objects;
  out.z_th = h.z_th;
  out.alpha_th = h.alpha_th;
  out.parsimonious = true;
  out.removed = h.removed;

  for (const auto& e : h.edges) {
    bool redundant = false;
    for (auto mid : children[e.parent]) {
      if (mid != e.child && reach.reachable(mid, e.child)) {
        redundant = true;
        break;
      }
    }
    (redundant ? out.removed : out.edges).push_back(e);
  }
  return out;
}

}  // namespace hb
