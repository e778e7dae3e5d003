#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hb/dag.hpp"
#include "hb/errors.hpp"
#include "hb/ids.hpp"

namespace hb {

struct hierarchy_edge {
  std::uint32_t parent, child;
  std::string relation;  // optional label, e.g. "is_a"; may be empty
};

/**
 * Reference hierarchy: a DAG of terms with parent -> child edges.  Used
 * both as ground truth for evaluation and as the substrate for synthetic
 * data generation.  validate() rejects cycles, self-loops and duplicate
 * edges.
 */
struct reference_hierarchy {
  id_map terms;
  std::vector<hierarchy_edge> edges;

  dag::edge_list edge_pairs() const {
    dag::edge_list out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(e.parent, e.child);
    return out;
  }

  // Undirected term adjacency, deduplicated and sorted per node.
  dag::adjacency undirected_adjacency() const {
    dag::adjacency adj(terms.size());
    for (const auto& e : edges) {
      adj[e.parent].push_back(e.child);
      adj[e.child].push_back(e.parent);
    }
    for (auto& nbrs : adj) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
  }

  void validate() const {
    std::vector<std::uint64_t> seen;
    seen.reserve(edges.size());
    for (const auto& e : edges) {
      if (e.parent >= terms.size() || e.child >= terms.size())
        throw integrity_error("hierarchy edge endpoint out of range");
      if (e.parent == e.child)
        throw integrity_error("hierarchy has a self-loop at " + terms.name(e.parent));
      seen.push_back((static_cast<std::uint64_t>(e.parent) << 32) | e.child);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw integrity_error("hierarchy has a duplicate edge");

    const auto adj = dag::build_adjacency(terms.size(), edge_pairs());
    if (!dag::topological_order(adj)) {
      const auto cycle = dag::find_cycle(adj);
      std::string msg = "hierarchy contains a cycle:";
      for (auto v : cycle) msg += " " + terms.name(v);
      throw integrity_error(msg);
    }
  }
};

// Convenience constructor from name pairs; validates the result.
inline reference_hierarchy make_hierarchy(
    const std::vector<std::pair<std::string, std::string>>& parent_child,
    const std::vector<std::string>& extra_terms = {}) {
  reference_hierarchy h;
  for (const auto& [parent, child] : parent_child) {
    const auto p = h.terms.intern(parent);
    const auto c = h.terms.intern(child);
    h.edges.push_back({p, c, ""});
  }
  for (const auto& t : extra_terms) h.terms.intern(t);
  h.validate();
  return h;
}

}  // namespace hb
