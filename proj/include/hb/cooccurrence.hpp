#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hb/bipartite.hpp"
#include "hb/errors.hpp"
#include "hb/ids.hpp"

namespace hb {

/**
 * One-mode projection of a bipartite graph onto its tag side.  Each
 * unordered tag pair that shares at least one object appears once, keyed
 * with u < v, together with the number of shared objects.
 */
struct cooccurrence_graph {
  id_map tags;
  std::uint64_t n_objects = 0;
  std::vector<std::uint64_t> tag_frequency;

  struct pair_entry {
    std::uint32_t u, v;  // u < v
    std::uint64_t n_uv;
  };
  std::vector<pair_entry> pairs;  // sorted by (u, v)

  // Shared-object count for a tag pair, 0 when they never co-occur.
  std::uint64_t joint_count(std::uint32_t a, std::uint32_t b) const {
    if (a == b) throw domain_error("joint_count: tags must differ");
    const auto u = std::min(a, b), v = std::max(a, b);
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(u, v),
                               [](const pair_entry& e, const std::pair<std::uint32_t, std::uint32_t>& k) {
                                 return e.u < k.first || (e.u == k.first && e.v < k.second);
                               });
    if (it == pairs.end() || it->u != u || it->v != v) return 0;
    return it->n_uv;
  }
};

inline cooccurrence_graph project(const bipartite_graph& b) {
  cooccurrence_graph g;
  g.tags = b.tags;
  g.n_objects = b.objects.size();
  g.tag_frequency = b.tag_frequency();

  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  for (const auto& row : b.object_tags) {
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        // Rows are sorted, so row[i] < row[j] already.
        const auto key = (static_cast<std::uint64_t>(row[i]) << 32) | row[j];
        ++counts[key];
      }
  }

  g.pairs.reserve(counts.size());
  for (const auto& [key, n] : counts)
    g.pairs.push_back({static_cast<std::uint32_t>(key >> 32),
                       static_cast<std::uint32_t>(key & 0xFFFFFFFFull), n});
  std::sort(g.pairs.begin(), g.pairs.end(), [](const auto& a, const auto& b2) {
    return a.u < b2.u || (a.u == b2.u && a.v < b2.v);
  });
  return g;
}

}  // namespace hb
