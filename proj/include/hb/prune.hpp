#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hb/cooccurrence.hpp"
#include "hb/errors.hpp"
#include "hb/ids.hpp"
#include "hb/moments.hpp"

namespace hb {

/**
 * Co-occurrence graph after significance pruning.  A pair survives when
 * its z-score (observed minus null mean, in null standard deviations) is
 * at least z_th; pairs whose null variance is zero are always dropped
 * because no finite score exists for them.  Degrees and k_max describe the
 * surviving graph, not the input.
 */
struct pruned_graph {
  id_map tags;
  std::uint64_t n_objects = 0;
  double z_th = 0.0;
  std::vector<std::uint64_t> tag_frequency;

  struct pair_entry {
    std::uint32_t u, v;  // u < v
    std::uint64_t n_uv;
    double z;
  };
  std::vector<pair_entry> pairs;  // sorted by (u, v)

  std::vector<std::uint32_t> degree;  // per tag, in the surviving graph
  std::uint32_t k_max = 0;
};

inline pruned_graph prune(const cooccurrence_graph& g, double z_th) {
  pruned_graph out;
  out.tags = g.tags;
  out.n_objects = g.n_objects;
  out.z_th = z_th;
  out.tag_frequency = g.tag_frequency;
  out.degree.assign(g.tags.size(), 0);

  for (const auto& p : g.pairs) {
    const auto mom = cooccurrence_moments(g.tag_frequency[p.u], g.tag_frequency[p.v], g.n_objects);
    if (mom.sigma <= 0.0) continue;
    const double z = (static_cast<double>(p.n_uv) - mom.mean) / mom.sigma;
    if (z < z_th) continue;
    out.pairs.push_back({p.u, p.v, p.n_uv, z});
    ++out.degree[p.u];
    ++out.degree[p.v];
  }
  if (!out.degree.empty())
    out.k_max = *std::max_element(out.degree.begin(), out.degree.end());
  return out;
}

}  // namespace hb
