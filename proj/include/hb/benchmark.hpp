#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hb/bipartite.hpp"
#include "hb/dag.hpp"
#include "hb/errors.hpp"
#include "hb/hierarchy.hpp"
#include "hb/rng.hpp"

namespace hb {

/**
 * Synthetic annotation generator.  Each product draws a tag-count in
 * [tags_min, tags_max], a uniformly random reference term, and then fills
 * the remaining slots: with probability p_rw the slot takes the endpoint
 * of an undirected random walk of uniform length [walk_min, walk_max]
 * starting at the reference term, otherwise a term chosen uniformly from
 * the whole hierarchy.  A draw that duplicates an already chosen tag is
 * retried from scratch (new coin, new walk) up to max_retries times, after
 * which the slot falls back to a uniform pick among unused terms.
 *
 * Randomness comes from one stream per product, derived as
 * split_rng(seed).split(ensemble_index).split(product_index), so any
 * product's tags can be reproduced without generating the others.
 */
struct benchmark_config {
  std::uint64_t seed = 0;
  std::uint32_t ensemble_index = 0;
  std::uint64_t n_products = 0;
  double p_rw = 0.0;
  std::uint32_t tags_min = 3;
  std::uint32_t tags_max = 5;
  std::uint32_t walk_min = 1;
  std::uint32_t walk_max = 3;
  std::uint32_t max_retries = 50;

  void validate(std::uint32_t n_terms) const {
    if (n_products == 0) throw config_error("benchmark: n_products must be positive");
    if (!(p_rw >= 0.0 && p_rw <= 1.0)) throw config_error("benchmark: p_rw must lie in [0, 1]");
    if (tags_min == 0 || tags_min > tags_max)
      throw config_error("benchmark: need 1 <= tags_min <= tags_max");
    if (walk_min == 0 || walk_min > walk_max)
      throw config_error("benchmark: need 1 <= walk_min <= walk_max");
    if (n_terms < tags_max)
      throw config_error("benchmark: hierarchy has fewer terms than tags_max");
  }
};

namespace detail {

// Walk endpoint after `steps` moves from `start`; an isolated term stays put.
inline std::uint32_t walk_endpoint(const dag::adjacency& adjacency, std::uint32_t start,
                                   std::uint32_t steps, split_rng& rng) {
  auto node = start;
  for (std::uint32_t i = 0; i < steps; ++i) {
    const auto& nbrs = adjacency[node];
    if (nbrs.empty()) break;
    node = nbrs[rng.below(nbrs.size())];
  }
  return node;
}

}  // namespace detail

inline bipartite_graph generate_benchmark(const reference_hierarchy& h,
                                          const benchmark_config& config) {
  const auto n_terms = h.terms.size();
  config.validate(n_terms);
  const auto adjacency = h.undirected_adjacency();

  const auto ensemble_rng = split_rng(config.seed).split(config.ensemble_index);
  bipartite_builder builder;
  std::vector<bool> used(n_terms);
  std::vector<std::uint32_t> chosen;

  for (std::uint64_t product = 0; product < config.n_products; ++product) {
    auto rng = ensemble_rng.split(product);
    const auto n_tags =
        static_cast<std::uint32_t>(rng.uniform_int(config.tags_min, config.tags_max));

    chosen.clear();
    const auto reference = static_cast<std::uint32_t>(rng.below(n_terms));
    chosen.push_back(reference);
    used[reference] = true;

    while (chosen.size() < n_tags) {
      std::uint32_t candidate = 0;
      bool found = false;
      for (std::uint32_t attempt = 0; attempt <= config.max_retries; ++attempt) {
        if (rng.next_double() < config.p_rw) {
          const auto steps =
              static_cast<std::uint32_t>(rng.uniform_int(config.walk_min, config.walk_max));
          candidate = detail::walk_endpoint(adjacency, reference, steps, rng);
        } else {
          candidate = static_cast<std::uint32_t>(rng.below(n_terms));
        }
        if (!used[candidate]) {
          found = true;
          break;
        }
      }
      if (!found) {
        // Uniform among unused terms, indexed in term-id order.
        auto skip = rng.below(n_terms - chosen.size());
        for (std::uint32_t t = 0; t < n_terms; ++t) {
          if (used[t]) continue;
          if (skip == 0) {
            candidate = t;
            break;
          }
          --skip;
        }
      }
      chosen.push_back(candidate);
      used[candidate] = true;
    }

    const auto product_name = "p" + std::to_string(product);
    for (const auto tag : chosen) {
      builder.add(product_name, h.terms.name(tag));
      used[tag] = false;
    }
  }
  return builder.finish();
}

// Independent repetitions: ensemble i uses ensemble_index = first + i.
inline std::vector<bipartite_graph> generate_ensembles(const reference_hierarchy& h,
                                                       benchmark_config config,
                                                       std::uint32_t n_ensembles) {
  if (n_ensembles == 0) throw config_error("benchmark: n_ensembles must be positive");
  std::vector<bipartite_graph> out;
  out.reserve(n_ensembles);
  const auto first = config.ensemble_index;
  for (std::uint32_t i = 0; i < n_ensembles; ++i) {
    config.ensemble_index = first + i;
    out.push_back(generate_benchmark(h, config));
  }
  return out;
}

}  // namespace hb
