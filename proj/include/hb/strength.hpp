#pragma once

#include <algorithm>
#include <cstdint>

#include "hb/errors.hpp"

namespace hb {

enum class flow_direction {
  none,      // no asymmetry: alpha is zero
  forward,   // u is the parent of v
  backward,  // v is the parent of u
};

struct strength_result {
  double alpha = 0.0;  // magnitude, >= 0
  flow_direction direction = flow_direction::none;
};

/**
 * Directed hierarchy strength of a surviving tag pair.
 *
 *   alpha = min(k_u, k_v)/k_max * (n_uv/n_v - n_uv/n_u)
 *
 * The conditional-probability difference is positive exactly when u is the
 * more frequent tag, so a positive value orients the edge u -> v and a
 * negative one orients it v -> u.  k_u, k_v and k_max are degrees in the
 * pruned graph; the min(k)/k_max factor discounts pairs whose less
 * connected endpoint is weakly embedded.
 */
inline strength_result hierarchy_strength(std::uint64_t n_u, std::uint64_t n_v,
                                          std::uint64_t n_uv, std::uint32_t k_u,
                                          std::uint32_t k_v, std::uint32_t k_max) {
  if (k_max == 0) throw domain_error("hierarchy_strength: k_max must be positive");
  if (k_u > k_max || k_v > k_max)
    throw domain_error("hierarchy_strength: degree exceeds k_max");
  if (n_uv > n_u || n_uv > n_v)
    throw domain_error("hierarchy_strength: joint count exceeds a tag frequency");

  if (n_uv == 0 || n_u == n_v) return {0.0, flow_direction::none};

  const double weight = static_cast<double>(std::min(k_u, k_v)) / static_cast<double>(k_max);
  const double diff = static_cast<double>(n_uv) / static_cast<double>(n_v) -
                      static_cast<double>(n_uv) / static_cast<double>(n_u);
  if (diff > 0.0) return {weight * diff, flow_direction::forward};
  return {-weight * diff, flow_direction::backward};
}

}  // namespace hb
