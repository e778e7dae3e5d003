#pragma once

#include <cmath>
#include <cstdint>

#include "hb/errors.hpp"

namespace hb {

struct pair_moments {
  double mean;
  double variance;
  double sigma;
};

/**
 * Null-model moments of the shared-object count for two tags with
 * frequencies n_u and n_v among n_objects objects.  Under random placement
 * the count is hypergeometric: draw n_u of the n_objects objects, count
 * how many fall inside a fixed set of n_v.
 *
 *   mean     = n_u n_v / M
 *   variance = mean * (M - n_u)/M * (M - n_v)/(M - 1),  M = n_objects
 */
inline pair_moments cooccurrence_moments(std::uint64_t n_u, std::uint64_t n_v,
                                         std::uint64_t n_objects) {
  if (n_objects < 2)
    throw domain_error("cooccurrence_moments: need at least two objects");
  if (n_u > n_objects || n_v > n_objects)
    throw domain_error("cooccurrence_moments: tag frequency exceeds object count");

  const double m = static_cast<double>(n_objects);
  const double mean = static_cast<double>(n_u) * static_cast<double>(n_v) / m;
  const double variance = mean * (m - static_cast<double>(n_u)) / m *
                          (m - static_cast<double>(n_v)) / (m - 1.0);
  return {mean, variance, std::sqrt(variance)};
}

}  // namespace hb
