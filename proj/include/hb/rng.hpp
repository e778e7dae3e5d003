#pragma once

#include <cstdint>

#include "hb/errors.hpp"

namespace hb {

/**
 * Deterministic, splittable random source.
 *
 * The stream is plain splitmix64: the state advances by the 64-bit golden
 * ratio constant and each output is the splitmix64 finalizer of the new
 * state.  split(key) derives an independent child stream by mixing the
 * current state with the mixed key; the parent stream is not advanced.
 * Child derivation is pure, so split_rng(seed).split(a).split(b) names the
 * same stream on every platform and every run.
 *
 * below(bound) uses Lemire's multiply-and-reject reduction, which is exact
 * (no modulo bias), and next_double() takes the top 53 bits, so every draw
 * is reproducible from the seed alone.
 */
class split_rng {
 public:
  explicit split_rng(std::uint64_t seed) : state_(mix(seed ^ kGamma)) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Independent child stream; does not advance this stream.
  split_rng split(std::uint64_t key) const {
    return split_rng(state_ ^ mix(key + kGamma));
  }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw domain_error("split_rng::below: bound must be positive");
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform integer in [lo, hi], inclusive.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw domain_error("split_rng::uniform_int: empty range");
    return lo + below(hi - lo + 1);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace hb
