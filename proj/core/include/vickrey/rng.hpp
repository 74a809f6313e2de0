#pragma once

#include <cstdint>
#include <string_view>

namespace vickrey {

/// Deterministic, splittable random source (splitmix64 core). Forking with a
/// label derives an independent stream, so every bidder and every phase can
/// own its own generator while the whole run stays reproducible from one
/// 64-bit seed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}

  /// Seeded from OS entropy; used when no seed is configured.
  static SplitRng from_entropy();

  std::uint64_t next();

  /// Uniform in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi);

  SplitRng fork(std::string_view label) const;

 private:
  std::uint64_t state_;
};

}  // namespace vickrey
