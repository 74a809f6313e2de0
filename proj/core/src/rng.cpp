#include "vickrey/rng.hpp"

#include <cassert>
#include <random>

namespace vickrey {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

SplitRng SplitRng::from_entropy() {
  std::random_device rd;
  std::uint64_t seed = (std::uint64_t(rd()) << 32) ^ rd();
  return SplitRng(seed);
}

std::uint64_t SplitRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

std::uint64_t SplitRng::below(std::uint64_t bound) {
  assert(bound > 0);
  // Reject the tail that would bias the low range.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return x % bound;
}

std::uint64_t SplitRng::range(std::uint64_t lo, std::uint64_t hi) {
  assert(lo <= hi);
  if (lo == 0 && hi == ~std::uint64_t{0}) return next();
  return lo + below(hi - lo + 1);
}

SplitRng SplitRng::fork(std::string_view label) const {
  return SplitRng(mix(state_ ^ fnv1a(label)));
}

}  // namespace vickrey
