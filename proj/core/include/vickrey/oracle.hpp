#pragma once

#include <cstdint>
#include <vector>

namespace vickrey {

/// Sort-free reference answer: the set of highest bidders and the price the
/// winner pays (second-largest value, or the maximum itself when it is
/// shared).
struct OracleResult {
  std::vector<int> winners;  // 1-based argmax set
  std::uint64_t second_price = 0;
};

OracleResult brute_force_oracle(const std::vector<std::uint64_t>& bids);

}  // namespace vickrey
