#include "vickrey/oracle.hpp"

#include "vickrey/errors.hpp"

namespace vickrey {

OracleResult brute_force_oracle(const std::vector<std::uint64_t>& bids) {
  if (bids.size() < 2) fail(Errc::bad_config, "need at least two bids");
  std::uint64_t best = 0;
  for (auto bid : bids) best = std::max(best, bid);
  OracleResult result;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (bids[i] == best) result.winners.push_back(static_cast<int>(i) + 1);
  }
  if (result.winners.size() > 1) {
    result.second_price = best;  // shared maximum: winner pays the max itself
  } else {
    std::uint64_t second = 0;
    for (auto bid : bids) {
      if (bid != best && bid > second) second = bid;
    }
    result.second_price = second;
  }
  return result;
}

}  // namespace vickrey
