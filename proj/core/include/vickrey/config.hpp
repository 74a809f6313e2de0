#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vickrey {

/// Raw (signed, un-canonicalized) replay material for one bidder, mirroring
/// the matrix layout of a published execution listing.
struct RawBidderFixture {
  std::vector<std::vector<std::int64_t>> a;  // n rows x k
  std::vector<std::int64_t> c;               // n
  std::vector<std::int64_t> e;               // k
  std::vector<std::vector<std::int64_t>> bid_shares;   // n rows x k, optional
  std::vector<std::vector<std::int64_t>> mask_shares;  // k rows x n, optional
};

struct AuctionConfig {
  // Either a concrete prime or "random" over [p_lo, p_hi].
  std::uint64_t p = 0;  // 0 means random
  std::uint64_t p_lo = 1ull << 31;
  std::uint64_t p_hi = (1ull << 32) - 1;
  std::uint64_t g = 0;  // 0 means derive
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> bids;
  std::optional<std::uint64_t> seed;
  std::vector<RawBidderFixture> fixtures;  // empty = fully random run
  int cheater = 0;         // bidder index running the scripted inflation, 0 = none
  int cheat_trigger = 1;

  /// Structural validation: n >= 3, bids sized n and < 2^k, fixture
  /// dimensions. Throws bad_config / too_few_bidders.
  void validate() const;
};

AuctionConfig config_from_json_text(const std::string& text);
AuctionConfig load_config_file(const std::string& path);
std::string config_to_json_text(const AuctionConfig& config);
void save_config_file(const AuctionConfig& config, const std::string& path);

}  // namespace vickrey
