#pragma once

#include <string>
#include <vector>

#include "vickrey/config.hpp"

namespace vickrey {

/// The fully-specified five-bidder demonstration run: field 2063/5, bids
/// {143, 124, 217, 222, 86}, and every random draw pinned. Replaying it
/// reproduces the published key tables, commitments, round values, output
/// price 217, and the winner proof bit for bit.
AuctionConfig demo_config();

/// Golden values the demo run must reproduce exactly.
struct DemoExpectations {
  std::vector<std::vector<std::uint64_t>> keys;        // n x k
  std::vector<std::vector<std::uint64_t>> fake_keys;   // n x k
  std::vector<std::vector<std::uint64_t>> check_keys;  // n x k
  std::vector<std::uint64_t> commitments;              // n
  std::vector<std::uint64_t> round_b;                  // k
  std::vector<std::uint64_t> round_p;                  // k
  std::vector<std::uint64_t> round_d;                  // k, 0 = unspecified
  std::vector<int> digits;                             // k
  std::uint64_t price = 0;
  std::vector<std::uint64_t> price_checks;  // n
  int matching_slot = 0;
  int winner = 0;
  int winner_digit = 0;        // j'
  std::uint64_t winner_b = 0;  // B_{j'}
};

const DemoExpectations& demo_expectations();

struct ReplayCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct ReplayReport {
  std::vector<ReplayCheck> checks;
  bool pass = false;
};

/// Runs demo_config() and asserts every golden value. The first divergent
/// quantity is also reported through a fixture_mismatch error when `strict`.
ReplayReport replay_demo(bool strict = false);

}  // namespace vickrey
