#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vickrey/codes.hpp"
#include "vickrey/keygen.hpp"
#include "vickrey/ringnet.hpp"

namespace vickrey {

/// Pre-supplied values replacing the random draws, for deterministic replay
/// of published executions. Codes are mandatory inside a fixture; share
/// matrices are optional. All matrices are full-size; the closing entries
/// are still derived by the protocol and cross-checked against the fixture.
struct BidderFixture {
  std::vector<std::vector<Exponent>> bid_share_rows;       // n rows x k, may be empty
  std::vector<std::vector<GroupElement>> mask_share_rows;  // k rows x n, may be empty
};

/// Scripted misbehavior for soundness tests: from `trigger_digit` on, the
/// bidder rewrites its later share columns to the Y target (posing as a
/// digit-1 bidder) instead of applying the honest drop-out rule.
struct CheatPolicy {
  bool inflate_loser_adjustment = false;
  int trigger_digit = 0;
};

/// One bidder state machine. It owns every secret (codes, shares, keys) and
/// exchanges values exclusively through the bus and the bulletin board.
class Bidder {
 public:
  Bidder(const Field& field, RingTopology ring, int index, Bid bid,
         SecretCodes codes, SplitRng rng, Bus& bus);

  int index() const { return index_; }
  const Bid& bid() const { return bid_; }

  void set_fixture(BidderFixture fixture) { fixture_ = std::move(fixture); }
  void set_cheat(CheatPolicy cheat) { cheat_ = cheat; }
  /// Fault injection for ring-failure tests: silently drop every transfer
  /// item after forwarding `count` of them.
  void fail_after_transforms(std::uint64_t count) { fail_after_ = count; }

  /// Paranoid-mode hooks; observers see chain starts and every transform.
  using ChainStartObserver = std::function<void(const TransferItem&)>;
  using TransformObserver =
      std::function<void(const TransferItem&, int holder, Exponent)>;
  void set_observers(ChainStartObserver on_start, TransformObserver on_hop);

  // --- phase actions, invoked by the coordinator ---
  void launch_key_chains();
  void finalize_keys();
  void launch_commit_chain();
  void share_codes();
  void derive_indicators_and_share_bids();
  void launch_round_bp(int j);
  /// Reads B_j from the board, runs the sole-participant check, applies the
  /// leader adjustment when it fires, and deals this round's mask shares.
  void select_masks(int j);
  void launch_round_d(int j);
  /// Public digit for round j; losers silently drop out here.
  void note_digit(int j, int digit);
  void launch_price_check(std::uint64_t p0);

  /// Claim for the largest zero digit j', or nothing if this bidder never
  /// detected sole-participant status there.
  std::optional<std::vector<GroupElement>> claim_factors(int j_prime) const;

  // --- bus delivery ---
  void handle(const Message& msg);

  // --- read access for the omniscient simulator and tests ---
  const SecretCodes& codes() const { return codes_; }
  const KeySet& keys() const { return keys_; }
  const Indicators& indicators() const { return indicators_; }
  const ShareSet& shares() const { return shares_; }
  bool sole_flag(int j) const { return sole_flags_[j - 1]; }
  const std::vector<GroupElement>& mask_row(int j) const {
    return mask_rows_[j - 1];
  }
  const std::vector<GroupElement>& dealt_masks(int j) const {
    return dealt_masks_[j - 1];
  }

 private:
  Exponent transform_for(const TransferItem& item) const;
  void advance_item(const TransferItem& item);
  void store_final(const TransferItem& item);
  void start_chain(Kind kind, int target, int digit, GroupElement initial);

  const Field& field_;
  RingTopology ring_;
  int index_;
  Bid bid_;
  SecretCodes codes_;
  SplitRng rng_;
  Bus& bus_;
  std::optional<BidderFixture> fixture_;
  CheatPolicy cheat_;
  bool cheat_fired_ = false;
  std::optional<std::uint64_t> fail_after_;
  std::uint64_t transforms_done_ = 0;

  std::vector<std::vector<Exponent>> received_a_;  // per source i, length k
  Indicators indicators_;
  ShareSet shares_;
  KeySet keys_;
  std::vector<GroupElement> fake_factors_;   // n*k, u-major
  std::vector<GroupElement> check_factors_;  // n*k
  std::vector<bool> sole_flags_;             // per digit
  std::vector<std::vector<GroupElement>> mask_rows_;    // per digit: d_{me,i,j}
  std::vector<std::vector<GroupElement>> dealt_masks_;  // per digit: d_{i,me,j}

  ChainStartObserver on_chain_start_;
  TransformObserver on_transform_;
};

}  // namespace vickrey
