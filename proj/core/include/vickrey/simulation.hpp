#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "vickrey/auction.hpp"
#include "vickrey/bidder.hpp"
#include "vickrey/config.hpp"
#include "vickrey/keygen.hpp"
#include "vickrey/verify.hpp"

namespace vickrey {

struct RunOptions {
  bool collect_transcript = true;
  /// Cross-checks every ring transfer against its closed form and the key
  /// tables against the code-level oracle while the run executes.
  bool paranoid = true;
};

/// One auction instance: the bidders, the bus, the passive seller, and the
/// coordinator logic that sequences phases. The simulation object is also
/// the omniscient observer used for protocol-invariant checking; nothing it
/// observes flows back into the protocol.
struct Simulation {
  Simulation(const AuctionConfig& config, RunOptions options);

  // Bidders hold references into the simulation; it stays where built.
  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;
  Simulation(Simulation&&) = delete;
  Simulation& operator=(Simulation&&) = delete;

  AuctionOutcome run();

  // --- pieces shared with the phase drivers ---
  Field field;
  AuctionConfig config;
  RunOptions options;
  RingTopology ring;
  Transcript transcript;
  Bus bus;
  std::vector<Bidder> bidders;
  std::map<int, std::string> seller_commitments;
  CommitmentVector commitments;
  std::vector<RoundPublic> rounds;
  std::vector<WinnerProof> valid_claims;
  SplitRng coordinator_rng;
  std::uint64_t sole_collisions = 0;
  std::uint64_t digit_anomalies = 0;

  Bidder& bidder(int l) { return bidders[l - 1]; }

  /// Deliver until quiescent; throws broken_ring if a chain went missing.
  void drain();

  void publish_digit(int j, int digit);
  void record_outcome(const AuctionOutcome& outcome);

  // --- omniscient checks (paranoid mode) ---
  void check_key_oracle();
  void check_share_sums(int j);
  void observe_round(int j, int digit);

 private:
  void wire_observers();
  void on_chain_start(const TransferItem& item);
  void on_transform(const TransferItem& item, int holder, Exponent t);
  void on_chain_finished(Kind kind, int origin, int target, int digit,
                         GroupElement final_payload);

  struct ChainTrace {
    GroupElement initial;
    Exponent product{1};
    std::vector<bool> visited;
  };
  std::map<std::tuple<int, int, int, int>, ChainTrace> open_chains_;
  std::uint64_t expected_finishes_ = 0;
  std::uint64_t seen_finishes_ = 0;

  friend void run_key_generation(Simulation&);
  friend CommitmentVector commit_bids(Simulation&);
  friend void share_bids(Simulation&);
  friend RoundPublic& round_bp(Simulation&, int);
  friend void round_d(Simulation&, int);
};

struct RunResult {
  AuctionOutcome outcome;
  Transcript transcript;
};

/// Full protocol execution per the configured parameters. Field selection,
/// code generation (or fixture injection), key generation, commitment,
/// sharing, the k price rounds, verification, and winner determination.
RunResult run_auction(const AuctionConfig& config, RunOptions options = {});

}  // namespace vickrey
