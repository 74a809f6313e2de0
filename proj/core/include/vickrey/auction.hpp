#pragma once

#include <cstdint>
#include <vector>

#include "vickrey/field.hpp"
#include "vickrey/rng.hpp"

namespace vickrey {

struct Simulation;

/// Published bid commitments, slot l holding the chain seeded by bidder l's
/// bid. (The chain started by bidder l is published by its last transformer
/// but keeps the originator's slot index, so slot-wise comparison against
/// the price-check vector is meaningful.)
struct CommitmentVector {
  std::vector<GroupElement> values;
  GroupElement at(int l) const { return values[l - 1]; }
};

/// Public per-digit state after a completed round.
struct RoundPublic {
  int j = 0;
  GroupElement b_value;
  GroupElement p_value;
  GroupElement d_value;
  int digit = 0;
};

struct OutputPrice {
  std::vector<int> bits;  // MSB first
  std::uint64_t value = 0;

  static OutputPrice from_bits(const std::vector<int>& bits);
};

bool sole_check(GroupElement key, GroupElement b_value);

/// 0 iff D_j equals P_j^(n-2).
int decide_digit(const Field& field, GroupElement d_value, GroupElement p_value,
                 int n);

/// First n-1 mask shares uniform nonzero, closing share target/(product of
/// the others). The product over all n equals `target`.
std::vector<GroupElement> mask_shares_for_target(const Field& field,
                                                 GroupElement target, int n,
                                                 SplitRng& rng);

// Phase drivers over the simulation bus.
CommitmentVector commit_bids(Simulation& sim);
void share_bids(Simulation& sim);
RoundPublic& round_bp(Simulation& sim, int j);
void round_d(Simulation& sim, int j);
OutputPrice determine_price(Simulation& sim);

}  // namespace vickrey
