#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vickrey/auction.hpp"
#include "vickrey/field.hpp"
#include "vickrey/transcript.hpp"

namespace vickrey {

struct Simulation;

/// Published price-check values, slot-compatible with CommitmentVector.
struct VerificationVector {
  std::vector<GroupElement> values;
  GroupElement at(int l) const { return values[l - 1]; }
};

struct WinnerProof {
  int claimant = 0;
  int digit = 0;  // j', the largest zero digit of the output price
  std::vector<GroupElement> factors;  // K_{u,claimant,j'} for u = 1..n
  std::string commitment;             // digest registered at key generation
};

struct AuctionOutcome {
  OutputPrice price;
  bool accepted = false;
  std::vector<int> matching_slots;
  int winner = 0;  // 0 = none
  bool tie = false;
  // Simulator diagnostics (require secrets; not part of the public result).
  std::uint64_t sole_collisions = 0;
  std::uint64_t digit_anomalies = 0;
};

/// Runs the price-check rings seeded with p0 and compares slots against the
/// commitments. Returns acceptance and the matching slot indices.
std::pair<bool, std::vector<int>> verify_price(Simulation& sim,
                                               std::uint64_t p0);

/// Hash-binding plus factor-product test against B_{j'}.
bool check_winner_proof(const Field& field, const WinnerProof& proof,
                        GroupElement b_at_digit,
                        const std::string& registered_commitment);

/// Winner resolution: a single valid claim wins outright; with no claims the
/// winner is drawn uniformly from the slot-mapped bidder set. Two valid
/// claims are algebraically impossible in an honest run and surface as
/// multiple_valid_claims.
int break_tie(std::span<const int> matching_slots,
              std::span<const WinnerProof> valid_claims, SplitRng& rng);

/// Winner-determination phase: polls claims for the largest zero digit,
/// validates them against seller commitments and B_{j'}, then resolves.
void determine_winner(Simulation& sim, AuctionOutcome& outcome);

struct AuditCheck {
  std::string name;
  int j = 0;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool verdict = false;

  std::string to_json_text() const;
};

/// Third-party audit: recomputes every aggregate, digit decision, the
/// acceptance test, and the winner check from public records only.
AuditReport audit_transcript(const Transcript& transcript);

}  // namespace vickrey
