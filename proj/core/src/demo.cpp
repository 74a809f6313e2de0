#include "vickrey/demo.hpp"

#include "vickrey/simulation.hpp"

namespace vickrey {

namespace {

void check(ReplayReport& report, bool strict, const std::string& name,
           std::uint64_t expected, std::uint64_t actual) {
  const bool pass = expected == actual;
  report.checks.push_back(
      {name, pass, std::to_string(expected), std::to_string(actual)});
  if (!pass && strict) fail(Errc::fixture_mismatch, name);
}

}  // namespace

ReplayReport replay_demo(bool strict) {
  ReplayReport report;
  const DemoExpectations& expect = demo_expectations();
  Simulation sim(demo_config(), RunOptions{});

  run_key_generation(sim);
  for (int l = 1; l <= 5; ++l) {
    const KeySet& keys = sim.bidder(l).keys();
    for (int j = 1; j <= 8; ++j) {
      const std::string suffix =
          "[" + std::to_string(l) + "," + std::to_string(j) + "]";
      check(report, strict, "K" + suffix, expect.keys[l - 1][j - 1],
            keys.key_at(j).v);
      check(report, strict, "F" + suffix, expect.fake_keys[l - 1][j - 1],
            keys.fake_at(j).v);
      check(report, strict, "C" + suffix, expect.check_keys[l - 1][j - 1],
            keys.check_at(j).v);
    }
  }

  sim.commitments = commit_bids(sim);
  for (int l = 1; l <= 5; ++l) {
    check(report, strict, "commitment[" + std::to_string(l) + "]",
          expect.commitments[l - 1], sim.commitments.at(l).v);
  }

  share_bids(sim);
  AuctionOutcome outcome;
  outcome.price = determine_price(sim);
  for (int j = 1; j <= 8; ++j) {
    const std::string suffix = "[" + std::to_string(j) + "]";
    check(report, strict, "B" + suffix, expect.round_b[j - 1],
          sim.rounds[j - 1].b_value.v);
    check(report, strict, "P" + suffix, expect.round_p[j - 1],
          sim.rounds[j - 1].p_value.v);
    if (expect.round_d[j - 1] != 0)
      check(report, strict, "D" + suffix, expect.round_d[j - 1],
            sim.rounds[j - 1].d_value.v);
    check(report, strict, "digit" + suffix,
          static_cast<std::uint64_t>(expect.digits[j - 1]),
          static_cast<std::uint64_t>(sim.rounds[j - 1].digit));
  }
  check(report, strict, "price", expect.price, outcome.price.value);

  auto [accepted, slots] = verify_price(sim, outcome.price.value);
  outcome.accepted = accepted;
  outcome.matching_slots = slots;
  for (int l = 1; l <= 5; ++l) {
    const BulletinEntry* entry = sim.bus.board().find("check", 0, l);
    check(report, strict, "pricecheck[" + std::to_string(l) + "]",
          expect.price_checks[l - 1],
          entry ? std::stoull(entry->payload) : 0);
  }
  check(report, strict, "accepted", 1, accepted ? 1 : 0);
  check(report, strict, "matching-slot-count", 1, slots.size());
  if (!slots.empty())
    check(report, strict, "matching-slot", expect.matching_slot, slots.front());

  determine_winner(sim, outcome);
  check(report, strict, "winner", expect.winner, outcome.winner);
  check(report, strict, "winner-claims", 1, sim.valid_claims.size());
  if (!sim.valid_claims.empty()) {
    const WinnerProof& proof = sim.valid_claims.front();
    check(report, strict, "winner-digit", expect.winner_digit, proof.digit);
    GroupElement product = sim.field.one();
    for (const auto& factor : proof.factors)
      product = sim.field.mul(product, factor);
    check(report, strict, "winner-proof-product", expect.winner_b, product.v);
    check(report, strict, "winner-proof-B", expect.winner_b,
          sim.rounds[expect.winner_digit - 1].b_value.v);
  }
  sim.record_outcome(outcome);

  report.pass = true;
  for (const auto& item : report.checks) report.pass &= item.pass;
  return report;
}

}  // namespace vickrey
