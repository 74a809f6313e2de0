#include "vickrey/auction.hpp"

#include "vickrey/simulation.hpp"

namespace vickrey {

OutputPrice OutputPrice::from_bits(const std::vector<int>& bits) {
  OutputPrice price;
  price.bits = bits;
  for (int bit : bits) price.value = (price.value << 1) | (bit != 0);
  return price;
}

bool sole_check(GroupElement key, GroupElement b_value) {
  return key == b_value;
}

int decide_digit(const Field& field, GroupElement d_value, GroupElement p_value,
                 int n) {
  return d_value == field.pow(p_value, field.exponent_u(
                                           static_cast<std::uint64_t>(n - 2)))
             ? 0
             : 1;
}

std::vector<GroupElement> mask_shares_for_target(const Field& field,
                                                 GroupElement target, int n,
                                                 SplitRng& rng) {
  std::vector<GroupElement> shares(n);
  GroupElement partial = field.one();
  for (int i = 0; i + 1 < n; ++i) {
    shares[i] = field.element(rng.range(1, field.p() - 1));
    partial = field.mul(partial, shares[i]);
  }
  shares[n - 1] = field.mul(target, field.inv(partial));
  return shares;
}

CommitmentVector commit_bids(Simulation& sim) {
  sim.bus.set_phase("commit");
  for (auto& bidder : sim.bidders) bidder.launch_commit_chain();
  sim.drain();
  CommitmentVector commitments;
  commitments.values.resize(sim.ring.n);
  for (int l = 1; l <= sim.ring.n; ++l) {
    const BulletinEntry* entry = sim.bus.board().find("commit", 0, l);
    if (entry == nullptr)
      fail(Errc::incomplete_family, "commitment of bidder " + std::to_string(l));
    commitments.values[l - 1] = sim.field.element(std::stoull(entry->payload));
  }
  return commitments;
}

void share_bids(Simulation& sim) {
  sim.bus.set_phase("sharing");
  for (auto& bidder : sim.bidders) bidder.share_codes();
  sim.drain();
  for (auto& bidder : sim.bidders) bidder.derive_indicators_and_share_bids();
  sim.drain();
}

RoundPublic& round_bp(Simulation& sim, int j) {
  sim.bus.set_phase("round");
  for (auto& bidder : sim.bidders) bidder.launch_round_bp(j);
  sim.drain();
  RoundPublic round;
  round.j = j;
  round.b_value = sim.bus.board().aggregate_product(sim.field, "B", j, sim.ring.n);
  round.p_value = sim.bus.board().aggregate_product(sim.field, "P", j, sim.ring.n);
  sim.rounds.push_back(round);
  return sim.rounds.back();
}

void round_d(Simulation& sim, int j) {
  for (auto& bidder : sim.bidders) bidder.launch_round_d(j);
  sim.drain();
  sim.rounds[j - 1].d_value =
      sim.bus.board().aggregate_product(sim.field, "D", j, sim.ring.n);
}

OutputPrice determine_price(Simulation& sim) {
  std::vector<int> bits;
  bits.reserve(sim.config.k);
  for (int j = 1; j <= sim.config.k; ++j) {
    if (sim.options.paranoid) sim.check_share_sums(j);
    RoundPublic& round = round_bp(sim, j);
    for (auto& bidder : sim.bidders) bidder.select_masks(j);
    sim.drain();
    round_d(sim, j);
    round.digit =
        decide_digit(sim.field, round.d_value, round.p_value, sim.ring.n);
    sim.publish_digit(j, round.digit);
    for (auto& bidder : sim.bidders) bidder.note_digit(j, round.digit);
    if (sim.options.paranoid) sim.observe_round(j, round.digit);
    bits.push_back(round.digit);
  }
  return OutputPrice::from_bits(bits);
}

}  // namespace vickrey
