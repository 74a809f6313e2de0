#include <doctest.h>

#include <memory>
#include <set>

#include "vickrey/demo.hpp"
#include "vickrey/oracle.hpp"
#include "vickrey/simulation.hpp"

using namespace vickrey;

namespace {

std::unique_ptr<Simulation> demo_sim_through_sharing() {
  auto sim = std::make_unique<Simulation>(demo_config(), RunOptions{false, true});
  run_key_generation(*sim);
  sim->commitments = commit_bids(*sim);
  share_bids(*sim);
  return sim;
}

AuctionConfig small_config(int n, int k, std::vector<std::uint64_t> bids,
                           std::uint64_t seed) {
  AuctionConfig config;
  config.p = 2063;
  config.g = 5;
  config.n = n;
  config.k = k;
  config.bids = std::move(bids);
  config.seed = seed;
  return config;
}

}  // namespace

TEST_CASE("bid commitments publish the expected chain values") {
  Simulation sim(demo_config(), RunOptions{false, false});
  run_key_generation(sim);
  CommitmentVector commitments = commit_bids(sim);
  const std::uint64_t expected[] = {681, 528, 718, 32, 9};
  for (int l = 1; l <= 5; ++l) CHECK(commitments.at(l).v == expected[l - 1]);

  // Closed form: the slot-l entry is g^{bid_l * prod of hop codes}, the hop
  // codes being c_{l,1}, c_{l+1,2}, ..., around the ring.
  for (int l = 1; l <= 5; ++l) {
    Exponent product = sim.bidder(l).codes().c_at(1);
    int holder = l;
    for (int hop = 2; hop <= 5; ++hop) {
      holder = sim.ring.successor(holder);
      product =
          sim.field.exp_mul(product, sim.bidder(holder).codes().c_at(hop));
    }
    Exponent seed = sim.field.exp_mul(
        sim.field.exponent_u(sim.config.bids[l - 1]), product);
    CHECK(commitments.at(l) == sim.field.pow(sim.field.g(), seed));
  }
}

TEST_CASE("zero bid commits to the identity element") {
  AuctionConfig config = small_config(3, 3, {0, 5, 3}, 17);
  Simulation sim(config, RunOptions{false, true});
  run_key_generation(sim);
  CommitmentVector commitments = commit_bids(sim);
  CHECK(commitments.at(1).v == 1);
  CHECK(commitments.at(2).v != 1);
}

TEST_CASE("round aggregates match the published run") {
  auto sim = demo_sim_through_sharing();
  RoundPublic& round = round_bp(*sim, 1);
  CHECK(round.b_value.v == 1621);
  CHECK(round.p_value.v == 675);

  // Read-back of the published B family multiplies to the aggregate.
  CHECK(sim->bus.board().aggregate_product(sim->field, "B", 1, 5).v == 1621);

  for (auto& bidder : sim->bidders) bidder.select_masks(1);
  sim->drain();
  round_d(*sim, 1);
  CHECK(sim->rounds[0].d_value.v == 1407);
}

TEST_CASE("sole participant check") {
  Simulation sim(demo_config(), RunOptions{false, false});
  run_key_generation(sim);
  const Field& field = sim.field;
  CHECK(sole_check(sim.bidder(4).keys().key_at(6), field.element(346)));
  CHECK_FALSE(sole_check(sim.bidder(1).keys().key_at(1), field.element(1621)));
  CHECK(sole_check(sim.bidder(4).keys().key_at(7), field.element(915)));
}

TEST_CASE("digit decision compares D against P^(n-2)") {
  Field field = Field::make(2063, 5);
  CHECK(decide_digit(field, field.element(1211), field.element(534), 5) == 0);
  CHECK(decide_digit(field, field.element(1772), field.element(163), 5) == 1);
  CHECK(decide_digit(field, field.element(725), field.element(567), 5) == 1);
  CHECK(field.pow(field.element(534), field.exponent(3)).v == 1211);
}

TEST_CASE("mask shares multiply to the selected key") {
  Field field = Field::make(2063, 5);
  SplitRng rng(4);
  for (std::uint64_t target_raw : {946ull, 849ull, 1ull}) {
    GroupElement target = field.element(target_raw);
    std::vector<GroupElement> shares = mask_shares_for_target(field, target, 5, rng);
    REQUIRE(shares.size() == 5);
    GroupElement product = field.one();
    for (auto d : shares) {
      CHECK(d.v != 0);
      product = field.mul(product, d);
    }
    CHECK(product == target);
    // Closing share reconstructs as target / (product of the others).
    GroupElement others = field.one();
    for (int i = 0; i + 1 < 5; ++i) others = field.mul(others, shares[i]);
    CHECK(shares[4] == field.mul(target, field.inv(others)));
  }
}

TEST_CASE("full price determination reproduces the demo digits") {
  auto sim = demo_sim_through_sharing();
  OutputPrice price = determine_price(*sim);
  CHECK(price.bits == std::vector<int>{1, 1, 0, 1, 1, 0, 0, 1});
  CHECK(price.value == 217);
  CHECK(sim->bidder(4).sole_flag(6));
  CHECK(sim->bidder(4).sole_flag(7));
  CHECK_FALSE(sim->bidder(1).sole_flag(1));
  // Masks used: fake key where sole, check key otherwise (j=6).
  GroupElement product6 = sim->field.one();
  for (auto d : sim->bidder(4).dealt_masks(6))
    product6 = sim->field.mul(product6, d);
  CHECK(product6 == sim->bidder(4).keys().fake_at(6));
  GroupElement product1 = sim->field.one();
  for (auto d : sim->bidder(1).dealt_masks(1))
    product1 = sim->field.mul(product1, d);
  CHECK(product1 == sim->bidder(1).keys().check_at(1));
}

TEST_CASE("all-zero bids yield price zero and the no-bidder closed form") {
  AuctionConfig config = small_config(3, 3, {0, 0, 0}, 23);
  Simulation sim(config, RunOptions{false, true});
  run_key_generation(sim);
  sim.commitments = commit_bids(sim);
  share_bids(sim);
  OutputPrice price = determine_price(sim);
  CHECK(price.value == 0);

  // B_j = g^{-(sum of all Y) * prod e} when nobody bids the digit.
  const Field& field = sim.field;
  for (int j = 1; j <= 3; ++j) {
    Exponent sum_y{0};
    Exponent prod_e{1};
    for (int l = 1; l <= 3; ++l) {
      sum_y = field.exp_add(sum_y, sim.bidder(l).indicators().yes_at(j));
      prod_e = field.exp_mul(prod_e, sim.bidder(l).codes().e_at(j));
    }
    CHECK(sim.rounds[j - 1].b_value ==
          field.pow(field.g(), field.exp_mul(field.exp_neg(sum_y), prod_e)));
  }
}

TEST_CASE("lone top-bit bidder is masked by its fake key") {
  // Only bidder 2 has the top bit: it detects sole status at j=1 and the
  // digit still reads zero.
  AuctionConfig config = small_config(3, 3, {2, 5, 1}, 29);
  Simulation sim(config, RunOptions{false, true});
  run_key_generation(sim);
  sim.commitments = commit_bids(sim);
  share_bids(sim);
  OutputPrice price = determine_price(sim);
  CHECK(sim.bidder(2).sole_flag(1));
  CHECK(sim.rounds[0].digit == 0);
  CHECK(price.value == 2);  // second-highest of {2, 5, 1}
}

TEST_CASE("random auctions settle on the second-highest bid") {
  SplitRng rng(2026);
  for (int i = 0; i < 12; ++i) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const int k = 4 + static_cast<int>(rng.below(5));
    auto [p, g] = random_safe_prime(1 << 20, 1 << 24, rng);
    AuctionConfig config;
    config.p = p;
    config.g = g;
    config.n = n;
    config.k = k;
    config.seed = rng.next();
    std::set<std::uint64_t> used;
    for (int l = 0; l < n; ++l) {
      std::uint64_t bid;
      do {
        bid = rng.below(std::uint64_t(1) << k);
      } while (!used.insert(bid).second);
      config.bids.push_back(bid);
    }
    RunResult result = run_auction(config, RunOptions{false, true});
    OracleResult expected = brute_force_oracle(config.bids);
    CHECK(result.outcome.price.value == expected.second_price);
    CHECK(result.outcome.accepted);
    REQUIRE(expected.winners.size() == 1);
    CHECK(result.outcome.winner == expected.winners.front());
  }
}

TEST_CASE("reseeding changes payloads but not the outcome") {
  AuctionConfig config = small_config(4, 5, {9, 21, 14, 3}, 100);
  RunResult first = run_auction(config, RunOptions{true, true});
  config.seed = 101;
  RunResult second = run_auction(config, RunOptions{true, true});
  CHECK(first.outcome.price.value == second.outcome.price.value);
  CHECK(first.outcome.winner == second.outcome.winner);
  CHECK(first.transcript.to_jsonl() != second.transcript.to_jsonl());
}
