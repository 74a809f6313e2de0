#include "vickrey/simulation.hpp"

#include <stdexcept>
#include <string>

namespace vickrey {

namespace {

SecretCodes codes_from_fixture(const Field& field, const RawBidderFixture& raw,
                               int owner, int n, int k) {
  SecretCodes codes;
  codes.owner = owner;
  codes.n = n;
  codes.k = k;
  codes.a.resize(static_cast<std::size_t>(n) * k);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j)
      codes.a[(i - 1) * k + (j - 1)] = field.exponent(raw.a[i - 1][j - 1]);
  for (int i = 0; i < n; ++i) codes.c.push_back(field.exponent(raw.c[i]));
  for (int j = 0; j < k; ++j) codes.e.push_back(field.exponent(raw.e[j]));
  for (const auto& v : codes.a)
    if (v.v == 0) fail(Errc::bad_config, "fixture a-code is zero mod p-1");
  for (const auto& v : codes.c)
    if (v.v == 0) fail(Errc::bad_config, "fixture c-code is zero mod p-1");
  for (const auto& v : codes.e)
    if (v.v == 0) fail(Errc::bad_config, "fixture e-code is zero mod p-1");
  return codes;
}

BidderFixture shares_from_fixture(const Field& field,
                                  const RawBidderFixture& raw) {
  BidderFixture fixture;
  for (const auto& row : raw.bid_shares) {
    std::vector<Exponent> conv;
    conv.reserve(row.size());
    for (auto v : row) conv.push_back(field.exponent(v));
    fixture.bid_share_rows.push_back(std::move(conv));
  }
  for (const auto& row : raw.mask_shares) {
    std::vector<GroupElement> conv;
    conv.reserve(row.size());
    for (auto v : row) {
      if (v <= 0) fail(Errc::bad_config, "fixture mask share not positive");
      conv.push_back(field.element(static_cast<std::uint64_t>(v)));
    }
    fixture.mask_share_rows.push_back(std::move(conv));
  }
  return fixture;
}

Field select_field(const AuctionConfig& config, SplitRng& rng) {
  std::uint64_t p = config.p;
  std::uint64_t g = config.g;
  if (p == 0) {
    SplitRng field_rng = rng.fork("field");
    auto [rp, rg] = random_safe_prime(config.p_lo, config.p_hi, field_rng);
    p = rp;
    if (g == 0) g = rg;
  } else if (g == 0) {
    SplitRng gen_rng = rng.fork("generator");
    for (int tries = 0; tries < 4096; ++tries) {
      std::uint64_t candidate = gen_rng.range(2, p - 2);
      try {
        return Field::make(p, candidate);
      } catch (const Error& e) {
        if (e.code() != Errc::not_generator) throw;
      }
    }
    fail(Errc::not_generator, "no generator found for p=" + std::to_string(p));
  }
  return Field::make(p, g);
}

}  // namespace

Simulation::Simulation(const AuctionConfig& cfg, RunOptions opts)
    : field([&] {
        cfg.validate();
        SplitRng boot(cfg.seed ? *cfg.seed : SplitRng::from_entropy().next());
        return select_field(cfg, boot);
      }()),
      config(cfg),
      options(opts),
      ring{cfg.n},
      bus(cfg.n, opts.collect_transcript ? &transcript : nullptr),
      coordinator_rng(0) {
  if ((field.p() - 1) >> config.k == 0)
    fail(Errc::bad_config, "field too small for k-bit bids");
  SplitRng root(config.seed ? *config.seed : SplitRng::from_entropy().next());
  coordinator_rng = root.fork("coordinator");
  bidders.reserve(config.n);
  for (int l = 1; l <= config.n; ++l) {
    SecretCodes codes;
    if (!config.fixtures.empty()) {
      codes = codes_from_fixture(field, config.fixtures[l - 1], l, config.n,
                                 config.k);
    } else {
      SplitRng code_rng = root.fork("codes/" + std::to_string(l));
      codes = generate_codes(l, config.n, config.k, field, code_rng);
    }
    bidders.emplace_back(field, ring, l,
                         Bid::from_value(config.bids[l - 1], config.k),
                         std::move(codes),
                         root.fork("bidder/" + std::to_string(l)), bus);
    if (!config.fixtures.empty()) {
      BidderFixture fixture = shares_from_fixture(field, config.fixtures[l - 1]);
      if (!fixture.bid_share_rows.empty() || !fixture.mask_share_rows.empty())
        bidders.back().set_fixture(std::move(fixture));
    }
    if (config.cheater == l)
      bidders.back().set_cheat(CheatPolicy{true, config.cheat_trigger});
  }
  wire_observers();
}

void Simulation::wire_observers() {
  for (auto& bidder : bidders) {
    bidder.set_observers(
        [this](const TransferItem& item) { on_chain_start(item); },
        [this](const TransferItem& item, int holder, Exponent t) {
          on_transform(item, holder, t);
        });
  }
}

void Simulation::on_chain_start(const TransferItem& item) {
  ++expected_finishes_;
  if (!options.paranoid) return;
  ChainTrace trace;
  trace.initial = item.payload;
  trace.visited.assign(ring.n + 1, false);
  open_chains_[{static_cast<int>(item.kind), item.origin, item.target,
                item.digit}] = std::move(trace);
}

void Simulation::on_transform(const TransferItem& item, int holder,
                              Exponent t) {
  if (options.paranoid) {
    auto it = open_chains_.find({static_cast<int>(item.kind), item.origin,
                                 item.target, item.digit});
    if (it == open_chains_.end())
      throw std::logic_error("transform observed for unknown chain");
    ChainTrace& trace = it->second;
    if (trace.visited[holder])
      throw std::logic_error("ring coverage violated: bidder visited twice");
    trace.visited[holder] = true;
    trace.product = field.exp_mul(trace.product, t);
    if (item.hop == ring.n - 1) {
      const GroupElement final_payload = field.pow(item.payload, t);
      on_chain_finished(item.kind, item.origin, item.target, item.digit,
                        final_payload);
      for (int l = 1; l <= ring.n; ++l) {
        if (l != item.origin && !trace.visited[l])
          throw std::logic_error("ring coverage violated: bidder skipped");
      }
      if (!(final_payload == field.pow(trace.initial, trace.product)))
        throw std::logic_error("ring transfer diverged from closed form");
      open_chains_.erase(it);
    }
  } else if (item.hop == ring.n - 1) {
    ++seen_finishes_;
  }
}

void Simulation::on_chain_finished(Kind, int, int, int, GroupElement) {
  ++seen_finishes_;
}

void Simulation::drain() {
  bus.drain([this](const Message& msg) {
    if (msg.to == 0) {
      if (const auto* commitment = std::get_if<CommitmentMsg>(&msg.body)) {
        seller_commitments[msg.from] = commitment->digest_hex;
        return;
      }
      fail(Errc::bad_config, "unexpected seller-bound message");
    }
    bidder(msg.to).handle(msg);
  });
  if (expected_finishes_ != seen_finishes_)
    fail(Errc::broken_ring,
         std::to_string(expected_finishes_ - seen_finishes_) +
             " transfer(s) never completed in phase " + bus.phase());
}

void Simulation::publish_digit(int j, int digit) {
  bus.publish(j, 0, "digit", std::to_string(digit));
}

void Simulation::record_outcome(const AuctionOutcome& outcome) {
  bus.set_phase("outcome");
  bus.publish(0, 0, "p0", std::to_string(outcome.price.value));
  bus.publish(0, 0, "accepted", outcome.accepted ? "1" : "0");
  std::string slots;
  for (std::size_t i = 0; i < outcome.matching_slots.size(); ++i) {
    if (i) slots += ':';
    slots += std::to_string(outcome.matching_slots[i]);
  }
  bus.publish(0, 0, "slots", slots);
  bus.publish(0, 0, "winner", std::to_string(outcome.winner));
  bus.publish(0, 0, "tie", outcome.tie ? "1" : "0");
}

void Simulation::check_key_oracle() {
  std::vector<SecretCodes> all_codes;
  all_codes.reserve(bidders.size());
  for (const auto& bidder : bidders) all_codes.push_back(bidder.codes());
  const std::vector<KeySet> oracle = closed_form_keys(field, all_codes);
  for (int l = 1; l <= ring.n; ++l) {
    const KeySet& transferred = bidder(l).keys();
    const KeySet& expected = oracle[l - 1];
    if (transferred.key != expected.key || transferred.check != expected.check ||
        transferred.fake != expected.fake ||
        transferred.factors != expected.factors ||
        transferred.commitment != expected.commitment)
      throw std::logic_error("key material diverged from closed form for bidder " +
                             std::to_string(l));
  }
}

void Simulation::check_share_sums(int j) {
  for (int l = 1; l <= ring.n; ++l) {
    const Exponent sum = bidder(l).shares().column_sum(field, j);
    const Indicators& ind = bidder(l).indicators();
    if (!(sum == ind.yes_at(j)) && !(sum == ind.no_at(j)))
      throw std::logic_error("share-sum law violated for bidder " +
                             std::to_string(l) + " at j=" + std::to_string(j));
  }
}

void Simulation::observe_round(int j, int digit) {
  int participants = 0;
  int participant = 0;
  for (int l = 1; l <= ring.n; ++l) {
    if (bidder(l).shares().column_sum(field, j) ==
        bidder(l).indicators().yes_at(j)) {
      ++participants;
      participant = l;
    }
  }
  for (int l = 1; l <= ring.n; ++l) {
    const bool truly_sole = participants == 1 && participant == l;
    if (bidder(l).sole_flag(j) != truly_sole) ++sole_collisions;
  }
  const int expected_digit = participants >= 2 ? 1 : 0;
  if (digit != expected_digit) ++digit_anomalies;
}

AuctionOutcome Simulation::run() {
  bus.set_phase("setup");
  bus.publish(0, 0, "param/p", std::to_string(field.p()));
  bus.publish(0, 0, "param/g", std::to_string(field.generator_value()));
  bus.publish(0, 0, "param/n", std::to_string(ring.n));
  bus.publish(0, 0, "param/k", std::to_string(config.k));

  run_key_generation(*this);
  commitments = commit_bids(*this);
  share_bids(*this);

  AuctionOutcome outcome;
  outcome.price = determine_price(*this);
  auto [accepted, slots] = verify_price(*this, outcome.price.value);
  outcome.accepted = accepted;
  outcome.matching_slots = std::move(slots);
  determine_winner(*this, outcome);
  outcome.sole_collisions = sole_collisions;
  outcome.digit_anomalies = digit_anomalies;
  record_outcome(outcome);
  return outcome;
}

RunResult run_auction(const AuctionConfig& config, RunOptions options) {
  Simulation sim(config, options);
  AuctionOutcome outcome = sim.run();
  return RunResult{std::move(outcome), std::move(sim.transcript)};
}

}  // namespace vickrey
