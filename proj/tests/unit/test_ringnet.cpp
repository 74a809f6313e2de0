#include <doctest.h>

#include "vickrey/ringnet.hpp"
#include "vickrey/simulation.hpp"

using namespace vickrey;

TEST_CASE("ring topology permutations") {
  RingTopology ring{5};
  for (int l = 1; l <= 5; ++l) {
    CHECK(ring.predecessor(ring.successor(l)) == l);
    CHECK(ring.successor(ring.predecessor(l)) == l);
  }
  int walk = 3;
  for (int i = 0; i < 5; ++i) walk = ring.successor(walk);
  CHECK(walk == 3);
  CHECK(ring.successor(5) == 1);
  CHECK(ring.predecessor(1) == 5);
}

TEST_CASE("synchronous ring transfer closed form") {
  Field field = Field::make(2063, 5);

  // Identity transforms leave the seed unchanged.
  RingTopology three{3};
  GroupElement out =
      ring_transfer(three, field, 1, field.g(), Direction::forward,
                    [](int, int) { return Exponent{1}; });
  CHECK(out == field.g());

  // Visitors raising to 2, 3, 5 produce g^30.
  RingTopology four{4};
  int call = 0;
  const std::uint64_t exps[] = {2, 3, 5};
  out = ring_transfer(four, field, 1, field.g(), Direction::forward,
                      [&](int, int) { return Exponent{exps[call++]}; });
  CHECK(out.v == 1878);
  CHECK(out == field.pow(field.g(), field.exponent(30)));

  // Backward transfers visit predecessors; the hop order is 1-based.
  std::vector<int> visited;
  ring_transfer(four, field, 2, field.g(), Direction::backward,
                [&](int bidder, int hop) {
                  CHECK(hop == static_cast<int>(visited.size()) + 1);
                  visited.push_back(bidder);
                  return Exponent{1};
                });
  CHECK(visited == std::vector<int>{1, 4, 3});
}

TEST_CASE("hop advance validates the counter") {
  Field field = Field::make(2063, 5);
  RingTopology ring{4};
  TransferItem item;
  item.kind = Kind::round_b;
  item.origin = 1;
  item.digit = 1;
  item.payload = field.g();

  item.hop = 0;
  CHECK_THROWS_AS(advance(ring, field, item, 2, Exponent{1}), Error);
  item.hop = 4;
  try {
    advance(ring, field, item, 2, Exponent{1});
    FAIL("expected WrongHopCount");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::wrong_hop_count);
  }

  item.hop = 1;
  HopOutcome forward = advance(ring, field, item, 2, Exponent{2});
  CHECK(forward.action == HopOutcome::Action::forward);
  CHECK(forward.next_holder == 3);
  CHECK(forward.item.hop == 2);
  CHECK(forward.item.payload == field.pow(field.g(), Exponent{2}));

  item.hop = 3;  // n-1: the publish terminal for round items
  HopOutcome publish = advance(ring, field, item, 4, Exponent{1});
  CHECK(publish.action == HopOutcome::Action::publish);

  item.kind = Kind::key;
  item.target = 3;
  HopOutcome returned = advance(ring, field, item, 4, Exponent{1});
  CHECK(returned.action == HopOutcome::Action::return_to_target);
  CHECK(returned.next_holder == 3);
  CHECK(returned.item.hop == 4);
}

TEST_CASE("bulletin board is append-only with monotone ids") {
  BulletinBoard board;
  std::uint64_t first = board.append("commit", 0, 1, "commit/1", "681");
  std::uint64_t second = board.append("commit", 0, 2, "commit/2", "528");
  CHECK(second > first);
  CHECK(board.entries().size() == 2);
  CHECK(board.find("commit", 0, 1)->payload == "681");
  CHECK(board.find("commit", 0, 3) == nullptr);
}

TEST_CASE("family aggregation multiplies all published members") {
  Field field = Field::make(2063, 5);
  BulletinBoard board;
  for (int origin = 1; origin <= 4; ++origin)
    board.append("round", 2, origin, "D/" + std::to_string(origin), "1");
  CHECK(board.aggregate_product(field, "D", 2, 4).v == 1);

  board.append("round", 3, 1, "D/1", "10");
  board.append("round", 3, 2, "D/2", "20");
  try {
    board.aggregate_product(field, "D", 3, 4);
    FAIL("expected IncompleteFamily");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::incomplete_family);
  }
}

TEST_CASE("a party that stops forwarding breaks the ring") {
  AuctionConfig config;
  config.p = 2063;
  config.g = 5;
  config.n = 4;
  config.k = 2;
  config.bids = {1, 2, 3, 0};
  config.seed = 3;
  Simulation sim(config, RunOptions{false, false});
  sim.bidder(2).fail_after_transforms(5);
  try {
    sim.run();
    FAIL("expected BrokenRing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::broken_ring);
    CHECK(std::string(e.what()).find("keygen") != std::string::npos);
  }
}

TEST_CASE("bus delivers per-edge FIFO and mirrors to the transcript") {
  Transcript transcript;
  Bus bus(3, &transcript);
  bus.set_phase("sharing");
  bus.send(Message{1, 2, MaskShareMsg{1, GroupElement{7}}});
  bus.send(Message{1, 2, MaskShareMsg{1, GroupElement{9}}});
  bus.send(Message{2, 0, CommitmentMsg{"abc123"}});

  std::vector<std::uint64_t> seen;
  bus.drain([&](const Message& msg) {
    if (const auto* mask = std::get_if<MaskShareMsg>(&msg.body))
      seen.push_back(mask->d.v);
  });
  CHECK(seen == std::vector<std::uint64_t>{7, 9});
  CHECK(bus.idle());

  REQUIRE(transcript.size() == 3);
  CHECK(transcript.records()[0].phase == "sharing");
  CHECK(transcript.records()[0].tag == "d/1");
  CHECK(transcript.records()[0].receiver == "2");
  CHECK(transcript.records()[2].receiver == "seller");
  CHECK(transcript.records()[2].payload == "abc123");
  CHECK(transcript.records()[0].seq < transcript.records()[1].seq);

  bus.publish(4, 2, "B/2", "99");
  CHECK(transcript.records().back().receiver == "public");
  CHECK(bus.board().find("B", 4, 2)->payload == "99");
}
