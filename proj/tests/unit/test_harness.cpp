#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "vickrey/demo.hpp"
#include "vickrey/bench.hpp"
#include "vickrey/oracle.hpp"
#include "vickrey/simulation.hpp"

using namespace vickrey;

TEST_CASE("brute force oracle") {
  OracleResult demo = brute_force_oracle({143, 124, 217, 222, 86});
  CHECK(demo.winners == std::vector<int>{4});
  CHECK(demo.second_price == 217);

  OracleResult tie = brute_force_oracle({5, 5, 0});
  CHECK(tie.winners == std::vector<int>{1, 2});
  CHECK(tie.second_price == 5);

  // Against a sort-based reference over random vectors.
  SplitRng rng(606);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng.below(7));
    std::vector<std::uint64_t> bids;
    for (int l = 0; l < n; ++l) bids.push_back(rng.below(64));
    std::vector<std::uint64_t> sorted = bids;
    std::sort(sorted.rbegin(), sorted.rend());
    const std::uint64_t max = sorted[0];
    const std::uint64_t second = sorted[1];
    OracleResult result = brute_force_oracle(bids);
    CHECK(result.second_price == second);
    for (int w : result.winners) CHECK(bids[w - 1] == max);
    CHECK(std::count(bids.begin(), bids.end(), max) ==
          static_cast<long>(result.winners.size()));
  }
}

TEST_CASE("demo replay reproduces every published value") {
  ReplayReport report = replay_demo();
  for (const auto& check : report.checks) {
    const std::string detail =
        check.name + " expected " + check.expected + " got " + check.actual;
    INFO(detail);
    CHECK(check.pass);
  }
  CHECK(report.pass);
}

TEST_CASE("perturbed fixture codes are caught at the first dependent quantity") {
  AuctionConfig config = demo_config();
  config.fixtures[0].a[0][0] += 1;  // nudge a_{1,1,1}
  // The indicator Y_{1,1} moves, so bidder 1's derived closing share no
  // longer matches the listed one.
  try {
    run_auction(config, RunOptions{false, false});
    FAIL("expected FixtureMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::fixture_mismatch);
  }
}

TEST_CASE("signed fixture values canonicalize on load") {
  AuctionConfig config = demo_config();
  const std::string json_text = config_to_json_text(config);
  AuctionConfig reloaded = config_from_json_text(json_text);
  CHECK(reloaded.n == 5);
  CHECK(reloaded.fixtures[0].bid_shares[4][1] == -11800);
  RunResult result = run_auction(reloaded, RunOptions{false, true});
  CHECK(result.outcome.price.value == 217);
  CHECK(result.outcome.winner == 4);
}

TEST_CASE("run_auction settles the documented examples") {
  {
    RunResult result = run_auction(demo_config(), RunOptions{false, true});
    CHECK(result.outcome.price.value == 217);
    CHECK(result.outcome.winner == 4);
    CHECK(result.outcome.accepted);
    CHECK_FALSE(result.outcome.tie);
  }
  {
    AuctionConfig config;
    config.p = 2063;
    config.g = 5;
    config.n = 3;
    config.k = 2;
    config.bids = {0, 1, 2};
    config.seed = 12;
    RunResult result = run_auction(config, RunOptions{false, true});
    CHECK(result.outcome.price.value == 1);
    CHECK(result.outcome.winner == 3);
  }
}

TEST_CASE("identical config and seed give byte-identical transcripts") {
  AuctionConfig config;
  config.p = 0;
  config.p_lo = 1 << 20;
  config.p_hi = 1 << 22;
  config.n = 4;
  config.k = 5;
  config.bids = {3, 19, 8, 30};
  config.seed = 4242;

  RunResult first = run_auction(config, RunOptions{true, true});
  RunResult second = run_auction(config, RunOptions{true, true});
  CHECK(first.transcript.to_jsonl() == second.transcript.to_jsonl());
  CHECK(first.outcome.price.value == 19);

  // The transcript round-trips through the JSONL parser.
  std::istringstream stream(first.transcript.to_jsonl());
  Transcript parsed = Transcript::parse_jsonl(stream);
  CHECK(parsed.to_jsonl() == first.transcript.to_jsonl());
}

TEST_CASE("message counts follow the documented per-phase orders") {
  auto run_and_count = [](int n, int k) {
    AuctionConfig config;
    config.p = 2063;
    config.g = 5;
    config.n = n;
    config.k = k;
    config.seed = 5;
    for (int l = 0; l < n; ++l) config.bids.push_back(l);
    RunResult result = run_auction(config, RunOptions{true, false});
    std::map<std::string, std::uint64_t> counts;
    for (const auto& rec : result.transcript.records()) {
      if (rec.receiver == "public" || rec.receiver == "seller") continue;
      const bool chain_start = rec.tag.find("#r1") != std::string::npos;
      if (rec.phase == "keygen" && chain_start) ++counts["keygen-chains"];
      if (rec.phase == "sharing" && rec.tag[0] == 'a') ++counts["code-shares"];
      if (rec.phase == "sharing" && rec.tag[0] == 'b') ++counts["bid-shares"];
      if (rec.phase == "round" && rec.tag[0] == 'd') ++counts["mask-shares"];
      if (rec.phase == "round" && chain_start) ++counts["round-chains"];
    }
    return counts;
  };

  for (auto [n, k] : {std::pair{4, 3}, std::pair{6, 5}}) {
    auto counts = run_and_count(n, k);
    const std::uint64_t nn = n, kk = k;
    // Key generation launches three chains per (origin, target, digit).
    CHECK(counts["keygen-chains"] == 3 * nn * nn * kk);
    // Code and bid shares go point-to-point once per ordered pair.
    CHECK(counts["code-shares"] == nn * (nn - 1));
    CHECK(counts["bid-shares"] == nn * (nn - 1));
    // Mask shares dominate the main auction: n(n-1) per digit.
    CHECK(counts["mask-shares"] == nn * (nn - 1) * kk);
    // B, P and D rings: three chains per bidder per digit.
    CHECK(counts["round-chains"] == 3 * nn * kk);
  }
}

TEST_CASE("benchmark grid emits one row per point") {
  auto rows = run_bench({3}, {2}, 1, 7, 1 << 20, 1 << 22);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 3);
  CHECK(rows[0].k == 2);
  CHECK(rows[0].main_ms >= 0.0);
  const std::string csv = bench_csv(rows);
  CHECK(csv.find("n,k,reps") == 0);
  CHECK(csv.find("\n3,2,1,") != std::string::npos);
}

TEST_CASE("config validation rejects inconsistent inputs") {
  AuctionConfig config;
  config.p = 2063;
  config.g = 5;
  config.n = 2;
  config.k = 3;
  config.bids = {1, 2};
  CHECK_THROWS_AS(config.validate(), Error);

  config.n = 3;
  config.bids = {1, 2, 9};  // 9 needs four bits
  CHECK_THROWS_AS(config.validate(), Error);

  config.bids = {1, 2, 7};
  CHECK_NOTHROW(config.validate());

  config.k = 12;  // 2^12 > 2063
  std::vector<std::uint64_t> bids = {1, 2, 7};
  config.bids = bids;
  CHECK_THROWS_AS(config.validate(), Error);

  CHECK_THROWS_AS(config_from_json_text("not json"), Error);
  CHECK_THROWS_AS(config_from_json_text("{\"n\": 3}"), Error);
}
