#include "vickrey/bench.hpp"

#include <chrono>
#include <sstream>

#include "vickrey/simulation.hpp"

namespace vickrey {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<int>& ns,
                                const std::vector<int>& ks, int reps,
                                std::uint64_t seed, std::uint64_t p_lo,
                                std::uint64_t p_hi) {
  std::vector<BenchRow> rows;
  SplitRng root(seed);
  for (int n : ns) {
    for (int k : ks) {
      BenchRow row;
      row.n = n;
      row.k = k;
      row.reps = reps;
      // rep -1 is an untimed warmup: it faults pages and primes caches.
      for (int rep = -1; rep < reps; ++rep) {
        SplitRng rep_rng = root.fork("bench/" + std::to_string(n) + "/" +
                                     std::to_string(k) + "/" + std::to_string(rep));
        AuctionConfig config;
        config.p = 0;
        config.p_lo = p_lo;
        config.p_hi = p_hi;
        config.n = n;
        config.k = k;
        config.seed = rep_rng.next();
        for (int l = 0; l < n; ++l)
          config.bids.push_back(rep_rng.below(std::uint64_t(1) << k));

        RunOptions options;
        options.collect_transcript = false;
        options.paranoid = false;
        Simulation sim(config, options);
        const bool warmup = rep < 0;

        auto t0 = Clock::now();
        run_key_generation(sim);
        if (!warmup) row.keygen_ms += ms_since(t0);

        auto t1 = Clock::now();
        sim.commitments = commit_bids(sim);
        if (!warmup) row.commit_ms += ms_since(t1);

        auto t2 = Clock::now();
        share_bids(sim);
        if (!warmup) row.sharing_ms += ms_since(t2);

        auto t3 = Clock::now();
        OutputPrice price = determine_price(sim);
        if (!warmup) row.rounds_ms += ms_since(t3);

        auto t4 = Clock::now();
        AuctionOutcome outcome;
        outcome.price = price;
        auto [accepted, slots] = verify_price(sim, price.value);
        outcome.accepted = accepted;
        outcome.matching_slots = std::move(slots);
        determine_winner(sim, outcome);
        if (!warmup) row.verify_ms += ms_since(t4);
      }
      row.keygen_ms /= reps;
      row.commit_ms /= reps;
      row.sharing_ms /= reps;
      row.rounds_ms /= reps;
      row.verify_ms /= reps;
      row.main_ms = row.commit_ms + row.sharing_ms + row.rounds_ms + row.verify_ms;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,k,reps,keygen_ms,commit_ms,sharing_ms,rounds_ms,verify_ms,main_ms\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.k << ',' << row.reps << ',' << row.keygen_ms
        << ',' << row.commit_ms << ',' << row.sharing_ms << ',' << row.rounds_ms
        << ',' << row.verify_ms << ',' << row.main_ms << '\n';
  }
  return out.str();
}

}  // namespace vickrey
