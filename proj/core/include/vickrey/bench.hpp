#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vickrey {

/// Mean per-phase wall times (milliseconds) over `reps` seeded runs.
struct BenchRow {
  int n = 0;
  int k = 0;
  int reps = 0;
  double keygen_ms = 0;
  double commit_ms = 0;
  double sharing_ms = 0;
  double rounds_ms = 0;
  double verify_ms = 0;
  double main_ms = 0;  // everything after key generation
};

std::vector<BenchRow> run_bench(const std::vector<int>& ns,
                                const std::vector<int>& ks, int reps,
                                std::uint64_t seed,
                                std::uint64_t p_lo = 1ull << 31,
                                std::uint64_t p_hi = (1ull << 32) - 1);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace vickrey
