// Command-line front end: run an auction from a config file, audit a
// transcript, replay the built-in demonstration execution, or benchmark the
// protocol phases.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vickrey/demo.hpp"
#include "vickrey/bench.hpp"
#include "vickrey/simulation.hpp"
#include "vickrey/verify.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("AUCTION_LOG");
  if (env == nullptr) return 0;
  std::string value(env);
  if (value == "debug") return 2;
  if (value == "info" || value == "1") return 1;
  return 0;
}

void info(const std::string& message) {
  if (log_level() >= 1) std::cerr << "[vickrey] " << message << "\n";
}

int cmd_run(const std::string& config_path, const std::string& transcript_path,
            std::optional<std::uint64_t> seed_override) {
  vickrey::AuctionConfig config = vickrey::load_config_file(config_path);
  if (seed_override) config.seed = *seed_override;
  info("running auction: n=" + std::to_string(config.n) +
       " k=" + std::to_string(config.k));
  vickrey::RunResult result = vickrey::run_auction(config);
  const auto& outcome = result.outcome;
  std::cout << "price: " << outcome.price.value << "\n";
  std::cout << "accepted: " << (outcome.accepted ? "yes" : "no") << "\n";
  if (outcome.accepted) {
    std::cout << "winner: bidder " << outcome.winner
              << (outcome.tie ? " (tie-break)" : "") << "\n";
  }
  if (!transcript_path.empty()) {
    result.transcript.save_file(transcript_path);
    info("transcript written to " + transcript_path);
  }
  return outcome.accepted ? 0 : 1;
}

int cmd_verify(const std::string& transcript_path) {
  vickrey::Transcript transcript = vickrey::Transcript::load_file(transcript_path);
  vickrey::AuditReport report = vickrey::audit_transcript(transcript);
  for (const auto& check : report.checks) {
    std::cout << (check.pass ? "PASS" : "FAIL") << " " << check.name;
    if (check.j != 0) std::cout << " j=" << check.j;
    if (!check.pass)
      std::cout << " (expected " << check.expected << ", got " << check.actual
                << ")";
    std::cout << "\n";
  }
  std::cout << "verdict: " << (report.verdict ? "pass" : "fail") << "\n";
  return report.verdict ? 0 : 1;
}

int cmd_demo() {
  vickrey::ReplayReport report = vickrey::replay_demo();
  for (const auto& check : report.checks) {
    if (!check.pass)
      std::cout << "FAIL " << check.name << " expected " << check.expected
                << " got " << check.actual << "\n";
    else if (log_level() >= 2)
      std::cout << "PASS " << check.name << " = " << check.actual << "\n";
  }
  std::cout << (report.pass ? "demo replay: all " : "demo replay: FAILED, ")
            << report.checks.size() << " checks"
            << (report.pass ? " passed" : "") << "\n";
  return report.pass ? 0 : 1;
}

int cmd_bench(const std::vector<int>& ns, const std::vector<int>& ks, int reps,
              const std::string& out_path, std::uint64_t seed) {
  auto rows = vickrey::run_bench(ns, ks, reps, seed);
  const std::string csv = vickrey::bench_csv(rows);
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    out << csv;
    info("benchmark table written to " + out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Auctioneer-free sealed-bid second-price auction simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string transcript_out;
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "Execute an auction from a config file");
  run->add_option("--config", config_path, "JSON auction config")->required();
  run->add_option("--transcript", transcript_out, "Write the JSONL transcript here");
  run->add_option("--seed", seed, "Override the config seed");

  std::string transcript_in;
  auto* verify = app.add_subcommand("verify", "Audit a transcript file");
  verify->add_option("--transcript", transcript_in, "JSONL transcript")->required();

  bool demo_appendix = false;
  auto* demo = app.add_subcommand("demo", "Replay the built-in demonstration run");
  demo->add_flag("--appendix", demo_appendix,
                 "Replay the published five-bidder execution");

  std::vector<int> bench_n{4, 6, 8, 10};
  std::vector<int> bench_k{4, 8, 12, 16};
  int bench_reps = 3;
  std::string bench_out;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Per-phase wall-time benchmark");
  bench->add_option("--n", bench_n, "Bidder counts")->delimiter(',');
  bench->add_option("--k", bench_k, "Bid widths")->delimiter(',');
  bench->add_option("--reps", bench_reps, "Repetitions per grid point");
  bench->add_option("--out", bench_out, "CSV output path (- for stdout)");
  bench->add_option("--seed", bench_seed, "Benchmark seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(config_path, transcript_out,
                     run->count("--seed") ? std::optional<std::uint64_t>(seed)
                                          : std::nullopt);
    if (verify->parsed()) return cmd_verify(transcript_in);
    if (demo->parsed()) return cmd_demo();
    if (bench->parsed())
      return cmd_bench(bench_n, bench_k, bench_reps, bench_out, bench_seed);
  } catch (const vickrey::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
