#include "vickrey/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vickrey/errors.hpp"

namespace vickrey {

using nlohmann::json;

namespace {

// Field and exponent values travel as decimal strings so nothing is squeezed
// through a double; plain JSON numbers are still accepted on input.
std::uint64_t parse_u64(const json& v, const char* what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    auto s = v.get<std::int64_t>();
    if (s < 0) fail(Errc::bad_config, std::string(what) + " negative");
    return static_cast<std::uint64_t>(s);
  }
  if (v.is_string()) {
    try {
      return std::stoull(v.get<std::string>());
    } catch (const std::exception&) {
      fail(Errc::bad_config, std::string(what) + ": bad number");
    }
  }
  fail(Errc::bad_config, std::string(what) + ": expected number or string");
}

std::int64_t parse_i64(const json& v, const char* what) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    try {
      return std::stoll(v.get<std::string>());
    } catch (const std::exception&) {
      fail(Errc::bad_config, std::string(what) + ": bad number");
    }
  }
  fail(Errc::bad_config, std::string(what) + ": expected number or string");
}

std::vector<std::int64_t> parse_row(const json& v, const char* what) {
  std::vector<std::int64_t> row;
  for (const auto& cell : v) row.push_back(parse_i64(cell, what));
  return row;
}

std::vector<std::vector<std::int64_t>> parse_matrix(const json& v,
                                                    const char* what) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : v) rows.push_back(parse_row(row, what));
  return rows;
}

json matrix_to_json(const std::vector<std::vector<std::int64_t>>& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

}  // namespace

void AuctionConfig::validate() const {
  if (n < 3) fail(Errc::too_few_bidders, "n=" + std::to_string(n));
  if (k < 1 || k > 62) fail(Errc::bad_config, "k=" + std::to_string(k));
  if (static_cast<int>(bids.size()) != n)
    fail(Errc::bad_config, "expected " + std::to_string(n) + " bids");
  for (auto bid : bids) {
    if (bid >> k)
      fail(Errc::bad_config, "bid " + std::to_string(bid) + " exceeds 2^k");
  }
  if (p != 0 && (p >> k) == 0)
    fail(Errc::bad_config, "prime too small for k-bit bids");
  if (!fixtures.empty()) {
    if (static_cast<int>(fixtures.size()) != n)
      fail(Errc::bad_config, "fixtures must cover all bidders");
    for (const auto& fx : fixtures) {
      auto expect = [&](bool ok, const char* what) {
        if (!ok) fail(Errc::bad_config, std::string("fixture ") + what);
      };
      expect(static_cast<int>(fx.a.size()) == n, "a rows");
      for (const auto& row : fx.a)
        expect(static_cast<int>(row.size()) == k, "a columns");
      expect(static_cast<int>(fx.c.size()) == n, "c length");
      expect(static_cast<int>(fx.e.size()) == k, "e length");
      if (!fx.bid_shares.empty()) {
        expect(static_cast<int>(fx.bid_shares.size()) == n, "bid share rows");
        for (const auto& row : fx.bid_shares)
          expect(static_cast<int>(row.size()) == k, "bid share columns");
      }
      if (!fx.mask_shares.empty()) {
        expect(static_cast<int>(fx.mask_shares.size()) == k, "mask share rows");
        for (const auto& row : fx.mask_shares)
          expect(static_cast<int>(row.size()) == n, "mask share columns");
      }
    }
  }
  if (cheater < 0 || cheater > n)
    fail(Errc::bad_config, "cheater index out of range");
}

AuctionConfig config_from_json_text(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object())
    fail(Errc::bad_config, "config is not a JSON object");
  AuctionConfig config;
  try {
    if (parsed.contains("p")) {
      const auto& p = parsed.at("p");
      if (p.is_string() && p.get<std::string>() == "random") {
        config.p = 0;
        if (parsed.contains("p_range")) {
          config.p_lo = parse_u64(parsed.at("p_range").at(0), "p_range.lo");
          config.p_hi = parse_u64(parsed.at("p_range").at(1), "p_range.hi");
        }
      } else {
        config.p = parse_u64(p, "p");
      }
    }
    if (parsed.contains("g")) config.g = parse_u64(parsed.at("g"), "g");
    config.n = static_cast<int>(parse_u64(parsed.at("n"), "n"));
    config.k = static_cast<int>(parse_u64(parsed.at("k"), "k"));
    for (const auto& bid : parsed.at("bids"))
      config.bids.push_back(parse_u64(bid, "bid"));
    if (parsed.contains("seed"))
      config.seed = parse_u64(parsed.at("seed"), "seed");
    if (parsed.contains("cheater")) {
      config.cheater = static_cast<int>(parse_u64(parsed.at("cheater"), "cheater"));
      if (parsed.contains("cheat_trigger"))
        config.cheat_trigger =
            static_cast<int>(parse_u64(parsed.at("cheat_trigger"), "cheat_trigger"));
    }
    if (parsed.contains("fixtures")) {
      for (const auto& fx : parsed.at("fixtures").at("bidders")) {
        RawBidderFixture raw;
        raw.a = parse_matrix(fx.at("a"), "fixture a");
        raw.c = parse_row(fx.at("c"), "fixture c");
        raw.e = parse_row(fx.at("e"), "fixture e");
        if (fx.contains("bid_shares"))
          raw.bid_shares = parse_matrix(fx.at("bid_shares"), "fixture bid_shares");
        if (fx.contains("mask_shares"))
          raw.mask_shares = parse_matrix(fx.at("mask_shares"), "fixture mask_shares");
        config.fixtures.push_back(std::move(raw));
      }
    }
  } catch (const json::exception& e) {
    fail(Errc::bad_config, std::string("config: ") + e.what());
  }
  config.validate();
  return config;
}

AuctionConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_config, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return config_from_json_text(buffer.str());
}

std::string config_to_json_text(const AuctionConfig& config) {
  json out;
  if (config.p == 0) {
    out["p"] = "random";
    out["p_range"] = {std::to_string(config.p_lo), std::to_string(config.p_hi)};
  } else {
    out["p"] = std::to_string(config.p);
  }
  if (config.g != 0) out["g"] = std::to_string(config.g);
  out["n"] = config.n;
  out["k"] = config.k;
  json bids = json::array();
  for (auto bid : config.bids) bids.push_back(std::to_string(bid));
  out["bids"] = bids;
  if (config.seed) out["seed"] = std::to_string(*config.seed);
  if (config.cheater != 0) {
    out["cheater"] = config.cheater;
    out["cheat_trigger"] = config.cheat_trigger;
  }
  if (!config.fixtures.empty()) {
    json bidders = json::array();
    for (const auto& fx : config.fixtures) {
      json one;
      one["a"] = matrix_to_json(fx.a);
      one["c"] = fx.c;
      one["e"] = fx.e;
      if (!fx.bid_shares.empty()) one["bid_shares"] = matrix_to_json(fx.bid_shares);
      if (!fx.mask_shares.empty()) one["mask_shares"] = matrix_to_json(fx.mask_shares);
      bidders.push_back(std::move(one));
    }
    out["fixtures"] = json{{"bidders", bidders}};
  }
  return out.dump(2);
}

void save_config_file(const AuctionConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::bad_config, "cannot write " + path);
  out << config_to_json_text(config) << '\n';
}

}  // namespace vickrey
