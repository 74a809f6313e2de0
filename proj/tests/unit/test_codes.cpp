#include <doctest.h>

#include <set>

#include "vickrey/demo.hpp"
#include "vickrey/codes.hpp"

using namespace vickrey;

namespace {

const Field& demo_field() {
  static const Field field = Field::make(2063, 5);
  return field;
}

// Demo fixture columns a_{i,l,j} for bidder l, from the published code
// matrices.
std::vector<std::vector<Exponent>> demo_columns(int l) {
  const Field& field = demo_field();
  AuctionConfig config = demo_config();
  std::vector<std::vector<Exponent>> columns(5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 8; ++j)
      columns[i - 1].push_back(
          field.exponent(config.fixtures[i - 1].a[l - 1][j - 1]));
  }
  return columns;
}

ShareSet demo_shares(int l) {
  const Field& field = demo_field();
  AuctionConfig config = demo_config();
  Indicators ind = compute_indicators(field, demo_columns(l));
  std::vector<std::vector<Exponent>> rows;
  for (const auto& raw : config.fixtures[l - 1].bid_shares) {
    std::vector<Exponent> row;
    for (auto v : raw) row.push_back(field.exponent(v));
    rows.push_back(std::move(row));
  }
  SplitRng rng(0);
  return make_bid_shares(field, Bid::from_value(config.bids[l - 1], 8), ind, l,
                         5, rng, &rows);
}

}  // namespace

TEST_CASE("bid binary representation is MSB first") {
  Bid bid = Bid::from_value(143, 8);
  const int expected[] = {1, 0, 0, 0, 1, 1, 1, 1};
  for (int j = 1; j <= 8; ++j) CHECK(bid.bit(j) == expected[j - 1]);
  CHECK_THROWS_AS(Bid::from_value(256, 8), Error);
  CHECK(Bid::from_value(0, 3).bit(1) == 0);
}

TEST_CASE("code generation") {
  const Field& field = demo_field();
  SplitRng rng(5);
  try {
    generate_codes(1, 2, 8, field, rng);
    FAIL("expected TooFewBidders");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_few_bidders);
  }

  Field tiny = Field::make(7, 3);
  SplitRng tiny_rng(5);
  SecretCodes codes = generate_codes(2, 3, 1, tiny, tiny_rng);
  CHECK(codes.a.size() == 3);
  CHECK(codes.c.size() == 3);
  CHECK(codes.e.size() == 1);
  for (const auto& v : codes.a) CHECK(v.v != 0);
  for (const auto& v : codes.c) CHECK(v.v != 0);
  for (const auto& v : codes.e) CHECK(v.v != 0);
}

TEST_CASE("indicators from received code columns") {
  const Field& field = demo_field();
  Indicators ind1 = compute_indicators(field, demo_columns(1));
  // 847 + 1449 + 30 + 1594 + 1950 = 5870
  CHECK(ind1.yes_at(1) == field.exponent(5870));
  CHECK(ind1.no_at(1) == field.exponent(-5870));

  Indicators ind4 = compute_indicators(field, demo_columns(4));
  CHECK(ind4.yes_at(8) == field.exponent(4519));
  CHECK(ind4.no_at(8) == field.exponent(-4519));

  // An all-zero column set collapses both indicators to zero.
  std::vector<std::vector<Exponent>> zeros(3, std::vector<Exponent>(2));
  Indicators zero_ind = compute_indicators(field, zeros);
  CHECK(zero_ind.yes_at(1).v == 0);
  CHECK(zero_ind.no_at(1).v == 0);

  zeros[1].clear();
  try {
    compute_indicators(field, zeros);
    FAIL("expected MissingShare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_share);
  }
}

TEST_CASE("bid shares close each column onto the indicator") {
  const Field& field = demo_field();

  ShareSet s4 = demo_shares(4);
  // Digit 8 of 222 is 0: shares [1334,1514,1313,1977] close with -10657.
  CHECK(s4.generated_at(5, 8) == field.exponent(-10657));
  Indicators ind4 = compute_indicators(field, demo_columns(4));
  CHECK(s4.column_sum(field, 8) == ind4.no_at(8));

  ShareSet s1 = demo_shares(1);
  Indicators ind1 = compute_indicators(field, demo_columns(1));
  CHECK(s1.column_sum(field, 1) == ind1.yes_at(1));  // digit 1 of 143 is 1

  // Random draws: every column lands on Y or N as dictated by the bit.
  SplitRng rng(77);
  SecretCodes codes = generate_codes(1, 4, 6, field, rng);
  std::vector<std::vector<Exponent>> columns(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 6; ++j)
      columns[i - 1].push_back(field.exponent(static_cast<std::int64_t>(
          rng.below(field.exp_modulus()))));
  Indicators ind = compute_indicators(field, columns);
  Bid bid = Bid::from_value(0b101101, 6);
  ShareSet shares = make_bid_shares(field, bid, ind, 2, 4, rng);
  for (int j = 1; j <= 6; ++j) {
    CHECK(shares.column_sum(field, j) ==
          (bid.bit(j) ? ind.yes_at(j) : ind.no_at(j)));
  }
}

TEST_CASE("winner adjustment rewrites later columns to Y") {
  const Field& field = demo_field();
  ShareSet shares = demo_shares(4);
  Indicators ind = compute_indicators(field, demo_columns(4));

  CHECK(shares.generated_at(4, 7) == field.exponent(1759));
  CHECK(shares.generated_at(4, 8) == field.exponent(1977));

  adjust_winner(field, shares, ind, 6);
  // w=7 already summed to Y (bit 1), so the share is untouched; w=8 flips
  // from N to Y via 1977 -> 11015.
  CHECK(shares.generated_at(4, 7) == field.exponent(1759));
  CHECK(shares.generated_at(4, 8) == field.exponent(11015));
  CHECK(shares.column_sum(field, 7) == ind.yes_at(7));
  CHECK(shares.column_sum(field, 8) == ind.yes_at(8));

  ShareSet again = shares;
  adjust_winner(field, again, ind, 6);
  CHECK(again.generated == shares.generated);  // fixed point
}

TEST_CASE("loser adjustment rewrites later columns to N") {
  const Field& field = demo_field();
  ShareSet shares = demo_shares(2);
  Indicators ind = compute_indicators(field, demo_columns(2));

  adjust_loser(field, shares, ind, 1);
  // Demo-run row for alpha_2 after dropping at j=1.
  const std::int64_t expected[] = {221, -12019, -11114, -6646,
                                   -9702, -11688, 866, 1801};
  for (int j = 1; j <= 8; ++j) {
    CHECK(shares.generated_at(2, j) == field.exponent(expected[j - 1]));
    if (j > 1) CHECK(shares.column_sum(field, j) == ind.no_at(j));
  }

  ShareSet s5 = demo_shares(5);
  Indicators ind5 = compute_indicators(field, demo_columns(5));
  adjust_loser(field, s5, ind5, 1);
  const std::int64_t expected5[] = {-9676, 1548, -9092, 1936,
                                    -10905, 1817, 3087, -11571};
  // Digits with bit 1 flip to the N-sum; digits already at N keep the
  // original share (1548, 1936, 1817, 3087 at w = 2, 4, 6, 7).
  const std::int64_t adjusted5[] = {-9676, -7976, -9092, -9750,
                                    -10905, -9343, -8461, -11571};
  CHECK(s5.generated_at(5, 1) == field.exponent(expected5[0]));
  for (int j = 2; j <= 8; ++j)
    CHECK(s5.generated_at(5, j) == field.exponent(adjusted5[j - 1]));

  // A bidder whose bits are all zero is already at N everywhere.
  SplitRng rng(123);
  std::vector<std::vector<Exponent>> columns(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      columns[i].push_back(
          field.exponent(static_cast<std::int64_t>(rng.below(2062))));
  Indicators ind0 = compute_indicators(field, columns);
  ShareSet zero_shares =
      make_bid_shares(field, Bid::from_value(0, 4), ind0, 3, 3, rng);
  ShareSet before = zero_shares;
  adjust_loser(field, zero_shares, ind0, 1);
  CHECK(zero_shares.generated == before.generated);
}

TEST_CASE("non-closing shares vary across seeds") {
  const Field& field = demo_field();
  SplitRng rng(1);
  std::vector<std::vector<Exponent>> columns(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      columns[i].push_back(
          field.exponent(static_cast<std::int64_t>(rng.below(2062))));
  Indicators ind = compute_indicators(field, columns);
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    SplitRng share_rng(seed);
    ShareSet shares =
        make_bid_shares(field, Bid::from_value(2, 2), ind, 1, 3, share_rng);
    seen.insert(shares.generated_at(1, 1).v);
  }
  CHECK(seen.size() >= 2);
}
