#include "vickrey/codes.hpp"

#include <string>

namespace vickrey {

Bid Bid::from_value(std::uint64_t value, int k) {
  if (k < 1 || k > 63) fail(Errc::bad_config, "bid width k=" + std::to_string(k));
  if (k < 64 && value >> k)
    fail(Errc::bad_config, "bid " + std::to_string(value) + " needs more than " +
                               std::to_string(k) + " bits");
  return Bid{value, k};
}

SecretCodes generate_codes(int owner, int n, int k, const Field& field,
                           SplitRng& rng) {
  // n=2 collapses the fake-key coefficient 2n-3 to 1, so fake and check keys
  // coincide and the digit decision degenerates.
  if (n < 3) fail(Errc::too_few_bidders, "n=" + std::to_string(n));
  if (k < 1) fail(Errc::bad_config, "k=" + std::to_string(k));
  SecretCodes codes;
  codes.owner = owner;
  codes.n = n;
  codes.k = k;
  const std::uint64_t m = field.exp_modulus();
  auto nonzero = [&] { return Exponent{rng.range(1, m - 1)}; };
  codes.a.resize(static_cast<std::size_t>(n) * k);
  for (auto& v : codes.a) v = nonzero();
  codes.c.resize(n);
  for (auto& v : codes.c) v = nonzero();
  codes.e.resize(k);
  for (auto& v : codes.e) v = nonzero();
  return codes;
}

Indicators compute_indicators(const Field& field,
                              const std::vector<std::vector<Exponent>>& columns) {
  const int n = static_cast<int>(columns.size());
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (columns[i].empty())
      fail(Errc::missing_share, "no a-shares from bidder " + std::to_string(i + 1));
    k = static_cast<int>(columns[i].size());
  }
  Indicators ind;
  ind.yes.resize(k);
  ind.no.resize(k);
  for (int j = 0; j < k; ++j) {
    Exponent y{0};
    for (int i = 0; i < n; ++i) y = field.exp_add(y, columns[i][j]);
    ind.yes[j] = y;
    ind.no[j] = field.exp_neg(y);
  }
  return ind;
}

Exponent ShareSet::column_sum(const Field& field, int j) const {
  Exponent s{0};
  for (int i = 1; i <= n; ++i) s = field.exp_add(s, generated_at(i, j));
  return s;
}

Exponent ShareSet::row_sum(const Field& field, int j) const {
  Exponent s{0};
  for (int i = 1; i <= n; ++i) s = field.exp_add(s, received_at(i, j));
  return s;
}

ShareSet make_bid_shares(const Field& field, const Bid& bid,
                         const Indicators& ind, int owner, int n,
                         SplitRng& rng,
                         const std::vector<std::vector<Exponent>>* fixture_rows) {
  const int k = bid.width;
  ShareSet shares;
  shares.owner = owner;
  shares.n = n;
  shares.k = k;
  shares.generated.resize(static_cast<std::size_t>(n) * k);
  shares.received.resize(static_cast<std::size_t>(n) * k);
  const std::uint64_t m = field.exp_modulus();
  for (int j = 1; j <= k; ++j) {
    Exponent partial{0};
    for (int i = 1; i < n; ++i) {
      Exponent share = fixture_rows ? (*fixture_rows)[i - 1][j - 1]
                                    : Exponent{rng.below(m)};
      shares.set_generated(i, j, share);
      partial = field.exp_add(partial, share);
    }
    // Closing share lands on index n so the column hits the indicator.
    Exponent target = bid.bit(j) == 1 ? ind.yes_at(j) : ind.no_at(j);
    shares.set_generated(n, j, field.exp_sub(target, partial));
  }
  // Own row of `received` is the share kept for ourselves.
  for (int j = 1; j <= k; ++j)
    shares.set_received(owner, j, shares.generated_at(owner, j));
  return shares;
}

namespace {

void adjust_to(const Field& field, ShareSet& shares,
               const std::vector<Exponent>& targets, int j) {
  for (int w = j + 1; w <= shares.k; ++w) {
    Exponent others{0};
    for (int i = 1; i <= shares.n; ++i) {
      if (i != shares.owner) others = field.exp_add(others, shares.generated_at(i, w));
    }
    Exponent own = field.exp_sub(targets[w - 1], others);
    shares.set_generated(shares.owner, w, own);
    shares.set_received(shares.owner, w, own);
  }
}

}  // namespace

void adjust_winner(const Field& field, ShareSet& shares, const Indicators& ind,
                   int j) {
  adjust_to(field, shares, ind.yes, j);
}

void adjust_loser(const Field& field, ShareSet& shares, const Indicators& ind,
                  int j) {
  adjust_to(field, shares, ind.no, j);
}

}  // namespace vickrey
