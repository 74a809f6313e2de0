#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vickrey/field.hpp"

namespace vickrey {

/// A bid and its fixed-width binary expansion, most significant digit first
/// (digit j=1 is the top bit).
struct Bid {
  std::uint64_t value = 0;
  int width = 0;

  static Bid from_value(std::uint64_t value, int k);

  /// j is 1-based, MSB first.
  int bit(int j) const { return static_cast<int>((value >> (width - j)) & 1); }
};

/// Bidder l's private exponents: a[i][j] keyed per counterparty and digit,
/// c[i] keyed per ring hop, e[j] keyed per digit. All entries are nonzero
/// residues mod p-1.
struct SecretCodes {
  int owner = 0;  // 1-based
  int n = 0;
  int k = 0;
  std::vector<Exponent> a;  // n*k, row-major by counterparty i
  std::vector<Exponent> c;  // n
  std::vector<Exponent> e;  // k

  Exponent a_at(int i, int j) const { return a[(i - 1) * k + (j - 1)]; }
  Exponent c_at(int i) const { return c[i - 1]; }
  Exponent e_at(int j) const { return e[j - 1]; }
};

SecretCodes generate_codes(int owner, int n, int k, const Field& field,
                           SplitRng& rng);

/// Per-digit indicator pair: yes[j] is the sum of the a-column received for
/// this bidder, no[j] its negation. yes encodes digit bid 1, no encodes 0.
struct Indicators {
  std::vector<Exponent> yes;  // Y, length k
  std::vector<Exponent> no;   // N = -Y

  Exponent yes_at(int j) const { return yes[j - 1]; }
  Exponent no_at(int j) const { return no[j - 1]; }
};

/// columns[i-1] holds the a-values bidder i contributed for this bidder
/// (length k); an empty column means the share never arrived.
Indicators compute_indicators(const Field& field,
                              const std::vector<std::vector<Exponent>>& columns);

/// Bidder l's additive share state for its own bid (`generated`, the shares
/// it handed out, one row per recipient i) and for everyone's bids
/// (`received`, one row per source i). The own share generated[l][.] is the
/// only entry the adjustment rules may rewrite.
struct ShareSet {
  int owner = 0;
  int n = 0;
  int k = 0;
  std::vector<Exponent> generated;  // n*k: b_{i,owner,j}
  std::vector<Exponent> received;   // n*k: b_{owner,i,j}

  Exponent generated_at(int i, int j) const { return generated[(i - 1) * k + (j - 1)]; }
  void set_generated(int i, int j, Exponent v) { generated[(i - 1) * k + (j - 1)] = v; }
  Exponent received_at(int i, int j) const { return received[(i - 1) * k + (j - 1)]; }
  void set_received(int i, int j, Exponent v) { received[(i - 1) * k + (j - 1)] = v; }

  /// sum_i b_{i,owner,j}: the value the share-sum law constrains.
  Exponent column_sum(const Field& field, int j) const;
  /// sum_i b_{owner,i,j}: the exponent seeding this bidder's B/P chains.
  Exponent row_sum(const Field& field, int j) const;
};

/// Draws the first n-1 shares per digit uniformly (or takes them from
/// `fixture_rows`, one row per recipient) and closes with the share that
/// forces the column sum to Y when the bid digit is 1, N otherwise.
ShareSet make_bid_shares(const Field& field, const Bid& bid,
                         const Indicators& ind, int owner, int n,
                         SplitRng& rng,
                         const std::vector<std::vector<Exponent>>* fixture_rows = nullptr);

/// Leader rule: rewrite the own share so every later column sums to Y.
void adjust_winner(const Field& field, ShareSet& shares, const Indicators& ind,
                   int j);

/// Drop-out rule: rewrite the own share so every later column sums to N.
void adjust_loser(const Field& field, ShareSet& shares, const Indicators& ind,
                  int j);

}  // namespace vickrey
