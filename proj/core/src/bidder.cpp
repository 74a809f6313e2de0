#include "vickrey/bidder.hpp"

#include <string>

#include "vickrey/auction.hpp"

namespace vickrey {

Bidder::Bidder(const Field& field, RingTopology ring, int index, Bid bid,
               SecretCodes codes, SplitRng rng, Bus& bus)
    : field_(field),
      ring_(ring),
      index_(index),
      bid_(bid),
      codes_(std::move(codes)),
      rng_(rng),
      bus_(bus) {
  const int n = ring_.n;
  const int k = bid_.width;
  received_a_.resize(n);
  keys_.owner = index_;
  keys_.n = n;
  keys_.k = k;
  keys_.key.resize(k);
  keys_.check.resize(k);
  keys_.fake.resize(k);
  keys_.factors.resize(static_cast<std::size_t>(n) * k);
  fake_factors_.resize(static_cast<std::size_t>(n) * k);
  check_factors_.resize(static_cast<std::size_t>(n) * k);
  sole_flags_.assign(k, false);
  mask_rows_.resize(k);
  for (auto& row : mask_rows_) row.assign(n, GroupElement{0});
  dealt_masks_.resize(k);
}

void Bidder::set_observers(ChainStartObserver on_start,
                           TransformObserver on_hop) {
  on_chain_start_ = std::move(on_start);
  on_transform_ = std::move(on_hop);
}

Exponent Bidder::transform_for(const TransferItem& item) const {
  switch (item.kind) {
    case Kind::key:
    case Kind::round_b:
    case Kind::round_d:
      return codes_.e_at(item.digit);
    case Kind::fake_key:
    case Kind::check_key:
      return field_.exp_square(codes_.e_at(item.digit));
    case Kind::round_p:
      return field_.exp_cube(codes_.e_at(item.digit));
    case Kind::commit:
    case Kind::price_check:
      // Receiver of the r-th hop applies its code indexed r+1.
      return codes_.c_at(item.hop + 1);
  }
  fail(Errc::bad_config, "unknown transfer kind");
}

void Bidder::start_chain(Kind kind, int target, int digit,
                         GroupElement initial) {
  TransferItem item;
  item.kind = kind;
  item.origin = index_;
  item.target = target;
  item.digit = digit;
  item.hop = 1;
  item.payload = initial;
  if (on_chain_start_) on_chain_start_(item);
  const int next = kind_direction(kind) == Direction::forward
                       ? ring_.successor(index_)
                       : ring_.predecessor(index_);
  bus_.send(Message{index_, next, item});
}

void Bidder::launch_key_chains() {
  for (int i = 1; i <= ring_.n; ++i) {
    for (int j = 1; j <= bid_.width; ++j) {
      KeyTriplet triplet = init_key_triplet(field_, codes_, i, j);
      start_chain(Kind::key, i, j, triplet.key);
      start_chain(Kind::fake_key, i, j, triplet.fake);
      start_chain(Kind::check_key, i, j, triplet.check);
    }
  }
}

void Bidder::finalize_keys() {
  const int n = ring_.n;
  const int k = bid_.width;
  for (int j = 1; j <= k; ++j) {
    GroupElement key = field_.one();
    GroupElement fake = field_.one();
    GroupElement check = field_.one();
    for (int u = 1; u <= n; ++u) {
      key = field_.mul(key, keys_.factors[(u - 1) * k + (j - 1)]);
      fake = field_.mul(fake, fake_factors_[(u - 1) * k + (j - 1)]);
      check = field_.mul(check, check_factors_[(u - 1) * k + (j - 1)]);
    }
    keys_.key[j - 1] = key;
    keys_.fake[j - 1] = fake;
    keys_.check[j - 1] = check;
  }
  keys_.commitment = hash_commit(index_, n, k, keys_.factors);
  bus_.send(Message{index_, 0, CommitmentMsg{keys_.commitment}});
}

void Bidder::launch_commit_chain() {
  const Exponent seed =
      field_.exp_mul(field_.exponent_u(bid_.value), codes_.c_at(1));
  start_chain(Kind::commit, 0, 0, field_.pow(field_.g(), seed));
}

void Bidder::share_codes() {
  for (int i = 1; i <= ring_.n; ++i) {
    std::vector<Exponent> column(bid_.width);
    for (int j = 1; j <= bid_.width; ++j) column[j - 1] = codes_.a_at(i, j);
    if (i == index_) {
      received_a_[i - 1] = std::move(column);
    } else {
      bus_.send(Message{index_, i, CodeShareMsg{std::move(column)}});
    }
  }
}

void Bidder::derive_indicators_and_share_bids() {
  indicators_ = compute_indicators(field_, received_a_);
  const std::vector<std::vector<Exponent>>* fixture_rows = nullptr;
  if (fixture_ && !fixture_->bid_share_rows.empty())
    fixture_rows = &fixture_->bid_share_rows;
  shares_ = make_bid_shares(field_, bid_, indicators_, index_, ring_.n, rng_,
                            fixture_rows);
  if (fixture_rows != nullptr) {
    // The fixture also lists the closing row; the derived values must agree.
    for (int j = 1; j <= bid_.width; ++j) {
      const Exponent derived = shares_.generated_at(ring_.n, j);
      const Exponent listed = (*fixture_rows)[ring_.n - 1][j - 1];
      if (!(derived == listed))
        fail(Errc::fixture_mismatch, "closing bid share of bidder " +
                                         std::to_string(index_) + " at j=" +
                                         std::to_string(j));
    }
  }
  for (int i = 1; i <= ring_.n; ++i) {
    if (i == index_) continue;
    std::vector<Exponent> row(bid_.width);
    for (int j = 1; j <= bid_.width; ++j) row[j - 1] = shares_.generated_at(i, j);
    bus_.send(Message{index_, i, BidShareMsg{std::move(row)}});
  }
}

void Bidder::launch_round_bp(int j) {
  const Exponent row_sum = shares_.row_sum(field_, j);
  const Exponent e = codes_.e_at(j);
  start_chain(Kind::round_b, 0, j,
              field_.pow(field_.g(), field_.exp_mul(row_sum, e)));
  start_chain(Kind::round_p, 0, j,
              field_.pow(field_.g(), field_.exp_mul(row_sum, field_.exp_cube(e))));
}

void Bidder::select_masks(int j) {
  const GroupElement b_value =
      bus_.board().aggregate_product(field_, "B", j, ring_.n);
  const bool sole = keys_.key_at(j) == b_value;
  sole_flags_[j - 1] = sole;
  if (sole) adjust_winner(field_, shares_, indicators_, j);
  const GroupElement target = sole ? keys_.fake_at(j) : keys_.check_at(j);

  const int n = ring_.n;
  std::vector<GroupElement> dealt;
  if (fixture_ && !fixture_->mask_share_rows.empty()) {
    dealt.resize(n);
    GroupElement partial = field_.one();
    for (int i = 1; i < n; ++i) {
      dealt[i - 1] = fixture_->mask_share_rows[j - 1][i - 1];
      partial = field_.mul(partial, dealt[i - 1]);
    }
    dealt[n - 1] = field_.mul(target, field_.inv(partial));
    if (!(dealt[n - 1] == fixture_->mask_share_rows[j - 1][n - 1]))
      fail(Errc::fixture_mismatch,
           "closing mask share of bidder " + std::to_string(index_) + " at j=" +
               std::to_string(j));
  } else {
    dealt = mask_shares_for_target(field_, target, n, rng_);
  }
  dealt_masks_[j - 1] = dealt;
  for (int i = 1; i <= n; ++i) {
    if (i == index_) {
      mask_rows_[j - 1][i - 1] = dealt[i - 1];
    } else {
      bus_.send(Message{index_, i, MaskShareMsg{j, dealt[i - 1]}});
    }
  }
}

void Bidder::launch_round_d(int j) {
  GroupElement product = field_.one();
  for (int i = 1; i <= ring_.n; ++i)
    product = field_.mul(product, mask_rows_[j - 1][i - 1]);
  start_chain(Kind::round_d, 0, j, field_.pow(product, codes_.e_at(j)));
}

void Bidder::note_digit(int j, int digit) {
  if (cheat_.inflate_loser_adjustment && !cheat_fired_ &&
      j >= cheat_.trigger_digit) {
    adjust_winner(field_, shares_, indicators_, j);
    cheat_fired_ = true;
    return;
  }
  if (cheat_fired_) return;
  if (digit == 1 && shares_.column_sum(field_, j) == indicators_.no_at(j))
    adjust_loser(field_, shares_, indicators_, j);
}

void Bidder::launch_price_check(std::uint64_t p0) {
  const Exponent seed =
      field_.exp_mul(field_.exponent_u(p0), codes_.c_at(1));
  start_chain(Kind::price_check, 0, 0, field_.pow(field_.g(), seed));
}

std::optional<std::vector<GroupElement>> Bidder::claim_factors(
    int j_prime) const {
  if (!sole_flags_[j_prime - 1]) return std::nullopt;
  return keys_.factor_column(j_prime);
}

void Bidder::advance_item(const TransferItem& item) {
  if (fail_after_ && transforms_done_ >= *fail_after_) return;  // ring break
  ++transforms_done_;
  const Exponent t = transform_for(item);
  if (on_transform_) on_transform_(item, index_, t);
  HopOutcome out = advance(ring_, field_, item, index_, t);
  switch (out.action) {
    case HopOutcome::Action::forward:
    case HopOutcome::Action::return_to_target:
      bus_.send(Message{index_, out.next_holder, out.item});
      break;
    case HopOutcome::Action::publish: {
      std::string tag =
          std::string(kind_tag(out.item.kind)) + "/" + std::to_string(out.item.origin);
      bus_.publish(out.item.digit, index_, std::move(tag),
                   std::to_string(out.item.payload.v));
      break;
    }
  }
}

void Bidder::store_final(const TransferItem& item) {
  const int k = bid_.width;
  const std::size_t slot =
      static_cast<std::size_t>(item.origin - 1) * k + (item.digit - 1);
  switch (item.kind) {
    case Kind::key:
      keys_.factors[slot] = item.payload;
      break;
    case Kind::fake_key:
      fake_factors_[slot] = item.payload;
      break;
    case Kind::check_key:
      check_factors_[slot] = item.payload;
      break;
    default:
      fail(Errc::wrong_hop_count, "finished item of non-key kind");
  }
}

void Bidder::handle(const Message& msg) {
  if (const auto* item = std::get_if<TransferItem>(&msg.body)) {
    if (item->hop == ring_.n) {
      store_final(*item);
    } else {
      advance_item(*item);
    }
    return;
  }
  if (const auto* codes = std::get_if<CodeShareMsg>(&msg.body)) {
    received_a_[msg.from - 1] = codes->column;
    return;
  }
  if (const auto* row = std::get_if<BidShareMsg>(&msg.body)) {
    for (int j = 1; j <= bid_.width; ++j)
      shares_.set_received(msg.from, j, row->row[j - 1]);
    return;
  }
  if (const auto* mask = std::get_if<MaskShareMsg>(&msg.body)) {
    mask_rows_[mask->digit - 1][msg.from - 1] = mask->d;
    return;
  }
  fail(Errc::bad_config, "unexpected message for bidder " + std::to_string(index_));
}

}  // namespace vickrey
