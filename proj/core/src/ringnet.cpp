#include "vickrey/ringnet.hpp"

#include <algorithm>

namespace vickrey {

const char* kind_tag(Kind kind) noexcept {
  switch (kind) {
    case Kind::key: return "K";
    case Kind::fake_key: return "F";
    case Kind::check_key: return "C";
    case Kind::commit: return "commit";
    case Kind::round_b: return "B";
    case Kind::round_p: return "P";
    case Kind::round_d: return "D";
    case Kind::price_check: return "check";
  }
  return "?";
}

Direction kind_direction(Kind kind) noexcept {
  switch (kind) {
    case Kind::check_key:
    case Kind::round_p:
      return Direction::backward;
    default:
      return Direction::forward;
  }
}

TerminalRule kind_terminal(Kind kind) noexcept {
  switch (kind) {
    case Kind::key:
    case Kind::fake_key:
    case Kind::check_key:
      return TerminalRule::return_to_target;
    default:
      return TerminalRule::publish;
  }
}

HopOutcome advance(const RingTopology& ring, const Field& field,
                   const TransferItem& item, int holder, Exponent transform) {
  if (item.hop < 1 || item.hop > ring.n - 1)
    fail(Errc::wrong_hop_count, "hop " + std::to_string(item.hop) + " of " +
                                    std::to_string(ring.n));
  TransferItem next = item;
  next.payload = field.pow(item.payload, transform);
  next.hop = item.hop + 1;
  HopOutcome out{HopOutcome::Action::forward, 0, next};
  if (item.hop < ring.n - 1) {
    out.action = HopOutcome::Action::forward;
    out.next_holder = kind_direction(item.kind) == Direction::forward
                          ? ring.successor(holder)
                          : ring.predecessor(holder);
  } else if (kind_terminal(item.kind) == TerminalRule::return_to_target) {
    out.action = HopOutcome::Action::return_to_target;
    out.next_holder = item.target;
  } else {
    out.action = HopOutcome::Action::publish;
    out.next_holder = holder;
  }
  return out;
}

GroupElement ring_transfer(const RingTopology& ring, const Field& field,
                           int origin, GroupElement initial, Direction dir,
                           const std::function<Exponent(int, int)>& transform) {
  GroupElement value = initial;
  int holder = origin;
  for (int hop = 1; hop <= ring.n - 1; ++hop) {
    holder = dir == Direction::forward ? ring.successor(holder)
                                       : ring.predecessor(holder);
    value = field.pow(value, transform(holder, hop));
  }
  return value;
}

std::uint64_t BulletinBoard::append(std::string phase, int j, int author,
                                    std::string tag, std::string payload) {
  BulletinEntry entry;
  entry.id = next_id_++;
  entry.phase = std::move(phase);
  entry.j = j;
  entry.author = author;
  entry.tag = std::move(tag);
  entry.payload = std::move(payload);
  entries_.push_back(std::move(entry));
  return entries_.back().id;
}

const BulletinEntry* BulletinBoard::find(const std::string& kind, int j,
                                         int origin) const {
  const std::string tag = kind + "/" + std::to_string(origin);
  for (const auto& entry : entries_) {
    if (entry.j == j && entry.tag == tag) return &entry;
  }
  return nullptr;
}

GroupElement BulletinBoard::aggregate_product(const Field& field,
                                              const std::string& kind, int j,
                                              int n) const {
  GroupElement product = field.one();
  for (int origin = 1; origin <= n; ++origin) {
    const BulletinEntry* entry = find(kind, j, origin);
    if (entry == nullptr)
      fail(Errc::incomplete_family,
           kind + " at j=" + std::to_string(j) + " missing author " +
               std::to_string(origin));
    product = field.mul(product, field.element(std::stoull(entry->payload)));
  }
  return product;
}

void Bus::send(Message msg) {
  mirror(msg);
  queues_[{msg.from, msg.to}].push_back(std::move(msg));
}

std::uint64_t Bus::publish(int j, int author, std::string tag,
                           std::string payload) {
  if (transcript_)
    transcript_->append(phase_, j, author, "public", tag, payload);
  return board_.append(phase_, j, author, std::move(tag), std::move(payload));
}

bool Bus::idle() const {
  return std::all_of(queues_.begin(), queues_.end(),
                     [](const auto& kv) { return kv.second.empty(); });
}

void Bus::drain(const std::function<void(const Message&)>& handler) {
  bool delivered_any = true;
  while (delivered_any) {
    delivered_any = false;
    // One message per edge per sweep keeps independent chains in flight
    // together, like the concurrent execution the protocol describes.
    for (auto& [edge, queue] : queues_) {
      if (queue.empty()) continue;
      Message msg = std::move(queue.front());
      queue.pop_front();
      ++delivered_;
      handler(msg);
      delivered_any = true;
    }
  }
}

namespace {

std::string describe_tag(const Message& msg) {
  return std::visit(
      [&](const auto& body) -> std::string {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, TransferItem>) {
          std::string tag = std::string(kind_tag(body.kind)) + "/" +
                            std::to_string(body.origin);
          if (body.target != 0) tag += "/" + std::to_string(body.target);
          tag += "#r" + std::to_string(body.hop);
          return tag;
        } else if constexpr (std::is_same_v<T, CodeShareMsg>) {
          return "a/" + std::to_string(msg.from);
        } else if constexpr (std::is_same_v<T, BidShareMsg>) {
          return "b/" + std::to_string(msg.from);
        } else if constexpr (std::is_same_v<T, MaskShareMsg>) {
          return "d/" + std::to_string(msg.from);
        } else {
          return "commitment";
        }
      },
      msg.body);
}

std::string describe_payload(const Message& msg) {
  return std::visit(
      [](const auto& body) -> std::string {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, TransferItem>) {
          return std::to_string(body.payload.v);
        } else if constexpr (std::is_same_v<T, CodeShareMsg>) {
          std::string out;
          for (std::size_t idx = 0; idx < body.column.size(); ++idx) {
            if (idx) out += ':';
            out += std::to_string(body.column[idx].v);
          }
          return out;
        } else if constexpr (std::is_same_v<T, BidShareMsg>) {
          std::string out;
          for (std::size_t idx = 0; idx < body.row.size(); ++idx) {
            if (idx) out += ':';
            out += std::to_string(body.row[idx].v);
          }
          return out;
        } else if constexpr (std::is_same_v<T, MaskShareMsg>) {
          return std::to_string(body.d.v);
        } else {
          return body.digest_hex;
        }
      },
      msg.body);
}

int message_digit(const Message& msg) {
  return std::visit(
      [](const auto& body) -> int {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, TransferItem>) return body.digit;
        if constexpr (std::is_same_v<T, MaskShareMsg>) return body.digit;
        return 0;
      },
      msg.body);
}

}  // namespace

void Bus::mirror(const Message& msg) {
  if (!transcript_) return;
  transcript_->append(phase_, message_digit(msg), msg.from,
                      msg.to == 0 ? "seller" : std::to_string(msg.to),
                      describe_tag(msg), describe_payload(msg));
}

}  // namespace vickrey
