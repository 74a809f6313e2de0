#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "vickrey/field.hpp"
#include "vickrey/transcript.hpp"

namespace vickrey {

/// Ring of n bidders, 1-based: successor wraps n -> 1, predecessor 1 -> n.
struct RingTopology {
  int n = 0;
  int successor(int l) const { return l == n ? 1 : l + 1; }
  int predecessor(int l) const { return l == 1 ? n : l - 1; }
};

enum class Kind : std::uint8_t {
  key,          // K, forward, exponent e
  fake_key,     // F, forward, exponent e^2
  check_key,    // C, backward, exponent e^2
  commit,       // bold P, forward, hop-indexed code c
  round_b,      // B, forward, exponent e
  round_p,      // P, backward, exponent e^3
  round_d,      // D, forward, exponent e
  price_check,  // script P, forward, hop-indexed code c
};

enum class Direction : std::uint8_t { forward, backward };
enum class TerminalRule : std::uint8_t { return_to_target, publish };

const char* kind_tag(Kind kind) noexcept;
Direction kind_direction(Kind kind) noexcept;
TerminalRule kind_terminal(Kind kind) noexcept;

/// A value circulating through the ring. `hop` counts transforms applied so
/// far; the originator's own transform is hop 1, and hop n marks a finished
/// item being delivered to `target`.
struct TransferItem {
  Kind kind{};
  int origin = 0;
  int target = 0;  // delivery index for return_to_target chains
  int digit = 0;   // j, 0 when not digit-scoped
  int hop = 1;
  GroupElement payload;
};

/// What a holder must do with an item after applying its transform.
struct HopOutcome {
  enum class Action { forward, return_to_target, publish } action;
  int next_holder = 0;  // valid for forward and return_to_target
  TransferItem item;
};

/// Applies one hop: `transform` is the exponent the current holder
/// contributes. Throws wrong_hop_count when the item's hop counter is
/// outside [1, n-1].
HopOutcome advance(const RingTopology& ring, const Field& field,
                   const TransferItem& item, int holder, Exponent transform);

/// Synchronous single-threaded transfer used by tests and oracles:
/// `transform(l, hop)` supplies each visitor's exponent. Returns the final
/// payload after all n-1 visits.
GroupElement ring_transfer(const RingTopology& ring, const Field& field,
                           int origin, GroupElement initial, Direction dir,
                           const std::function<Exponent(int bidder, int hop)>& transform);

struct BulletinEntry {
  std::uint64_t id = 0;
  std::string phase;
  int j = 0;
  int author = 0;
  std::string tag;  // family tag like "B/3": kind plus origin slot
  std::string payload;
};

/// Append-only public record. Every append is mirrored to the transcript by
/// the owning bus.
class BulletinBoard {
 public:
  std::uint64_t append(std::string phase, int j, int author, std::string tag,
                       std::string payload);
  const std::vector<BulletinEntry>& entries() const { return entries_; }

  /// Payload of tag `kind/origin` at digit j, or empty if absent.
  const BulletinEntry* find(const std::string& kind, int j, int origin) const;

  /// Product over origins 1..n of the family `kind/origin` at digit j.
  /// Throws incomplete_family naming the missing author.
  GroupElement aggregate_product(const Field& field, const std::string& kind,
                                 int j, int n) const;

 private:
  std::vector<BulletinEntry> entries_;
  std::uint64_t next_id_ = 1;
};

/// Point-to-point message bodies.
struct CodeShareMsg {
  std::vector<Exponent> column;  // a_{from,to,j} for all j
};
struct BidShareMsg {
  std::vector<Exponent> row;  // b_{to,from,j} for all j
};
struct MaskShareMsg {
  int digit = 0;
  GroupElement d;  // d_{to,from,digit}
};
struct CommitmentMsg {
  std::string digest_hex;
};

struct Message {
  int from = 0;
  int to = 0;  // 0 = seller/coordinator
  std::variant<TransferItem, CodeShareMsg, BidShareMsg, MaskShareMsg,
               CommitmentMsg>
      body;
};

/// In-process bus with per-edge FIFO queues. Delivery interleaves edges in a
/// fixed order, which simulates concurrent chains deterministically. Every
/// send and publish is mirrored into the transcript.
class Bus {
 public:
  Bus(int n, Transcript* transcript) : n_(n), transcript_(transcript) {}

  void set_phase(std::string phase) { phase_ = std::move(phase); }
  const std::string& phase() const { return phase_; }

  void send(Message msg);

  /// Publish to the bulletin board (mirrored with receiver "public").
  std::uint64_t publish(int j, int author, std::string tag, std::string payload);

  /// Delivers queued messages to `handler` until quiescent, one message per
  /// edge per sweep. Throws broken_ring if `expected` deliveries were
  /// announced but the bus went quiet early (a party stopped forwarding).
  void drain(const std::function<void(const Message&)>& handler);

  bool idle() const;
  std::uint64_t delivered_count() const { return delivered_; }

  BulletinBoard& board() { return board_; }
  const BulletinBoard& board() const { return board_; }
  Transcript* transcript() { return transcript_; }

 private:
  void mirror(const Message& msg);

  int n_;
  Transcript* transcript_;
  std::string phase_ = "setup";
  std::map<std::pair<int, int>, std::deque<Message>> queues_;
  BulletinBoard board_;
  std::uint64_t delivered_ = 0;
};

}  // namespace vickrey
