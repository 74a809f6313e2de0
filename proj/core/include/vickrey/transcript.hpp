#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vickrey {

/// One logged event: a point-to-point send, a bulletin publish (receiver
/// "public"), or a seller-directed message (receiver "seller"). Sender 0 is
/// the coordinator role. Payloads are decimal strings (or hex digests) so
/// values above 2^53 survive any JSON round trip.
struct TranscriptRecord {
  std::uint64_t seq = 0;
  std::string phase;
  int j = 0;  // digit index, 0 when not digit-scoped
  int sender = 0;
  std::string receiver;
  std::string tag;
  std::string payload;
};

class Transcript {
 public:
  std::uint64_t append(std::string phase, int j, int sender,
                       std::string receiver, std::string tag,
                       std::string payload);

  const std::vector<TranscriptRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  /// JSON-lines, one record per line, stable field order.
  void write_jsonl(std::ostream& out) const;
  std::string to_jsonl() const;

  /// Throws malformed_transcript with the 1-based line number on bad input.
  static Transcript parse_jsonl(std::istream& in);
  static Transcript load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  std::vector<TranscriptRecord> records_;
  std::uint64_t next_seq_ = 1;
};

}  // namespace vickrey
