#include "vickrey/transcript.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vickrey/errors.hpp"

namespace vickrey {

using nlohmann::json;

std::uint64_t Transcript::append(std::string phase, int j, int sender,
                                 std::string receiver, std::string tag,
                                 std::string payload) {
  TranscriptRecord rec;
  rec.seq = next_seq_++;
  rec.phase = std::move(phase);
  rec.j = j;
  rec.sender = sender;
  rec.receiver = std::move(receiver);
  rec.tag = std::move(tag);
  rec.payload = std::move(payload);
  records_.push_back(std::move(rec));
  return records_.back().seq;
}

void Transcript::write_jsonl(std::ostream& out) const {
  for (const auto& rec : records_) {
    json line;
    line["seq"] = rec.seq;
    line["phase"] = rec.phase;
    if (rec.j != 0) line["j"] = rec.j;
    line["sender"] = rec.sender;
    line["receiver"] = rec.receiver;
    line["tag"] = rec.tag;
    line["payload"] = rec.payload;
    out << line.dump() << '\n';
  }
}

std::string Transcript::to_jsonl() const {
  std::ostringstream out;
  write_jsonl(out);
  return out.str();
}

Transcript Transcript::parse_jsonl(std::istream& in) {
  Transcript t;
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t prev_seq = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json parsed = json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object())
      fail(Errc::malformed_transcript, "line " + std::to_string(lineno));
    TranscriptRecord rec;
    try {
      rec.seq = parsed.at("seq").get<std::uint64_t>();
      rec.phase = parsed.at("phase").get<std::string>();
      rec.j = parsed.value("j", 0);
      rec.sender = parsed.at("sender").get<int>();
      rec.receiver = parsed.at("receiver").is_string()
                         ? parsed.at("receiver").get<std::string>()
                         : std::to_string(parsed.at("receiver").get<int>());
      rec.tag = parsed.at("tag").get<std::string>();
      rec.payload = parsed.at("payload").get<std::string>();
    } catch (const json::exception&) {
      fail(Errc::malformed_transcript, "line " + std::to_string(lineno));
    }
    if (rec.seq <= prev_seq)
      fail(Errc::malformed_transcript,
           "non-increasing seq at line " + std::to_string(lineno));
    prev_seq = rec.seq;
    t.records_.push_back(std::move(rec));
  }
  if (t.records_.empty()) fail(Errc::malformed_transcript, "empty transcript");
  t.next_seq_ = prev_seq + 1;
  return t;
}

Transcript Transcript::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::malformed_transcript, "cannot open " + path);
  return parse_jsonl(in);
}

void Transcript::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(Errc::bad_config, "cannot write " + path);
  write_jsonl(out);
}

}  // namespace vickrey
