#pragma once

#include <stdexcept>
#include <string>

namespace vickrey {

/// Failure categories surfaced by the protocol engine. Each maps to one of
/// the documented error conditions of the library's public operations.
enum class Errc {
  not_prime,
  not_safe_prime,
  not_generator,
  zero_element,
  range_exhausted,
  too_few_bidders,
  missing_share,
  broken_ring,
  wrong_hop_count,
  incomplete_family,
  multiple_valid_claims,
  no_zero_digit,
  malformed_transcript,
  fixture_mismatch,
  context_mismatch,
  bad_config,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace vickrey
