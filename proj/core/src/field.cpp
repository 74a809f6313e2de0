#include "vickrey/field.hpp"

#include <array>

namespace vickrey {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// First 40 primes, used as Miller-Rabin bases for n >= 2^32. The first
// twelve already decide primality for every 64-bit integer.
constexpr std::array<u64, 40> kBases = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < (u64(1) << 32)) {
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : kBases) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

bool is_safe_prime(u64 p) {
  return p >= 5 && p % 2 == 1 && is_prime(p) && is_prime((p - 1) / 2);
}

Field Field::make(u64 p, u64 g) {
  if (p < 7 || !is_prime(p)) fail(Errc::not_prime, "p=" + std::to_string(p));
  if (!is_prime((p - 1) / 2))
    fail(Errc::not_safe_prime, "(p-1)/2 not prime for p=" + std::to_string(p));
  if (g < 2 || g > p - 2) fail(Errc::not_generator, "g=" + std::to_string(g));
  // Group order is 2q; g generates it iff g^2 != 1 and g^q != 1.
  if (powmod(g, 2, p) == 1 || powmod(g, (p - 1) / 2, p) == 1)
    fail(Errc::not_generator, "g=" + std::to_string(g) + " has small order");
  return Field(p, g);
}

GroupElement Field::element(u64 raw) const {
  u64 v = raw % p_;
  if (v == 0) fail(Errc::zero_element, "0 is not a group element");
  return GroupElement{v};
}

GroupElement Field::mul(GroupElement a, GroupElement b) const {
  return GroupElement{mulmod(a.v, b.v, p_)};
}

GroupElement Field::pow(GroupElement base, Exponent e) const {
  return GroupElement{powmod(base.v, e.v, p_)};
}

GroupElement Field::inv(GroupElement x) const {
  if (x.v % p_ == 0) fail(Errc::zero_element, "inverse of zero");
  // Extended Euclid on (x, p); p prime so gcd is 1.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_);
  std::int64_t new_r = static_cast<std::int64_t>(x.v % p_);
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return GroupElement{static_cast<u64>(t)};
}

Exponent Field::exponent(std::int64_t raw) const {
  const std::int64_t m = static_cast<std::int64_t>(p_ - 1);
  std::int64_t v = raw % m;
  if (v < 0) v += m;
  return Exponent{static_cast<u64>(v)};
}

Exponent Field::exp_add(Exponent a, Exponent b) const {
  const u64 m = p_ - 1;
  u64 s = a.v + b.v;
  if (s >= m || s < a.v) s -= m;  // second clause guards 64-bit wrap
  return Exponent{s};
}

Exponent Field::exp_sub(Exponent a, Exponent b) const {
  const u64 m = p_ - 1;
  return Exponent{a.v >= b.v ? a.v - b.v : a.v + (m - b.v)};
}

Exponent Field::exp_mul(Exponent a, Exponent b) const {
  return Exponent{mulmod(a.v, b.v, p_ - 1)};
}

Exponent Field::exp_neg(Exponent a) const {
  return a.v == 0 ? a : Exponent{p_ - 1 - a.v};
}

std::pair<u64, u64> random_safe_prime(u64 lo, u64 hi, SplitRng& rng) {
  if (lo > hi) fail(Errc::bad_config, "empty safe-prime range");
  const u64 span = hi - lo + 1;
  const u64 start = lo + rng.below(span);
  for (u64 step = 0; step < span; ++step) {
    u64 candidate = start + step;
    if (candidate > hi) candidate -= span;  // wrap once over [lo, hi]
    if (candidate < 5 || candidate % 2 == 0) continue;
    if (candidate % 12 != 11) continue;  // safe primes > 7 are 11 mod 12
    if (!is_prime((candidate - 1) / 2) || !is_prime(candidate)) continue;
    // Half the nonzero residues generate the full group; a few draws suffice.
    for (int tries = 0; tries < 256; ++tries) {
      u64 g = rng.range(2, candidate - 2);
      if (powmod(g, 2, candidate) != 1 &&
          powmod(g, (candidate - 1) / 2, candidate) != 1) {
        return {candidate, g};
      }
    }
  }
  // 7 is the one admissible safe prime not congruent to 11 mod 12 (5 is a
  // safe prime too, but below the p >= 7 floor the field enforces).
  if (lo <= 7 && 7 <= hi) {
    for (int tries = 0; tries < 256; ++tries) {
      u64 g = rng.range(2, 5);
      if (powmod(g, 2, 7) != 1 && powmod(g, 3, 7) != 1) return {7, g};
    }
  }
  fail(Errc::range_exhausted, "no safe prime in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::not_safe_prime: return "NotSafePrime";
    case Errc::not_generator: return "NotGenerator";
    case Errc::zero_element: return "ZeroElement";
    case Errc::range_exhausted: return "RangeExhausted";
    case Errc::too_few_bidders: return "TooFewBidders";
    case Errc::missing_share: return "MissingShare";
    case Errc::broken_ring: return "BrokenRing";
    case Errc::wrong_hop_count: return "WrongHopCount";
    case Errc::incomplete_family: return "IncompleteFamily";
    case Errc::multiple_valid_claims: return "MultipleValidClaims";
    case Errc::no_zero_digit: return "NoZeroDigit";
    case Errc::malformed_transcript: return "MalformedTranscript";
    case Errc::fixture_mismatch: return "FixtureMismatch";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::bad_config: return "BadConfig";
  }
  return "UnknownError";
}

}  // namespace vickrey
