#pragma once

#include <cstdint>
#include <utility>

#include "vickrey/errors.hpp"
#include "vickrey/rng.hpp"

namespace vickrey {

/// Element of the multiplicative group mod p, canonical value in [1, p-1].
struct GroupElement {
  std::uint64_t v = 1;
  friend bool operator==(GroupElement, GroupElement) = default;
};

/// Residue mod p-1, canonical value in [0, p-2]. Everything that appears in
/// an exponent of the generator lives here; equality is equality mod p-1.
struct Exponent {
  std::uint64_t v = 0;
  friend bool operator==(Exponent, Exponent) = default;
};

/// Validated safe-prime field parameters plus the arithmetic on group
/// elements (mod p) and exponents (mod p-1). All operations are pure and a
/// Field is freely shareable across threads.
class Field {
 public:
  /// Validates p prime, q=(p-1)/2 prime, and g a generator of the full
  /// multiplicative group. Throws not_prime / not_safe_prime / not_generator.
  static Field make(std::uint64_t p, std::uint64_t g);

  std::uint64_t p() const { return p_; }
  std::uint64_t generator_value() const { return g_; }
  std::uint64_t q() const { return (p_ - 1) / 2; }
  /// Modulus of the exponent ring, p-1.
  std::uint64_t exp_modulus() const { return p_ - 1; }

  GroupElement g() const { return GroupElement{g_}; }
  GroupElement one() const { return GroupElement{1}; }

  /// Canonicalize an integer into the group; throws zero_element when the
  /// residue is 0 mod p.
  GroupElement element(std::uint64_t raw) const;

  GroupElement mul(GroupElement a, GroupElement b) const;
  /// Square-and-multiply; the exponent is already reduced mod p-1.
  GroupElement pow(GroupElement base, Exponent e) const;
  /// Multiplicative inverse by extended Euclid.
  GroupElement inv(GroupElement x) const;

  /// Canonical residue of any signed integer mod p-1; the signed
  /// representatives from replay listings map onto [0, p-2].
  Exponent exponent(std::int64_t raw) const;
  Exponent exponent_u(std::uint64_t raw) const { return Exponent{raw % (p_ - 1)}; }

  Exponent exp_add(Exponent a, Exponent b) const;
  Exponent exp_sub(Exponent a, Exponent b) const;
  Exponent exp_mul(Exponent a, Exponent b) const;
  Exponent exp_neg(Exponent a) const;
  Exponent exp_square(Exponent a) const { return exp_mul(a, a); }
  Exponent exp_cube(Exponent a) const { return exp_mul(exp_mul(a, a), a); }

  bool same_context(const Field& other) const {
    return p_ == other.p_ && g_ == other.g_;
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(std::uint64_t p, std::uint64_t g) : p_(p), g_(g) {}
  std::uint64_t p_;
  std::uint64_t g_;
};

/// Deterministic below 2^32 (trial division), 40 Miller-Rabin rounds above.
bool is_prime(std::uint64_t n);

bool is_safe_prime(std::uint64_t p);

/// Picks a uniform starting point in [lo, hi] and scans for a safe prime,
/// wrapping around once; also selects a generator. Throws range_exhausted
/// when the interval contains no safe prime.
std::pair<std::uint64_t, std::uint64_t> random_safe_prime(std::uint64_t lo,
                                                          std::uint64_t hi,
                                                          SplitRng& rng);

}  // namespace vickrey
