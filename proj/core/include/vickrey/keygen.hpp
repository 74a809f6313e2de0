#pragma once

#include <span>
#include <string>
#include <vector>

#include "vickrey/codes.hpp"
#include "vickrey/field.hpp"

namespace vickrey {

struct Simulation;

/// Seed values of the three per-(i,j) key chains a bidder originates.
struct KeyTriplet {
  GroupElement key;    // exponent (a_i - sum_{u!=i} a_u) * e
  GroupElement fake;   // coefficient 2n-3 on a_i, exponent e^2
  GroupElement check;  // like key but exponent e^2
};

KeyTriplet init_key_triplet(const Field& field, const SecretCodes& codes,
                            int i, int j);

/// Bidder l's completed key material: per-digit key/check/fake values, the
/// retained per-source factors K_{u,l,j}, and the digest committed to the
/// seller.
struct KeySet {
  int owner = 0;
  int n = 0;
  int k = 0;
  std::vector<GroupElement> key;    // k
  std::vector<GroupElement> check;  // k
  std::vector<GroupElement> fake;   // k
  std::vector<GroupElement> factors;  // n*k: K_{u,owner,j}, u-major
  std::string commitment;

  GroupElement key_at(int j) const { return key[j - 1]; }
  GroupElement check_at(int j) const { return check[j - 1]; }
  GroupElement fake_at(int j) const { return fake[j - 1]; }
  GroupElement factor_at(int u, int j) const { return factors[(u - 1) * k + (j - 1)]; }
  std::vector<GroupElement> factor_column(int j) const;
};

/// Digest of the canonical factor serialization: one record per (u, j) in
/// ascending order, fields "owner:u:j:value" joined by ':' and records by
/// '\n'. SHA-256, lowercase hex.
std::string hash_commit(int owner, int n, int k,
                        std::span<const GroupElement> factors);

std::string sha256_hex(std::string_view data);

/// Closed-form evaluation of every bidder's key material straight from the
/// secret codes, bypassing the ring transfers. This is the simulator-side
/// oracle the transferred values are checked against.
std::vector<KeySet> closed_form_keys(const Field& field,
                                     std::span<const SecretCodes> codes);

/// Executes the key-generation phase over the simulation's bus: three
/// simultaneous ring transfers per (origin, target, digit), factor returns,
/// per-bidder products, and the hash commitments to the seller.
void run_key_generation(Simulation& sim);

}  // namespace vickrey
