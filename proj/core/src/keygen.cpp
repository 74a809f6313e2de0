#include "vickrey/keygen.hpp"

#include <openssl/evp.h>

#include "vickrey/simulation.hpp"

namespace vickrey {

KeyTriplet init_key_triplet(const Field& field, const SecretCodes& codes,
                            int i, int j) {
  Exponent sum_others{0};
  for (int u = 1; u <= codes.n; ++u) {
    if (u != i) sum_others = field.exp_add(sum_others, codes.a_at(u, j));
  }
  const Exponent e = codes.e_at(j);
  const Exponent e2 = field.exp_square(e);
  const Exponent base = field.exp_sub(codes.a_at(i, j), sum_others);
  // 2n-3 copies of a_{l,i,j} against the same subtrahend.
  Exponent scaled = field.exp_mul(
      field.exponent_u(static_cast<std::uint64_t>(2 * codes.n - 3)),
      codes.a_at(i, j));
  const Exponent fake_base = field.exp_sub(scaled, sum_others);
  return KeyTriplet{
      field.pow(field.g(), field.exp_mul(base, e)),
      field.pow(field.g(), field.exp_mul(fake_base, e2)),
      field.pow(field.g(), field.exp_mul(base, e2)),
  };
}

std::vector<GroupElement> KeySet::factor_column(int j) const {
  std::vector<GroupElement> column(n);
  for (int u = 1; u <= n; ++u) column[u - 1] = factor_at(u, j);
  return column;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string hash_commit(int owner, int n, int k,
                        std::span<const GroupElement> factors) {
  std::string serialized;
  for (int u = 1; u <= n; ++u) {
    for (int j = 1; j <= k; ++j) {
      serialized += std::to_string(owner);
      serialized += ':';
      serialized += std::to_string(u);
      serialized += ':';
      serialized += std::to_string(j);
      serialized += ':';
      serialized += std::to_string(factors[(u - 1) * k + (j - 1)].v);
      serialized += '\n';
    }
  }
  return sha256_hex(serialized);
}

std::vector<KeySet> closed_form_keys(const Field& field,
                                     std::span<const SecretCodes> codes) {
  const int n = static_cast<int>(codes.size());
  const int k = codes[0].k;
  std::vector<KeySet> sets(n);
  for (int l = 1; l <= n; ++l) {
    KeySet& set = sets[l - 1];
    set.owner = l;
    set.n = n;
    set.k = k;
    set.key.resize(k);
    set.check.resize(k);
    set.fake.resize(k);
    set.factors.resize(static_cast<std::size_t>(n) * k);
    for (int j = 1; j <= k; ++j) {
      Exponent prod_e{1};
      for (int u = 1; u <= n; ++u)
        prod_e = field.exp_mul(prod_e, codes[u - 1].e_at(j));
      const Exponent prod_e2 = field.exp_square(prod_e);
      GroupElement key = field.one();
      GroupElement check = field.one();
      GroupElement fake = field.one();
      for (int u = 1; u <= n; ++u) {
        Exponent sum_others{0};
        for (int h = 1; h <= n; ++h) {
          if (h != l)
            sum_others = field.exp_add(sum_others, codes[u - 1].a_at(h, j));
        }
        const Exponent base = field.exp_sub(codes[u - 1].a_at(l, j), sum_others);
        const Exponent scaled = field.exp_mul(
            field.exponent_u(static_cast<std::uint64_t>(2 * n - 3)),
            codes[u - 1].a_at(l, j));
        const Exponent fake_base = field.exp_sub(scaled, sum_others);
        const GroupElement factor =
            field.pow(field.g(), field.exp_mul(base, prod_e));
        set.factors[(u - 1) * k + (j - 1)] = factor;
        key = field.mul(key, factor);
        check =
            field.mul(check, field.pow(field.g(), field.exp_mul(base, prod_e2)));
        fake = field.mul(fake,
                         field.pow(field.g(), field.exp_mul(fake_base, prod_e2)));
      }
      set.key[j - 1] = key;
      set.check[j - 1] = check;
      set.fake[j - 1] = fake;
    }
    set.commitment = hash_commit(l, n, k, set.factors);
  }
  return sets;
}

void run_key_generation(Simulation& sim) {
  sim.bus.set_phase("keygen");
  for (auto& bidder : sim.bidders) bidder.launch_key_chains();
  sim.drain();
  for (auto& bidder : sim.bidders) bidder.finalize_keys();
  sim.drain();  // flush seller commitments
  if (sim.options.paranoid) sim.check_key_oracle();
}

}  // namespace vickrey
