// Copyright 2026 The authcrypt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "authcrypt/group.h"

#include <map>
#include <mutex>

#include "authcrypt/errors.h"

namespace authcrypt {
namespace {

thread_local std::map<std::string, std::uint64_t> audit_log;

BigUint random_prime(std::size_t bits, RandomSource& rng,
                     const ParamGenOptions& options) {
  const BigUint top = BigUint::power_of_two(bits - 1);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    BigUint candidate = random_bits(bits - 1, rng) + top;
    if (!candidate.is_odd()) candidate += BigUint(1);
    if (candidate.bit_length() != bits) continue;
    if (is_prime(candidate, options.primality_rounds, &rng)) return candidate;
  }
  throw GenerationError("no " + std::to_string(bits) + "-bit prime found in " +
                        std::to_string(options.max_attempts) + " attempts");
}

HashInput possession_input(const GroupParams& params, const PublicKey& key,
                           std::string_view identity, const BigUint& t) {
  const std::size_t width = params.p.byte_length();
  return {HashPart::text("proof-of-possession"), HashPart::text(identity),
          HashPart::fixed(key.y, width), HashPart::fixed(t, width)};
}

}  // namespace

GroupParams toy_params() { return {BigUint(23), BigUint(11), BigUint(4)}; }

GroupParams generate_params(std::size_t bits_p, std::size_t bits_q,
                            RandomSource& rng, ParamGenOptions options) {
  if (bits_q < 8 || bits_p < bits_q + 8) {
    throw GenerationError("need bits_q >= 8 and bits_p >= bits_q + 8 (got p=" +
                          std::to_string(bits_p) +
                          ", q=" + std::to_string(bits_q) + ")");
  }
  GroupParams params;
  params.q = random_prime(bits_q, rng, options);

  // p = X - (X mod 2q) + 1 is 1 mod 2q, so (p - 1) / q is even.
  const BigUint two_q = params.q * BigUint(2);
  const BigUint top = BigUint::power_of_two(bits_p - 1);
  bool found = false;
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    const BigUint x = random_bits(bits_p - 1, rng) + top;
    BigUint candidate = x - x % two_q + BigUint(1);
    if (candidate.bit_length() != bits_p) continue;
    if (is_prime(candidate, options.primality_rounds, &rng)) {
      params.p = std::move(candidate);
      found = true;
      break;
    }
  }
  if (!found) {
    throw GenerationError("no " + std::to_string(bits_p) +
                          "-bit prime p = 1 mod 2q found");
  }

  const BigUint cofactor = (params.p - BigUint(1)) / params.q;
  const BigUint h_range = params.p - BigUint(3);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    const BigUint h = random_below(h_range, rng) + BigUint(2);
    BigUint g = mod_exp(h, cofactor, params.p);
    if (g != BigUint(1)) {
      params.g = std::move(g);
      return params;
    }
  }
  throw GenerationError("no generator found");
}

ParamsVerdict validate_params(const GroupParams& params, unsigned rounds) {
  auto fail = [](std::string name) { return ParamsVerdict{false, std::move(name)}; };
  if (!is_prime(params.p, rounds)) return fail("p is prime");
  if (!is_prime(params.q, rounds)) return fail("q is prime");
  if (!((params.p - BigUint(1)) % params.q).is_zero()) return fail("q divides p-1");
  if (params.g == BigUint(1)) return fail("generator is not the identity");
  if (params.g.is_zero() || params.g >= params.p) return fail("generator lies in Z_p^*");
  if (mod_exp(params.g, params.q, params.p) != BigUint(1)) {
    return fail("generator has order q");
  }
  return {true, {}};
}

bool in_subgroup(const GroupParams& params, const BigUint& y) {
  if (y.is_zero() || y >= params.p) return false;
  return mod_exp(y, params.q, params.p) == BigUint(1);
}

KeyPair::KeyPair(const GroupParams& params, BigUint x) {
  if (x.is_zero() || x >= params.q) {
    throw RangeError("secret exponent must lie in [1, q-1]");
  }
  pub_.y = mod_exp(params.g, x, params.p);
  x_ = std::move(x);
}

KeyPair KeyPair::from_parts(BigUint x, BigUint y) {
  return KeyPair(std::move(x), PublicKey{std::move(y)});
}

const BigUint& KeyPair::secret() const {
  ++audit_log[pub_.y.to_hex()];
  return x_;
}

bool KeyPair::consistent_with(const GroupParams& params) const {
  return !x_.is_zero() && x_ < params.q &&
         mod_exp(params.g, x_, params.p) == pub_.y;
}

KeyPair keygen(const GroupParams& params, RandomSource& rng) {
  return KeyPair(params, sample_zq_star(params.q, rng));
}

namespace secret_audit {

std::uint64_t reads(const PublicKey& key) {
  auto it = audit_log.find(key.y.to_hex());
  return it == audit_log.end() ? 0 : it->second;
}

void clear() { audit_log.clear(); }

}  // namespace secret_audit

PossessionProof prove_possession(const GroupParams& params, const KeyPair& key,
                                 std::string_view identity,
                                 RandomSource& rng) {
  const BigUint k = sample_zq_star(params.q, rng);
  const BigUint t = mod_exp(params.g, k, params.p);
  PossessionProof proof;
  proof.r = hash_to_zq(possession_input(params, key.public_key(), identity, t),
                       params.q);
  proof.s = mod_add(k, mod_mul(proof.r, key.secret(), params.q), params.q);
  return proof;
}

bool verify_possession(const GroupParams& params, const PublicKey& key,
                       std::string_view identity,
                       const PossessionProof& proof) {
  if (proof.r >= params.q || proof.s >= params.q) return false;
  if (key.y.is_zero() || key.y >= params.p) return false;
  const BigUint y_inv = mod_inv(key.y, params.p);
  const BigUint t = mod_mul(mod_exp(params.g, proof.s, params.p),
                            mod_exp(y_inv, proof.r, params.p), params.p);
  return hash_to_zq(possession_input(params, key, identity, t), params.q) ==
         proof.r;
}

std::string_view ca_mode_name(CaMode mode) {
  switch (mode) {
    case CaMode::kMembershipOnly:
      return "default";
    case CaMode::kStrictProofOfPossession:
      return "strict-pop";
  }
  return "unknown";
}

std::optional<CaMode> parse_ca_mode(std::string_view name) {
  if (name == "default") return CaMode::kMembershipOnly;
  if (name == "strict-pop") return CaMode::kStrictProofOfPossession;
  return std::nullopt;
}

CaRegistry::CaRegistry(GroupParams params, CaMode mode)
    : params_(std::move(params)), mode_(mode) {}

CaRegistry::CaRegistry(GroupParams params, CaMode mode,
                       std::vector<RegistryEntry> entries)
    : params_(std::move(params)), mode_(mode), entries_(std::move(entries)) {
  std::uint64_t last = 0;
  for (const RegistryEntry& entry : entries_) {
    if (entry.sequence <= last) {
      throw Error("registry sequence numbers must strictly increase");
    }
    last = entry.sequence;
  }
  next_sequence_ = last + 1;
}

std::uint64_t CaRegistry::register_key(std::string_view identity,
                                       const PublicKey& key,
                                       const PossessionProof* proof) {
  if (identity.empty()) throw RejectedKeyError("empty identity label");
  if (!in_subgroup(params_, key.y)) {
    throw RejectedKeyError("public key for '" + std::string(identity) +
                           "' is not in the order-q subgroup");
  }
  if (key.y == BigUint(1)) {
    throw RejectedKeyError("public key for '" + std::string(identity) +
                           "' is the identity element");
  }
  if (mode_ == CaMode::kStrictProofOfPossession &&
      (proof == nullptr || !verify_possession(params_, key, identity, *proof))) {
    throw RejectedKeyError("missing or invalid proof of possession for '" +
                           std::string(identity) + "'");
  }
  std::unique_lock lock(mutex_);
  const std::uint64_t seq = next_sequence_++;
  entries_.push_back({std::string(identity), key, seq});
  return seq;
}

std::optional<RegistryEntry> CaRegistry::lookup(
    std::string_view identity) const {
  std::shared_lock lock(mutex_);
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->identity == identity) return *it;
  }
  return std::nullopt;
}

std::vector<RegistryEntry> CaRegistry::history(
    std::string_view identity) const {
  std::shared_lock lock(mutex_);
  std::vector<RegistryEntry> out;
  for (const RegistryEntry& entry : entries_) {
    if (entry.identity == identity) out.push_back(entry);
  }
  return out;
}

std::vector<RegistryEntry> CaRegistry::entries() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

}  // namespace authcrypt
