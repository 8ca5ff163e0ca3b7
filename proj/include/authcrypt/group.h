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

// Schnorr groups, discrete-log key pairs and a simulated certification
// authority.

#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "authcrypt/hashing.h"
#include "authcrypt/numeric.h"

namespace authcrypt {

/// Prime p, prime q dividing p-1, and g of order q in Z_p^*.
struct GroupParams {
  BigUint p;
  BigUint q;
  BigUint g;
  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// (p, q, g) = (23, 11, 4). Small enough to check every value by hand.
GroupParams toy_params();

struct ParamGenOptions {
  unsigned primality_rounds = 40;
  /// Upper bound on candidate draws for each of q, p and g.
  std::size_t max_attempts = 1'000'000;
};

/// Builds q as a random bits_q-bit prime, then p = q*t + 1 (t even) as a
/// bits_p-bit prime, then g = h^((p-1)/q) for random h until g != 1.
/// Requires bits_q >= 8 and bits_p >= bits_q + 8; throws GenerationError
/// when a size is out of range or an attempt cap is hit.
GroupParams generate_params(std::size_t bits_p, std::size_t bits_q,
                            RandomSource& rng, ParamGenOptions options = {});

struct ParamsVerdict {
  bool valid = false;
  /// Name of the first invariant that failed; empty when valid.
  std::string failed_invariant;
  explicit operator bool() const { return valid; }
};

/// Checks, in order: p prime, q prime, q | p-1, 1 < g < p, g^q = 1 mod p.
ParamsVerdict validate_params(const GroupParams& params, unsigned rounds = 40);

/// True iff 1 <= y < p and y^q = 1 mod p.
bool in_subgroup(const GroupParams& params, const BigUint& y);

struct PublicKey {
  BigUint y;
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

/// Secret exponent x in [1, q-1] with y = g^x mod p.
///
/// Reads of the secret exponent go through secret(), which records the read
/// against the public key in a per-thread audit log. Tests use the log to
/// show that an operation never touched a particular party's secret.
class KeyPair {
 public:
  /// Derives y from x. Throws RangeError unless 1 <= x <= q-1.
  KeyPair(const GroupParams& params, BigUint x);
  /// Trusts the caller that y = g^x (used when loading key files).
  static KeyPair from_parts(BigUint x, BigUint y);

  const BigUint& secret() const;
  const PublicKey& public_key() const { return pub_; }
  const BigUint& y() const { return pub_.y; }

  /// Whether y = g^x and x is in range.
  bool consistent_with(const GroupParams& params) const;

 private:
  KeyPair(BigUint x, PublicKey pub) : x_(std::move(x)), pub_(std::move(pub)) {}
  BigUint x_;
  PublicKey pub_;
};

KeyPair keygen(const GroupParams& params, RandomSource& rng);

/// Per-thread tally of KeyPair::secret() calls, keyed by public key.
namespace secret_audit {
std::uint64_t reads(const PublicKey& key);
void clear();
}  // namespace secret_audit

/// Schnorr signature by a key over its own registration label.
struct PossessionProof {
  BigUint r;
  BigUint s;
};

PossessionProof prove_possession(const GroupParams& params, const KeyPair& key,
                                 std::string_view identity, RandomSource& rng);
bool verify_possession(const GroupParams& params, const PublicKey& key,
                       std::string_view identity,
                       const PossessionProof& proof);

enum class CaMode {
  /// Accept any key in the order-q subgroup.
  kMembershipOnly,
  /// Additionally require a proof of possession of the secret exponent.
  kStrictProofOfPossession,
};

std::string_view ca_mode_name(CaMode mode);
std::optional<CaMode> parse_ca_mode(std::string_view name);

struct RegistryEntry {
  std::string identity;
  PublicKey key;
  std::uint64_t sequence = 0;
};

/// Append-only key registry. Re-registering an identity supersedes the
/// earlier key for lookup() but keeps it in history(). Sequence numbers are
/// strictly increasing across all identities. Registration takes an
/// exclusive lock; lookups take a shared one.
class CaRegistry {
 public:
  explicit CaRegistry(GroupParams params,
                      CaMode mode = CaMode::kMembershipOnly);
  /// Rebuilds a registry from stored entries; throws Error if their
  /// sequence numbers are not strictly increasing.
  CaRegistry(GroupParams params, CaMode mode,
             std::vector<RegistryEntry> entries);

  CaRegistry(const CaRegistry&) = delete;
  CaRegistry& operator=(const CaRegistry&) = delete;

  /// Records the key and returns its sequence number. Throws
  /// RejectedKeyError if the key is outside the subgroup, is the identity
  /// element, or (strict mode) lacks a valid proof of possession.
  std::uint64_t register_key(std::string_view identity, const PublicKey& key,
                             const PossessionProof* proof = nullptr);

  std::optional<RegistryEntry> lookup(std::string_view identity) const;
  std::vector<RegistryEntry> history(std::string_view identity) const;
  std::vector<RegistryEntry> entries() const;

  const GroupParams& params() const { return params_; }
  CaMode mode() const { return mode_; }

 private:
  GroupParams params_;
  CaMode mode_;
  mutable std::shared_mutex mutex_;
  std::vector<RegistryEntry> entries_;
  std::uint64_t next_sequence_ = 1;
};

}  // namespace authcrypt
