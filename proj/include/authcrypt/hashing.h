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

// Hash functions and the hash-based stream cipher used by both schemes.
//
// All hashing goes through SHA-256. Multi-part inputs are framed as
//
//   len(tag) || tag || len(part_0) || part_0 || ... || len(part_n) || part_n
//
// with 4-byte big-endian lengths, so different splits of the same byte
// string never collide. The tag separates the three uses of H (raw digest,
// reduction into Z_q, expansion into Z_p^*) from the session-key hash h.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "authcrypt/numeric.h"

namespace authcrypt {

inline constexpr std::size_t kDigestSize = 32;
using Digest = std::array<std::uint8_t, kDigestSize>;

/// 32-byte symmetric key produced by the session-key hash h.
struct SessionKey {
  std::array<std::uint8_t, 32> bytes{};
  friend bool operator==(const SessionKey&, const SessionKey&) = default;
};

/// One framed element of a hash input.
class HashPart {
 public:
  static HashPart bytes(ByteView data);
  static HashPart text(std::string_view data);
  /// Minimal big-endian magnitude.
  static HashPart integer(const BigUint& value);
  /// Big-endian magnitude left-padded to `width` bytes.
  static HashPart fixed(const BigUint& value, std::size_t width);
  static HashPart digest(const Digest& d);

  const Bytes& encoded() const { return data_; }

 private:
  explicit HashPart(Bytes data) : data_(std::move(data)) {}
  Bytes data_;
};

using HashInput = std::vector<HashPart>;

/// Framed encoding of `parts` under a domain tag, as described above.
Bytes encode_hash_input(std::string_view tag, const HashInput& parts);

/// Plain SHA-256.
Digest sha256(ByteView data);

/// H in raw mode: the 256-bit digest of the framed input.
Digest hash_H(const HashInput& parts);
/// H reduced into Z_q: the domain-separated digest read big-endian, mod q.
BigUint hash_to_zq(const HashInput& parts, const BigUint& q);
/// H expanded into Z_p^*: counter-mode SHA-256 stream truncated to |p| bits,
/// reduced mod p, rehashed with the next retry index if the result is zero.
BigUint hash_to_zp_star(const HashInput& parts, const BigUint& p);
/// h: session key from a group element, encoded at the byte width of p.
SessionKey kdf_h(const BigUint& t2, const BigUint& p);

/// Keystream XOR with block i = SHA-256(key || i), i a 64-bit big-endian
/// counter. Length-preserving; encryption and decryption are the same map.
Bytes sym_encrypt(const SessionKey& key, ByteView plaintext);
Bytes sym_decrypt(const SessionKey& key, ByteView ciphertext);

/// The hash oracles a scheme consults. The default suite forwards to the
/// free functions above; tests substitute StubHashSuite to pin outputs.
class HashSuite {
 public:
  virtual ~HashSuite() = default;
  virtual Digest raw(const HashInput& parts) const { return hash_H(parts); }
  virtual BigUint to_zq(const HashInput& parts, const BigUint& q) const {
    return hash_to_zq(parts, q);
  }
  virtual BigUint to_zp_star(const HashInput& parts, const BigUint& p) const {
    return hash_to_zp_star(parts, p);
  }
  virtual SessionKey session_key(const BigUint& t2, const BigUint& p) const {
    return kdf_h(t2, p);
  }
};

/// Process-wide SHA-256 suite.
const HashSuite& default_hash_suite();

/// Returns chosen values from the reducing hashes so toy-group vectors can
/// be checked by hand. zq_value wins over zq_function; anything unset falls
/// through to SHA-256. The configuration is fixed at construction.
class StubHashSuite final : public HashSuite {
 public:
  struct Config {
    std::optional<BigUint> zq_value;
    std::optional<BigUint> zp_star_value;
    std::function<BigUint(const HashInput&, const BigUint&)> zq_function;
  };

  explicit StubHashSuite(Config config) : config_(std::move(config)) {}

  BigUint to_zq(const HashInput& parts, const BigUint& q) const override;
  BigUint to_zp_star(const HashInput& parts, const BigUint& p) const override;

 private:
  Config config_;
};

}  // namespace authcrypt
