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

// Serialization of parameters, keys, ciphertexts and proofs.
//
// TLV form: every object is one outer record whose tag names the kind and
// whose value is a fixed sequence of inner field records. A record is
//
//   tag (1 byte) || length (4 bytes, big-endian) || value
//
// Integers are minimal big-endian magnitudes; zero is the empty string and
// a leading zero byte is rejected. Optional fields are simply absent.
//
// Packed form (ciphertexts only): c, r, s back to back, c at the byte width
// of p and r, s at the byte width of q. The improved scheme's c is a byte
// string of any length, so its packed form is c || r || s with c taking
// whatever precedes the two fixed-width trailers.
//
// Armored form wraps either encoding as
//
//   -----BEGIN <KIND>-----
//   base64, 64 characters per line
//   -----END <KIND>-----
//
// Decoders that take GroupParams also check field ranges against it.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "authcrypt/errors.h"
#include "authcrypt/group.h"
#include "authcrypt/hashing.h"
#include "authcrypt/improved.h"
#include "authcrypt/machen.h"

namespace authcrypt::codec {

enum class Kind : std::uint8_t {
  kGroupParams = 0x01,
  kPublicKey = 0x02,
  kSecretKey = 0x03,
  kMcCiphertext = 0x04,
  kImpCiphertext = 0x05,
  kProof = 0x06,
  kMcProof = 0x07,
};

/// "GROUP PARAMS", "PUBLIC KEY", ... as used in armor lines.
std::string_view armor_label(Kind kind);
std::optional<Kind> parse_armor_label(std::string_view label);

enum class ErrorKind {
  kTruncated,
  kTrailingData,
  kBadTag,
  kNonCanonical,
  kOutOfRange,
  kParamsMismatch,
  kBadArmor,
};

std::string_view error_kind_name(ErrorKind kind);

class CodecError : public Error {
 public:
  CodecError(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Improved-scheme proof plus the context a verifier needs to find the key.
struct ProofEnvelope {
  Digest params_fingerprint{};
  std::string sender;
  improved::PublicProof proof;
  friend bool operator==(const ProofEnvelope&, const ProofEnvelope&) = default;
};

/// Ma-Chen arbitration bundle. k1_star is the unreduced diagnostic value.
struct McProofEnvelope {
  Digest params_fingerprint{};
  std::string sender;
  machen::Proof proof;
  std::optional<BigUint> k1_star;
  friend bool operator==(const McProofEnvelope&, const McProofEnvelope&) = default;
};

/// SHA-256 of the TLV encoding of params.
Digest fingerprint(const GroupParams& params);

Bytes encode(const GroupParams& params);
Bytes encode(const PublicKey& key);
/// Reads the secret. Stores x and y.
Bytes encode(const KeyPair& key);
Bytes encode(const machen::Ciphertext& ct);
Bytes encode(const improved::Ciphertext& ct);
Bytes encode(const ProofEnvelope& proof);
Bytes encode(const McProofEnvelope& proof);

GroupParams decode_group_params(ByteView data);
PublicKey decode_public_key(const GroupParams& params, ByteView data);
/// Also checks y = g^x.
KeyPair decode_secret_key(const GroupParams& params, ByteView data);
machen::Ciphertext decode_mc_ciphertext(const GroupParams& params, ByteView data);
improved::Ciphertext decode_imp_ciphertext(const GroupParams& params, ByteView data);
/// Rejects an envelope whose fingerprint is not that of params.
ProofEnvelope decode_proof(const GroupParams& params, ByteView data);
McProofEnvelope decode_mc_proof(const GroupParams& params, ByteView data);

/// Outer tag of a TLV object, without decoding the rest.
Kind peek_kind(ByteView data);

std::size_t packed_mc_size(const GroupParams& params);
Bytes encode_packed(const GroupParams& params, const machen::Ciphertext& ct);
Bytes encode_packed(const GroupParams& params, const improved::Ciphertext& ct);
machen::Ciphertext decode_packed_mc(const GroupParams& params, ByteView data);
improved::Ciphertext decode_packed_imp(const GroupParams& params, ByteView data);

std::string armor(Kind kind, ByteView data);
/// Any run of trailing CR/LF after the footer is accepted; nothing else is.
Bytes dearmor(Kind kind, std::string_view text);
/// Kind named in the BEGIN line.
Kind armored_kind(std::string_view text);

}  // namespace authcrypt::codec
