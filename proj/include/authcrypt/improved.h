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

// Schnorr-based authenticated encryption with public verifiability.
//
//   sender:   k <- Z_q^*,  t1 = g^k,  t2 = y_B^k
//             c = E_h(t2)(m),  r = H(m, t1),  s = k + r*x_A mod q
//   receiver: t1 = g^s * y_A^-r,  t2 = t1^x_B,  m = D_h(t2)(c),
//             accept iff r = H(m, t1)
//
// (r, s) is an ordinary Schnorr signature on m, so the receiver proves
// origin by releasing (m, r, s) and anyone can check it with two
// exponentiations. Releasing the proof costs nothing.
//
// y_A^-r is computed as (y_A^-1)^r: one inversion plus one exponentiation.
// r = 0 is not special-cased.

#pragma once

#include <optional>

#include "authcrypt/group.h"
#include "authcrypt/hashing.h"
#include "authcrypt/numeric.h"
#include "authcrypt/verdict.h"

namespace authcrypt::improved {

struct SchnorrSignature {
  BigUint r;  // [0, q-1]
  BigUint s;  // [0, q-1]
  friend bool operator==(const SchnorrSignature&, const SchnorrSignature&) = default;
};

struct Ciphertext {
  Bytes c;  // same length as the message
  SchnorrSignature sig;
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// Everything a third party needs to check origin. No receiver secrets.
struct PublicProof {
  Bytes m;
  SchnorrSignature sig;
  friend bool operator==(const PublicProof&, const PublicProof&) = default;
};

struct SenderTranscript {
  Ciphertext ciphertext;
  BigUint t1;
  BigUint t2;
};

/// r = H(m, t1), t1 encoded at the byte width of p.
BigUint challenge(const GroupParams& params, ByteView m, const BigUint& t1,
                  const HashSuite& hash = default_hash_suite());

Ciphertext encrypt_sign(const GroupParams& params, const KeyPair& sender,
                        const PublicKey& receiver, ByteView m, RandomSource& rng,
                        const HashSuite& hash = default_hash_suite());

/// encrypt_sign with a caller-chosen nonce k in [1, q-1].
SenderTranscript encrypt_sign_with_nonce(
    const GroupParams& params, const KeyPair& sender, const PublicKey& receiver,
    ByteView m, const BigUint& k, const HashSuite& hash = default_hash_suite());

/// t1 = g^s * y_A^-r mod p. Two exponentiations.
BigUint commitment(const GroupParams& params, const PublicKey& sender,
                   const SchnorrSignature& sig);

/// Returns m on acceptance. On rejection the decrypted bytes are wiped and
/// nothing is returned. Three exponentiations.
std::optional<Bytes> decrypt_verify(const GroupParams& params,
                                    const KeyPair& receiver,
                                    const PublicKey& sender,
                                    const Ciphertext& ct,
                                    const HashSuite& hash = default_hash_suite());

/// (m, r, s). No arithmetic at all.
PublicProof release_proof(const Ciphertext& ct, ByteView m);

/// Schnorr verification of (r, s) on m. Two exponentiations.
Verdict public_verify(const GroupParams& params, const PublicKey& sender,
                      const PublicProof& proof,
                      const HashSuite& hash = default_hash_suite());

}  // namespace authcrypt::improved
