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

// The Ma-Chen authenticated encryption scheme, implemented as published.
//
// Sender (secret x_A), receiver (secret x_B), message m in Z_p^*:
//
//   k <- Z_q^*,  v = (g*y_B)^k mod p,  e = v mod q
//   c = m * H(v)^-1 mod p,  r = H(e, H(m)),  s = k - x_A*r mod q
//
// The receiver recomputes v = (g*y_B)^s * y_A^(r(x_B+1)) mod p, recovers
// m = c*H(v) mod p and accepts iff r = H(e, H(m)).
//
// For arbitration the receiver releases (H(m), K1, r, s) with
// K1 = (y_B^s * y_A^(r*x_B) mod p) mod q, and the arbitrator accepts iff
// r = H(e', H(m)) for e' = (g^s * y_A^r * K1 mod p) mod q. That check is
// kept exactly as published and does not accept honest proofs: K1 is
// reduced mod q before being multiplied into a mod-p product, so e' != e.
// ttp_verify_unreduced() is a non-normative diagnostic that skips the
// reduction and shows it is the sole cause.
//
// r comes from HashSuite::to_zq, so it is already reduced into Z_q when it
// is used as an exponent.

#pragma once

#include <optional>

#include "authcrypt/group.h"
#include "authcrypt/hashing.h"
#include "authcrypt/numeric.h"
#include "authcrypt/verdict.h"

namespace authcrypt::machen {

struct Ciphertext {
  BigUint c;  // [1, p-1]
  BigUint r;  // [0, q-1]
  BigUint s;  // [0, q-1]
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// What the receiver hands the arbitrator. Deliberately carries no v.
struct Proof {
  Digest m_digest{};
  BigUint k1;  // [0, q-1]
  BigUint r;
  BigUint s;
  friend bool operator==(const Proof&, const Proof&) = default;
};

/// Diagnostic variant of Proof with K1 left unreduced (K1* in [1, p-1]).
struct UnreducedProof {
  Digest m_digest{};
  BigUint k1_star;
  BigUint r;
  BigUint s;
  friend bool operator==(const UnreducedProof&, const UnreducedProof&) = default;
};

/// y_AB = g^(x_A x_B) mod p.
struct SharedStaticKey {
  BigUint y_ab;
  friend bool operator==(const SharedStaticKey&, const SharedStaticKey&) = default;
};

/// Sender-side values, exposed for known-answer tests and the leakage demo.
struct SenderTranscript {
  Ciphertext ciphertext;
  BigUint v;
  BigUint e;
};

/// H(m) for a message in Z_p^*.
Digest message_digest(const BigUint& m, const HashSuite& hash = default_hash_suite());

/// r = H(e, H(m)) reduced into Z_q.
BigUint challenge(const GroupParams& params, const BigUint& e,
                  const Digest& m_digest,
                  const HashSuite& hash = default_hash_suite());

/// Throws InvalidMessageError unless 1 <= m <= p-1.
Ciphertext encrypt_sign(const GroupParams& params, const KeyPair& sender,
                        const PublicKey& receiver, const BigUint& m,
                        RandomSource& rng,
                        const HashSuite& hash = default_hash_suite());

/// encrypt_sign with a caller-chosen nonce k in [1, q-1].
SenderTranscript encrypt_sign_with_nonce(
    const GroupParams& params, const KeyPair& sender, const PublicKey& receiver,
    const BigUint& m, const BigUint& k,
    const HashSuite& hash = default_hash_suite());

/// v = (g*y_B)^s * y_A^(r(x_B+1)) mod p. Two exponentiations.
BigUint receiver_v(const GroupParams& params, const KeyPair& receiver,
                   const PublicKey& sender, const Ciphertext& ct);

/// Returns m on acceptance; nothing on rejection or out-of-range fields.
std::optional<BigUint> decrypt_verify(
    const GroupParams& params, const KeyPair& receiver, const PublicKey& sender,
    const Ciphertext& ct, const HashSuite& hash = default_hash_suite());

/// Converts an accepted ciphertext into an arbitration bundle. Two
/// exponentiations. The caller vouches that ct decrypted to m.
Proof make_proof(const GroupParams& params, const KeyPair& receiver,
                 const PublicKey& sender, const Ciphertext& ct,
                 const BigUint& m, const HashSuite& hash = default_hash_suite());

/// e' = (g^s * y_A^r * k1 mod p) mod q.
BigUint arbitrator_e(const GroupParams& params, const PublicKey& sender,
                     const BigUint& r, const BigUint& s, const BigUint& k1);

/// Arbitrator check as published. Two exponentiations.
Verdict ttp_verify(const GroupParams& params, const PublicKey& sender,
                   const Proof& proof,
                   const HashSuite& hash = default_hash_suite());

/// make_proof without the final reduction mod q. Diagnostic only.
UnreducedProof make_unreduced_proof(
    const GroupParams& params, const KeyPair& receiver, const PublicKey& sender,
    const Ciphertext& ct, const BigUint& m,
    const HashSuite& hash = default_hash_suite());

/// ttp_verify fed with the unreduced K1*. Diagnostic only.
Verdict ttp_verify_unreduced(const GroupParams& params, const PublicKey& sender,
                             const UnreducedProof& proof,
                             const HashSuite& hash = default_hash_suite());

/// Decrypts and verifies with y_AB in place of x_B:
/// v = (g*y_B)^s * y_AB^r * y_A^r mod p.
std::optional<BigUint> decrypt_with_shared_key(
    const GroupParams& params, const SharedStaticKey& shared,
    const PublicKey& sender, const PublicKey& receiver, const Ciphertext& ct,
    const HashSuite& hash = default_hash_suite());

/// Recovers y_AB from one leaked v:
/// y_AB = y_A^-1 * v^(r^-1) * (g*y_B)^(-s*r^-1) mod p.
/// Throws NoInverseError when r = 0.
SharedStaticKey recover_shared_key(const GroupParams& params, const BigUint& v,
                                   const Ciphertext& ct, const PublicKey& sender,
                                   const PublicKey& receiver);

}  // namespace authcrypt::machen
