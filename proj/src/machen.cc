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

#include "authcrypt/machen.h"

#include "authcrypt/errors.h"

namespace authcrypt::machen {
namespace {

bool in_range(const GroupParams& params, const Ciphertext& ct) {
  return !ct.c.is_zero() && ct.c < params.p && ct.r < params.q &&
         ct.s < params.q;
}

// Shared tail of B-2/B-3: unmask m from v, then check the tag.
std::optional<BigUint> open(const GroupParams& params, const BigUint& v,
                            const Ciphertext& ct, const HashSuite& hash) {
  const BigUint e = v % params.q;
  BigUint m = mod_mul(ct.c, hash.to_zp_star({HashPart::integer(v)}, params.p),
                      params.p);
  if (challenge(params, e, message_digest(m, hash), hash) != ct.r) {
    return std::nullopt;
  }
  return m;
}

// y_B^s * y_A^(r x_B) mod p, before any reduction mod q.
BigUint k1_unreduced(const GroupParams& params, const KeyPair& receiver,
                     const PublicKey& sender, const Ciphertext& ct) {
  const BigUint exponent = mod_mul(ct.r, receiver.secret(), params.q);
  return mod_mul(mod_exp(receiver.y(), ct.s, params.p),
                 mod_exp(sender.y, exponent, params.p), params.p);
}

}  // namespace

BigUint challenge(const GroupParams& params, const BigUint& e,
                  const Digest& m_digest, const HashSuite& hash) {
  return hash.to_zq({HashPart::integer(e), HashPart::digest(m_digest)}, params.q);
}

BigUint arbitrator_e(const GroupParams& params, const PublicKey& sender,
                     const BigUint& r, const BigUint& s, const BigUint& k1) {
  const BigUint product =
      mod_mul(mod_mul(mod_exp(params.g, s, params.p),
                      mod_exp(sender.y, r, params.p), params.p),
              k1, params.p);
  return product % params.q;
}

Digest message_digest(const BigUint& m, const HashSuite& hash) {
  return hash.raw({HashPart::integer(m)});
}

Ciphertext encrypt_sign(const GroupParams& params, const KeyPair& sender,
                        const PublicKey& receiver, const BigUint& m,
                        RandomSource& rng, const HashSuite& hash) {
  if (m.is_zero() || m >= params.p) {
    throw InvalidMessageError("Ma-Chen message must lie in [1, p-1]");
  }
  return encrypt_sign_with_nonce(params, sender, receiver, m,
                                 sample_zq_star(params.q, rng), hash)
      .ciphertext;
}

SenderTranscript encrypt_sign_with_nonce(const GroupParams& params,
                                         const KeyPair& sender,
                                         const PublicKey& receiver,
                                         const BigUint& m, const BigUint& k,
                                         const HashSuite& hash) {
  if (m.is_zero() || m >= params.p) {
    throw InvalidMessageError("Ma-Chen message must lie in [1, p-1]");
  }
  if (k.is_zero() || k >= params.q) throw RangeError("nonce must lie in [1, q-1]");

  SenderTranscript out;
  const BigUint base = mod_mul(params.g, receiver.y, params.p);
  out.v = mod_exp(base, k, params.p);
  out.e = out.v % params.q;

  const BigUint mask = hash.to_zp_star({HashPart::integer(out.v)}, params.p);
  out.ciphertext.c = mod_mul(m, mod_inv(mask, params.p), params.p);
  out.ciphertext.r = challenge(params, out.e, message_digest(m, hash), hash);
  out.ciphertext.s = mod_sub(
      k, mod_mul(sender.secret(), out.ciphertext.r, params.q), params.q);
  return out;
}

BigUint receiver_v(const GroupParams& params, const KeyPair& receiver,
                   const PublicKey& sender, const Ciphertext& ct) {
  const BigUint base = mod_mul(params.g, receiver.y(), params.p);
  const BigUint exponent =
      mod_mul(ct.r, receiver.secret() + BigUint(1), params.q);
  return mod_mul(mod_exp(base, ct.s, params.p),
                 mod_exp(sender.y, exponent, params.p), params.p);
}

std::optional<BigUint> decrypt_verify(const GroupParams& params,
                                      const KeyPair& receiver,
                                      const PublicKey& sender,
                                      const Ciphertext& ct,
                                      const HashSuite& hash) {
  if (!in_range(params, ct)) return std::nullopt;
  return open(params, receiver_v(params, receiver, sender, ct), ct, hash);
}

Proof make_proof(const GroupParams& params, const KeyPair& receiver,
                 const PublicKey& sender, const Ciphertext& ct,
                 const BigUint& m, const HashSuite& hash) {
  Proof proof;
  proof.m_digest = message_digest(m, hash);
  proof.k1 = k1_unreduced(params, receiver, sender, ct) % params.q;
  proof.r = ct.r;
  proof.s = ct.s;
  return proof;
}

Verdict ttp_verify(const GroupParams& params, const PublicKey& sender,
                   const Proof& proof, const HashSuite& hash) {
  if (proof.r >= params.q || proof.s >= params.q || proof.k1 >= params.q) {
    return Verdict::reject("proof field out of range");
  }
  const BigUint e_prime = arbitrator_e(params, sender, proof.r, proof.s, proof.k1);
  if (challenge(params, e_prime, proof.m_digest, hash) != proof.r) {
    return Verdict::reject("r != H(e', H(m)) with e' = (g^s * y_A^r * K1 mod p) mod q");
  }
  return Verdict::accept();
}

UnreducedProof make_unreduced_proof(const GroupParams& params,
                                    const KeyPair& receiver,
                                    const PublicKey& sender,
                                    const Ciphertext& ct, const BigUint& m,
                                    const HashSuite& hash) {
  UnreducedProof proof;
  proof.m_digest = message_digest(m, hash);
  proof.k1_star = k1_unreduced(params, receiver, sender, ct);
  proof.r = ct.r;
  proof.s = ct.s;
  return proof;
}

Verdict ttp_verify_unreduced(const GroupParams& params, const PublicKey& sender,
                             const UnreducedProof& proof,
                             const HashSuite& hash) {
  if (proof.r >= params.q || proof.s >= params.q || proof.k1_star >= params.p) {
    return Verdict::reject("proof field out of range");
  }
  const BigUint e_prime =
      arbitrator_e(params, sender, proof.r, proof.s, proof.k1_star);
  if (challenge(params, e_prime, proof.m_digest, hash) != proof.r) {
    return Verdict::reject("r != H(e', H(m)) with unreduced K1*");
  }
  return Verdict::accept();
}

std::optional<BigUint> decrypt_with_shared_key(const GroupParams& params,
                                               const SharedStaticKey& shared,
                                               const PublicKey& sender,
                                               const PublicKey& receiver,
                                               const Ciphertext& ct,
                                               const HashSuite& hash) {
  if (!in_range(params, ct)) return std::nullopt;
  const BigUint base = mod_mul(params.g, receiver.y, params.p);
  const BigUint v = mod_mul(
      mod_mul(mod_exp(base, ct.s, params.p),
              mod_exp(shared.y_ab, ct.r, params.p), params.p),
      mod_exp(sender.y, ct.r, params.p), params.p);
  return open(params, v, ct, hash);
}

SharedStaticKey recover_shared_key(const GroupParams& params, const BigUint& v,
                                   const Ciphertext& ct,
                                   const PublicKey& sender,
                                   const PublicKey& receiver) {
  if ((ct.r % params.q).is_zero()) {
    throw NoInverseError("r = 0 has no inverse mod q");
  }
  const BigUint r_inv = mod_inv(ct.r, params.q);
  const BigUint base = mod_mul(params.g, receiver.y, params.p);
  // -s * r^-1 mod q
  const BigUint base_exponent =
      mod_sub(0, mod_mul(ct.s, r_inv, params.q), params.q);
  const BigUint y_ab =
      mod_mul(mod_mul(mod_inv(sender.y, params.p),
                      mod_exp(v, r_inv, params.p), params.p),
              mod_exp(base, base_exponent, params.p), params.p);
  return {y_ab};
}

}  // namespace authcrypt::machen
