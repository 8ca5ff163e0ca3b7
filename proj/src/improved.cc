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

#include "authcrypt/improved.h"

#include <openssl/crypto.h>

#include "authcrypt/errors.h"

namespace authcrypt::improved {
namespace {

bool in_range(const GroupParams& params, const SchnorrSignature& sig) {
  return sig.r < params.q && sig.s < params.q;
}

}  // namespace

BigUint challenge(const GroupParams& params, ByteView m, const BigUint& t1,
                  const HashSuite& hash) {
  return hash.to_zq({HashPart::bytes(m), HashPart::fixed(t1, params.p.byte_length())},
                    params.q);
}

Ciphertext encrypt_sign(const GroupParams& params, const KeyPair& sender,
                        const PublicKey& receiver, ByteView m,
                        RandomSource& rng, const HashSuite& hash) {
  return encrypt_sign_with_nonce(params, sender, receiver, m,
                                 sample_zq_star(params.q, rng), hash)
      .ciphertext;
}

SenderTranscript encrypt_sign_with_nonce(const GroupParams& params,
                                         const KeyPair& sender,
                                         const PublicKey& receiver, ByteView m,
                                         const BigUint& k,
                                         const HashSuite& hash) {
  if (k.is_zero() || k >= params.q) throw RangeError("nonce must lie in [1, q-1]");
  SenderTranscript out;
  out.t1 = mod_exp(params.g, k, params.p);
  out.t2 = mod_exp(receiver.y, k, params.p);
  out.ciphertext.c = sym_encrypt(hash.session_key(out.t2, params.p), m);
  out.ciphertext.sig.r = challenge(params, m, out.t1, hash);
  out.ciphertext.sig.s = mod_add(
      k, mod_mul(out.ciphertext.sig.r, sender.secret(), params.q), params.q);
  return out;
}

BigUint commitment(const GroupParams& params, const PublicKey& sender,
                   const SchnorrSignature& sig) {
  const BigUint y_inv = mod_inv(sender.y, params.p);
  return mod_mul(mod_exp(params.g, sig.s, params.p),
                 mod_exp(y_inv, sig.r, params.p), params.p);
}

std::optional<Bytes> decrypt_verify(const GroupParams& params,
                                    const KeyPair& receiver,
                                    const PublicKey& sender,
                                    const Ciphertext& ct,
                                    const HashSuite& hash) {
  if (!in_range(params, ct.sig)) return std::nullopt;
  const BigUint t1 = commitment(params, sender, ct.sig);
  const BigUint t2 = mod_exp(t1, receiver.secret(), params.p);
  Bytes m = sym_decrypt(hash.session_key(t2, params.p), ct.c);
  if (challenge(params, m, t1, hash) != ct.sig.r) {
    OPENSSL_cleanse(m.data(), m.size());
    return std::nullopt;
  }
  return m;
}

PublicProof release_proof(const Ciphertext& ct, ByteView m) {
  return {Bytes(m.begin(), m.end()), ct.sig};
}

Verdict public_verify(const GroupParams& params, const PublicKey& sender,
                      const PublicProof& proof, const HashSuite& hash) {
  if (!in_range(params, proof.sig)) {
    return Verdict::reject("signature component out of range");
  }
  if (sender.y.is_zero() || sender.y >= params.p) {
    return Verdict::reject("sender key out of range");
  }
  const BigUint t1 = commitment(params, sender, proof.sig);
  if (challenge(params, proof.m, t1, hash) != proof.sig.r) {
    return Verdict::reject("r != H(m, g^s * y_A^-r)");
  }
  return Verdict::accept();
}

}  // namespace authcrypt::improved
