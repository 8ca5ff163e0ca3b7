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

#include <gtest/gtest.h>

#include "authcrypt/errors.h"
#include "test_support.h"

namespace authcrypt::improved {
namespace {

using authcrypt::testing::full_params;
using authcrypt::testing::random_bytes;

Bytes text(std::string_view s) { return Bytes(s.begin(), s.end()); }

// Frozen from tests/oracle/toy_oracle.py: x_A = 3, x_B = 5, k = 7, r = 4.
TEST(ImprovedToyTest, SenderAndReceiverValues) {
  const GroupParams params = toy_params();
  const KeyPair alice(params, 3);
  const KeyPair bob(params, 5);
  const StubHashSuite stub({.zq_value = BigUint(4), .zp_star_value = {},
                            .zq_function = {}});
  const Bytes m = text("toy");
  const SenderTranscript t =
      encrypt_sign_with_nonce(params, alice, bob.public_key(), m, 7, stub);
  EXPECT_EQ(t.t1, BigUint(8));
  EXPECT_EQ(t.t2, BigUint(16));
  EXPECT_EQ(t.ciphertext.sig.r, BigUint(4));
  EXPECT_EQ(t.ciphertext.sig.s, BigUint(8));
  EXPECT_EQ(commitment(params, alice.public_key(), t.ciphertext.sig), BigUint(8));
  EXPECT_EQ(decrypt_verify(params, bob, alice.public_key(), t.ciphertext, stub), m);
  EXPECT_TRUE(public_verify(params, alice.public_key(),
                            release_proof(t.ciphertext, m), stub));
}

TEST(ImprovedToyTest, NonceRange) {
  const GroupParams params = toy_params();
  const KeyPair alice(params, 3);
  const KeyPair bob(params, 5);
  EXPECT_THROW(encrypt_sign_with_nonce(params, alice, bob.public_key(), text("x"), 0),
               RangeError);
  EXPECT_THROW(encrypt_sign_with_nonce(params, alice, bob.public_key(), text("x"), 11),
               RangeError);
}

class ImprovedFullTest : public ::testing::Test {
 protected:
  const GroupParams& params = full_params();
  SeededRandom rng{77};
  const KeyPair alice = keygen(params, rng);
  const KeyPair bob = keygen(params, rng);
};

TEST_F(ImprovedFullTest, RoundTripVariousLengths) {
  for (std::size_t n : {0u, 1u, 31u, 32u, 33u, 1000u}) {
    const Bytes m = random_bytes(n, rng);
    const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
    EXPECT_EQ(ct.c.size(), n);
    EXPECT_EQ(decrypt_verify(params, bob, alice.public_key(), ct), m);
    EXPECT_TRUE(public_verify(params, alice.public_key(), release_proof(ct, m)));
  }
}

TEST_F(ImprovedFullTest, TamperingIsRejected) {
  const Bytes m = text("wire 100 units to account 42");
  const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
  int accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Ciphertext bad = ct;
    switch (trial % 3) {
      case 0: {
        const std::size_t bit = random_below(BigUint(bad.c.size() * 8), rng).to_u64();
        bad.c[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        break;
      }
      case 1:
        bad.sig.r = mod_add(bad.sig.r, sample_zq_star(params.q, rng), params.q);
        break;
      default:
        bad.sig.s = mod_add(bad.sig.s, sample_zq_star(params.q, rng), params.q);
        break;
    }
    if (decrypt_verify(params, bob, alice.public_key(), bad)) ++accepted;
  }
  EXPECT_EQ(accepted, 0);
}

TEST_F(ImprovedFullTest, WrongPartiesReject) {
  const KeyPair eve = keygen(params, rng);
  const Bytes m = text("hello");
  const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
  EXPECT_FALSE(decrypt_verify(params, eve, alice.public_key(), ct));
  EXPECT_FALSE(decrypt_verify(params, bob, eve.public_key(), ct));
  EXPECT_FALSE(public_verify(params, eve.public_key(), release_proof(ct, m)));
  EXPECT_FALSE(public_verify(params, alice.public_key(), release_proof(ct, text("hellp"))));
}

TEST_F(ImprovedFullTest, OutOfRangeSignatureRejected) {
  const Bytes m = text("range");
  Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
  Ciphertext big_s = ct;
  big_s.sig.s = big_s.sig.s + params.q;
  EXPECT_FALSE(decrypt_verify(params, bob, alice.public_key(), big_s));
  EXPECT_FALSE(public_verify(params, alice.public_key(), release_proof(big_s, m)));
  Ciphertext big_r = ct;
  big_r.sig.r = big_r.sig.r + params.q;
  EXPECT_FALSE(public_verify(params, alice.public_key(), release_proof(big_r, m)));
}

// Whenever the receiver accepts, the released proof verifies publicly.
TEST_F(ImprovedFullTest, ReceiverAcceptanceImpliesPublicAcceptance) {
  for (int i = 0; i < 50; ++i) {
    const Bytes m = random_bytes(1 + i, rng);
    const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
    const auto opened = decrypt_verify(params, bob, alice.public_key(), ct);
    ASSERT_TRUE(opened.has_value());
    EXPECT_TRUE(public_verify(params, alice.public_key(), release_proof(ct, *opened)));
  }
}

TEST_F(ImprovedFullTest, SchemeIdentities) {
  const Bytes m = text("identities");
  const SenderTranscript t = encrypt_sign_with_nonce(
      params, alice, bob.public_key(), m, sample_zq_star(params.q, rng));
  // t1 = g^s * y_A^-r and t2 = t1^x_B = y_B^k.
  const BigUint t1 = commitment(params, alice.public_key(), t.ciphertext.sig);
  EXPECT_EQ(t1, t.t1);
  EXPECT_EQ(mod_exp(t1, bob.secret(), params.p), t.t2);
  EXPECT_EQ(t.ciphertext.sig.r, challenge(params, m, t1));
}

TEST_F(ImprovedFullTest, ExponentiationCounts) {
  const Bytes m = text("count me");
  ExpCounter enc, dec, release, verify;
  Ciphertext ct;
  {
    ExpCounter::Scope scope(enc);
    ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
  }
  {
    ExpCounter::Scope scope(dec);
    ASSERT_TRUE(decrypt_verify(params, bob, alice.public_key(), ct));
  }
  PublicProof proof;
  {
    ExpCounter::Scope scope(release);
    proof = release_proof(ct, m);
  }
  {
    ExpCounter::Scope scope(verify);
    ASSERT_TRUE(public_verify(params, alice.public_key(), proof));
  }
  EXPECT_EQ(enc.count(), 2u);
  EXPECT_EQ(dec.count(), 3u);
  EXPECT_EQ(release.count(), 0u);
  EXPECT_EQ(verify.count(), 2u);
}

TEST_F(ImprovedFullTest, ProofCarriesNoReceiverSecret) {
  secret_audit::clear();
  const Bytes m = text("audit");
  const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
  ASSERT_TRUE(decrypt_verify(params, bob, alice.public_key(), ct));
  const auto bob_reads = secret_audit::reads(bob.public_key());
  const PublicProof proof = release_proof(ct, m);
  ASSERT_TRUE(public_verify(params, alice.public_key(), proof));
  EXPECT_EQ(secret_audit::reads(bob.public_key()), bob_reads);
}

}  // namespace
}  // namespace authcrypt::improved
