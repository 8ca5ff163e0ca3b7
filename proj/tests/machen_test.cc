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

#include <gtest/gtest.h>

#include <cmath>

#include "authcrypt/errors.h"
#include "test_support.h"

namespace authcrypt::machen {
namespace {

// Toy vectors (p, q, g) = (23, 11, 4), x_A = 3, x_B = 5, k = 7, r pinned to
// 4. Expected values are frozen from tests/oracle/toy_oracle.py.
class ToyVectorTest : public ::testing::Test {
 protected:
  const GroupParams params = toy_params();
  const KeyPair alice{params, 3};
  const KeyPair bob{params, 5};
  const StubHashSuite stub{{.zq_value = BigUint(4), .zp_star_value = BigUint(7),
                            .zq_function = {}}};
  const BigUint m = 9;
};

TEST_F(ToyVectorTest, SenderValues) {
  ASSERT_EQ(alice.y(), BigUint(18));
  ASSERT_EQ(bob.y(), BigUint(12));
  const SenderTranscript t =
      encrypt_sign_with_nonce(params, alice, bob.public_key(), m, 7, stub);
  EXPECT_EQ(t.v, BigUint(13));
  EXPECT_EQ(t.e, BigUint(2));
  EXPECT_EQ(t.ciphertext.r, BigUint(4));
  EXPECT_EQ(t.ciphertext.s, BigUint(6));
  // c = m * 7^-1 = 9 * 10 mod 23
  EXPECT_EQ(t.ciphertext.c, BigUint(21));
}

TEST_F(ToyVectorTest, ReceiverRecomputesV) {
  const Ciphertext ct{21, 4, 6};
  EXPECT_EQ(receiver_v(params, bob, alice.public_key(), ct), BigUint(13));
  EXPECT_EQ(decrypt_verify(params, bob, alice.public_key(), ct, stub), m);
}

TEST_F(ToyVectorTest, ProofK1) {
  const Ciphertext ct{21, 4, 6};
  const Proof proof = make_proof(params, bob, alice.public_key(), ct, m, stub);
  EXPECT_EQ(proof.k1, BigUint(5));
  EXPECT_EQ(make_unreduced_proof(params, bob, alice.public_key(), ct, m, stub).k1_star,
            BigUint(16));
}

TEST_F(ToyVectorTest, ArbitratorMismatch) {
  EXPECT_EQ(arbitrator_e(params, alice.public_key(), 4, 6, 5), BigUint(6));
  EXPECT_EQ(arbitrator_e(params, alice.public_key(), 4, 6, 16), BigUint(2));

  // r behaves like a real hash of e: 4 only when e = 2.
  const StubHashSuite keyed({.zq_value = {}, .zp_star_value = BigUint(7),
                             .zq_function = [](const HashInput& parts, const BigUint&) {
                               return BigUint::from_bytes(parts.at(0).encoded()) == BigUint(2)
                                          ? BigUint(4)
                                          : BigUint(9);
                             }});
  const SenderTranscript t =
      encrypt_sign_with_nonce(params, alice, bob.public_key(), m, 7, keyed);
  ASSERT_EQ(t.ciphertext, (Ciphertext{21, 4, 6}));
  ASSERT_EQ(decrypt_verify(params, bob, alice.public_key(), t.ciphertext, keyed), m);

  const Proof proof = make_proof(params, bob, alice.public_key(), t.ciphertext, m, keyed);
  EXPECT_FALSE(ttp_verify(params, alice.public_key(), proof, keyed));
  const UnreducedProof diag =
      make_unreduced_proof(params, bob, alice.public_key(), t.ciphertext, m, keyed);
  EXPECT_TRUE(ttp_verify_unreduced(params, alice.public_key(), diag, keyed));
}

TEST_F(ToyVectorTest, SharedKeyDecryption) {
  const Ciphertext ct{21, 4, 6};
  const SharedStaticKey shared{mod_exp(alice.y(), bob.secret(), params.p)};
  EXPECT_EQ(shared.y_ab, BigUint(3));
  EXPECT_EQ(decrypt_with_shared_key(params, shared, alice.public_key(),
                                    bob.public_key(), ct, stub),
            m);
}

TEST_F(ToyVectorTest, SharedKeyRecovery) {
  const Ciphertext ct{21, 4, 6};
  EXPECT_EQ(recover_shared_key(params, 13, ct, alice.public_key(), bob.public_key()).y_ab,
            BigUint(3));
  EXPECT_THROW(recover_shared_key(params, 13, {21, 0, 6}, alice.public_key(),
                                  bob.public_key()),
               NoInverseError);
}

TEST_F(ToyVectorTest, MessageRange) {
  SeededRandom rng(1);
  EXPECT_THROW(encrypt_sign(params, alice, bob.public_key(), 0, rng), InvalidMessageError);
  EXPECT_THROW(encrypt_sign(params, alice, bob.public_key(), 23, rng), InvalidMessageError);
  EXPECT_NO_THROW(encrypt_sign(params, alice, bob.public_key(), 22, rng));
}

TEST_F(ToyVectorTest, OutOfRangeCiphertextRejected) {
  EXPECT_FALSE(decrypt_verify(params, bob, alice.public_key(), {0, 4, 6}, stub));
  EXPECT_FALSE(decrypt_verify(params, bob, alice.public_key(), {23, 4, 6}, stub));
  EXPECT_FALSE(decrypt_verify(params, bob, alice.public_key(), {21, 11, 6}, stub));
  EXPECT_FALSE(decrypt_verify(params, bob, alice.public_key(), {21, 4, 11}, stub));
}

class FullSizeTest : public ::testing::Test {
 protected:
  const GroupParams& params = testing::full_params();
  SeededRandom rng{2024};
  KeyPair alice = keygen(params, rng);
  KeyPair bob = keygen(params, rng);

  BigUint random_message() { return random_below(params.p - BigUint(1), rng) + BigUint(1); }
};

TEST_F(FullSizeTest, RoundTrip) {
  for (int i = 0; i < 100; ++i) {
    const BigUint m = random_message();
    const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
    ASSERT_LT(ct.r, params.q);
    ASSERT_LT(ct.s, params.q);
    ASSERT_EQ(decrypt_verify(params, bob, alice.public_key(), ct), m);
  }
}

TEST_F(FullSizeTest, WrongPartiesReject) {
  const KeyPair carol = keygen(params, rng);
  const BigUint m = random_message();
  const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
  EXPECT_FALSE(decrypt_verify(params, carol, alice.public_key(), ct));
  EXPECT_FALSE(decrypt_verify(params, bob, carol.public_key(), ct));
}

TEST_F(FullSizeTest, FlippingABitOfSRejects) {
  const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), random_message(), rng);
  for (std::size_t bit = 0; bit < 160; bit += 7) {
    Ciphertext tampered = ct;
    tampered.s = BigUint::from_mpz(tampered.s.mpz() ^ (mpz_class(1) << bit));
    EXPECT_FALSE(decrypt_verify(params, bob, alice.public_key(), tampered)) << bit;
  }
}

TEST_F(FullSizeTest, ReceiverIdentityReproducesSenderV) {
  // (g y_B)^s * y_A^(r(x_B+1)) = (g y_B)^k whenever s = k - x_A r.
  for (int i = 0; i < 50; ++i) {
    const BigUint k = sample_zq_star(params.q, rng);
    const SenderTranscript t =
        encrypt_sign_with_nonce(params, alice, bob.public_key(), random_message(), k);
    ASSERT_EQ(receiver_v(params, bob, alice.public_key(), t.ciphertext), t.v);
    ASSERT_EQ(t.v, mod_exp(mod_mul(params.g, bob.y(), params.p), k, params.p));
  }
}

TEST_F(FullSizeTest, PublishedArbitratorRejectsHonestProofs) {
  int rejected = 0;
  int diag_accepted = 0;
  for (int i = 0; i < 20; ++i) {
    const BigUint m = random_message();
    const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
    ASSERT_TRUE(decrypt_verify(params, bob, alice.public_key(), ct));
    const Proof proof = make_proof(params, bob, alice.public_key(), ct, m);
    ASSERT_LT(proof.k1, params.q);
    rejected += !ttp_verify(params, alice.public_key(), proof).accepted;
    diag_accepted +=
        ttp_verify_unreduced(params, alice.public_key(),
                             make_unreduced_proof(params, bob, alice.public_key(), ct, m))
            .accepted;
  }
  EXPECT_EQ(rejected, 20);
  EXPECT_EQ(diag_accepted, 20);
}

TEST_F(FullSizeTest, UnreducedDiagnosticRejectsRandomK1) {
  const BigUint m = random_message();
  const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
  UnreducedProof proof = make_unreduced_proof(params, bob, alice.public_key(), ct, m);
  for (int i = 0; i < 20; ++i) {
    proof.k1_star = random_below(params.p - BigUint(1), rng) + BigUint(1);
    EXPECT_FALSE(ttp_verify_unreduced(params, alice.public_key(), proof));
  }
}

TEST_F(FullSizeTest, LeakedVRevealsSharedKey) {
  const SharedStaticKey expected{mod_exp(alice.y(), bob.secret(), params.p)};
  ASSERT_EQ(expected.y_ab, mod_exp(bob.y(), alice.secret(), params.p));
  for (int i = 0; i < 50; ++i) {
    const BigUint m = random_message();
    const SenderTranscript t = encrypt_sign_with_nonce(
        params, alice, bob.public_key(), m, sample_zq_star(params.q, rng));
    if (t.ciphertext.r.is_zero()) continue;
    const SharedStaticKey recovered = recover_shared_key(
        params, t.v, t.ciphertext, alice.public_key(), bob.public_key());
    ASSERT_EQ(recovered, expected);

    // The recovered key decrypts a different ciphertext without x_B.
    const BigUint m2 = random_message();
    const Ciphertext other = encrypt_sign(params, alice, bob.public_key(), m2, rng);
    ASSERT_EQ(decrypt_with_shared_key(params, recovered, alice.public_key(),
                                      bob.public_key(), other),
              m2);
  }
}

TEST_F(FullSizeTest, SharedKeyPathAgreesWithReceiverPath) {
  const SharedStaticKey shared{mod_exp(alice.y(), bob.secret(), params.p)};
  const SharedStaticKey wrong{mod_mul(shared.y_ab, params.g, params.p)};
  for (int i = 0; i < 100; ++i) {
    Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), random_message(), rng);
    if (i % 3 == 0) ct.s = mod_add(ct.s, 1, params.q);
    ASSERT_EQ(decrypt_with_shared_key(params, shared, alice.public_key(), bob.public_key(), ct),
              decrypt_verify(params, bob, alice.public_key(), ct));
    if (i % 3 != 0) {
      ASSERT_FALSE(decrypt_with_shared_key(params, wrong, alice.public_key(),
                                           bob.public_key(), ct));
    }
  }
}

TEST(MachenExpCountTest, ThreeForGenerateAndVerifyTwoForProofTwoForArbitrator) {
  const GroupParams& params = testing::full_params();
  SeededRandom rng(5);
  const KeyPair alice = keygen(params, rng);
  const KeyPair bob = keygen(params, rng);
  const BigUint m = 123456789;
  ExpCounter enc, dec, prove, ttp;
  Ciphertext ct;
  {
    ExpCounter::Scope scope(enc);
    ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
  }
  {
    ExpCounter::Scope scope(dec);
    ASSERT_EQ(decrypt_verify(params, bob, alice.public_key(), ct), m);
  }
  Proof proof;
  {
    ExpCounter::Scope scope(prove);
    proof = make_proof(params, bob, alice.public_key(), ct, m);
  }
  {
    ExpCounter::Scope scope(ttp);
    (void)ttp_verify(params, alice.public_key(), proof);
  }
  EXPECT_EQ(enc.count(), 1u);
  EXPECT_EQ(dec.count(), 2u);
  EXPECT_EQ(enc.count() + dec.count(), 3u);
  EXPECT_EQ(prove.count(), 2u);
  EXPECT_EQ(ttp.count(), 2u);
}

// Fraction of honest runs whose arbitrator value e' is not e, then the 1/q
// chance that the tag still matches by accident.
double honest_reject_rate(const GroupParams& params, int runs, std::uint64_t seed) {
  SeededRandom rng(seed);
  int rejected = 0;
  for (int i = 0; i < runs; ++i) {
    const KeyPair alice = keygen(params, rng);
    const KeyPair bob = keygen(params, rng);
    const BigUint m = random_below(params.p - BigUint(1), rng) + BigUint(1);
    const Ciphertext ct = encrypt_sign(params, alice, bob.public_key(), m, rng);
    EXPECT_EQ(decrypt_verify(params, bob, alice.public_key(), ct), m);
    const Proof proof = make_proof(params, bob, alice.public_key(), ct, m);
    rejected += !ttp_verify(params, alice.public_key(), proof).accepted;
    EXPECT_TRUE(ttp_verify_unreduced(
        params, alice.public_key(),
        make_unreduced_proof(params, bob, alice.public_key(), ct, m)));
  }
  return static_cast<double>(rejected) / runs;
}

TEST(MachenMonteCarloTest, WideQ11GroupMostlyRejects) {
  const GroupParams params = testing::wide_q11_params();
  ASSERT_TRUE(validate_params(params));
  const double rate = honest_reject_rate(params, 10000, 77);
  RecordProperty("reject_rate", std::to_string(rate));
  EXPECT_GE(rate, 1.0 - 3.0 / 11.0);
  EXPECT_LE(rate, 1.0);
}

TEST(MachenMonteCarloTest, ToyPresetMatchesExhaustiveCount) {
  // In (23, 11, 4) seven of the eleven subgroup elements are already below
  // q, so the reduction of K1 is usually a no-op and e' = e in exactly
  // 6600 of 11000 (x_A, x_B, k, r) cases (tests/oracle/toy_oracle.py).
  // Expected rejection rate: 0.4 * 10/11.
  const double expected = 0.4 * 10.0 / 11.0;
  const double rate = honest_reject_rate(toy_params(), 10000, 78);
  const double sigma = std::sqrt(expected * (1 - expected) / 10000);
  RecordProperty("reject_rate", std::to_string(rate));
  EXPECT_NEAR(rate, expected, 5 * sigma);
}

}  // namespace
}  // namespace authcrypt::machen
