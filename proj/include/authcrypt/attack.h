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

// Rogue-key forgery against Ma-Chen.
//
// Knowing only y_A, a malicious receiver picks a, b in Z_q^* and sets
//
//   v = g^a * y_A^b,  e = v mod q,  c = m * H(v)^-1,  r = H(e, H(m)),
//   s = r*a*b^-1,  x_B = b*r^-1 - 1,  y_B = g^x_B.
//
// Then (1 + x_B)*s = a and r*(1 + x_B) = b mod q, so the receiver equation
// (g*y_B)^s * y_A^(r(x_B+1)) reproduces v and the triple (c, r, s) opens to
// m "from Alice". The receiver must register y_B after seeing y_A; a proof
// of possession does not help because the receiver really knows x_B.
//
// A forgery targets one message; reuse of a rogue key is not analysed here.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "authcrypt/group.h"
#include "authcrypt/hashing.h"
#include "authcrypt/improved.h"
#include "authcrypt/machen.h"
#include "authcrypt/verdict.h"

namespace authcrypt::attack {

struct ForgeryOutput {
  machen::Ciphertext ciphertext;
  KeyPair rogue_keypair;
  BigUint a;
  BigUint b;
  BigUint target_message;
};

/// Forges a Ma-Chen ciphertext on m "from" sender. Samples (a, b) afresh
/// whenever r = 0 or x_B = 0; throws ForgeryError after kMaxForgeAttempts.
ForgeryOutput forge(const GroupParams& params, const PublicKey& sender,
                    const BigUint& m, RandomSource& rng,
                    const HashSuite& hash = default_hash_suite());

/// forge with fixed (a, b). Throws ForgeryError if they give r = 0 or
/// x_B = 0, RangeError if either lies outside [1, q-1].
ForgeryOutput forge_with(const GroupParams& params, const PublicKey& sender,
                         const BigUint& m, const BigUint& a, const BigUint& b,
                         const HashSuite& hash = default_hash_suite());

inline constexpr int kMaxForgeAttempts = 1000;

/// Outcome of the full story: forge, register the rogue key after Alice,
/// open the forgery as the rogue receiver, then go to the arbitrator.
struct ScenarioReport {
  CaMode ca_mode = CaMode::kMembershipOnly;
  std::string alice_identity;
  std::string rogue_identity;
  std::uint64_t alice_sequence = 0;
  /// Unset when the CA refused the rogue key.
  std::optional<std::uint64_t> rogue_sequence;
  std::string registration_error;
  bool forgery_accepted = false;
  bool recovered_target = false;
  Verdict ttp;
  Verdict ttp_unreduced;
  /// KeyPair::secret() calls against Alice's key while the scenario ran.
  std::uint64_t alice_secret_reads = 0;

  bool registered_after_alice() const {
    return rogue_sequence && *rogue_sequence > alice_sequence;
  }
  /// Stable key: value lines, one per step.
  std::string to_text() const;
};

/// Alice must already be registered under alice_identity. Holds the
/// registry only for the rogue registration.
ScenarioReport run_attack_scenario(const GroupParams& params,
                                   CaRegistry& registry,
                                   std::string_view alice_identity,
                                   std::string_view rogue_identity,
                                   const BigUint& m, RandomSource& rng,
                                   const HashSuite& hash = default_hash_suite());

/// The same recipe pointed at the improved scheme: t1 = g^a * y_A^b,
/// r = H(m, t1), s = r*a*b^-1, x_B = b*r^-1 - 1, c = E_h(t1^x_B)(m).
struct ImprovedForgery {
  improved::Ciphertext ciphertext;
  KeyPair rogue_keypair;
  Bytes target_message;
};

ImprovedForgery transplant_forge_improved(
    const GroupParams& params, const PublicKey& sender, ByteView m,
    RandomSource& rng, const HashSuite& hash = default_hash_suite());

}  // namespace authcrypt::attack
