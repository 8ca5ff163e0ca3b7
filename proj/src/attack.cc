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

#include "authcrypt/attack.h"

#include <sstream>

#include "authcrypt/errors.h"

namespace authcrypt::attack {
namespace {

void require_unit(const GroupParams& params, const BigUint& x, const char* what) {
  if (x.is_zero() || x >= params.q) {
    throw RangeError(std::string(what) + " must lie in [1, q-1]");
  }
}

// x_B = b*r^-1 - 1 mod q.
BigUint rogue_exponent(const GroupParams& params, const BigUint& r,
                       const BigUint& b) {
  return mod_sub(mod_mul(b, mod_inv(r, params.q), params.q), 1, params.q);
}

// s = r*a*b^-1 mod q.
BigUint forged_s(const GroupParams& params, const BigUint& r, const BigUint& a,
                 const BigUint& b) {
  return mod_mul(mod_mul(r, a, params.q), mod_inv(b, params.q), params.q);
}

BigUint commitment(const GroupParams& params, const PublicKey& sender,
                   const BigUint& a, const BigUint& b) {
  return mod_mul(mod_exp(params.g, a, params.p), mod_exp(sender.y, b, params.p),
                 params.p);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict_text(const Verdict& v) {
  return v.accepted ? "ACCEPTED" : "REJECTED (" + v.reason + ")";
}

}  // namespace

ForgeryOutput forge_with(const GroupParams& params, const PublicKey& sender,
                         const BigUint& m, const BigUint& a, const BigUint& b,
                         const HashSuite& hash) {
  if (m.is_zero() || m >= params.p) {
    throw InvalidMessageError("target message must lie in [1, p-1]");
  }
  require_unit(params, a, "a");
  require_unit(params, b, "b");

  const BigUint v = commitment(params, sender, a, b);
  const BigUint e = v % params.q;
  const BigUint r = machen::challenge(params, e, machen::message_digest(m, hash), hash);
  if (r.is_zero()) throw ForgeryError("r = 0 is not invertible");
  const BigUint x_b = rogue_exponent(params, r, b);
  if (x_b.is_zero()) throw ForgeryError("x_B = 0 gives the identity key");

  const BigUint mask = hash.to_zp_star({HashPart::integer(v)}, params.p);
  machen::Ciphertext ct{mod_mul(m, mod_inv(mask, params.p), params.p), r,
                        forged_s(params, r, a, b)};
  return {std::move(ct), KeyPair(params, x_b), a, b, m};
}

ForgeryOutput forge(const GroupParams& params, const PublicKey& sender,
                    const BigUint& m, RandomSource& rng, const HashSuite& hash) {
  for (int attempt = 0; attempt < kMaxForgeAttempts; ++attempt) {
    const BigUint a = sample_zq_star(params.q, rng);
    const BigUint b = sample_zq_star(params.q, rng);
    try {
      return forge_with(params, sender, m, a, b, hash);
    } catch (const ForgeryError&) {
      // Degenerate (a, b); draw again.
    }
  }
  throw ForgeryError("no usable (a, b) within the attempt limit");
}

std::string ScenarioReport::to_text() const {
  std::ostringstream out;
  out << "ca-mode: " << ca_mode_name(ca_mode) << "\n"
      << "alice: " << alice_identity << " (seq " << alice_sequence << ")\n";
  if (rogue_sequence) {
    out << "rogue-registration: " << rogue_identity << " (seq " << *rogue_sequence
        << ", after alice: " << yes_no(registered_after_alice()) << ")\n";
  } else {
    out << "rogue-registration: REFUSED (" << registration_error << ")\n";
  }
  out << "receiver-verification: " << (forgery_accepted ? "ACCEPTED" : "REJECTED")
      << "\n"
      << "recovered-target-message: " << yes_no(recovered_target) << "\n"
      << "ttp-verify: " << verdict_text(ttp) << "\n"
      << "ttp-verify-unreduced: " << verdict_text(ttp_unreduced) << "\n"
      << "alice-secret-reads: " << alice_secret_reads << "\n";
  if (ca_mode == CaMode::kStrictProofOfPossession) {
    out << "note: proof of possession does not block this attack; the rogue "
           "receiver knows x_B and signs for it\n";
  }
  return out.str();
}

ScenarioReport run_attack_scenario(const GroupParams& params, CaRegistry& registry,
                                   std::string_view alice_identity,
                                   std::string_view rogue_identity,
                                   const BigUint& m, RandomSource& rng,
                                   const HashSuite& hash) {
  const std::optional<RegistryEntry> alice = registry.lookup(alice_identity);
  if (!alice) throw Error("sender is not registered: " + std::string(alice_identity));

  ScenarioReport report;
  report.ca_mode = registry.mode();
  report.alice_identity = std::string(alice_identity);
  report.rogue_identity = std::string(rogue_identity);
  report.alice_sequence = alice->sequence;
  const std::uint64_t reads_before = secret_audit::reads(alice->key);

  const ForgeryOutput forgery = forge(params, alice->key, m, rng, hash);

  std::optional<PossessionProof> pop;
  if (registry.mode() == CaMode::kStrictProofOfPossession) {
    pop = prove_possession(params, forgery.rogue_keypair, rogue_identity, rng);
  }
  try {
    report.rogue_sequence = registry.register_key(
        rogue_identity, forgery.rogue_keypair.public_key(), pop ? &*pop : nullptr);
  } catch (const RejectedKeyError& e) {
    report.registration_error = e.what();
  }

  if (report.rogue_sequence) {
    const std::optional<BigUint> opened = machen::decrypt_verify(
        params, forgery.rogue_keypair, alice->key, forgery.ciphertext, hash);
    report.forgery_accepted = opened.has_value();
    report.recovered_target = opened == m;
    if (opened) {
      report.ttp = machen::ttp_verify(
          params, alice->key,
          machen::make_proof(params, forgery.rogue_keypair, alice->key,
                             forgery.ciphertext, *opened, hash),
          hash);
      report.ttp_unreduced = machen::ttp_verify_unreduced(
          params, alice->key,
          machen::make_unreduced_proof(params, forgery.rogue_keypair, alice->key,
                                       forgery.ciphertext, *opened, hash),
          hash);
    } else {
      report.ttp = report.ttp_unreduced = Verdict::reject("receiver rejected");
    }
  } else {
    report.ttp = report.ttp_unreduced = Verdict::reject("attack blocked at registration");
  }
  report.alice_secret_reads = secret_audit::reads(alice->key) - reads_before;
  return report;
}

ImprovedForgery transplant_forge_improved(const GroupParams& params,
                                          const PublicKey& sender, ByteView m,
                                          RandomSource& rng, const HashSuite& hash) {
  for (int attempt = 0; attempt < kMaxForgeAttempts; ++attempt) {
    const BigUint a = sample_zq_star(params.q, rng);
    const BigUint b = sample_zq_star(params.q, rng);
    const BigUint t1 = commitment(params, sender, a, b);
    const BigUint r = improved::challenge(params, m, t1, hash);
    if (r.is_zero()) continue;
    const BigUint x_b = rogue_exponent(params, r, b);
    if (x_b.is_zero()) continue;
    const BigUint t2 = mod_exp(t1, x_b, params.p);
    improved::Ciphertext ct{sym_encrypt(hash.session_key(t2, params.p), m),
                            {r, forged_s(params, r, a, b)}};
    return {std::move(ct), KeyPair(params, x_b), Bytes(m.begin(), m.end())};
  }
  throw ForgeryError("no usable (a, b) within the attempt limit");
}

}  // namespace authcrypt::attack
