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

#include "cli.h"

#include <sys/stat.h>

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "authcrypt/attack.h"
#include "authcrypt/codec.h"
#include "authcrypt/errors.h"
#include "authcrypt/improved.h"
#include "authcrypt/machen.h"
#include "registry_file.h"

namespace authcrypt::cli {
namespace {

// Bad input files, bad flag combinations: exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool insecure_test_rng = false;
  std::uint64_t seed = 0;

  std::string scheme;
  std::string params;
  std::string out;
  std::string pub_out;
  std::string in;
  std::string message;
  std::string key;
  std::string sender_pub;
  std::string receiver_pub;
  std::string alice_pub;
  std::string ciphertext;
  std::string proof;
  std::string registry;
  std::string identity;
  std::string alice_identity = "alice";
  std::string rogue_identity = "bob";
  std::string sender_label = "sender";
  std::string ca_mode = "default";
  unsigned bits_p = 0;
  unsigned bits_q = 0;
  unsigned runs = 100;
  bool toy = false;
  bool packed = false;
  bool unreduced = false;
};

bool is_machen(const Options& o) { return o.scheme == "machen"; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view data, bool secret = false) {
  const mode_t old_mask = secret ? ::umask(077) : 0;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (secret) ::umask(old_mask);
  if (!f) throw UsageError("cannot write " + path);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!f) throw UsageError("cannot write " + path);
}

void write_file(const std::string& path, ByteView data) {
  write_file(path, std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

Bytes read_armored(codec::Kind kind, const std::string& path) {
  return codec::dearmor(kind, read_file(path));
}

GroupParams load_params(const std::string& path) {
  const GroupParams params =
      codec::decode_group_params(read_armored(codec::Kind::kGroupParams, path));
  const ParamsVerdict verdict = validate_params(params);
  if (!verdict.valid) {
    throw UsageError(path + ": invalid group parameters (" + verdict.failed_invariant + ")");
  }
  return params;
}

PublicKey load_public(const GroupParams& params, const std::string& path) {
  const PublicKey key =
      codec::decode_public_key(params, read_armored(codec::Kind::kPublicKey, path));
  if (!in_subgroup(params, key.y)) throw UsageError(path + ": key is not in the group");
  return key;
}

KeyPair load_secret(const GroupParams& params, const std::string& path) {
  return codec::decode_secret_key(params, read_armored(codec::Kind::kSecretKey, path));
}

Bytes load_message(const Options& o) {
  if (!o.in.empty()) {
    const std::string s = read_file(o.in);
    return Bytes(s.begin(), s.end());
  }
  return Bytes(o.message.begin(), o.message.end());
}

std::unique_ptr<RandomSource> make_rng(const Options& o) {
  if (o.insecure_test_rng) return std::make_unique<SeededRandom>(o.seed);
  return std::make_unique<SystemRandom>();
}

CaMode ca_mode_of(const Options& o) { return *parse_ca_mode(o.ca_mode); }

std::string_view as_text(const Bytes& b) {
  return {reinterpret_cast<const char*>(b.data()), b.size()};
}

// --- commands --------------------------------------------------------------

int cmd_gen_params(const Options& o, std::ostream& out) {
  GroupParams params;
  if (o.toy) {
    params = toy_params();
  } else {
    if (o.bits_p == 0 || o.bits_q == 0) {
      throw UsageError("gen-params needs --bits-p and --bits-q, or --toy");
    }
    if (o.bits_q < 8 || o.bits_p < o.bits_q + 8) {
      throw UsageError("need --bits-q >= 8 and --bits-p >= --bits-q + 8");
    }
    params = generate_params(o.bits_p, o.bits_q, *make_rng(o));
  }
  write_file(o.out, codec::armor(codec::Kind::kGroupParams, codec::encode(params)));
  out << "wrote " << o.out << " (|p| = " << params.p.bit_length()
      << ", |q| = " << params.q.bit_length() << ")\n";
  return kAccept;
}

int cmd_keygen(const Options& o, std::ostream& out) {
  const GroupParams params = load_params(o.params);
  const KeyPair key = keygen(params, *make_rng(o));
  write_file(o.out, codec::armor(codec::Kind::kSecretKey, codec::encode(key)), true);
  write_file(o.pub_out,
             codec::armor(codec::Kind::kPublicKey, codec::encode(key.public_key())));
  out << "wrote secret key " << o.out << " and public key " << o.pub_out << "\n";
  return kAccept;
}

int cmd_register(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupParams params = load_params(o.params);
  RegistryFile file(o.registry);
  std::unique_ptr<CaRegistry> registry = file.load(params, ca_mode_of(o));

  PublicKey key;
  std::optional<PossessionProof> pop;
  if (!o.key.empty()) {
    const KeyPair pair = load_secret(params, o.key);
    key = pair.public_key();
    pop = prove_possession(params, pair, o.identity, *make_rng(o));
  } else if (!o.receiver_pub.empty()) {
    key = load_public(params, o.receiver_pub);
  } else {
    throw UsageError("register needs --pub or --key");
  }

  try {
    const std::uint64_t seq = registry->register_key(o.identity, key, pop ? &*pop : nullptr);
    file.save(*registry);
    out << "registered " << o.identity << " (seq " << seq << ", ca-mode "
        << ca_mode_name(registry->mode()) << ")\n";
    return kAccept;
  } catch (const RejectedKeyError& e) {
    err << "registration refused: " << e.what() << "\n";
    return kVerifyFailure;
  }
}

int cmd_encrypt(const Options& o, std::ostream& out) {
  const GroupParams params = load_params(o.params);
  const KeyPair sender = load_secret(params, o.key);
  const PublicKey receiver = load_public(params, o.receiver_pub);
  const Bytes m = load_message(o);
  const auto rng = make_rng(o);

  std::string data;
  if (is_machen(o)) {
    BigUint value;
    try {
      value = pack_machen_message(params, m);
    } catch (const InvalidMessageError& e) {
      throw UsageError(e.what());
    }
    const machen::Ciphertext ct = machen::encrypt_sign(params, sender, receiver, value, *rng);
    data = o.packed ? std::string(as_text(codec::encode_packed(params, ct)))
                    : codec::armor(codec::Kind::kMcCiphertext, codec::encode(ct));
  } else {
    const improved::Ciphertext ct =
        improved::encrypt_sign(params, sender, receiver, m, *rng);
    data = o.packed ? std::string(as_text(codec::encode_packed(params, ct)))
                    : codec::armor(codec::Kind::kImpCiphertext, codec::encode(ct));
  }
  write_file(o.out, data);
  out << "wrote " << (is_machen(o) ? "Ma-Chen" : "improved") << " ciphertext " << o.out
      << (o.packed ? " (packed, " : " (") << data.size() << " bytes)\n";
  return kAccept;
}

machen::Ciphertext load_mc_ciphertext(const GroupParams& params, const Options& o) {
  const std::string raw = read_file(o.ciphertext);
  if (o.packed) {
    return codec::decode_packed_mc(
        params, ByteView(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
  }
  return codec::decode_mc_ciphertext(params,
                                     codec::dearmor(codec::Kind::kMcCiphertext, raw));
}

improved::Ciphertext load_imp_ciphertext(const GroupParams& params, const Options& o) {
  const std::string raw = read_file(o.ciphertext);
  if (o.packed) {
    return codec::decode_packed_imp(
        params, ByteView(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
  }
  return codec::decode_imp_ciphertext(params,
                                      codec::dearmor(codec::Kind::kImpCiphertext, raw));
}

// Decrypts for decrypt and prove. Nothing on rejection.
std::optional<Bytes> open_ciphertext(const GroupParams& params, const KeyPair& receiver,
                                     const PublicKey& sender, const Options& o,
                                     std::optional<machen::Ciphertext>& mc,
                                     std::optional<improved::Ciphertext>& imp,
                                     std::optional<BigUint>& mc_value) {
  try {
    if (is_machen(o)) {
      mc = load_mc_ciphertext(params, o);
    } else {
      imp = load_imp_ciphertext(params, o);
    }
  } catch (const codec::CodecError& e) {
    // Well-formed but with a field outside its range: the receiver rejects
    // it like any other tampered ciphertext.
    if (e.kind() == codec::ErrorKind::kOutOfRange) return std::nullopt;
    throw;
  }
  if (is_machen(o)) {
    mc_value = machen::decrypt_verify(params, receiver, sender, *mc);
    if (!mc_value) return std::nullopt;
    try {
      return unpack_machen_message(*mc_value);
    } catch (const InvalidMessageError&) {
      return std::nullopt;
    }
  }
  return improved::decrypt_verify(params, receiver, sender, *imp);
}

int cmd_decrypt(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupParams params = load_params(o.params);
  const KeyPair receiver = load_secret(params, o.key);
  const PublicKey sender = load_public(params, o.sender_pub);
  std::optional<machen::Ciphertext> mc;
  std::optional<improved::Ciphertext> imp;
  std::optional<BigUint> value;
  const std::optional<Bytes> m = open_ciphertext(params, receiver, sender, o, mc, imp, value);
  if (!m) {
    err << "REJECTED: ciphertext failed verification; no plaintext released\n";
    return kVerifyFailure;
  }
  if (o.out.empty()) {
    out << as_text(*m);
  } else {
    write_file(o.out, *m);
    err << "ACCEPTED: wrote " << m->size() << " bytes to " << o.out << "\n";
  }
  return kAccept;
}

int cmd_prove(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupParams params = load_params(o.params);
  const KeyPair receiver = load_secret(params, o.key);
  const PublicKey sender = load_public(params, o.sender_pub);
  std::optional<machen::Ciphertext> mc;
  std::optional<improved::Ciphertext> imp;
  std::optional<BigUint> value;
  const std::optional<Bytes> m = open_ciphertext(params, receiver, sender, o, mc, imp, value);
  if (!m) {
    err << "REJECTED: ciphertext failed verification; no proof released\n";
    return kVerifyFailure;
  }
  std::string data;
  if (is_machen(o)) {
    codec::McProofEnvelope env{codec::fingerprint(params), o.sender_label,
                               machen::make_proof(params, receiver, sender, *mc, *value),
                               std::nullopt};
    if (o.unreduced) {
      env.k1_star =
          machen::make_unreduced_proof(params, receiver, sender, *mc, *value).k1_star;
    }
    data = codec::armor(codec::Kind::kMcProof, codec::encode(env));
  } else {
    const codec::ProofEnvelope env{codec::fingerprint(params), o.sender_label,
                                   improved::release_proof(*imp, *m)};
    data = codec::armor(codec::Kind::kProof, codec::encode(env));
  }
  write_file(o.out, data);
  out << "wrote proof " << o.out << "\n";
  return kAccept;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GroupParams params = load_params(o.params);
  const PublicKey sender = load_public(params, o.sender_pub);
  if (!is_machen(o)) {
    const codec::ProofEnvelope env =
        codec::decode_proof(params, read_armored(codec::Kind::kProof, o.proof));
    const Verdict v = improved::public_verify(params, sender, env.proof);
    if (!v) {
      out << "REJECTED: " << v.reason << "\n";
      return kVerifyFailure;
    }
    out << "ACCEPTED: " << env.proof.m.size() << "-byte message originates from "
        << env.sender << "\n";
    return kAccept;
  }

  const codec::McProofEnvelope env =
      codec::decode_mc_proof(params, read_armored(codec::Kind::kMcProof, o.proof));
  if (o.unreduced) {
    if (!env.k1_star) throw UsageError("proof carries no unreduced K1*");
    const Verdict v = machen::ttp_verify_unreduced(
        params, sender, {env.proof.m_digest, *env.k1_star, env.proof.r, env.proof.s});
    out << (v ? "ACCEPTED" : "REJECTED") << " (diagnostic check with unreduced K1*; "
        << "not the published arbitrator)\n";
    return v ? kAccept : kVerifyFailure;
  }
  const Verdict v = machen::ttp_verify(params, sender, env.proof);
  if (v) {
    out << "ACCEPTED: message originates from " << env.sender << "\n";
    return kAccept;
  }
  out << "REJECTED: " << v.reason << "\n"
      << "note: known design error in the Ma-Chen arbitrator. K1 is reduced mod q "
         "before it enters a mod-p product, so e' differs from e even for honest "
         "proofs. Re-run prove and verify with --unreduced for the diagnostic check.\n";
  return kVerifyFailure;
}

int cmd_attack_demo(const Options& o, std::ostream& out) {
  const GroupParams params = load_params(o.params);
  const PublicKey alice = load_public(params, o.alice_pub);
  BigUint m;
  try {
    m = pack_machen_message(params, Bytes(o.message.begin(), o.message.end()));
  } catch (const InvalidMessageError& e) {
    throw UsageError(e.what());
  }
  const auto rng = make_rng(o);

  std::unique_ptr<RegistryFile> file;
  std::unique_ptr<CaRegistry> registry;
  if (o.registry.empty()) {
    registry = std::make_unique<CaRegistry>(
        params, ca_mode_of(o), std::vector<RegistryEntry>{{o.alice_identity, alice, 1}});
  } else {
    file = std::make_unique<RegistryFile>(o.registry);
    registry = file->load(params, ca_mode_of(o));
    const std::optional<RegistryEntry> entry = registry->lookup(o.alice_identity);
    if (!entry) throw UsageError(o.alice_identity + " is not registered in " + o.registry);
    if (entry->key != alice) {
      throw UsageError("registered key for " + o.alice_identity + " differs from " +
                       o.alice_pub);
    }
  }

  const attack::ScenarioReport report = attack::run_attack_scenario(
      params, *registry, o.alice_identity, o.rogue_identity, m, *rng);
  if (file && report.rogue_sequence) file->save(*registry);

  out << "result: FORGERY " << (report.forgery_accepted ? "ACCEPTED" : "REJECTED") << "\n"
      << report.to_text();
  return report.forgery_accepted ? kAccept : kVerifyFailure;
}

int cmd_design_error_demo(const Options& o, std::ostream& out) {
  const GroupParams params = load_params(o.params);
  const auto rng = make_rng(o);
  const KeyPair alice = keygen(params, *rng);
  const KeyPair bob = keygen(params, *rng);
  unsigned rejected = 0, unreduced_accepted = 0;
  for (unsigned i = 0; i < o.runs; ++i) {
    const BigUint m = random_below(params.p - BigUint(1), *rng) + BigUint(1);
    const machen::Ciphertext ct =
        machen::encrypt_sign(params, alice, bob.public_key(), m, *rng);
    const machen::Proof proof = machen::make_proof(params, bob, alice.public_key(), ct, m);
    if (!machen::ttp_verify(params, alice.public_key(), proof)) ++rejected;
    if (machen::ttp_verify_unreduced(
            params, alice.public_key(),
            machen::make_unreduced_proof(params, bob, alice.public_key(), ct, m))) {
      ++unreduced_accepted;
    }
  }
  out << "honest runs: " << o.runs << "\n"
      << "ttp-verify rejected: " << rejected << "/" << o.runs << "\n"
      << "ttp-verify-unreduced accepted: " << unreduced_accepted << "/" << o.runs << "\n"
      << "cause: K1 is reduced mod q before multiplication mod p\n";
  return kAccept;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const GroupParams params = load_params(o.params);
  const auto rng = make_rng(o);
  const KeyPair alice = keygen(params, *rng);
  const KeyPair bob = keygen(params, *rng);

  struct Row {
    std::string name;
    std::uint64_t enc = 0, dec = 0, prove = 0, verify = 0;
    std::size_t bits = 0;
  };
  ExpCounter enc, dec, prove, verify;

  Row mc{"machen"};
  {
    const BigUint m = random_below(params.p - BigUint(1), *rng) + BigUint(1);
    machen::Ciphertext ct;
    { ExpCounter::Scope s(enc); ct = machen::encrypt_sign(params, alice, bob.public_key(), m, *rng); }
    { ExpCounter::Scope s(dec); machen::decrypt_verify(params, bob, alice.public_key(), ct); }
    machen::Proof proof;
    { ExpCounter::Scope s(prove); proof = machen::make_proof(params, bob, alice.public_key(), ct, m); }
    { ExpCounter::Scope s(verify); machen::ttp_verify(params, alice.public_key(), proof); }
    mc = {"machen", enc.count(), dec.count(), prove.count(), verify.count(),
          codec::encode_packed(params, ct).size() * 8};
  }
  Row imp{"improved"};
  {
    // A message as wide as p, so c occupies |p| bits like Ma-Chen's c.
    const Bytes m(params.p.byte_length(), 0x42);
    improved::Ciphertext ct;
    { ExpCounter::Scope s(enc); ct = improved::encrypt_sign(params, alice, bob.public_key(), m, *rng); }
    { ExpCounter::Scope s(dec); improved::decrypt_verify(params, bob, alice.public_key(), ct); }
    improved::PublicProof proof;
    { ExpCounter::Scope s(prove); proof = improved::release_proof(ct, m); }
    { ExpCounter::Scope s(verify); improved::public_verify(params, alice.public_key(), proof); }
    imp = {"improved", enc.count(), dec.count(), prove.count(), verify.count(),
           codec::encode_packed(params, ct).size() * 8};
  }

  out << "params: |p| = " << params.p.bit_length() << ", |q| = " << params.q.bit_length()
      << "\n"
      << "modular exponentiations (inversions not counted)\n"
      << std::left << std::setw(10) << "scheme" << std::right << std::setw(9) << "encrypt"
      << std::setw(9) << "decrypt" << std::setw(9) << "enc+dec" << std::setw(8) << "prove"
      << std::setw(8) << "verify" << std::setw(13) << "packed-bits" << "\n";
  for (const Row& r : {mc, imp}) {
    out << std::left << std::setw(10) << r.name << std::right << std::setw(9) << r.enc
        << std::setw(9) << r.dec << std::setw(9) << r.enc + r.dec << std::setw(8)
        << r.prove << std::setw(8) << r.verify << std::setw(13) << r.bits << "\n";
  }
  return kAccept;
}

}  // namespace

std::size_t max_machen_message(const GroupParams& params) {
  const std::size_t bits = params.p.bit_length();
  if (bits <= 17) return 0;
  return std::min<std::size_t>((bits - 18) / 8, 0xFFFF);
}

BigUint pack_machen_message(const GroupParams& params, ByteView message) {
  const std::size_t n = message.size();
  if (n > 0xFFFF || 8 * n + 17 >= params.p.bit_length()) {
    throw InvalidMessageError("message of " + std::to_string(n) +
                              " bytes does not fit these parameters (max " +
                              std::to_string(max_machen_message(params)) + ")");
  }
  return BigUint::power_of_two(8 * n + 16) +
         BigUint(n) * BigUint::power_of_two(8 * n) + BigUint::from_bytes(message);
}

Bytes unpack_machen_message(const BigUint& value) {
  const std::size_t bits = value.bit_length();
  if (bits < 17 || (bits - 17) % 8 != 0) {
    throw InvalidMessageError("value is not a packed byte string");
  }
  const std::size_t n = (bits - 17) / 8;
  const BigUint body = value - BigUint::power_of_two(8 * n + 16);
  const BigUint shift = BigUint::power_of_two(8 * n);
  if (body / shift != BigUint(n)) throw InvalidMessageError("length field mismatch");
  return (body % shift).to_bytes_fixed(n);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ma-Chen and Schnorr-based authenticated encryption", "authcrypt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with default flag values")
      ->envname(kConfigEnv);

  Options o;
  auto* insecure = app.add_flag("--insecure-test-rng", o.insecure_test_rng,
                                "Use a seeded, predictable RNG (tests only)");
  auto* seed = app.add_option("--seed", o.seed, "Seed for --insecure-test-rng");
  seed->needs(insecure);
  insecure->needs(seed);

  const auto scheme = [&](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme, "machen or improved")
        ->required()
        ->check(CLI::IsMember({"machen", "improved"}));
  };
  const auto params = [&](CLI::App* sub) {
    sub->add_option("--params", o.params, "Group parameter file")->required();
  };
  const auto ca_mode = [&](CLI::App* sub) {
    sub->add_option("--ca-mode", o.ca_mode, "CA mode for a new registry")
        ->check(CLI::IsMember({"default", "strict-pop"}));
  };

  auto* gen = app.add_subcommand("gen-params", "Generate a Schnorr group");
  gen->add_option("--bits-p", o.bits_p, "Bit length of p");
  gen->add_option("--bits-q", o.bits_q, "Bit length of q");
  gen->add_flag("--toy", o.toy, "Emit the (23, 11, 4) preset");
  gen->add_option("--out", o.out, "Output file (.gp)")->required();

  auto* kg = app.add_subcommand("keygen", "Generate a key pair");
  params(kg);
  kg->add_option("--out", o.out, "Secret key file (.sk)")->required();
  kg->add_option("--pub-out", o.pub_out, "Public key file (.pk)")->required();

  auto* reg = app.add_subcommand("register", "Register a public key with the CA");
  params(reg);
  reg->add_option("--registry", o.registry, "Registry file (JSON)")->required();
  reg->add_option("--identity", o.identity, "Identity to register")->required();
  auto* reg_pub = reg->add_option("--pub", o.receiver_pub, "Public key file");
  auto* reg_key = reg->add_option("--key", o.key, "Secret key file (adds a proof of possession)");
  reg_pub->excludes(reg_key);
  ca_mode(reg);

  auto* enc = app.add_subcommand("encrypt", "Encrypt and sign a message");
  scheme(enc);
  params(enc);
  enc->add_option("--key", o.key, "Sender secret key")->required();
  enc->add_option("--receiver-pub", o.receiver_pub, "Receiver public key")->required();
  auto* enc_in = enc->add_option("--in", o.in, "Message file");
  auto* enc_msg = enc->add_option("--message", o.message, "Message text");
  enc_in->excludes(enc_msg);
  enc->add_option("--out", o.out, "Ciphertext file (.ct)")->required();
  enc->add_flag("--packed", o.packed, "Write the packed binary form");

  auto* dec = app.add_subcommand("decrypt", "Decrypt and verify a ciphertext");
  scheme(dec);
  params(dec);
  dec->add_option("--key", o.key, "Receiver secret key")->required();
  dec->add_option("--sender-pub", o.sender_pub, "Sender public key")->required();
  dec->add_option("--in", o.ciphertext, "Ciphertext file")->required();
  dec->add_option("--out", o.out, "Plaintext file (default: stdout)");
  dec->add_flag("--packed", o.packed, "Read the packed binary form");

  auto* prv = app.add_subcommand("prove", "Turn an accepted ciphertext into a proof");
  scheme(prv);
  params(prv);
  prv->add_option("--key", o.key, "Receiver secret key")->required();
  prv->add_option("--sender-pub", o.sender_pub, "Sender public key")->required();
  prv->add_option("--in", o.ciphertext, "Ciphertext file")->required();
  prv->add_option("--sender-label", o.sender_label, "Sender name recorded in the proof");
  prv->add_option("--out", o.out, "Proof file (.proof)")->required();
  prv->add_flag("--packed", o.packed, "Read the packed binary form");
  prv->add_flag("--unreduced", o.unreduced, "Also record K1* (Ma-Chen diagnostic)");

  auto* ver = app.add_subcommand("verify", "Third-party verification of a proof");
  scheme(ver);
  params(ver);
  ver->add_option("--sender-pub", o.sender_pub, "Sender public key")->required();
  ver->add_option("--proof", o.proof, "Proof file")->required();
  ver->add_flag("--unreduced", o.unreduced, "Ma-Chen: use K1* (diagnostic)");

  auto* atk = app.add_subcommand("attack-demo", "Rogue-key forgery against Ma-Chen");
  params(atk);
  atk->add_option("--alice-pub", o.alice_pub, "Victim public key")->required();
  atk->add_option("--message", o.message, "Message to forge")->required();
  atk->add_option("--registry", o.registry, "Registry file (default: in-memory)");
  atk->add_option("--alice-identity", o.alice_identity, "Victim identity");
  atk->add_option("--rogue-identity", o.rogue_identity, "Attacker identity");
  ca_mode(atk);

  auto* de = app.add_subcommand("design-error-demo", "Ma-Chen arbitrator on honest runs");
  params(de);
  de->add_option("--runs", o.runs, "Number of honest runs")->check(CLI::Range(1u, 1000000u));

  auto* bench = app.add_subcommand("bench", "Exponentiation counts and sizes");
  params(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAccept : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen_params(o, out);
    if (kg->parsed()) return cmd_keygen(o, out);
    if (reg->parsed()) return cmd_register(o, out, err);
    if (enc->parsed()) return cmd_encrypt(o, out);
    if (dec->parsed()) return cmd_decrypt(o, out, err);
    if (prv->parsed()) return cmd_prove(o, out, err);
    if (ver->parsed()) return cmd_verify(o, out);
    if (atk->parsed()) return cmd_attack_demo(o, out);
    if (de->parsed()) return cmd_design_error_demo(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const codec::CodecError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace authcrypt::cli
