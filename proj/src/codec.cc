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

#include "authcrypt/codec.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>

namespace authcrypt::codec {
namespace {

// Inner field tags.
enum Field : std::uint8_t {
  kP = 0x10,
  kQ = 0x11,
  kG = 0x12,
  kY = 0x20,
  kX = 0x21,
  kC = 0x30,
  kR = 0x31,
  kS = 0x32,
  kFingerprint = 0x40,
  kSender = 0x41,
  kMessage = 0x42,
  kMessageDigest = 0x43,
  kK1 = 0x44,
  kK1Star = 0x45,
};

constexpr std::size_t kHeaderSize = 5;
constexpr std::size_t kArmorLineWidth = 64;

[[noreturn]] void fail(ErrorKind kind, const std::string& what) {
  throw CodecError(kind, what);
}

void put_record(Bytes& out, std::uint8_t tag, ByteView value) {
  if (value.size() > 0xFFFFFFFFu) fail(ErrorKind::kOutOfRange, "record too long");
  const auto n = static_cast<std::uint32_t>(value.size());
  out.push_back(tag);
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(n >> shift));
  }
  out.insert(out.end(), value.begin(), value.end());
}

void put_int(Bytes& out, std::uint8_t tag, const BigUint& value) {
  put_record(out, tag, value.to_bytes());
}

void put_text(Bytes& out, std::uint8_t tag, std::string_view text) {
  put_record(out, tag,
             ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Bytes wrap(Kind kind, const Bytes& body) {
  Bytes out;
  out.reserve(body.size() + kHeaderSize);
  put_record(out, static_cast<std::uint8_t>(kind), body);
  return out;
}

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  bool done() const { return pos_ == data_.size(); }

  std::uint8_t peek_tag() const {
    if (done()) fail(ErrorKind::kTruncated, "expected a record, found end of input");
    return data_[pos_];
  }

  ByteView record(std::uint8_t tag) {
    if (data_.size() - pos_ < kHeaderSize) {
      fail(ErrorKind::kTruncated, "record header cut short");
    }
    if (data_[pos_] != tag) {
      fail(ErrorKind::kBadTag, "unexpected tag 0x" + hex(data_[pos_]) +
                                   ", wanted 0x" + hex(tag));
    }
    std::size_t n = 0;
    for (std::size_t i = 1; i < kHeaderSize; ++i) n = (n << 8) | data_[pos_ + i];
    pos_ += kHeaderSize;
    if (data_.size() - pos_ < n) fail(ErrorKind::kTruncated, "record value cut short");
    ByteView value = data_.subspan(pos_, n);
    pos_ += n;
    return value;
  }

  BigUint integer(std::uint8_t tag) {
    ByteView v = record(tag);
    if (!v.empty() && v[0] == 0) {
      fail(ErrorKind::kNonCanonical, "integer has a leading zero byte");
    }
    return BigUint::from_bytes(v);
  }

  std::string text(std::uint8_t tag) {
    ByteView v = record(tag);
    return std::string(v.begin(), v.end());
  }

  void finish() const {
    if (!done()) fail(ErrorKind::kTrailingData, "bytes left after the last field");
  }

 private:
  static std::string hex(std::uint8_t b) {
    static constexpr char kDigits[] = "0123456789abcdef";
    return {kDigits[b >> 4], kDigits[b & 15]};
  }

  ByteView data_;
  std::size_t pos_ = 0;
};

// Opens the outer record and returns a reader over its fields.
Reader open(Kind kind, ByteView data) {
  Reader outer(data);
  ByteView body = outer.record(static_cast<std::uint8_t>(kind));
  outer.finish();
  return Reader(body);
}

void check_below(const BigUint& v, const BigUint& bound, const char* what) {
  if (v >= bound) fail(ErrorKind::kOutOfRange, std::string(what) + " is out of range");
}

void check_unit(const BigUint& v, const BigUint& bound, const char* what) {
  if (v.is_zero()) fail(ErrorKind::kOutOfRange, std::string(what) + " is zero");
  check_below(v, bound, what);
}

void check_mc(const GroupParams& params, const machen::Ciphertext& ct) {
  check_unit(ct.c, params.p, "c");
  check_below(ct.r, params.q, "r");
  check_below(ct.s, params.q, "s");
}

void check_sig(const GroupParams& params, const improved::SchnorrSignature& sig) {
  check_below(sig.r, params.q, "r");
  check_below(sig.s, params.q, "s");
}

Digest read_digest(Reader& in, std::uint8_t tag) {
  ByteView v = in.record(tag);
  if (v.size() != kDigestSize) fail(ErrorKind::kOutOfRange, "digest must be 32 bytes");
  Digest d;
  std::copy(v.begin(), v.end(), d.begin());
  return d;
}

void check_fingerprint(const GroupParams& params, const Digest& d) {
  if (d != fingerprint(params)) {
    fail(ErrorKind::kParamsMismatch, "proof was made under different group parameters");
  }
}

std::size_t width(const BigUint& modulus) { return modulus.byte_length(); }

constexpr std::array<std::pair<Kind, std::string_view>, 7> kLabels = {{
    {Kind::kGroupParams, "GROUP PARAMS"},
    {Kind::kPublicKey, "PUBLIC KEY"},
    {Kind::kSecretKey, "SECRET KEY"},
    {Kind::kMcCiphertext, "MC CIPHERTEXT"},
    {Kind::kImpCiphertext, "IMP CIPHERTEXT"},
    {Kind::kProof, "PROOF"},
    {Kind::kMcProof, "MC PROOF"},
}};

constexpr std::string_view kBegin = "-----BEGIN ";
constexpr std::string_view kEnd = "-----END ";
constexpr std::string_view kDashes = "-----";

bool is_base64_char(char ch) {
  return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
         (ch >= '0' && ch <= '9') || ch == '+' || ch == '/' || ch == '=';
}

}  // namespace

CodecError::CodecError(ErrorKind kind, const std::string& what)
    : Error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kTruncated: return "truncated input";
    case ErrorKind::kTrailingData: return "trailing data";
    case ErrorKind::kBadTag: return "bad tag";
    case ErrorKind::kNonCanonical: return "non-canonical encoding";
    case ErrorKind::kOutOfRange: return "field out of range";
    case ErrorKind::kParamsMismatch: return "parameter mismatch";
    case ErrorKind::kBadArmor: return "bad armor";
  }
  return "codec error";
}

std::string_view armor_label(Kind kind) {
  for (const auto& [k, label] : kLabels) {
    if (k == kind) return label;
  }
  return "UNKNOWN";
}

std::optional<Kind> parse_armor_label(std::string_view label) {
  for (const auto& [k, l] : kLabels) {
    if (l == label) return k;
  }
  return std::nullopt;
}

Digest fingerprint(const GroupParams& params) { return sha256(encode(params)); }

Bytes encode(const GroupParams& params) {
  Bytes body;
  put_int(body, kP, params.p);
  put_int(body, kQ, params.q);
  put_int(body, kG, params.g);
  return wrap(Kind::kGroupParams, body);
}

Bytes encode(const PublicKey& key) {
  Bytes body;
  put_int(body, kY, key.y);
  return wrap(Kind::kPublicKey, body);
}

Bytes encode(const KeyPair& key) {
  Bytes body;
  put_int(body, kX, key.secret());
  put_int(body, kY, key.y());
  return wrap(Kind::kSecretKey, body);
}

Bytes encode(const machen::Ciphertext& ct) {
  Bytes body;
  put_int(body, kC, ct.c);
  put_int(body, kR, ct.r);
  put_int(body, kS, ct.s);
  return wrap(Kind::kMcCiphertext, body);
}

Bytes encode(const improved::Ciphertext& ct) {
  Bytes body;
  put_record(body, kC, ct.c);
  put_int(body, kR, ct.sig.r);
  put_int(body, kS, ct.sig.s);
  return wrap(Kind::kImpCiphertext, body);
}

Bytes encode(const ProofEnvelope& env) {
  Bytes body;
  put_record(body, kFingerprint, env.params_fingerprint);
  put_text(body, kSender, env.sender);
  put_record(body, kMessage, env.proof.m);
  put_int(body, kR, env.proof.sig.r);
  put_int(body, kS, env.proof.sig.s);
  return wrap(Kind::kProof, body);
}

Bytes encode(const McProofEnvelope& env) {
  Bytes body;
  put_record(body, kFingerprint, env.params_fingerprint);
  put_text(body, kSender, env.sender);
  put_record(body, kMessageDigest, env.proof.m_digest);
  put_int(body, kK1, env.proof.k1);
  put_int(body, kR, env.proof.r);
  put_int(body, kS, env.proof.s);
  if (env.k1_star) put_int(body, kK1Star, *env.k1_star);
  return wrap(Kind::kMcProof, body);
}

GroupParams decode_group_params(ByteView data) {
  Reader in = open(Kind::kGroupParams, data);
  GroupParams params;
  params.p = in.integer(kP);
  params.q = in.integer(kQ);
  params.g = in.integer(kG);
  in.finish();
  if (params.p < BigUint(3)) fail(ErrorKind::kOutOfRange, "p is too small");
  check_unit(params.q, params.p, "q");
  check_unit(params.g, params.p, "g");
  return params;
}

PublicKey decode_public_key(const GroupParams& params, ByteView data) {
  Reader in = open(Kind::kPublicKey, data);
  PublicKey key{in.integer(kY)};
  in.finish();
  check_unit(key.y, params.p, "y");
  return key;
}

KeyPair decode_secret_key(const GroupParams& params, ByteView data) {
  Reader in = open(Kind::kSecretKey, data);
  BigUint x = in.integer(kX);
  BigUint y = in.integer(kY);
  in.finish();
  check_unit(x, params.q, "x");
  check_unit(y, params.p, "y");
  KeyPair key = KeyPair::from_parts(std::move(x), std::move(y));
  if (!key.consistent_with(params)) {
    fail(ErrorKind::kOutOfRange, "y does not match x under these parameters");
  }
  return key;
}

machen::Ciphertext decode_mc_ciphertext(const GroupParams& params, ByteView data) {
  Reader in = open(Kind::kMcCiphertext, data);
  machen::Ciphertext ct;
  ct.c = in.integer(kC);
  ct.r = in.integer(kR);
  ct.s = in.integer(kS);
  in.finish();
  check_mc(params, ct);
  return ct;
}

improved::Ciphertext decode_imp_ciphertext(const GroupParams& params, ByteView data) {
  Reader in = open(Kind::kImpCiphertext, data);
  improved::Ciphertext ct;
  ByteView c = in.record(kC);
  ct.c.assign(c.begin(), c.end());
  ct.sig.r = in.integer(kR);
  ct.sig.s = in.integer(kS);
  in.finish();
  check_sig(params, ct.sig);
  return ct;
}

ProofEnvelope decode_proof(const GroupParams& params, ByteView data) {
  Reader in = open(Kind::kProof, data);
  ProofEnvelope env;
  env.params_fingerprint = read_digest(in, kFingerprint);
  env.sender = in.text(kSender);
  ByteView m = in.record(kMessage);
  env.proof.m.assign(m.begin(), m.end());
  env.proof.sig.r = in.integer(kR);
  env.proof.sig.s = in.integer(kS);
  in.finish();
  check_fingerprint(params, env.params_fingerprint);
  check_sig(params, env.proof.sig);
  return env;
}

McProofEnvelope decode_mc_proof(const GroupParams& params, ByteView data) {
  Reader in = open(Kind::kMcProof, data);
  McProofEnvelope env;
  env.params_fingerprint = read_digest(in, kFingerprint);
  env.sender = in.text(kSender);
  env.proof.m_digest = read_digest(in, kMessageDigest);
  env.proof.k1 = in.integer(kK1);
  env.proof.r = in.integer(kR);
  env.proof.s = in.integer(kS);
  if (!in.done()) env.k1_star = in.integer(kK1Star);
  in.finish();
  check_fingerprint(params, env.params_fingerprint);
  check_below(env.proof.k1, params.q, "K1");
  check_below(env.proof.r, params.q, "r");
  check_below(env.proof.s, params.q, "s");
  if (env.k1_star) check_unit(*env.k1_star, params.p, "K1*");
  return env;
}

Kind peek_kind(ByteView data) {
  const std::uint8_t tag = Reader(data).peek_tag();
  for (const auto& [k, label] : kLabels) {
    if (static_cast<std::uint8_t>(k) == tag) return k;
  }
  fail(ErrorKind::kBadTag, "unknown object tag");
}

std::size_t packed_mc_size(const GroupParams& params) {
  return width(params.p) + 2 * width(params.q);
}

Bytes encode_packed(const GroupParams& params, const machen::Ciphertext& ct) {
  Bytes out = ct.c.to_bytes_fixed(width(params.p));
  for (const BigUint* v : {&ct.r, &ct.s}) {
    const Bytes part = v->to_bytes_fixed(width(params.q));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Bytes encode_packed(const GroupParams& params, const improved::Ciphertext& ct) {
  Bytes out = ct.c;
  for (const BigUint* v : {&ct.sig.r, &ct.sig.s}) {
    const Bytes part = v->to_bytes_fixed(width(params.q));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

machen::Ciphertext decode_packed_mc(const GroupParams& params, ByteView data) {
  const std::size_t wp = width(params.p);
  const std::size_t wq = width(params.q);
  if (data.size() < wp + 2 * wq) fail(ErrorKind::kTruncated, "packed ciphertext too short");
  if (data.size() > wp + 2 * wq) fail(ErrorKind::kTrailingData, "packed ciphertext too long");
  machen::Ciphertext ct{BigUint::from_bytes(data.first(wp)),
                        BigUint::from_bytes(data.subspan(wp, wq)),
                        BigUint::from_bytes(data.subspan(wp + wq, wq))};
  check_mc(params, ct);
  return ct;
}

improved::Ciphertext decode_packed_imp(const GroupParams& params, ByteView data) {
  const std::size_t wq = width(params.q);
  if (data.size() < 2 * wq) fail(ErrorKind::kTruncated, "packed ciphertext too short");
  const std::size_t n = data.size() - 2 * wq;
  improved::Ciphertext ct{Bytes(data.begin(), data.begin() + n),
                          {BigUint::from_bytes(data.subspan(n, wq)),
                           BigUint::from_bytes(data.subspan(n + wq, wq))}};
  check_sig(params, ct.sig);
  return ct;
}

std::string armor(Kind kind, ByteView data) {
  std::string b64(4 * ((data.size() + 2) / 3), '\0');
  if (!data.empty()) {
    EVP_EncodeBlock(reinterpret_cast<unsigned char*>(b64.data()), data.data(),
                    static_cast<int>(data.size()));
  }
  const std::string label(armor_label(kind));
  std::string out = std::string(kBegin) + label + std::string(kDashes) + "\n";
  for (std::size_t i = 0; i < b64.size(); i += kArmorLineWidth) {
    out += b64.substr(i, kArmorLineWidth);
    out += '\n';
  }
  out += std::string(kEnd) + label + std::string(kDashes) + "\n";
  return out;
}

Kind armored_kind(std::string_view text) {
  const std::size_t eol = text.find('\n');
  std::string_view first = text.substr(0, eol);
  if (!first.starts_with(kBegin) || !first.ends_with(kDashes) ||
      first.size() < kBegin.size() + kDashes.size()) {
    fail(ErrorKind::kBadArmor, "missing BEGIN line");
  }
  first.remove_prefix(kBegin.size());
  first.remove_suffix(kDashes.size());
  const std::optional<Kind> kind = parse_armor_label(first);
  if (!kind) fail(ErrorKind::kBadArmor, "unknown armor label");
  return *kind;
}

Bytes dearmor(Kind kind, std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::vector<std::string_view> lines;
  for (std::size_t start = 0;;) {
    const std::size_t eol = text.find('\n', start);
    lines.push_back(text.substr(start, eol == std::string_view::npos ? eol : eol - start));
    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }
  const std::string label(armor_label(kind));
  if (lines.size() < 2 ||
      lines.front() != std::string(kBegin) + label + std::string(kDashes)) {
    fail(ErrorKind::kBadArmor, "expected BEGIN " + label);
  }
  if (lines.back() != std::string(kEnd) + label + std::string(kDashes)) {
    fail(ErrorKind::kBadArmor, "expected END " + label);
  }

  std::string b64;
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const bool last = i + 2 == lines.size();
    if (line.empty() || line.size() > kArmorLineWidth ||
        (!last && line.size() != kArmorLineWidth)) {
      fail(ErrorKind::kBadArmor, "body lines must be 64 characters");
    }
    if (!std::all_of(line.begin(), line.end(), is_base64_char)) {
      fail(ErrorKind::kBadArmor, "invalid base64 character");
    }
    b64 += line;
  }
  if (b64.size() % 4 != 0) fail(ErrorKind::kBadArmor, "base64 length not a multiple of 4");
  const std::size_t first_pad = b64.find('=');
  const std::size_t padding =
      first_pad == std::string::npos ? 0 : b64.size() - first_pad;
  if (padding > 2 || (padding > 0 && b64.find_first_not_of('=', first_pad) !=
                                         std::string::npos)) {
    fail(ErrorKind::kBadArmor, "misplaced base64 padding");
  }

  Bytes out(3 * b64.size() / 4);
  if (!b64.empty()) {
    const int n = EVP_DecodeBlock(out.data(),
                                  reinterpret_cast<const unsigned char*>(b64.data()),
                                  static_cast<int>(b64.size()));
    if (n < 0) fail(ErrorKind::kBadArmor, "base64 decoding failed");
  }
  out.erase(out.end() - static_cast<std::ptrdiff_t>(padding), out.end());
  // Reject encodings whose unused low bits are set, so text <-> bytes is 1:1.
  if (armor(kind, out) != std::string(text) + "\n") {
    fail(ErrorKind::kBadArmor, "non-canonical base64");
  }
  return out;
}

}  // namespace authcrypt::codec
