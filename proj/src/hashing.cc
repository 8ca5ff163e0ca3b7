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

#include "authcrypt/hashing.h"

#include <openssl/evp.h>

#include <algorithm>
#include <memory>

#include "authcrypt/errors.h"

namespace authcrypt {
namespace {

constexpr std::string_view kTagRaw = "authcrypt/H/raw";
constexpr std::string_view kTagZq = "authcrypt/H/zq";
constexpr std::string_view kTagZpStar = "authcrypt/H/zp*";
constexpr std::string_view kTagKdf = "authcrypt/h/session-key";

void put_u32(Bytes& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void put_u64(Bytes& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void put_framed(Bytes& out, ByteView data) {
  if (data.size() > 0xFFFFFFFFu) throw RangeError("hash part exceeds 4 GiB");
  put_u32(out, static_cast<std::uint32_t>(data.size()));
  out.insert(out.end(), data.begin(), data.end());
}

ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

Digest sha256_concat(std::initializer_list<ByteView> chunks) {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 initialisation failed");
  }
  for (ByteView chunk : chunks) {
    if (EVP_DigestUpdate(ctx.get(), chunk.data(), chunk.size()) != 1) {
      throw Error("SHA-256 update failed");
    }
  }
  Digest out{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 ||
      len != kDigestSize) {
    throw Error("SHA-256 finalisation failed");
  }
  return out;
}

}  // namespace

HashPart HashPart::bytes(ByteView data) {
  return HashPart(Bytes(data.begin(), data.end()));
}

HashPart HashPart::text(std::string_view data) { return bytes(as_bytes(data)); }

HashPart HashPart::integer(const BigUint& value) {
  return HashPart(value.to_bytes());
}

HashPart HashPart::fixed(const BigUint& value, std::size_t width) {
  return HashPart(value.to_bytes_fixed(width));
}

HashPart HashPart::digest(const Digest& d) {
  return HashPart(Bytes(d.begin(), d.end()));
}

Bytes encode_hash_input(std::string_view tag, const HashInput& parts) {
  Bytes out;
  put_framed(out, as_bytes(tag));
  for (const HashPart& part : parts) put_framed(out, part.encoded());
  return out;
}

Digest sha256(ByteView data) { return sha256_concat({data}); }

Digest hash_H(const HashInput& parts) {
  return sha256(encode_hash_input(kTagRaw, parts));
}

BigUint hash_to_zq(const HashInput& parts, const BigUint& q) {
  const Digest d = sha256(encode_hash_input(kTagZq, parts));
  return BigUint::from_bytes(d) % q;
}

BigUint hash_to_zp_star(const HashInput& parts, const BigUint& p) {
  if (p < BigUint(2)) throw InvalidModulusError("p must be at least 2");
  const Bytes encoded = encode_hash_input(kTagZpStar, parts);
  const std::size_t bits = p.bit_length();
  const std::size_t width = (bits + 7) / 8;
  for (std::uint32_t retry = 0;; ++retry) {
    Bytes stream;
    stream.reserve(width + kDigestSize);
    for (std::uint32_t block = 0; stream.size() < width; ++block) {
      Bytes prefix;
      put_u32(prefix, retry);
      put_u32(prefix, block);
      const Digest d = sha256_concat({prefix, encoded});
      stream.insert(stream.end(), d.begin(), d.end());
    }
    stream.resize(width);
    stream[0] &= static_cast<std::uint8_t>(0xFFu >> (width * 8 - bits));
    BigUint value = BigUint::from_bytes(stream) % p;
    if (!value.is_zero()) return value;
  }
}

SessionKey kdf_h(const BigUint& t2, const BigUint& p) {
  const Bytes encoded = t2.to_bytes_fixed(p.byte_length());
  Bytes tag;
  put_framed(tag, as_bytes(kTagKdf));
  SessionKey key;
  key.bytes = sha256_concat({tag, encoded});
  return key;
}

Bytes sym_encrypt(const SessionKey& key, ByteView plaintext) {
  Bytes out(plaintext.begin(), plaintext.end());
  Bytes counter;
  for (std::size_t offset = 0; offset < out.size(); offset += kDigestSize) {
    counter.clear();
    put_u64(counter, offset / kDigestSize);
    const Digest block = sha256_concat({key.bytes, counter});
    const std::size_t n = std::min(kDigestSize, out.size() - offset);
    for (std::size_t i = 0; i < n; ++i) out[offset + i] ^= block[i];
  }
  return out;
}

Bytes sym_decrypt(const SessionKey& key, ByteView ciphertext) {
  return sym_encrypt(key, ciphertext);
}

const HashSuite& default_hash_suite() {
  static const HashSuite suite;
  return suite;
}

BigUint StubHashSuite::to_zq(const HashInput& parts, const BigUint& q) const {
  if (config_.zq_value) return *config_.zq_value % q;
  if (config_.zq_function) return config_.zq_function(parts, q) % q;
  return HashSuite::to_zq(parts, q);
}

BigUint StubHashSuite::to_zp_star(const HashInput& parts,
                                  const BigUint& p) const {
  if (config_.zp_star_value) return *config_.zp_star_value;
  return HashSuite::to_zp_star(parts, p);
}

}  // namespace authcrypt
