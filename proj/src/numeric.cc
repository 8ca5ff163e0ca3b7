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

#include "authcrypt/numeric.h"

#include <openssl/rand.h>

#include <algorithm>
#include <array>
#include <ostream>

#include "authcrypt/errors.h"

namespace authcrypt {
namespace {

thread_local ExpCounter* active_counters[16];
thread_local std::size_t active_depth = 0;

mpz_class parse(std::string_view text, int base) {
  mpz_class out;
  if (text.empty() || out.set_str(std::string(text), base) != 0 || out < 0) {
    throw RangeError("not a non-negative base-" + std::to_string(base) +
                     " integer: '" + std::string(text) + "'");
  }
  return out;
}

// Left-to-right binary square-and-multiply.
mpz_class pow_mod(const mpz_class& base, const mpz_class& exp,
                  const mpz_class& modulus) {
  mpz_class b = base % modulus;
  mpz_class acc = 1;
  acc %= modulus;
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return acc;
  for (std::size_t i = bits; i-- > 0;) {
    acc = acc * acc;
    acc %= modulus;
    if (mpz_tstbit(exp.get_mpz_t(), i)) {
      acc *= b;
      acc %= modulus;
    }
  }
  return acc;
}

constexpr std::array<unsigned, 54> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

}  // namespace

BigUint::BigUint(std::uint64_t value) {
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

BigUint BigUint::from_decimal(std::string_view text) {
  return from_mpz(parse(text, 10));
}

BigUint BigUint::from_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  return from_mpz(parse(text, 16));
}

BigUint BigUint::from_bytes(ByteView bytes) {
  BigUint out;
  if (!bytes.empty()) {
    mpz_import(out.value_.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
  }
  return out;
}

BigUint BigUint::from_mpz(mpz_class value) {
  if (value < 0) throw RangeError("negative value for BigUint");
  BigUint out;
  out.value_ = std::move(value);
  return out;
}

BigUint BigUint::power_of_two(std::size_t exponent) {
  BigUint out;
  mpz_setbit(out.value_.get_mpz_t(), exponent);
  return out;
}

std::string BigUint::to_decimal() const { return value_.get_str(10); }
std::string BigUint::to_hex() const { return value_.get_str(16); }

Bytes BigUint::to_bytes() const {
  Bytes out(byte_length());
  if (!out.empty()) {
    std::size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 0, 0, value_.get_mpz_t());
    out.resize(written);
  }
  return out;
}

Bytes BigUint::to_bytes_fixed(std::size_t width) const {
  Bytes minimal = to_bytes();
  if (minimal.size() > width) {
    throw RangeError("value needs " + std::to_string(minimal.size()) +
                     " bytes, field holds " + std::to_string(width));
  }
  Bytes out(width - minimal.size(), 0);
  out.insert(out.end(), minimal.begin(), minimal.end());
  return out;
}

std::size_t BigUint::bit_length() const {
  return value_ == 0 ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool BigUint::is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

bool BigUint::test_bit(std::size_t index) const {
  return mpz_tstbit(value_.get_mpz_t(), index) != 0;
}

std::uint64_t BigUint::to_u64() const {
  if (bit_length() > 64) throw RangeError("value exceeds 64 bits");
  std::uint64_t out = 0;
  for (std::uint8_t byte : to_bytes()) out = (out << 8) | byte;
  return out;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (value_ < rhs.value_) throw RangeError("unsigned subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigUint& BigUint::operator/=(const BigUint& rhs) {
  if (rhs.is_zero()) throw RangeError("division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

BigUint& BigUint::operator%=(const BigUint& rhs) {
  if (rhs.is_zero()) throw RangeError("division by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigUint& value) {
  return os << value.to_decimal();
}

ExpCounter::Scope::Scope(ExpCounter& counter) : counter_(&counter) {
  if (active_depth == std::size(active_counters)) {
    throw Error("ExpCounter scopes nested too deeply");
  }
  counter.reset();
  active_counters[active_depth++] = counter_;
}

ExpCounter::Scope::~Scope() { --active_depth; }

void SystemRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error("system randomness unavailable");
  }
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = engine_();
    for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(word >> (8 * b));
    }
  }
}

BigUint mod_exp(const BigUint& base, const BigUint& exp,
                const BigUint& modulus, ExpCounter* counter) {
  if (modulus < BigUint(2)) {
    throw InvalidModulusError("modulus must be at least 2");
  }
  if (counter != nullptr) counter->tick();
  for (std::size_t i = 0; i < active_depth; ++i) {
    if (active_counters[i] != counter) active_counters[i]->tick();
  }
  return BigUint::from_mpz(pow_mod(base.mpz(), exp.mpz(), modulus.mpz()));
}

BigUint mod_inv(const BigUint& a, const BigUint& modulus) {
  if (modulus < BigUint(2)) {
    throw InvalidModulusError("modulus must be at least 2");
  }
  mpz_class out;
  if ((a % modulus).is_zero() ||
      mpz_invert(out.get_mpz_t(), a.mpz().get_mpz_t(),
                 modulus.mpz().get_mpz_t()) == 0) {
    throw NoInverseError(a.to_decimal() + " has no inverse modulo " +
                         modulus.to_decimal());
  }
  return BigUint::from_mpz(std::move(out));
}

BigUint mod_add(const BigUint& a, const BigUint& b, const BigUint& modulus) {
  return (a + b) % modulus;
}

BigUint mod_sub(const BigUint& a, const BigUint& b, const BigUint& modulus) {
  const BigUint ar = a % modulus;
  const BigUint br = b % modulus;
  return ar >= br ? ar - br : modulus - (br - ar);
}

BigUint mod_mul(const BigUint& a, const BigUint& b, const BigUint& modulus) {
  return (a * b) % modulus;
}

BigUint gcd(const BigUint& a, const BigUint& b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigUint::from_mpz(std::move(out));
}

bool is_prime(const BigUint& n, unsigned rounds, RandomSource* rng) {
  if (rounds == 0) throw RangeError("Miller-Rabin needs at least one round");
  if (n < BigUint(2)) return false;
  for (unsigned sp : kSmallPrimes) {
    if (n == BigUint(sp)) return true;
    if ((n % BigUint(sp)).is_zero()) return false;
  }
  // n > 251 and odd from here on.
  const mpz_class& nz = n.mpz();
  const mpz_class n_minus_1 = nz - 1;
  mpz_class d = n_minus_1;
  std::size_t twos = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++twos;
  }

  SeededRandom fallback(mpz_get_ui(nz.get_mpz_t()));
  RandomSource& source = rng != nullptr ? *rng : fallback;
  const BigUint witness_range = n - BigUint(3);

  for (unsigned round = 0; round < rounds; ++round) {
    // witness in [2, n-2]
    const mpz_class a = random_below(witness_range, source).mpz() + 2;
    mpz_class x = pow_mod(a, d, nz);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (std::size_t i = 1; i < twos; ++i) {
      x = x * x % nz;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BigUint random_bits(std::size_t bits, RandomSource& rng) {
  if (bits == 0) return BigUint();
  Bytes buf((bits + 7) / 8);
  rng.fill(buf);
  const std::size_t excess = buf.size() * 8 - bits;
  buf[0] &= static_cast<std::uint8_t>(0xFFu >> excess);
  return BigUint::from_bytes(buf);
}

BigUint random_below(const BigUint& bound, RandomSource& rng) {
  if (bound.is_zero()) throw RangeError("random_below needs a positive bound");
  const std::size_t bits = (bound - BigUint(1)).bit_length();
  for (;;) {
    BigUint candidate = random_bits(bits, rng);
    if (candidate < bound) return candidate;
  }
}

BigUint sample_zq_star(const BigUint& q, RandomSource& rng) {
  if (q < BigUint(2)) throw RangeError("Z_q^* is empty for q < 2");
  return random_below(q - BigUint(1), rng) + BigUint(1);
}

}  // namespace authcrypt
