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

// Arbitrary-precision modular arithmetic for the discrete-log schemes.
//
// BigUint is a non-negative integer backed by GMP. Every operation that
// could leave the non-negative range throws RangeError instead.
//
// mod_exp is the only counted operation. Each top-level call ticks the
// caller-supplied ExpCounter (if any) and every ExpCounter::Scope that is
// active on the calling thread, exactly once, regardless of exponent size.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace authcrypt {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  static BigUint from_decimal(std::string_view text);
  static BigUint from_hex(std::string_view text);
  /// Big-endian magnitude; leading zero bytes are allowed.
  static BigUint from_bytes(ByteView bytes);
  /// Wraps a GMP value; throws RangeError if it is negative.
  static BigUint from_mpz(mpz_class value);
  static BigUint power_of_two(std::size_t exponent);

  std::string to_decimal() const;
  std::string to_hex() const;
  /// Minimal big-endian encoding. Zero encodes as an empty vector.
  Bytes to_bytes() const;
  /// Left-padded big-endian encoding; throws RangeError if it doesn't fit.
  Bytes to_bytes_fixed(std::size_t width) const;

  std::size_t bit_length() const;
  std::size_t byte_length() const { return (bit_length() + 7) / 8; }
  bool is_zero() const { return value_ == 0; }
  bool is_odd() const;
  bool test_bit(std::size_t index) const;
  std::uint64_t to_u64() const;

  const mpz_class& mpz() const { return value_; }

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);
  BigUint& operator*=(const BigUint& rhs);
  BigUint& operator/=(const BigUint& rhs);
  BigUint& operator%=(const BigUint& rhs);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }
  friend BigUint operator-(BigUint lhs, const BigUint& rhs) { return lhs -= rhs; }
  friend BigUint operator*(BigUint lhs, const BigUint& rhs) { return lhs *= rhs; }
  friend BigUint operator/(BigUint lhs, const BigUint& rhs) { return lhs /= rhs; }
  friend BigUint operator%(BigUint lhs, const BigUint& rhs) { return lhs %= rhs; }

  friend bool operator==(const BigUint& lhs, const BigUint& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigUint& lhs,
                                          const BigUint& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigUint& value);

/// Counts modular exponentiations.
class ExpCounter {
 public:
  std::uint64_t count() const { return count_; }
  void reset() { count_ = 0; }
  void tick() { ++count_; }

  /// Attaches a counter to the current thread for the lifetime of the
  /// scope. The counter is reset on entry. Scopes nest (LIFO); every active
  /// scope on the thread sees each exponentiation.
  class Scope {
   public:
    explicit Scope(ExpCounter& counter);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    ExpCounter* counter_;
  };

 private:
  std::uint64_t count_ = 0;
};

/// Source of uniformly random bytes.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating-system CSPRNG (OpenSSL RAND_bytes).
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic stream for reproducible tests. Not for real keys.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
  void fill(std::span<std::uint8_t> out) override;

 private:
  std::mt19937_64 engine_;
};

/// base^exp mod modulus. Throws InvalidModulusError if modulus < 2.
BigUint mod_exp(const BigUint& base, const BigUint& exp,
                const BigUint& modulus, ExpCounter* counter = nullptr);

/// x with a*x = 1 (mod modulus), 0 < x < modulus. Throws NoInverseError.
BigUint mod_inv(const BigUint& a, const BigUint& modulus);

BigUint mod_add(const BigUint& a, const BigUint& b, const BigUint& modulus);
/// (a - b) mod modulus, for any a, b.
BigUint mod_sub(const BigUint& a, const BigUint& b, const BigUint& modulus);
BigUint mod_mul(const BigUint& a, const BigUint& b, const BigUint& modulus);

BigUint gcd(const BigUint& a, const BigUint& b);

/// Miller-Rabin after trial division by small primes. A composite verdict
/// is always correct; a prime verdict is wrong with probability at most
/// 4^-rounds. Witnesses come from `rng`, or from an internal stream seeded
/// by n when rng is null.
bool is_prime(const BigUint& n, unsigned rounds = 40,
              RandomSource* rng = nullptr);

/// Uniform value with exactly `bits` random bits (top bit not forced).
BigUint random_bits(std::size_t bits, RandomSource& rng);
/// Uniform value in [0, bound). bound must be non-zero.
BigUint random_below(const BigUint& bound, RandomSource& rng);
/// Uniform value in [1, q-1]. q must be at least 2.
BigUint sample_zq_star(const BigUint& q, RandomSource& rng);

}  // namespace authcrypt
