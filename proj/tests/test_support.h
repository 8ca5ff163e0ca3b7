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

#pragma once

#include "authcrypt/group.h"
#include "authcrypt/numeric.h"

namespace authcrypt::testing {

/// 1024/160-bit group, generated once per process from a fixed seed.
inline const GroupParams& full_params() {
  static const GroupParams params = [] {
    SeededRandom rng(1024160);
    return generate_params(1024, 160, rng);
  }();
  return params;
}

/// 512/160-bit group, generated once per process from a fixed seed.
inline const GroupParams& medium_params() {
  static const GroupParams params = [] {
    SeededRandom rng(512160);
    return generate_params(512, 160, rng);
  }();
  return params;
}

/// q = 11 inside a 64-bit p. Unlike the (23, 11, 4) preset, almost every
/// subgroup element exceeds q, so reducing a group element mod q is not a
/// no-op.
inline GroupParams wide_q11_params() {
  return {BigUint::from_decimal("9223372036854776351"), BigUint(11),
          BigUint::from_decimal("5461481334836266687")};
}

inline Bytes random_bytes(std::size_t n, RandomSource& rng) {
  Bytes out(n);
  rng.fill(out);
  return out;
}

}  // namespace authcrypt::testing
