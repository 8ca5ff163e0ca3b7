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

#include <iosfwd>
#include <string>
#include <vector>

#include "authcrypt/group.h"
#include "authcrypt/numeric.h"

namespace authcrypt::cli {

/// Exit codes.
inline constexpr int kAccept = 0;
inline constexpr int kVerifyFailure = 1;
inline constexpr int kUsage = 2;

/// Environment variable naming a default config file (CLI11 TOML/INI).
inline constexpr const char* kConfigEnv = "AUTHENC_CONFIG";

/// Runs one command. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Ma-Chen carries an element of Z_p^*, not bytes. A byte string of length
// n travels as 2^(8n+16) + n*2^(8n) + m: a marker bit, a 16-bit length and
// the message, so the value has exactly 8n+17 bits and stays below p as
// long as 8n+17 < |p|.

/// Longest byte string that fits, or 0 if even an empty one does not.
std::size_t max_machen_message(const GroupParams& params);
/// Throws InvalidMessageError if the message does not fit.
BigUint pack_machen_message(const GroupParams& params, ByteView message);
/// Throws InvalidMessageError if value is not a packed byte string.
Bytes unpack_machen_message(const BigUint& value);

}  // namespace authcrypt::cli
