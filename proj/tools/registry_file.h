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

// On-disk CA registry: a JSON document
//
//   {"format": "authcrypt-registry/1",
//    "params": "<hex SHA-256 fingerprint>",
//    "ca_mode": "default" | "strict-pop",
//    "entries": [{"identity": "...", "y": "<hex>", "sequence": 1}, ...]}
//
// held under an exclusive flock() from open to close.

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "authcrypt/group.h"

namespace authcrypt::cli {

class RegistryFile {
 public:
  /// Creates the file if missing and blocks until the lock is held.
  explicit RegistryFile(const std::string& path);
  ~RegistryFile();
  RegistryFile(const RegistryFile&) = delete;
  RegistryFile& operator=(const RegistryFile&) = delete;

  /// Restores the registry. A new (empty) file starts in `fresh_mode`; an
  /// existing one keeps its stored mode. Throws Error if the file is
  /// malformed or was made for other parameters.
  std::unique_ptr<CaRegistry> load(const GroupParams& params, CaMode fresh_mode) const;

  /// Replaces the file contents.
  void save(const CaRegistry& registry);

 private:
  std::string path_;
  int fd_ = -1;
};

}  // namespace authcrypt::cli
