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

#include "registry_file.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "authcrypt/codec.h"
#include "authcrypt/errors.h"
#include "json.hpp"

namespace authcrypt::cli {
namespace {

constexpr const char* kFormat = "authcrypt-registry/1";

std::string hex(const Digest& d) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : d) {
    out += kDigits[b >> 4];
    out += kDigits[b & 15];
  }
  return out;
}

[[noreturn]] void sys_fail(const std::string& what, const std::string& path) {
  throw Error(what + " " + path + ": " + std::strerror(errno));
}

}  // namespace

RegistryFile::RegistryFile(const std::string& path) : path_(path) {
  fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) sys_fail("cannot open registry", path);
  if (::flock(fd_, LOCK_EX) != 0) {
    ::close(fd_);
    sys_fail("cannot lock registry", path);
  }
}

RegistryFile::~RegistryFile() {
  ::flock(fd_, LOCK_UN);
  ::close(fd_);
}

std::unique_ptr<CaRegistry> RegistryFile::load(const GroupParams& params,
                                               CaMode fresh_mode) const {
  std::string text;
  char buf[4096];
  for (off_t off = 0;;) {
    const ssize_t n = ::pread(fd_, buf, sizeof buf, off);
    if (n < 0) sys_fail("cannot read registry", path_);
    if (n == 0) break;
    text.append(buf, static_cast<std::size_t>(n));
    off += n;
  }
  if (text.empty()) return std::make_unique<CaRegistry>(params, fresh_mode);

  const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("format", "") != kFormat) {
    throw Error("registry " + path_ + " is not an authcrypt registry");
  }
  try {
    if (doc.at("params").get<std::string>() != hex(codec::fingerprint(params))) {
      throw Error("registry " + path_ + " belongs to different group parameters");
    }
    const std::optional<CaMode> mode =
        parse_ca_mode(doc.at("ca_mode").get<std::string>());
    if (!mode) throw Error("registry " + path_ + " has an unknown ca_mode");
    std::vector<RegistryEntry> entries;
    for (const auto& e : doc.at("entries")) {
      entries.push_back({e.at("identity").get<std::string>(),
                         PublicKey{BigUint::from_hex(e.at("y").get<std::string>())},
                         e.at("sequence").get<std::uint64_t>()});
    }
    return std::make_unique<CaRegistry>(params, *mode, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw Error("registry " + path_ + " is malformed: " + e.what());
  }
}

void RegistryFile::save(const CaRegistry& registry) {
  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["params"] = hex(codec::fingerprint(registry.params()));
  doc["ca_mode"] = std::string(ca_mode_name(registry.mode()));
  doc["entries"] = nlohmann::json::array();
  for (const RegistryEntry& e : registry.entries()) {
    doc["entries"].push_back(
        {{"identity", e.identity}, {"y", e.key.y.to_hex()}, {"sequence", e.sequence}});
  }
  const std::string text = doc.dump(2) + "\n";
  if (::ftruncate(fd_, 0) != 0) sys_fail("cannot truncate registry", path_);
  for (std::size_t off = 0; off < text.size();) {
    const ssize_t n = ::pwrite(fd_, text.data() + off, text.size() - off,
                               static_cast<off_t>(off));
    if (n < 0) sys_fail("cannot write registry", path_);
    off += static_cast<std::size_t>(n);
  }
}

}  // namespace authcrypt::cli
