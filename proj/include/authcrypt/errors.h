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

#include <stdexcept>
#include <string>

namespace authcrypt {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulusError : public Error {
 public:
  using Error::Error;
};

class NoInverseError : public Error {
 public:
  using Error::Error;
};

/// Raised when an unsigned subtraction would go negative or a value does
/// not fit a requested fixed width.
class RangeError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

class RejectedKeyError : public Error {
 public:
  using Error::Error;
};

class InvalidMessageError : public Error {
 public:
  using Error::Error;
};

class ForgeryError : public Error {
 public:
  using Error::Error;
};

}  // namespace authcrypt
