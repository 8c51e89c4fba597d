// Copyright 2026 The dtatg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dtatg {

// Failure classes; the CLI maps these onto exit codes (input-ish -> 1,
// configuration/parser -> 2).
enum class ErrorKind {
  kInput,      // bad user input (missing file, empty document)
  kConfig,     // invalid or incomplete configuration
  kFormat,     // malformed file contents (CoNLL-U, config file)
  kStructure,  // structurally invalid dependency tree
  kParser,     // external parser unavailable or misbehaving
  kNotFound,   // fixture cache miss
  kInternal,   // broken invariant inside this library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace dtatg
