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

#include <memory>
#include <semaphore>
#include <string>

#include "dtatg/deptree.hpp"

namespace dtatg {

enum class ParserMode { kFixture, kCommand };

struct ParserConfig {
  ParserMode mode = ParserMode::kFixture;
  std::string fixture_dir;
  std::string command;  // run through /bin/sh -c
  double timeout_seconds = 30.0;
  int pool_size = 1;  // concurrent parser processes
};

class ParserClient {
 public:
  // DTATG_FIXTURE_DIR in the environment overrides config.fixture_dir.
  explicit ParserClient(ParserConfig config);

  ParserClient(const ParserClient&) = delete;
  ParserClient& operator=(const ParserClient&) = delete;

  DependencyTree parse(const std::string& sentence_text) const;

  const ParserConfig& config() const { return config_; }

  // SHA-256 of the whitespace-normalized sentence, the fixture filename
  // stem shared by parse() and the cache builder.
  static std::string fixture_key(const std::string& sentence_text);
  static std::string fixture_path(const std::string& dir,
                                  const std::string& sentence_text);

 private:
  DependencyTree parse_fixture(const std::string& sentence_text) const;
  DependencyTree parse_command(const std::string& sentence_text) const;

  ParserConfig config_;
  mutable std::counting_semaphore<> slots_;
};

// Runs the configured command once and returns its raw stdout; used by
// both parse() and the fixture-cache builder.
std::string run_parser_command(const std::string& command,
                               const std::string& input,
                               double timeout_seconds);

}  // namespace dtatg
