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

#include <string>
#include <string_view>
#include <vector>

namespace dtatg {

// Byte-level character class used by the tokenizer: ASCII alphanumerics plus
// any non-ASCII byte (so multi-byte UTF-8 letters stay inside words).
bool is_word_char(unsigned char c);

std::string ascii_lower(std::string_view s);
std::string trim(std::string_view s);

// Collapses every run of whitespace to a single space and trims the ends.
// This is the normalization used for parser fixture keys.
std::string normalize_whitespace(std::string_view s);

std::vector<std::string> split_whitespace(std::string_view s);

// Rounds to `digits` significant decimal digits. Used to absorb float noise
// before comparing sentence rankings for ties.
double round_significant(double x, int digits = 12);

std::string sha256_hex(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

void warn(const std::string& message);

}  // namespace dtatg
