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

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dtatg {

struct SurfaceToken {
  int position = 0;   // 0-based ordinal within the sentence
  std::string text;
  bool is_word = false;  // false for standalone punctuation
};

// Half-open token-index range [begin, end). Comma tokens never fall inside
// a clause span.
struct ClauseSpan {
  int begin = 0;
  int end = 0;
};

struct Sentence {
  int index = 0;  // ordinal within the document
  std::string text;
  std::vector<SurfaceToken> tokens;
  std::vector<ClauseSpan> clauses;

  int word_count() const;
  // Lowercased word-token texts in order; punctuation tokens skipped.
  std::vector<std::string> lowercased_words() const;
};

struct SegmentOptions {
  // Abbreviations whose interior periods should not end a sentence
  // (e.g. "U.S."). Off by default.
  std::set<std::string> abbreviations;
};

// Splits on the delimiter set {., ?, !, \n, :}. Delimiters are consumed and
// whitespace-only segments dropped. A '.' or ':' flanked by digits on both
// sides ("19.9", "3:30") does not split. Commas never split sentences.
std::vector<Sentence> split_sentences(std::string_view text,
                                      const SegmentOptions& options = {});

// Whitespace split with leading/trailing punctuation separated into
// punctuation tokens. Interior punctuation (possessive "'s", hyphens,
// decimal points) stays attached to its word.
std::vector<SurfaceToken> tokenize(std::string_view sentence_text);

// Spans delimited by comma tokens; commas excluded; empty spans dropped.
std::vector<ClauseSpan> split_clauses(const Sentence& sentence);

// Rebuilds a Sentence (tokens + clause spans) from raw text.
Sentence make_sentence(int index, std::string_view text);

}  // namespace dtatg
