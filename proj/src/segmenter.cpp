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

#include "dtatg/segmenter.hpp"

#include <cctype>

#include "dtatg/text.hpp"

namespace dtatg {

namespace {

bool is_sentence_delimiter(char c) {
  return c == '.' || c == '?' || c == '!' || c == '\n' || c == ':';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Marks the byte offsets of periods that belong to a whitelisted
// abbreviation occurrence, so the splitter can skip them.
std::vector<bool> protected_positions(std::string_view text,
                                      const SegmentOptions& options) {
  std::vector<bool> prot(text.size(), false);
  for (const std::string& abbr : options.abbreviations) {
    if (abbr.empty()) continue;
    size_t at = 0;
    while ((at = text.find(abbr, at)) != std::string_view::npos) {
      bool boundary_before =
          at == 0 || !is_word_char(static_cast<unsigned char>(text[at - 1]));
      if (boundary_before) {
        for (size_t i = 0; i < abbr.size(); ++i) {
          if (abbr[i] == '.') prot[at + i] = true;
        }
      }
      at += 1;
    }
  }
  return prot;
}

}  // namespace

int Sentence::word_count() const {
  int n = 0;
  for (const SurfaceToken& t : tokens) {
    if (t.is_word) ++n;
  }
  return n;
}

std::vector<std::string> Sentence::lowercased_words() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const SurfaceToken& t : tokens) {
    if (t.is_word) out.push_back(ascii_lower(t.text));
  }
  return out;
}

std::vector<SurfaceToken> tokenize(std::string_view sentence_text) {
  std::vector<SurfaceToken> tokens;
  auto emit = [&tokens](std::string text, bool is_word) {
    SurfaceToken tok;
    tok.position = static_cast<int>(tokens.size());
    tok.text = std::move(text);
    tok.is_word = is_word;
    tokens.push_back(std::move(tok));
  };

  for (const std::string& chunk : split_whitespace(sentence_text)) {
    size_t b = 0;
    size_t e = chunk.size();
    while (b < e && !is_word_char(static_cast<unsigned char>(chunk[b]))) {
      emit(chunk.substr(b, 1), false);
      ++b;
    }
    std::vector<std::string> tail;
    while (e > b && !is_word_char(static_cast<unsigned char>(chunk[e - 1]))) {
      tail.push_back(chunk.substr(e - 1, 1));
      --e;
    }
    if (e > b) emit(chunk.substr(b, e - b), true);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
      emit(*it, false);
    }
  }
  return tokens;
}

std::vector<ClauseSpan> split_clauses(const Sentence& sentence) {
  std::vector<ClauseSpan> spans;
  int start = 0;
  const int n = static_cast<int>(sentence.tokens.size());
  for (int i = 0; i <= n; ++i) {
    bool cut = i == n || sentence.tokens[i].text == ",";
    if (!cut) continue;
    if (i > start) spans.push_back({start, i});
    start = i + 1;
  }
  return spans;
}

Sentence make_sentence(int index, std::string_view text) {
  Sentence s;
  s.index = index;
  s.text = trim(text);
  s.tokens = tokenize(s.text);
  s.clauses = split_clauses(s);
  return s;
}

std::vector<Sentence> split_sentences(std::string_view text,
                                      const SegmentOptions& options) {
  std::vector<bool> prot;
  if (!options.abbreviations.empty()) {
    prot = protected_positions(text, options);
  }

  std::vector<Sentence> sentences;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    bool cut = i == text.size();
    if (!cut && is_sentence_delimiter(text[i])) {
      bool guarded = false;
      // Decimal numbers and times ("19.9", "3:30") survive '.' and ':'.
      if ((text[i] == '.' || text[i] == ':') && i > 0 && i + 1 < text.size() &&
          is_digit(text[i - 1]) && is_digit(text[i + 1])) {
        guarded = true;
      }
      if (!prot.empty() && prot[i]) guarded = true;
      cut = !guarded;
    }
    if (!cut) continue;
    std::string segment = trim(text.substr(start, i - start));
    if (!segment.empty()) {
      sentences.push_back(
          make_sentence(static_cast<int>(sentences.size()), segment));
    }
    start = i + 1;
  }
  return sentences;
}

}  // namespace dtatg
