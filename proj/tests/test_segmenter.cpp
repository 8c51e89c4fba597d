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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "dtatg/segmenter.hpp"
#include "dtatg/text.hpp"

using namespace dtatg;

namespace {

std::vector<std::string> sentence_texts(const std::string& text,
                                        const SegmentOptions& options = {}) {
  std::vector<std::string> out;
  for (const Sentence& s : split_sentences(text, options)) out.push_back(s.text);
  return out;
}

std::vector<std::string> token_texts(const Sentence& s) {
  std::vector<std::string> out;
  for (const SurfaceToken& t : s.tokens) out.push_back(t.text);
  return out;
}

}  // namespace

TEST_CASE("sentences split on period, question, bang, newline, colon") {
  auto texts = sentence_texts("One. Two? Three! Four\nFive: six");
  REQUIRE(texts.size() == 6);
  CHECK(texts[0] == "One");
  CHECK(texts[1] == "Two");
  CHECK(texts[2] == "Three");
  CHECK(texts[3] == "Four");
  CHECK(texts[4] == "Five");
  CHECK(texts[5] == "six");
}

TEST_CASE("commas never split sentences") {
  auto texts = sentence_texts("The economy slowed, and markets tumbled.");
  REQUIRE(texts.size() == 1);
  CHECK(texts[0] == "The economy slowed, and markets tumbled");
}

TEST_CASE("digit-flanked period and colon do not split") {
  auto texts = sentence_texts("Microsoft sold 19.9 million units.");
  REQUIRE(texts.size() == 1);
  CHECK(texts[0] == "Microsoft sold 19.9 million units");

  texts = sentence_texts("Kickoff is at 3:30 today. Gates open earlier.");
  REQUIRE(texts.size() == 2);
  CHECK(texts[0] == "Kickoff is at 3:30 today");
  CHECK(texts[1] == "Gates open earlier");

  // Only a digit on both sides protects the delimiter.
  texts = sentence_texts("It cost 9. Then more.");
  REQUIRE(texts.size() == 2);
}

TEST_CASE("whitespace-only segments are dropped") {
  auto texts = sentence_texts("One...  Two.\n\n  \nThree.");
  REQUIRE(texts.size() == 3);
  CHECK(texts[0] == "One");
  CHECK(texts[1] == "Two");
  CHECK(texts[2] == "Three");

  CHECK(split_sentences("").empty());
  CHECK(split_sentences(" .?! \n").empty());
}

TEST_CASE("abbreviation periods survive when whitelisted") {
  SegmentOptions options;
  options.abbreviations = {"U.S.", "Mr."};

  auto texts = sentence_texts("Mr. Smith left the U.S. embassy. He waved.",
                              options);
  REQUIRE(texts.size() == 2);
  CHECK(texts[0] == "Mr. Smith left the U.S. embassy");
  CHECK(texts[1] == "He waved");

  // Without the whitelist the same text shatters.
  CHECK(sentence_texts("Mr. Smith left the U.S. embassy. He waved.").size() >
        2);
}

TEST_CASE("sentence indices are consecutive from zero") {
  auto sentences = split_sentences("A one. B two. C three.");
  REQUIRE(sentences.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(sentences[i].index == i);
}

TEST_CASE("tokenize splits off edge punctuation only") {
  auto tokens = tokenize("\"Wait,\" she said");
  REQUIRE(tokens.size() == 6);
  CHECK(tokens[0].text == "\"");
  CHECK_FALSE(tokens[0].is_word);
  CHECK(tokens[1].text == "Wait");
  CHECK(tokens[1].is_word);
  CHECK(tokens[2].text == ",");
  CHECK_FALSE(tokens[2].is_word);
  CHECK(tokens[3].text == "\"");
  CHECK(tokens[4].text == "she");
  CHECK(tokens[5].text == "said");
  CHECK(tokens[5].position == 5);
}

TEST_CASE("interior punctuation stays attached to its word") {
  auto tokens = tokenize("Japan's oldest co-star won 19.9 points");
  std::vector<std::string> texts;
  for (const auto& t : tokens) texts.push_back(t.text);
  CHECK(texts == std::vector<std::string>{"Japan's", "oldest", "co-star",
                                          "won", "19.9", "points"});
  for (const auto& t : tokens) CHECK(t.is_word);
}

TEST_CASE("word_count and lowercased_words skip punctuation tokens") {
  Sentence s = make_sentence(0, "He said, \"Stop now.\"");
  CHECK(s.word_count() == 4);
  CHECK(s.lowercased_words() ==
        std::vector<std::string>{"he", "said", "stop", "now"});
}

TEST_CASE("clauses are comma-delimited spans that exclude the commas") {
  Sentence s = make_sentence(0, "The economy slowed, according to officials, "
                                "and markets tumbled");
  REQUIRE(s.clauses.size() == 3);
  auto words_in = [&](const ClauseSpan& span) {
    std::string out;
    for (int i = span.begin; i < span.end; ++i) {
      if (!out.empty()) out += ' ';
      out += s.tokens[i].text;
    }
    return out;
  };
  CHECK(words_in(s.clauses[0]) == "The economy slowed");
  CHECK(words_in(s.clauses[1]) == "according to officials");
  CHECK(words_in(s.clauses[2]) == "and markets tumbled");
  for (const ClauseSpan& span : s.clauses) {
    for (int i = span.begin; i < span.end; ++i) {
      CHECK(s.tokens[i].text != ",");
    }
  }
}

TEST_CASE("single-clause sentence yields one full span") {
  Sentence s = make_sentence(0, "Markets tumbled again");
  REQUIRE(s.clauses.size() == 1);
  CHECK(s.clauses[0].begin == 0);
  CHECK(s.clauses[0].end == 3);
}

TEST_CASE("segmentation invariants hold on random printable soup") {
  std::mt19937 rng(2024);
  const std::string alphabet =
      "abc XYZ 0123456789 .,?!:;\n'\"()- \t";
  std::uniform_int_distribution<int> pick(0,
                                          static_cast<int>(alphabet.size()) - 1);
  std::uniform_int_distribution<int> len(0, 120);

  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    int n = len(rng);
    for (int i = 0; i < n; ++i) text += alphabet[pick(rng)];

    auto sentences = split_sentences(text);
    int expected_index = 0;
    for (const Sentence& s : sentences) {
      CHECK(s.index == expected_index++);
      // No sentence delimiter may survive inside a sentence, except a
      // digit-guarded '.' or ':'.
      for (size_t i = 0; i < s.text.size(); ++i) {
        char c = s.text[i];
        if (c == '?' || c == '!' || c == '\n') FAIL("delimiter survived");
        if (c == '.' || c == ':') {
          bool guarded = i > 0 && i + 1 < s.text.size() &&
                         std::isdigit(static_cast<unsigned char>(s.text[i - 1])) &&
                         std::isdigit(static_cast<unsigned char>(s.text[i + 1]));
          if (!guarded) FAIL("unguarded delimiter survived: ", s.text);
        }
      }
      CHECK(s.text == trim(s.text));
      CHECK_FALSE(s.text.empty());

      // Token round trip: concatenating tokens with the whitespace
      // removed reproduces the sentence text without whitespace.
      std::string glued;
      for (const SurfaceToken& t : s.tokens) glued += t.text;
      std::string squeezed;
      for (char c : s.text) {
        if (!std::isspace(static_cast<unsigned char>(c))) squeezed += c;
      }
      CHECK(glued == squeezed);

      // Clause spans are disjoint, ordered, within range, comma-free.
      int prev_end = 0;
      for (const ClauseSpan& span : s.clauses) {
        CHECK(span.begin >= prev_end);
        CHECK(span.begin < span.end);
        CHECK(span.end <= static_cast<int>(s.tokens.size()));
        prev_end = span.end;
      }
    }
  }
}

TEST_CASE("make_sentence equals the segment of its own text") {
  auto sentences = split_sentences("Wales have secured the championship.");
  REQUIRE(sentences.size() == 1);
  Sentence rebuilt = make_sentence(0, sentences[0].text);
  CHECK(rebuilt.text == sentences[0].text);
  CHECK(token_texts(rebuilt) == token_texts(sentences[0]));
}
