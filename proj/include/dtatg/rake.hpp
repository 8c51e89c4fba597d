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

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dtatg/segmenter.hpp"

namespace dtatg {

enum class WordMetric { kFreq, kDegree, kRatio };

struct CandidatePhrase {
  std::vector<std::string> words;  // lowercased
  int occurrences = 0;
  int first_position = 0;  // document word-slot index of the first instance
};

struct WordScore {
  int freq = 0;
  int deg = 0;
  double score = 0.0;
};

struct Keyword {
  std::vector<std::string> phrase;
  double score = 0.0;
  int occurrences = 0;
  int first_position = 0;
  std::unordered_set<std::string> member_words;

  std::string joined() const;
};

struct RakeConfig {
  WordMetric metric = WordMetric::kRatio;
  // Overrides the default cut of ceil(distinct candidate words / 3).
  std::optional<int> top_count;
};

// Maximal runs of non-stopword word tokens; punctuation tokens and
// sentence boundaries end a run. Identical phrases are merged and the
// result keeps first-occurrence order.
std::vector<CandidatePhrase> extract_candidates(
    const std::vector<Sentence>& sentences,
    const std::unordered_set<std::string>& stopwords);

// freq counts word slots across candidate instances; deg adds the
// instance length for each slot (a word co-occurs with itself).
std::unordered_map<std::string, WordScore> score_words(
    const std::vector<CandidatePhrase>& candidates, WordMetric metric);

// Full extraction: candidates, word scores, phrase scores as the sum of
// member word scores (duplicate words counted), descending sort with
// first-occurrence tie-break, top-T cut.
std::vector<Keyword> extract_keywords(
    const std::vector<Sentence>& sentences,
    const std::unordered_set<std::string>& stopwords,
    const RakeConfig& config = {});

}  // namespace dtatg
