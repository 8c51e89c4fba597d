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

#include "dtatg/rake.hpp"

#include <algorithm>
#include <map>

#include "dtatg/text.hpp"

namespace dtatg {

std::string Keyword::joined() const {
  std::string out;
  for (size_t i = 0; i < phrase.size(); ++i) {
    if (i) out += ' ';
    out += phrase[i];
  }
  return out;
}

std::vector<CandidatePhrase> extract_candidates(
    const std::vector<Sentence>& sentences,
    const std::unordered_set<std::string>& stopwords) {
  std::vector<CandidatePhrase> out;
  std::unordered_map<std::string, size_t> index;  // joined phrase -> slot

  int word_position = 0;
  std::vector<std::string> run;
  int run_start = 0;

  auto flush_run = [&]() {
    if (run.empty()) return;
    std::string key;
    for (size_t i = 0; i < run.size(); ++i) {
      if (i) key += ' ';
      key += run[i];
    }
    auto it = index.find(key);
    if (it == index.end()) {
      CandidatePhrase phrase;
      phrase.words = run;
      phrase.occurrences = 1;
      phrase.first_position = run_start;
      index.emplace(std::move(key), out.size());
      out.push_back(std::move(phrase));
    } else {
      out[it->second].occurrences += 1;
    }
    run.clear();
  };

  for (const Sentence& sentence : sentences) {
    for (const SurfaceToken& token : sentence.tokens) {
      if (!token.is_word) {
        flush_run();
        continue;
      }
      std::string lower = ascii_lower(token.text);
      if (stopwords.count(lower)) {
        flush_run();
      } else {
        if (run.empty()) run_start = word_position;
        run.push_back(std::move(lower));
      }
      ++word_position;
    }
    flush_run();
  }
  return out;
}

std::unordered_map<std::string, WordScore> score_words(
    const std::vector<CandidatePhrase>& candidates, WordMetric metric) {
  std::unordered_map<std::string, WordScore> table;
  for (const CandidatePhrase& cand : candidates) {
    const int length = static_cast<int>(cand.words.size());
    for (const std::string& word : cand.words) {
      WordScore& ws = table[word];
      ws.freq += cand.occurrences;
      ws.deg += length * cand.occurrences;
    }
  }
  for (auto& [word, ws] : table) {
    switch (metric) {
      case WordMetric::kFreq:
        ws.score = ws.freq;
        break;
      case WordMetric::kDegree:
        ws.score = ws.deg;
        break;
      case WordMetric::kRatio:
        ws.score = static_cast<double>(ws.deg) / ws.freq;
        break;
    }
  }
  return table;
}

std::vector<Keyword> extract_keywords(
    const std::vector<Sentence>& sentences,
    const std::unordered_set<std::string>& stopwords,
    const RakeConfig& config) {
  std::vector<CandidatePhrase> candidates =
      extract_candidates(sentences, stopwords);
  if (candidates.empty()) return {};

  std::unordered_map<std::string, WordScore> table =
      score_words(candidates, config.metric);

  std::vector<Keyword> keywords;
  keywords.reserve(candidates.size());
  for (const CandidatePhrase& cand : candidates) {
    Keyword kw;
    kw.phrase = cand.words;
    kw.occurrences = cand.occurrences;
    kw.first_position = cand.first_position;
    for (const std::string& word : cand.words) {
      kw.score += table.at(word).score;
      kw.member_words.insert(word);
    }
    keywords.push_back(std::move(kw));
  }

  std::stable_sort(keywords.begin(), keywords.end(),
                   [](const Keyword& a, const Keyword& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.first_position < b.first_position;
                   });

  int top;
  if (config.top_count) {
    top = *config.top_count;
  } else {
    int distinct_words = static_cast<int>(table.size());
    top = (distinct_words + 2) / 3;
  }
  if (top < static_cast<int>(keywords.size())) {
    keywords.resize(top);
  }
  return keywords;
}

}  // namespace dtatg
