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
#include <vector>

#include "dtatg/deptree.hpp"
#include "dtatg/rake.hpp"
#include "dtatg/segmenter.hpp"

namespace dtatg {

struct RankedSentence {
  Sentence sentence;
  std::vector<int> matched;  // indices into the keyword list
  double rank1 = 0.0;
  double rank2 = 0.0;
};

struct FilterResult {
  bool pass = true;
  std::string reason;
};

// Maximum word count for a title candidate sentence.
inline constexpr int kMaxCandidateWords = 25;

// A keyword matches when its full phrase appears contiguously in the
// sentence's lowercased word sequence; each keyword counts once per
// sentence no matter how often it repeats.
std::vector<int> match_keywords(const Sentence& sentence,
                                const std::vector<Keyword>& keywords);

double rank1(const std::vector<double>& scores);
double rank2(const std::vector<double>& scores);

// Every sentence scored, original order kept (debug table source).
std::vector<RankedSentence> rank_sentences(
    const std::vector<Sentence>& sentences,
    const std::vector<Keyword>& keywords);

// Drops sentences longer than kMaxCandidateWords, sorts by rank2
// descending (12-significant-digit comparison), breaking ties by word
// count ascending then sentence index, and returns the top k.
std::vector<RankedSentence> select_central_sentences(
    const std::vector<Sentence>& sentences,
    const std::vector<Keyword>& keywords, int k = 3);

// Multi-clause sentences keep their two best-ranked clauses, joined in
// original order by a space with the commas dropped.
Sentence reduce_clauses(const Sentence& sentence,
                        const std::vector<Keyword>& keywords);
inline Sentence reduce_clauses(const RankedSentence& ranked,
                               const std::vector<Keyword>& keywords) {
  return reduce_clauses(ranked.sentence, keywords);
}

// Candidate discard rules: pronoun subject, or a be-verb predicate
// (root form in {am, is, are}, or such a copula attached to the root).
FilterResult sentence_filters(const DependencyTree& tree);

}  // namespace dtatg
