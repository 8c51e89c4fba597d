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

#include "dtatg/ranker.hpp"

#include <algorithm>
#include <cmath>

#include "dtatg/text.hpp"

namespace dtatg {

namespace {

bool phrase_in_words(const std::vector<std::string>& phrase,
                     const std::vector<std::string>& words) {
  if (phrase.empty() || phrase.size() > words.size()) return false;
  for (size_t start = 0; start + phrase.size() <= words.size(); ++start) {
    bool hit = true;
    for (size_t i = 0; i < phrase.size(); ++i) {
      if (words[start + i] != phrase[i]) {
        hit = false;
        break;
      }
    }
    if (hit) return true;
  }
  return false;
}

std::vector<int> match_in_words(const std::vector<std::string>& words,
                                const std::vector<Keyword>& keywords) {
  std::vector<int> matched;
  for (size_t k = 0; k < keywords.size(); ++k) {
    if (phrase_in_words(keywords[k].phrase, words)) {
      matched.push_back(static_cast<int>(k));
    }
  }
  return matched;
}

std::vector<double> scores_of(const std::vector<int>& matched,
                              const std::vector<Keyword>& keywords) {
  std::vector<double> scores;
  scores.reserve(matched.size());
  for (int k : matched) scores.push_back(keywords[k].score);
  return scores;
}

// Rebuilds surface text from a token range; punctuation attaches to the
// left except for opening brackets, which attach to the right.
std::string render_tokens(const std::vector<SurfaceToken>& tokens, int begin,
                          int end) {
  auto is_opening = [](const std::string& t) {
    return t == "(" || t == "[" || t == "{";
  };
  std::string out;
  bool glue_next = false;
  for (int i = begin; i < end; ++i) {
    const SurfaceToken& tok = tokens[i];
    bool glue = glue_next || (!tok.is_word && !is_opening(tok.text));
    if (!out.empty() && !glue) out += ' ';
    out += tok.text;
    glue_next = !tok.is_word && is_opening(tok.text);
  }
  return out;
}

std::vector<std::string> span_words(const Sentence& sentence,
                                    const ClauseSpan& span) {
  std::vector<std::string> words;
  for (int i = span.begin; i < span.end; ++i) {
    const SurfaceToken& tok = sentence.tokens[i];
    if (tok.is_word) words.push_back(ascii_lower(tok.text));
  }
  return words;
}

}  // namespace

std::vector<int> match_keywords(const Sentence& sentence,
                                const std::vector<Keyword>& keywords) {
  return match_in_words(sentence.lowercased_words(), keywords);
}

double rank1(const std::vector<double>& scores) {
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum;
}

double rank2(const std::vector<double>& scores) {
  double sum = 0.0;
  for (double s : scores) sum += std::exp2(s);
  return sum;
}

std::vector<RankedSentence> rank_sentences(
    const std::vector<Sentence>& sentences,
    const std::vector<Keyword>& keywords) {
  std::vector<RankedSentence> ranked;
  ranked.reserve(sentences.size());
  for (const Sentence& sentence : sentences) {
    RankedSentence rs;
    rs.sentence = sentence;
    rs.matched = match_keywords(sentence, keywords);
    std::vector<double> scores = scores_of(rs.matched, keywords);
    rs.rank1 = rank1(scores);
    rs.rank2 = rank2(scores);
    ranked.push_back(std::move(rs));
  }
  return ranked;
}

std::vector<RankedSentence> select_central_sentences(
    const std::vector<Sentence>& sentences,
    const std::vector<Keyword>& keywords, int k) {
  std::vector<RankedSentence> ranked = rank_sentences(sentences, keywords);
  ranked.erase(std::remove_if(ranked.begin(), ranked.end(),
                              [](const RankedSentence& rs) {
                                return rs.sentence.word_count() >
                                       kMaxCandidateWords;
                              }),
               ranked.end());
  std::stable_sort(
      ranked.begin(), ranked.end(),
      [](const RankedSentence& a, const RankedSentence& b) {
        double ra = round_significant(a.rank2, 12);
        double rb = round_significant(b.rank2, 12);
        if (ra != rb) return ra > rb;
        int wa = a.sentence.word_count();
        int wb = b.sentence.word_count();
        if (wa != wb) return wa < wb;
        return a.sentence.index < b.sentence.index;
      });
  if (k >= 0 && static_cast<int>(ranked.size()) > k) ranked.resize(k);
  return ranked;
}

Sentence reduce_clauses(const Sentence& sentence,
                        const std::vector<Keyword>& keywords) {
  const std::vector<ClauseSpan>& clauses = sentence.clauses;

  std::vector<int> keep;
  if (clauses.size() <= 2) {
    for (size_t i = 0; i < clauses.size(); ++i) keep.push_back(static_cast<int>(i));
  } else {
    std::vector<std::pair<double, int>> scored;  // (rank2, clause index)
    for (size_t i = 0; i < clauses.size(); ++i) {
      std::vector<int> matched =
          match_in_words(span_words(sentence, clauses[i]), keywords);
      double r2 = rank2(scores_of(matched, keywords));
      scored.emplace_back(round_significant(r2, 12), static_cast<int>(i));
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) {
                       if (a.first != b.first) return a.first > b.first;
                       return a.second < b.second;
                     });
    keep.push_back(scored[0].second);
    keep.push_back(scored[1].second);
    std::sort(keep.begin(), keep.end());
  }

  std::string text;
  for (int idx : keep) {
    std::string part =
        render_tokens(sentence.tokens, clauses[idx].begin, clauses[idx].end);
    if (part.empty()) continue;
    if (!text.empty()) text += ' ';
    text += part;
  }
  return make_sentence(sentence.index, text);
}

FilterResult sentence_filters(const DependencyTree& tree) {
  auto is_be = [](const std::string& form) {
    std::string lower = ascii_lower(form);
    return lower == "am" || lower == "is" || lower == "are";
  };

  for (const DepNode& node : tree.nodes()) {
    if ((node.deprel == "nsubj" || node.deprel == "nsubjpass") &&
        node.upos == "PRON") {
      return {false, "pronoun subject: " + node.form};
    }
  }
  const DepNode& root = tree.node(tree.root_id());
  if (is_be(root.form)) {
    return {false, "be-verb predicate: " + root.form};
  }
  for (int child : tree.children_of(tree.root_id())) {
    const DepNode& node = tree.node(child);
    if (node.deprel == "cop" && is_be(node.form)) {
      return {false, "be-verb predicate: " + node.form};
    }
  }
  return {true, ""};
}

}  // namespace dtatg
