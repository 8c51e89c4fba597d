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

#include "dtatg/titletest.hpp"

#include <algorithm>

#include "dtatg/segmenter.hpp"
#include "dtatg/text.hpp"

namespace dtatg {

namespace {

// An edge belongs to the trimmed tree when both endpoints survive.
bool kept_edge(const CompressionResult& r, const DepNode& dependent) {
  return r.kept[dependent.id] && dependent.head != 0 &&
         r.kept[dependent.head];
}

bool has_kept_verb(const CompressionResult& r) {
  for (const DepNode& node : r.tree.nodes()) {
    if (r.kept[node.id] && node.upos == "VERB") return true;
  }
  return false;
}

}  // namespace

TestOutcome conciseness_test(const CompressionResult& r) {
  if (r.kept_words() > kMaxTitleTestWords) {
    return {false, "longer than " + std::to_string(kMaxTitleTestWords) +
                       " words (" + std::to_string(r.kept_words()) + ")"};
  }
  if (r.effective_root == 0 || !r.kept[r.effective_root]) {
    return {false, "head of the title was trimmed away"};
  }
  for (const DepNode& node : r.tree.nodes()) {
    if (!kept_edge(r, node)) continue;
    if (node.deprel == "ccomp" || node.deprel == "advcl" ||
        node.deprel == "acl" || node.deprel == "acl:relcl") {
      return {false, "contains a clause (" + node.deprel + " at '" +
                         node.form + "')"};
    }
    if (node.deprel == "conj" && node.upos == "VERB" &&
        r.tree.node(node.head).upos == "VERB") {
      return {false, "coordinates two verbs ('" +
                         r.tree.node(node.head).form + "' and '" + node.form +
                         "')"};
    }
  }
  if (has_kept_verb(r)) {
    bool nominal_subject = false;
    bool pronoun_subject = false;
    for (const DepNode& node : r.tree.nodes()) {
      if (!kept_edge(r, node)) continue;
      if (node.deprel != "nsubj" && node.deprel != "nsubjpass") continue;
      if (node.upos == "NOUN" || node.upos == "PROPN") {
        nominal_subject = true;
      } else if (node.upos == "PRON") {
        pronoun_subject = true;
      }
    }
    if (!nominal_subject) {
      if (pronoun_subject) {
        return {false, "subject is a pronoun"};
      }
      return {false, "verbal title lacks a noun subject"};
    }
  }
  return {true, ""};
}

TestOutcome fluency_test(const CompressionResult& r) {
  const int root = r.effective_root;
  if (root == 0 || !r.kept[root]) {
    return {false, "head of the title was trimmed away"};
  }
  for (const DepNode& node : r.tree.nodes()) {
    if (!r.kept[node.id] || node.id == root) continue;
    int p = node.head;
    while (p != 0 && p != root && r.kept[p]) p = r.tree.node(p).head;
    if (p == 0 || !r.kept[p]) {
      return {false, "'" + node.form + "' is disconnected from the title head"};
    }
  }
  for (const DepNode& node : r.tree.nodes()) {
    if (!r.kept[node.id] || node.deprel != "case") continue;
    if (node.head == 0 || !r.kept[node.head]) {
      return {false, "preposition '" + node.form + "' lost its noun"};
    }
  }
  if (r.tree.node(root).upos == "VERB") {
    bool has_subject = false;
    for (const DepNode& node : r.tree.nodes()) {
      if (!kept_edge(r, node)) continue;
      if (node.deprel == "nsubj" || node.deprel == "nsubjpass") {
        has_subject = true;
        break;
      }
    }
    if (!has_subject) {
      return {false, "verbal title lacks a subject"};
    }
  }
  return {true, ""};
}

TestOutcome topic_relevance_test(const std::string& title,
                                 const std::vector<Keyword>& keywords,
                                 int m) {
  std::vector<const Keyword*> top;
  top.reserve(keywords.size());
  for (const Keyword& kw : keywords) top.push_back(&kw);
  std::stable_sort(top.begin(), top.end(),
                   [](const Keyword* a, const Keyword* b) {
                     if (a->score != b->score) return a->score > b->score;
                     return a->first_position < b->first_position;
                   });
  if (static_cast<int>(top.size()) > m) top.resize(m);

  for (const SurfaceToken& token : tokenize(title)) {
    if (!token.is_word) continue;
    std::string word = ascii_lower(token.text);
    for (const Keyword* kw : top) {
      if (kw->member_words.count(word)) return {true, ""};
    }
  }
  return {false, "shares no word with the top " + std::to_string(m) +
                     " keywords"};
}

TitleVerdict title_test(const CompressionResult& result,
                        const std::string& title,
                        const std::vector<Keyword>& keywords, int m) {
  TitleVerdict verdict;
  verdict.concise = conciseness_test(result);
  verdict.fluent = fluency_test(result);
  verdict.relevant = topic_relevance_test(title, keywords, m);
  return verdict;
}

}  // namespace dtatg
