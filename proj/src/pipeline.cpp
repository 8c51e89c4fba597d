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

#include "dtatg/pipeline.hpp"

#include <utility>

#include "dtatg/errors.hpp"

namespace dtatg {

namespace {

struct Attempt {
  TitleOutput output;
  bool valid = false;
};

// Clause reduction, parse, trim, render, verdict for one sentence.
Attempt try_sentence(const Sentence& sentence,
                     const std::vector<Keyword>& keywords,
                     const ParserClient& parser, const PipelineConfig& config,
                     bool apply_filters) {
  Attempt attempt;
  Sentence reduced = reduce_clauses(sentence, keywords);
  if (reduced.tokens.empty()) return attempt;

  DependencyTree tree = parser.parse(reduced.text);
  if (apply_filters) {
    FilterResult filter = sentence_filters(tree);
    if (!filter.pass) return attempt;
  }

  CompressionResult result = trim_tree(tree, keywords, config.dtcm);
  std::string title = render_title(result.tree, result.kept);

  attempt.valid = true;
  attempt.output.central_sentence = reduced.text;
  attempt.output.title = std::move(title);
  attempt.output.verdict =
      title_test(result, attempt.output.title, keywords, config.topic_keywords);
  attempt.output.rate = result.rate;
  attempt.output.passes = result.passes;
  return attempt;
}

}  // namespace

TitleOutput run_pipeline(const Document& doc,
                         const std::unordered_set<std::string>& stopwords,
                         const ParserClient& parser,
                         const PipelineConfig& config) {
  if (doc.body.empty()) {
    fail(ErrorKind::kInput, "document " + doc.id + " has an empty body");
  }
  std::vector<Sentence> sentences = split_sentences(doc.body, config.segment);
  if (sentences.empty()) {
    fail(ErrorKind::kInput, "document " + doc.id + " has no sentences");
  }

  std::vector<Keyword> keywords =
      extract_keywords(sentences, stopwords, config.rake);
  std::vector<RankedSentence> candidates =
      select_central_sentences(sentences, keywords, config.central_sentences);

  std::vector<Attempt> attempts;
  for (const RankedSentence& candidate : candidates) {
    Attempt attempt = try_sentence(candidate.sentence, keywords, parser,
                                   config, /*apply_filters=*/true);
    if (!attempt.valid) continue;
    if (attempt.output.verdict.overall()) {
      attempt.output.doc_id = doc.id;
      return std::move(attempt.output);
    }
    attempts.push_back(std::move(attempt));
  }

  // Nothing passed: trim the opening sentence (the usual summary spot
  // for documents whose central sentences do not condense well).
  Attempt fallback = try_sentence(sentences.front(), keywords, parser, config,
                                  /*apply_filters=*/false);
  if (fallback.valid) {
    if (fallback.output.verdict.overall()) {
      fallback.output.doc_id = doc.id;
      fallback.output.fallback_used = true;
      return std::move(fallback.output);
    }
    attempts.push_back(std::move(fallback));
  }

  if (attempts.empty()) {
    fail(ErrorKind::kInput,
         "document " + doc.id + " yielded no usable title candidate");
  }

  // Best failing attempt: most sub-tests passed, earliest attempt wins
  // ties (candidates are already in rank order, the fallback last).
  size_t best = 0;
  for (size_t i = 1; i < attempts.size(); ++i) {
    if (attempts[i].output.verdict.passed_count() >
        attempts[best].output.verdict.passed_count()) {
      best = i;
    }
  }
  TitleOutput out = std::move(attempts[best].output);
  out.doc_id = doc.id;
  out.fallback_used = true;
  return out;
}

}  // namespace dtatg
