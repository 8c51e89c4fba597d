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
#include <unordered_set>

#include "dtatg/corpus.hpp"
#include "dtatg/dtcm.hpp"
#include "dtatg/parser_client.hpp"
#include "dtatg/rake.hpp"
#include "dtatg/ranker.hpp"
#include "dtatg/segmenter.hpp"
#include "dtatg/titletest.hpp"

namespace dtatg {

struct PipelineConfig {
  std::string stopword_path;
  SegmentOptions segment;
  RakeConfig rake;
  int central_sentences = 3;  // candidates pulled in rank order
  DtcmConfig dtcm;
  int topic_keywords = 5;  // m of the relevance test
  ParserConfig parser;
  bool f1_set_mode = false;  // dedupe tokens before the F1 overlap
  int baseline_words = 6;    // k of the frequency-weight baseline title
  int workers = 1;
};

struct TitleOutput {
  std::string doc_id;
  std::string central_sentence;  // the reduced sentence that was parsed
  std::string title;
  TitleVerdict verdict;
  double rate = 0.0;
  int passes = 0;
  bool fallback_used = false;
};

// Keywords, ranked candidates, clause reduction, parse, candidate
// filters, tree trimming, title test; the first passing candidate wins.
// When none passes, the document's first sentence is trimmed the same
// way (filters skipped) and the best-scoring attempt is reported with
// fallback_used set.
TitleOutput run_pipeline(const Document& doc,
                         const std::unordered_set<std::string>& stopwords,
                         const ParserClient& parser,
                         const PipelineConfig& config);

}  // namespace dtatg
