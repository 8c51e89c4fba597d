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
#include <vector>

#include "dtatg/corpus.hpp"
#include "dtatg/pipeline.hpp"
#include "dtatg/titletest.hpp"

namespace dtatg {

struct EvalResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Overlap of lowercased word tokens (punctuation dropped, stopwords
// kept). Multiset counting by default; set_mode dedupes first.
EvalResult f1_score(const std::string& generated, const std::string& reference,
                    bool set_mode = false);

// Document-frequency index over a corpus for the baseline titles.
class TfidfIndex {
 public:
  TfidfIndex(const Corpus& corpus);

  int corpus_size() const { return corpus_size_; }
  int df(const std::string& word) const;

 private:
  std::unordered_map<std::string, int> df_;
  int corpus_size_ = 0;
};

// Baseline title: the k heaviest tf-idf words of the document, emitted
// in order of first occurrence. Requires a corpus of at least two
// documents for meaningful document frequencies.
std::string tfidf_title(const Document& doc, const TfidfIndex& index,
                        const std::unordered_set<std::string>& stopwords,
                        int k = 6);

struct DocRow {
  std::string id;
  std::string category;
  std::string generated_title;
  std::string baseline_title;
  std::string reference_title;
  TitleVerdict verdict;
  double f1_dtatg = 0.0;
  double f1_tfidf = 0.0;
  double rate = 0.0;
  int passes = 0;
  bool fallback_used = false;
  bool skipped = false;
  std::string skip_reason;
};

struct CategoryMean {
  std::string category;
  int n = 0;  // documents that produced both scores
  double mean_f1_dtatg = 0.0;
  double mean_f1_tfidf = 0.0;
};

struct Report {
  std::vector<DocRow> rows;
  std::vector<CategoryMean> categories;
};

// Runs the title pipeline and the baseline over the corpus (or a seeded
// sample of it) and aggregates per-category means. Parser failures skip
// the document, they do not abort the run.
Report evaluate_corpus(const Corpus& corpus, const PipelineConfig& config,
                       std::optional<int> sample, unsigned seed);

std::string report_csv(const Report& report);
std::string report_jsonl(const Report& report);

// Seeded k-of-n index sample, uniform and platform-independent;
// returned ascending.
std::vector<int> sample_indices(int n, int k, unsigned seed);

}  // namespace dtatg
