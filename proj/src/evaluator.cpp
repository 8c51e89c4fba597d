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

#include "dtatg/evaluator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dtatg/errors.hpp"
#include "dtatg/segmenter.hpp"
#include "dtatg/text.hpp"

namespace dtatg {

namespace {

std::vector<std::string> title_tokens(const std::string& title) {
  std::vector<std::string> words;
  for (const SurfaceToken& token : tokenize(title)) {
    if (token.is_word) words.push_back(ascii_lower(token.text));
  }
  return words;
}

std::unordered_map<std::string, int> count_tokens(
    const std::vector<std::string>& words, bool set_mode) {
  std::unordered_map<std::string, int> counts;
  for (const std::string& w : words) {
    int& c = counts[w];
    c = set_mode ? 1 : c + 1;
  }
  return counts;
}

std::string format_mean(double value) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << value;
  return out.str();
}

}  // namespace

EvalResult f1_score(const std::string& generated, const std::string& reference,
                    bool set_mode) {
  std::vector<std::string> t1 = title_tokens(generated);
  std::vector<std::string> t2 = title_tokens(reference);
  if (t1.empty() || t2.empty()) {
    fail(ErrorKind::kInput, "cannot score an empty title");
  }
  std::unordered_map<std::string, int> c1 = count_tokens(t1, set_mode);
  std::unordered_map<std::string, int> c2 = count_tokens(t2, set_mode);

  int overlap = 0;
  for (const auto& [word, n1] : c1) {
    auto it = c2.find(word);
    if (it != c2.end()) overlap += std::min(n1, it->second);
  }
  int len1 = 0;
  for (const auto& [word, n] : c1) len1 += n;
  int len2 = 0;
  for (const auto& [word, n] : c2) len2 += n;

  EvalResult result;
  result.precision = static_cast<double>(overlap) / len1;
  result.recall = static_cast<double>(overlap) / len2;
  if (result.precision + result.recall > 0.0) {
    result.f1 = 2.0 * result.precision * result.recall /
                (result.precision + result.recall);
  }
  return result;
}

TfidfIndex::TfidfIndex(const Corpus& corpus)
    : corpus_size_(static_cast<int>(corpus.documents.size())) {
  for (const Document& doc : corpus.documents) {
    std::unordered_set<std::string> seen;
    for (const SurfaceToken& token : tokenize(doc.body)) {
      if (!token.is_word) continue;
      seen.insert(ascii_lower(token.text));
    }
    for (const std::string& word : seen) df_[word] += 1;
  }
}

int TfidfIndex::df(const std::string& word) const {
  auto it = df_.find(word);
  return it == df_.end() ? 0 : it->second;
}

std::string tfidf_title(const Document& doc, const TfidfIndex& index,
                        const std::unordered_set<std::string>& stopwords,
                        int k) {
  if (index.corpus_size() < 2) {
    fail(ErrorKind::kConfig,
         "inverse document frequency needs a corpus of at least 2 documents");
  }

  struct Entry {
    std::string word;
    int tf = 0;
    int first = 0;
    double weight = 0.0;
  };
  std::vector<Entry> entries;
  std::unordered_map<std::string, size_t> slot;
  int position = 0;
  for (const SurfaceToken& token : tokenize(doc.body)) {
    if (!token.is_word) continue;
    std::string word = ascii_lower(token.text);
    ++position;
    if (stopwords.count(word)) continue;
    auto it = slot.find(word);
    if (it == slot.end()) {
      slot.emplace(word, entries.size());
      entries.push_back({word, 1, position, 0.0});
    } else {
      entries[it->second].tf += 1;
    }
  }
  if (entries.empty()) {
    fail(ErrorKind::kInput, "document " + doc.id + " has no scorable words");
  }

  const double n_docs = index.corpus_size();
  for (Entry& e : entries) {
    int df = std::max(1, index.df(e.word));
    e.weight = e.tf * std::log(n_docs / df);
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     if (a.weight != b.weight) return a.weight > b.weight;
                     if (a.tf != b.tf) return a.tf > b.tf;
                     return a.first < b.first;
                   });
  if (static_cast<int>(entries.size()) > k) entries.resize(k);
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });

  std::string title;
  for (const Entry& e : entries) {
    if (!title.empty()) title += ' ';
    title += e.word;
  }
  return title;
}

std::vector<int> sample_indices(int n, int k, unsigned seed) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (k >= n) return idx;

  std::mt19937 rng(seed);
  // uniform_int_distribution is implementation-defined; a rejection
  // loop keeps the draw identical everywhere.
  auto bounded = [&rng](uint32_t bound) -> uint32_t {
    const uint32_t span = 0xffffffffu - 0xffffffffu % bound;
    uint32_t x = rng();
    while (x >= span) x = rng();
    return x % bound;
  };
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(bounded(static_cast<uint32_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

Report evaluate_corpus(const Corpus& corpus, const PipelineConfig& config,
                       std::optional<int> sample, unsigned seed) {
  Report report;
  const int total = static_cast<int>(corpus.documents.size());
  std::vector<int> chosen;
  if (sample) {
    if (*sample <= 0) return report;
    chosen = sample_indices(total, *sample, seed);
  } else {
    chosen.resize(total);
    std::iota(chosen.begin(), chosen.end(), 0);
  }
  if (chosen.empty()) return report;

  TfidfIndex index(corpus);
  ParserClient parser(config.parser);

  report.rows.resize(chosen.size());
  auto evaluate_one = [&](size_t slot) {
    const Document& doc = corpus.documents[chosen[slot]];
    DocRow row;
    row.id = doc.id;
    row.category = doc.category;
    row.reference_title = doc.reference_title.value_or("");
    try {
      if (!doc.reference_title) {
        fail(ErrorKind::kInput, "no reference title to score against");
      }
      TitleOutput output = run_pipeline(doc, corpus.stopwords, parser, config);
      row.generated_title = output.title;
      row.verdict = output.verdict;
      row.rate = output.rate;
      row.passes = output.passes;
      row.fallback_used = output.fallback_used;
      row.baseline_title =
          tfidf_title(doc, index, corpus.stopwords, config.baseline_words);
      row.f1_dtatg =
          f1_score(row.generated_title, *doc.reference_title, config.f1_set_mode)
              .f1;
      row.f1_tfidf =
          f1_score(row.baseline_title, *doc.reference_title, config.f1_set_mode)
              .f1;
    } catch (const Error& e) {
      row.skipped = true;
      row.skip_reason = e.what();
    }
    report.rows[slot] = std::move(row);
  };

  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    for (size_t i = 0; i < chosen.size(); ++i) evaluate_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= chosen.size()) break;
          evaluate_one(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  std::map<std::string, CategoryMean> means;
  for (const DocRow& row : report.rows) {
    if (row.skipped) continue;
    CategoryMean& m = means[row.category];
    m.category = row.category;
    m.n += 1;
    m.mean_f1_dtatg += row.f1_dtatg;
    m.mean_f1_tfidf += row.f1_tfidf;
  }
  for (auto& [category, m] : means) {
    if (m.n > 0) {
      m.mean_f1_dtatg /= m.n;
      m.mean_f1_tfidf /= m.n;
    }
    report.categories.push_back(m);
  }
  return report;
}

std::string report_csv(const Report& report) {
  std::string out = "category,n,mean_f1_dtatg,mean_f1_tfidf\n";
  for (const CategoryMean& m : report.categories) {
    out += m.category;
    out += ',';
    out += std::to_string(m.n);
    out += ',';
    out += format_mean(m.mean_f1_dtatg);
    out += ',';
    out += format_mean(m.mean_f1_tfidf);
    out += '\n';
  }
  return out;
}

std::string report_jsonl(const Report& report) {
  std::string out;
  for (const DocRow& row : report.rows) {
    nlohmann::json j;
    j["id"] = row.id;
    j["category"] = row.category;
    j["skipped"] = row.skipped;
    if (row.skipped) {
      j["skip_reason"] = row.skip_reason;
    } else {
      j["generated_title"] = row.generated_title;
      j["baseline_title"] = row.baseline_title;
      j["reference_title"] = row.reference_title;
      j["f1_dtatg"] = row.f1_dtatg;
      j["f1_tfidf"] = row.f1_tfidf;
      j["rate"] = row.rate;
      j["passes"] = row.passes;
      j["fallback_used"] = row.fallback_used;
      j["verdict"] = {
          {"overall", row.verdict.overall()},
          {"concise", row.verdict.concise.pass},
          {"concise_reason", row.verdict.concise.reason},
          {"fluent", row.verdict.fluent.pass},
          {"fluent_reason", row.verdict.fluent.reason},
          {"relevant", row.verdict.relevant.pass},
          {"relevant_reason", row.verdict.relevant.reason},
      };
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace dtatg
