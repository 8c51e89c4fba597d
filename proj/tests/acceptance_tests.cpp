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

// Acceptance gate. Runs one numbered criterion (or all of them without
// an argument) and prints exactly one PASS/FAIL line per criterion.
// Exit status 0 means every requested criterion passed.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "dtatg/corpus.hpp"
#include "dtatg/deptree.hpp"
#include "dtatg/dtcm.hpp"
#include "dtatg/errors.hpp"
#include "dtatg/evaluator.hpp"
#include "dtatg/pipeline.hpp"
#include "dtatg/rake.hpp"
#include "dtatg/ranker.hpp"
#include "dtatg/segmenter.hpp"
#include "dtatg/text.hpp"
#include "dtatg/titletest.hpp"
#include "support/oracles.hpp"

namespace {

using namespace dtatg;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

DependencyTree load_tree(const std::string& name) {
  auto trees = parse_conllu(read_file(testing::testdata(name)));
  if (trees.size() != 1) {
    fail(ErrorKind::kInternal, "fixture " + name + " must hold one tree");
  }
  return trees[0];
}

CompressionResult with_mask(const DependencyTree& tree,
                            const std::vector<int>& ids, int effective_root) {
  CompressionResult r;
  r.tree = tree;
  r.kept.assign(tree.size() + 1, false);
  for (int id : ids) r.kept[id] = true;
  r.effective_root = effective_root;
  r.word_total = tree.word_count();
  r.rate = static_cast<double>(r.kept_words()) / r.word_total;
  r.passes = 1;
  return r;
}

std::vector<Keyword> single_word_keywords(
    const std::unordered_set<std::string>& members) {
  std::vector<Keyword> keywords;
  for (const std::string& w : members) {
    Keyword kw;
    kw.phrase = {w};
    kw.score = 1.0;
    kw.member_words = {w};
    keywords.push_back(std::move(kw));
  }
  return keywords;
}

// The compressed-title golden: pruning the cached parse of the deficit
// sentence reproduces the known title and rate exactly, under a second.
Outcome criterion_1() {
  auto start = std::chrono::steady_clock::now();
  DependencyTree tree = load_tree("trees/market_deficit_full.conllu");
  CompressionResult r = prune(tree, {});
  std::string title = render_title(r.tree, r.kept);
  double elapsed = seconds_since(start);

  const std::string expected = "Market concerns about deficit hit greenback";
  if (title != expected) {
    return {false, "title was '" + title + "'"};
  }
  if (r.rate != 6.0 / 9.0) {
    return {false, "rate was " + std::to_string(r.rate) + ", want 6/9 exact"};
  }
  if (elapsed >= 1.0) {
    return {false, "took " + std::to_string(elapsed) + "s, limit 1s"};
  }
  std::ostringstream detail;
  detail << "'" << title << "', rate 6/9, " << elapsed << "s";
  return {true, detail.str()};
}

// Rank arithmetic: the amplified rank must invert the plain-sum order
// on the documented score sets, exactly at 12 significant digits.
Outcome criterion_2() {
  auto r = [](double v) { return round_significant(v, 12); };
  struct Check {
    const char* label;
    bool ok;
  };
  const double r1_45 = r(rank1({4, 5}));
  const double r1_2233 = r(rank1({2, 2, 3, 3}));
  const double r2_45 = r(rank2({4, 5}));
  const double r2_2233 = r(rank2({2, 2, 3, 3}));
  const double r2_444 = r(rank2({4, 4, 4}));
  const double r2_1444 = r(rank2({1, 4, 4, 4}));
  const Check checks[] = {
      {"rank1(4,5)=9", r1_45 == 9.0},
      {"rank1(2,2,3,3)=10", r1_2233 == 10.0},
      {"rank1 order", r1_45 < r1_2233},
      {"rank2(4,5)=48", r2_45 == 48.0},
      {"rank2(2,2,3,3)=24", r2_2233 == 24.0},
      {"rank2 inverts", r2_45 > r2_2233},
      {"rank2(4,4,4) ties 48", r2_444 == r2_45},
      {"rank2(1,4,4,4)=50", r2_1444 == 50.0},
      {"50 beats 48", r2_1444 > r2_45},
  };
  for (const Check& c : checks) {
    if (!c.ok) return {false, std::string("failed: ") + c.label};
  }
  return {true, "9<10 under rank1, 48>24 under rank2, tie 48, 50>48"};
}

// Sentence selection on the junk-mail article: the amplified and plain
// ranks pick the two documented sentences.
Outcome criterion_3() {
  std::string body =
      read_file(testing::testdata("articles/spam_junkmail.txt"));
  auto stopwords = load_stopwords(testing::testdata("stopwords_spam.txt"));
  std::vector<Sentence> sentences = split_sentences(body);
  std::vector<Keyword> keywords =
      extract_keywords(sentences, stopwords, {WordMetric::kFreq, {}});
  std::vector<RankedSentence> ranked = rank_sentences(sentences, keywords);

  const RankedSentence* best1 = nullptr;
  const RankedSentence* best2 = nullptr;
  for (const RankedSentence& rs : ranked) {
    if (rs.sentence.word_count() > kMaxCandidateWords) continue;
    if (!best1 || rs.rank1 > best1->rank1) best1 = &rs;
    if (!best2 || rs.rank2 > best2->rank2) best2 = &rs;
  }
  if (!best1 || !best2) return {false, "no rankable sentence"};

  const std::string want2 =
      "One in ten users have bought products advertised in junk mail";
  const std::string want1 =
      "People must resist their basic instincts to buy from spam mails";
  std::string got2 = normalize_whitespace(best2->sentence.text);
  std::string got1 = normalize_whitespace(best1->sentence.text);
  if (got2 != want2) {
    return {false, "amplified-rank winner was '" + got2 + "'"};
  }
  if (got1 != want1) {
    return {false, "plain-rank winner was '" + got1 + "'"};
  }
  return {true, "both documented winners selected"};
}

// F1 against a brute-force counter: fixed cases exact to 1e-12 and a
// thousand random pairs with zero tolerance violations.
Outcome criterion_4() {
  auto close = [](double a, double b) { return std::fabs(a - b) <= 1e-12; };

  EvalResult same = f1_score("market concerns deficit",
                             "market concerns deficit");
  if (!close(same.f1, 1.0)) return {false, "identical titles not 1.0"};
  EvalResult none = f1_score("alpha beta", "gamma delta");
  if (none.f1 != 0.0) return {false, "disjoint titles not 0.0"};

  EvalResult hand = f1_score("a b c d x y z", "a b c d e");
  if (!close(hand.precision, 4.0 / 7.0) || !close(hand.recall, 4.0 / 5.0) ||
      !close(hand.f1, 2.0 / 3.0)) {
    return {false, "hand case off: p=" + std::to_string(hand.precision) +
                       " r=" + std::to_string(hand.recall) +
                       " f1=" + std::to_string(hand.f1)};
  }

  const std::vector<std::string> vocab = {"alpha", "beta",  "gamma", "delta",
                                          "cup",   "title", "win",   ","};
  std::mt19937 rng(1912);
  for (int trial = 0; trial < 1000; ++trial) {
    auto make = [&]() {
      std::string s;
      int n = 1 + static_cast<int>(rng() % 7);
      for (int i = 0; i < n; ++i) {
        if (!s.empty()) s += ' ';
        s += vocab[rng() % vocab.size()];
      }
      return s + " cup";  // guarantee at least one word token
    };
    std::string a = make();
    std::string b = make();
    EvalResult got = f1_score(a, b);
    testing::OracleF1 want = testing::oracle_f1(a, b);
    if (!close(got.precision, want.precision) ||
        !close(got.recall, want.recall) || !close(got.f1, want.f1)) {
      return {false, "mismatch on '" + a + "' vs '" + b + "'"};
    }
  }
  return {true, "fixed cases and 1000 random pairs within 1e-12"};
}

// Pruning safety properties on randomized trees, plus confluence
// against the exhaustive removal oracle on small trees.
Outcome criterion_5() {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 10000; ++trial) {
    DependencyTree tree = testing::random_tree(rng, 12);
    std::unordered_set<std::string> members;
    for (int id = 1; id <= tree.size(); ++id) {
      if (rng() % 4 == 0) members.insert("w" + std::to_string(id));
    }
    CompressionResult r = prune(tree, single_word_keywords(members));

    if (!r.kept[tree.root_id()]) {
      return {false, "root removed in trial " + std::to_string(trial)};
    }
    std::vector<bool> has_kept_child(tree.size() + 1, false);
    for (int id = 1; id <= tree.size(); ++id) {
      if (r.kept[id] && tree.node(id).head != 0) {
        has_kept_child[tree.node(id).head] = true;
      }
    }
    for (int id = 1; id <= tree.size(); ++id) {
      const DepNode& node = tree.node(id);
      bool member = members.count(ascii_lower(node.form)) ||
                    members.count(ascii_lower(node.lemma));
      if (member && !tree.is_punct(id) && !r.kept[id]) {
        return {false, "keyword word dropped in trial " +
                           std::to_string(trial)};
      }
      // Fixpoint: no removable leaf is left behind.
      if (r.kept[id] && id != tree.root_id() && !has_kept_child[id] &&
          (tree.is_punct(id) || !is_protected(id, tree, members))) {
        return {false,
                "removable leaf survived in trial " + std::to_string(trial)};
      }
    }
  }

  for (int trial = 0; trial < 1000; ++trial) {
    DependencyTree tree = testing::random_tree(rng, 8);
    std::unordered_set<std::string> members;
    for (int id = 1; id <= tree.size(); ++id) {
      if (rng() % 5 == 0) members.insert("w" + std::to_string(id));
    }
    auto terminals = testing::all_terminal_masks(tree, members);
    if (terminals.size() != 1) {
      return {false, "non-confluent removal in trial " +
                         std::to_string(trial)};
    }
    CompressionResult r = prune(tree, single_word_keywords(members));
    std::string got(tree.size(), '0');
    for (int id = 1; id <= tree.size(); ++id) {
      if (r.kept[id]) got[id - 1] = '1';
    }
    if (got != terminals[0]) {
      return {false, "prune disagrees with removal oracle in trial " +
                         std::to_string(trial)};
    }
  }
  return {true, "10000 trees clean, 1000 small trees confluent"};
}

// Corpus evaluation substitute: sampled run is bounded, in range, and
// bit-reproducible; the per-category table goes to stdout for manual
// comparison with the directional claim.
Outcome criterion_6() {
  auto start = std::chrono::steady_clock::now();
  Corpus corpus =
      load_corpus(testing::testdata("bbc_mini"), CorpusLayout::kBbcDirs);
  corpus.stopwords = load_stopwords(testing::testdata("stopwords.txt"));
  PipelineConfig config;
  config.parser.mode = ParserMode::kFixture;
  config.parser.fixture_dir = testing::testdata("bbc_mini_fixtures");

  Report first = evaluate_corpus(corpus, config, 100, 7);
  Report second = evaluate_corpus(corpus, config, 100, 7);
  std::string csv = report_csv(first);
  double elapsed = seconds_since(start);

  std::cout << csv;  // the per-category comparison, for inspection

  if (csv != report_csv(second)) {
    return {false, "two identical runs produced different reports"};
  }
  if (first.categories.size() != 5) {
    return {false, std::to_string(first.categories.size()) +
                       " categories, want 5"};
  }
  int better = 0;
  for (const CategoryMean& m : first.categories) {
    if (m.n <= 0) return {false, "empty category " + m.category};
    if (m.mean_f1_dtatg <= 0.0 || m.mean_f1_dtatg >= 1.0 ||
        m.mean_f1_tfidf <= 0.0 || m.mean_f1_tfidf >= 1.0) {
      return {false, "mean out of (0,1) in " + m.category};
    }
    if (m.mean_f1_dtatg > m.mean_f1_tfidf) ++better;
  }
  if (elapsed >= 300.0) {
    return {false, "took " + std::to_string(elapsed) + "s, limit 300s"};
  }
  std::ostringstream detail;
  detail << "reproducible, means in (0,1), generator ahead in " << better
         << "/5 categories, " << elapsed << "s";
  return {true, detail.str()};
}

// The four published compressed titles pass the structural tests; an
// over-long mask and a pronoun subject fail them.
Outcome criterion_7() {
  struct Golden {
    CompressionResult result;
    std::string expected;
  };
  std::vector<Golden> goldens;

  goldens.push_back({trim_tree(load_tree("trees/blogging.conllu"), {}, {}),
                     "Blogging movement building up for years"});

  Keyword studio;
  studio.phrase = {"japan's", "oldest", "film", "studio"};
  studio.score = 4.0;
  studio.member_words = {"japan's", "oldest", "film", "studio"};
  goldens.push_back(
      {trim_tree(load_tree("trees/daylewis.conllu"), {studio}, {}),
       "Japan's oldest film studio honoured with Day-Lewis"});

  std::vector<Keyword> smoking = single_word_keywords(
      {"comprehensive", "ban", "public", "places", "smoking", "scotland"});
  goldens.push_back({trim_tree(load_tree("trees/smoking.conllu"), smoking, {}),
                     "Comprehensive ban on smoking in public places in "
                     "Scotland"});

  // The fourth selection is not reachable by trimming alone (it keeps
  // an adverb the pruner discards), so its mask is spelled out.
  goldens.push_back(
      {with_mask(load_tree("trees/xbox.conllu"), {5, 7, 8, 9, 10, 11}, 7),
       "Microsoft sold 19.9 million units worldwide"});

  for (const Golden& g : goldens) {
    std::string title = render_title(g.result.tree, g.result.kept);
    if (title != g.expected) {
      return {false, "rendered '" + title + "', want '" + g.expected + "'"};
    }
    if (!conciseness_test(g.result).pass) {
      return {false, "'" + g.expected + "' failed conciseness: " +
                         conciseness_test(g.result).reason};
    }
    if (!fluency_test(g.result).pass) {
      return {false, "'" + g.expected + "' failed fluency: " +
                         fluency_test(g.result).reason};
    }
  }

  // Sixteen kept words must fail.
  std::vector<DepNode> long_nodes;
  long_nodes.push_back(
      testing::node(1, "olympics", "olympics", "NOUN", 0, "root"));
  std::vector<int> all_ids = {1};
  for (int id = 2; id <= 16; ++id) {
    long_nodes.push_back(testing::node(id, "word" + std::to_string(id),
                                       "word" + std::to_string(id), "NOUN", 1,
                                       "compound"));
    all_ids.push_back(id);
  }
  CompressionResult long_mask =
      with_mask(DependencyTree::build(long_nodes), all_ids, 1);
  if (conciseness_test(long_mask).pass) {
    return {false, "a 16-word title passed conciseness"};
  }

  // A pronoun subject must fail.
  DependencyTree pron = DependencyTree::build({
      testing::node(1, "They", "they", "PRON", 2, "nsubj"),
      testing::node(2, "won", "win", "VERB", 0, "root"),
  });
  if (conciseness_test(with_mask(pron, {1, 2}, 2)).pass) {
    return {false, "a pronoun-subject title passed conciseness"};
  }

  return {true, "4 published titles pass, long and pronoun cases fail"};
}

// Keyword word-score table equals the quadratic co-occurrence oracle on
// random short documents, for every metric.
Outcome criterion_8() {
  const std::vector<std::string> vocab = {
      "alpha", "beta", "gamma", "delta", "omega", "stock", "market",
      "rise",  "fall", "rain",  "sun",   "wind"};
  const std::vector<std::string> stopvocab = {"the", "of", "and", "to", "in"};
  const std::vector<std::string> punct = {".", ",", "?", "!"};
  std::unordered_set<std::string> stopwords(stopvocab.begin(),
                                            stopvocab.end());
  std::mt19937 rng(2026);

  for (int doc = 0; doc < 100; ++doc) {
    std::string text;
    int n = static_cast<int>(rng() % 31);
    for (int i = 0; i < n; ++i) {
      int r = static_cast<int>(rng() % 100);
      if (!text.empty()) text += ' ';
      if (r < 55) {
        text += vocab[r % vocab.size()];
      } else if (r < 85) {
        text += stopvocab[r % stopvocab.size()];
      } else {
        text += punct[r % punct.size()];
      }
    }
    for (WordMetric metric :
         {WordMetric::kFreq, WordMetric::kDegree, WordMetric::kRatio}) {
      auto got = score_words(
          extract_candidates(split_sentences(text), stopwords), metric);
      auto want = testing::oracle_word_scores(text, stopwords, metric);
      if (got.size() != want.size()) {
        return {false, "table size mismatch on doc " + std::to_string(doc)};
      }
      for (const auto& [word, score] : want) {
        auto it = got.find(word);
        if (it == got.end() || it->second.freq != score.freq ||
            it->second.deg != score.deg || it->second.score != score.score) {
          return {false,
                  "score of '" + word + "' differs on doc " +
                      std::to_string(doc)};
        }
      }
    }
  }
  return {true, "word score tables exact on 100 random documents x 3 metrics"};
}

Outcome run_criterion(int n) {
  switch (n) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    default: return {false, "unknown criterion"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  if (argc > 1) {
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 8) {
      std::cerr << "usage: acceptance_tests [1..8]\n";
      return 2;
    }
    selected.push_back(n);
  } else {
    for (int n = 1; n <= 8; ++n) selected.push_back(n);
  }

  bool all_pass = true;
  for (int n : selected) {
    Outcome outcome;
    try {
      outcome = run_criterion(n);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": "
              << (outcome.pass ? "PASS" : "FAIL") << " (" << outcome.detail
              << ")\n";
    if (!outcome.pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
