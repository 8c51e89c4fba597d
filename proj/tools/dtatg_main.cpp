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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtatg/corpus.hpp"
#include "dtatg/dtcm.hpp"
#include "dtatg/errors.hpp"
#include "dtatg/evaluator.hpp"
#include "dtatg/parser_client.hpp"
#include "dtatg/pipeline.hpp"
#include "dtatg/rake.hpp"
#include "dtatg/ranker.hpp"
#include "dtatg/segmenter.hpp"
#include "dtatg/text.hpp"
#include "dtatg/titletest.hpp"

namespace {

using dtatg::Error;
using dtatg::ErrorKind;

struct Options {
  std::string stopwords;
  std::string parser_spec;
  std::string metric = "ratio";
  int top = 0;  // 0 = default cut
  int central = 3;
  int max_title_words = 10;
  int topic_keywords = 5;
  bool rate_trigger = false;
  bool no_rule_adverbials = false;
  bool no_rule_say = false;
  bool no_rule_conjunct = false;
  bool no_rule_that = false;
  bool no_rule_nmod = false;
  double timeout = 30.0;
  int pool = 1;
  int workers = 1;
  int baseline_words = 6;
  bool f1_set_mode = false;
  std::vector<std::string> abbreviations;
};

dtatg::ParserConfig parse_parser_spec(const Options& opts) {
  dtatg::ParserConfig config;
  config.timeout_seconds = opts.timeout;
  config.pool_size = opts.pool;
  const std::string& spec = opts.parser_spec;
  if (spec.empty()) {
    config.mode = dtatg::ParserMode::kFixture;  // DTATG_FIXTURE_DIR may fill it
  } else if (spec.rfind("fixture:", 0) == 0) {
    config.mode = dtatg::ParserMode::kFixture;
    config.fixture_dir = spec.substr(8);
  } else if (spec.rfind("cmd:", 0) == 0) {
    config.mode = dtatg::ParserMode::kCommand;
    config.command = spec.substr(4);
  } else {
    dtatg::fail(ErrorKind::kConfig,
                "parser spec must be fixture:DIR or cmd:COMMAND, got: " + spec);
  }
  return config;
}

dtatg::PipelineConfig make_config(const Options& opts) {
  dtatg::PipelineConfig config;
  config.stopword_path = opts.stopwords;
  config.segment.abbreviations.insert(opts.abbreviations.begin(),
                                      opts.abbreviations.end());
  if (opts.metric == "freq") {
    config.rake.metric = dtatg::WordMetric::kFreq;
  } else if (opts.metric == "degree") {
    config.rake.metric = dtatg::WordMetric::kDegree;
  } else {
    config.rake.metric = dtatg::WordMetric::kRatio;
  }
  if (opts.top > 0) config.rake.top_count = opts.top;
  config.central_sentences = opts.central;
  config.dtcm.max_title_words = opts.max_title_words;
  config.dtcm.rate_trigger = opts.rate_trigger;
  config.dtcm.rule_edge_adverbials = !opts.no_rule_adverbials;
  config.dtcm.rule_say_root = !opts.no_rule_say;
  config.dtcm.rule_and_conjunct = !opts.no_rule_conjunct;
  config.dtcm.rule_that_clause = !opts.no_rule_that;
  config.dtcm.rule_stacked_nmod = !opts.no_rule_nmod;
  config.topic_keywords = opts.topic_keywords;
  config.parser = parse_parser_spec(opts);
  config.f1_set_mode = opts.f1_set_mode;
  config.baseline_words = opts.baseline_words;
  config.workers = opts.workers;
  return config;
}

std::unordered_set<std::string> resolve_stopwords(const Options& opts) {
  if (opts.stopwords.empty()) return dtatg::default_stopwords();
  return dtatg::load_stopwords(opts.stopwords);
}

std::string read_input(const std::string& in_path) {
  if (!in_path.empty()) return dtatg::read_file(in_path);
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

nlohmann::json verdict_json(const dtatg::TitleVerdict& verdict) {
  return {
      {"overall", verdict.overall()},
      {"concise", verdict.concise.pass},
      {"concise_reason", verdict.concise.reason},
      {"fluent", verdict.fluent.pass},
      {"fluent_reason", verdict.fluent.reason},
      {"relevant", verdict.relevant.pass},
      {"relevant_reason", verdict.relevant.reason},
  };
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  dtatg::write_file(path, content);
}

int run_title(const Options& opts, const std::string& in_path,
              const std::string& corpus_dir, const std::string& jsonl_path) {
  dtatg::PipelineConfig config = make_config(opts);
  std::unordered_set<std::string> stopwords = resolve_stopwords(opts);
  dtatg::ParserClient parser(config.parser);

  std::string jsonl;
  if (!corpus_dir.empty()) {
    dtatg::Corpus corpus =
        dtatg::load_corpus(corpus_dir, dtatg::CorpusLayout::kBbcDirs);
    corpus.stopwords = stopwords;
    for (const dtatg::Document& doc : corpus.documents) {
      nlohmann::json j;
      j["id"] = doc.id;
      j["category"] = doc.category;
      try {
        dtatg::TitleOutput out =
            dtatg::run_pipeline(doc, stopwords, parser, config);
        std::cout << doc.id << '\t' << out.title << '\n';
        j["generated_title"] = out.title;
        j["reference_title"] = doc.reference_title.value_or("");
        j["fallback_used"] = out.fallback_used;
        j["verdict"] = verdict_json(out.verdict);
        if (doc.reference_title) {
          j["f1"] =
              dtatg::f1_score(out.title, *doc.reference_title, opts.f1_set_mode)
                  .f1;
        }
      } catch (const Error& e) {
        dtatg::warn(std::string("skipping ") + doc.id + ": " + e.what());
        j["skipped"] = true;
        j["skip_reason"] = e.what();
      }
      jsonl += j.dump();
      jsonl += '\n';
    }
  } else {
    dtatg::Document doc;
    doc.id = in_path.empty() ? "stdin" : in_path;
    doc.body = read_input(in_path);
    dtatg::TitleOutput out = dtatg::run_pipeline(doc, stopwords, parser, config);
    std::cout << out.title << '\n';
    nlohmann::json j;
    j["id"] = doc.id;
    j["generated_title"] = out.title;
    j["central_sentence"] = out.central_sentence;
    j["fallback_used"] = out.fallback_used;
    j["rate"] = out.rate;
    j["passes"] = out.passes;
    j["verdict"] = verdict_json(out.verdict);
    jsonl = j.dump() + "\n";
  }
  if (!jsonl_path.empty()) write_text(jsonl_path, jsonl);
  return 0;
}

int run_keywords(const Options& opts, const std::string& in_path,
                 bool ranking) {
  dtatg::PipelineConfig config = make_config(opts);
  std::unordered_set<std::string> stopwords = resolve_stopwords(opts);
  std::vector<dtatg::Sentence> sentences =
      dtatg::split_sentences(read_input(in_path), config.segment);
  std::vector<dtatg::Keyword> keywords =
      dtatg::extract_keywords(sentences, stopwords, config.rake);

  if (ranking) {
    std::cout << "index\trank1\trank2\twords\n";
    for (const dtatg::RankedSentence& rs :
         dtatg::rank_sentences(sentences, keywords)) {
      std::cout << rs.sentence.index << '\t' << format_double(rs.rank1) << '\t'
                << format_double(rs.rank2) << '\t' << rs.sentence.word_count()
                << '\n';
    }
    return 0;
  }
  std::cout << "phrase\tscore\tfreq\n";
  for (const dtatg::Keyword& kw : keywords) {
    std::cout << kw.joined() << '\t' << format_double(kw.score) << '\t'
              << kw.occurrences << '\n';
  }
  return 0;
}

int run_tree(const Options& opts, const std::string& in_path, int candidate) {
  dtatg::PipelineConfig config = make_config(opts);
  std::unordered_set<std::string> stopwords = resolve_stopwords(opts);
  dtatg::ParserClient parser(config.parser);

  std::vector<dtatg::Sentence> sentences =
      dtatg::split_sentences(read_input(in_path), config.segment);
  if (sentences.empty()) {
    dtatg::fail(ErrorKind::kInput, "no sentences in input");
  }
  std::vector<dtatg::Keyword> keywords =
      dtatg::extract_keywords(sentences, stopwords, config.rake);
  std::vector<dtatg::RankedSentence> candidates =
      dtatg::select_central_sentences(sentences, keywords,
                                      config.central_sentences);

  dtatg::Sentence chosen;
  if (candidates.empty()) {
    chosen = sentences.front();
  } else {
    int idx = std::max(1, candidate) - 1;
    if (idx >= static_cast<int>(candidates.size())) {
      dtatg::fail(ErrorKind::kInput,
                  "only " + std::to_string(candidates.size()) +
                      " candidates available");
    }
    chosen = candidates[idx].sentence;
  }

  dtatg::Sentence reduced = dtatg::reduce_clauses(chosen, keywords);
  dtatg::DependencyTree tree = parser.parse(reduced.text);
  dtatg::CompressionResult result =
      dtatg::trim_tree(tree, keywords, config.dtcm);

  std::cout << "# sentence: " << reduced.text << '\n';
  std::cout << "# title: " << dtatg::render_title(result.tree, result.kept)
            << '\n';
  std::cout << "# rate: " << format_double(result.rate)
            << "  passes: " << result.passes << '\n';
  std::cout << "id\tform\tdeprel\tkept\n";
  for (const dtatg::DepNode& node : result.tree.nodes()) {
    std::cout << node.id << '\t' << node.form << '\t' << node.deprel << '\t'
              << (result.kept[node.id] ? 1 : 0) << '\n';
  }
  return 0;
}

int run_eval(const Options& opts, const std::string& corpus_dir,
             std::optional<int> sample, unsigned seed,
             const std::string& csv_path, const std::string& jsonl_path) {
  dtatg::PipelineConfig config = make_config(opts);
  dtatg::Corpus corpus =
      dtatg::load_corpus(corpus_dir, dtatg::CorpusLayout::kBbcDirs);
  corpus.stopwords = resolve_stopwords(opts);

  dtatg::Report report = dtatg::evaluate_corpus(corpus, config, sample, seed);
  write_text(csv_path, dtatg::report_csv(report));
  if (!jsonl_path.empty()) write_text(jsonl_path, dtatg::report_jsonl(report));
  return 0;
}

int run_parse_cache(const Options& opts, const std::string& in_path,
                    const std::string& corpus_dir, const std::string& out_dir) {
  dtatg::PipelineConfig config = make_config(opts);
  if (config.parser.mode != dtatg::ParserMode::kCommand) {
    dtatg::fail(ErrorKind::kConfig,
                "parse-cache needs a command parser (--parser cmd:...)");
  }
  std::unordered_set<std::string> stopwords = resolve_stopwords(opts);

  std::vector<dtatg::Document> docs;
  if (!corpus_dir.empty()) {
    docs = dtatg::load_corpus(corpus_dir, dtatg::CorpusLayout::kBbcDirs)
               .documents;
  } else {
    dtatg::Document doc;
    doc.id = in_path.empty() ? "stdin" : in_path;
    doc.body = read_input(in_path);
    docs.push_back(std::move(doc));
  }

  // Every sentence the pipeline could send to the parser: the reduced
  // central candidates plus the reduced first sentence.
  std::set<std::string> texts;
  for (const dtatg::Document& doc : docs) {
    std::vector<dtatg::Sentence> sentences =
        dtatg::split_sentences(doc.body, config.segment);
    if (sentences.empty()) continue;
    std::vector<dtatg::Keyword> keywords =
        dtatg::extract_keywords(sentences, stopwords, config.rake);
    for (const dtatg::RankedSentence& rs : dtatg::select_central_sentences(
             sentences, keywords, config.central_sentences)) {
      texts.insert(dtatg::reduce_clauses(rs, keywords).text);
    }
    texts.insert(dtatg::reduce_clauses(sentences.front(), keywords).text);
  }

  std::filesystem::create_directories(out_dir);
  int written = 0;
  for (const std::string& text : texts) {
    if (text.empty()) continue;
    std::string output = dtatg::run_parser_command(
        config.parser.command, text + "\n", config.parser.timeout_seconds);
    std::vector<dtatg::DependencyTree> trees = dtatg::parse_conllu(output);
    if (trees.empty()) {
      dtatg::warn("parser produced no parse for: " + text);
      continue;
    }
    dtatg::write_file(dtatg::ParserClient::fixture_path(out_dir, text),
                      dtatg::to_conllu(trees.front()));
    ++written;
  }
  std::cout << "wrote " << written << " fixtures to " << out_dir << '\n';
  return 0;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
    case ErrorKind::kFormat:
    case ErrorKind::kStructure:
      return 1;
    case ErrorKind::kConfig:
    case ErrorKind::kParser:
    case ErrorKind::kNotFound:
    case ErrorKind::kInternal:
      return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automatic title generation by dependency tree trimming"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.set_config("--config", "", "flat key=value config file");
  app.add_option("--stopwords", opts.stopwords, "stopword file, one per line");
  app.add_option("--parser", opts.parser_spec,
                 "fixture:DIR or cmd:COMMAND (env DTATG_FIXTURE_DIR overrides "
                 "the fixture directory)");
  app.add_option("--metric", opts.metric, "keyword word metric")
      ->check(CLI::IsMember({"freq", "degree", "ratio"}));
  app.add_option("--top", opts.top, "keyword cut (0 = third of distinct words)");
  app.add_option("--central", opts.central, "central sentences to try");
  app.add_option("--max-title-words", opts.max_title_words,
                 "second-pass length trigger");
  app.add_option("--topic-keywords", opts.topic_keywords,
                 "keywords consulted by the relevance test");
  app.add_flag("--rate-trigger", opts.rate_trigger,
               "re-trim on rate < 0.5 instead of residual length");
  app.add_flag("--no-rule-adverbials", opts.no_rule_adverbials,
               "disable edge-adverbial deletion");
  app.add_flag("--no-rule-say", opts.no_rule_say,
               "disable reporting-root deletion");
  app.add_flag("--no-rule-conjunct", opts.no_rule_conjunct,
               "disable second-conjunct deletion");
  app.add_flag("--no-rule-that", opts.no_rule_that,
               "disable clause-marker deletion");
  app.add_flag("--no-rule-nmod", opts.no_rule_nmod,
               "disable stacked-nmod deletion");
  app.add_option("--timeout", opts.timeout, "parser timeout in seconds");
  app.add_option("--pool", opts.pool, "parser process pool size");
  app.add_option("--workers", opts.workers, "corpus worker threads");
  app.add_option("--baseline-words", opts.baseline_words,
                 "words in the tf-idf baseline title");
  app.add_flag("--f1-set-mode", opts.f1_set_mode,
               "dedupe tokens before the F1 overlap");
  app.add_option("--abbrev", opts.abbreviations,
                 "abbreviation whose periods never split sentences");

  std::string in_path;
  std::string corpus_dir;
  std::string jsonl_path;
  std::string csv_path;
  int candidate = 1;
  bool ranking = false;
  std::optional<int> sample;
  unsigned seed = 7;
  std::string cache_out;

  CLI::App* title = app.add_subcommand("title", "generate titles");
  title->add_option("--in", in_path, "input document (default stdin)");
  title->add_option("--corpus", corpus_dir, "BBC-layout corpus directory");
  title->add_option("--jsonl", jsonl_path, "write per-document detail here");

  CLI::App* keywords = app.add_subcommand("keywords", "dump extracted keywords");
  keywords->add_option("--in", in_path, "input document (default stdin)");
  keywords->add_flag("--ranking", ranking,
                     "print the sentence ranking table instead");

  CLI::App* tree = app.add_subcommand("tree", "show the pruning diff");
  tree->add_option("--in", in_path, "input document (default stdin)");
  tree->add_option("--candidate", candidate, "1-based candidate to inspect");

  CLI::App* eval = app.add_subcommand("eval", "score the corpus");
  eval->add_option("--corpus", corpus_dir, "BBC-layout corpus directory")
      ->required();
  eval->add_option("--sample", sample, "evaluate a seeded sample this large");
  eval->add_option("--seed", seed, "sampling seed");
  eval->add_option("--csv", csv_path, "CSV output path (default stdout)");
  eval->add_option("--jsonl", jsonl_path, "write per-document detail here");

  CLI::App* cache = app.add_subcommand(
      "parse-cache", "pre-parse candidate sentences into a fixture directory");
  cache->add_option("--in", in_path, "input document");
  cache->add_option("--corpus", corpus_dir, "BBC-layout corpus directory");
  cache->add_option("--out", cache_out, "fixture directory to fill")
      ->required();

  try {
    app.parse(argc, argv);
    if (title->parsed()) {
      return run_title(opts, in_path, corpus_dir, jsonl_path);
    }
    if (keywords->parsed()) {
      return run_keywords(opts, in_path, ranking);
    }
    if (tree->parsed()) {
      return run_tree(opts, in_path, candidate);
    }
    if (eval->parsed()) {
      return run_eval(opts, corpus_dir, sample, seed, csv_path, jsonl_path);
    }
    if (cache->parsed()) {
      return run_parse_cache(opts, in_path, corpus_dir, cache_out);
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "dtatg: error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "dtatg: error: " << e.what() << '\n';
    return 2;
  }
}
