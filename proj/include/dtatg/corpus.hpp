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
#include <unordered_set>
#include <vector>

namespace dtatg {

enum class DocType { kType1, kType2 };

struct Document {
  std::string id;
  std::string category;
  std::optional<std::string> reference_title;
  std::string body;
  std::optional<DocType> doc_type_hint;
};

struct Corpus {
  std::vector<Document> documents;
  std::unordered_set<std::string> stopwords;
};

enum class CorpusLayout { kBbcDirs, kFlat };

// Loads every *.txt under the root. In kBbcDirs layout files live one
// directory deep and the parent directory names the category; the first
// non-empty line is the reference title and the rest is the body. In
// kFlat layout files sit directly under the root and the whole file is
// the body. Documents are ordered by category then filename.
Corpus load_corpus(const std::string& root_path, CorpusLayout layout);

// One word per line; '#' lines and blanks ignored; lowercased, deduped.
std::unordered_set<std::string> load_stopwords(const std::string& path);

// Compiled-in English stop list used when no stopword file is given.
const std::unordered_set<std::string>& default_stopwords();

}  // namespace dtatg
