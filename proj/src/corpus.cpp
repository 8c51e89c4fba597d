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

#include "dtatg/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dtatg/errors.hpp"
#include "dtatg/text.hpp"

namespace fs = std::filesystem;

namespace dtatg {

namespace {

std::string normalize_newlines(std::string text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      out.push_back('\n');
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

// Rejects files that are clearly not text: invalid UTF-8 or NUL bytes.
bool looks_like_utf8_text(const std::string& s) {
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == 0) return false;
    size_t extra;
    if (c < 0x80) {
      extra = 0;
    } else if ((c >> 5) == 0x6) {
      extra = 1;
    } else if ((c >> 4) == 0xE) {
      extra = 2;
    } else if ((c >> 3) == 0x1E) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= s.size() && extra > 0) return false;
    for (size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
    }
    i += extra + 1;
  }
  return true;
}

DocType default_type_hint(const std::string& category) {
  return category == "sport" ? DocType::kType2 : DocType::kType1;
}

std::optional<Document> load_document(const fs::path& file,
                                      const std::string& category,
                                      const std::string& id, bool split_title) {
  std::string raw;
  try {
    raw = read_file(file.string());
  } catch (const Error& e) {
    warn("skipping " + file.string() + ": " + e.what());
    return std::nullopt;
  }
  if (!looks_like_utf8_text(raw)) {
    warn("skipping " + file.string() + ": not valid UTF-8 text");
    return std::nullopt;
  }
  raw = normalize_newlines(std::move(raw));

  Document doc;
  doc.id = id;
  doc.category = category;
  doc.doc_type_hint = default_type_hint(category);

  if (split_title) {
    std::istringstream in(raw);
    std::string line;
    std::string title;
    std::string body;
    bool have_title = false;
    while (std::getline(in, line)) {
      if (!have_title) {
        if (trim(line).empty()) continue;
        title = trim(line);
        have_title = true;
      } else {
        body += line;
        body += '\n';
      }
    }
    if (have_title) doc.reference_title = title;
    doc.body = trim(body);
  } else {
    doc.body = trim(raw);
  }
  if (doc.body.empty()) {
    warn("skipping " + file.string() + ": empty body");
    return std::nullopt;
  }
  return doc;
}

std::vector<fs::path> sorted_txt_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

Corpus load_corpus(const std::string& root_path, CorpusLayout layout) {
  fs::path root(root_path);
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    fail(ErrorKind::kInput, "corpus root is not a readable directory: " + root_path);
  }

  Corpus corpus;
  if (layout == CorpusLayout::kBbcDirs) {
    std::vector<fs::path> categories;
    for (const auto& entry : fs::directory_iterator(root)) {
      if (entry.is_directory()) categories.push_back(entry.path());
    }
    std::sort(categories.begin(), categories.end());
    for (const fs::path& cat_dir : categories) {
      std::string category = cat_dir.filename().string();
      for (const fs::path& file : sorted_txt_files(cat_dir)) {
        std::string id = category + "/" + file.filename().string();
        if (auto doc = load_document(file, category, id, /*split_title=*/true)) {
          corpus.documents.push_back(std::move(*doc));
        }
      }
    }
  } else {
    for (const fs::path& file : sorted_txt_files(root)) {
      std::string id = file.filename().string();
      if (auto doc = load_document(file, "", id, /*split_title=*/false)) {
        corpus.documents.push_back(std::move(*doc));
      }
    }
  }
  return corpus;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::kConfig, "stopword file not found: " + path);
  }
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    words.insert(ascii_lower(t));
  }
  if (words.empty()) {
    warn("stopword file " + path + " yielded an empty set");
  }
  return words;
}

}  // namespace dtatg
