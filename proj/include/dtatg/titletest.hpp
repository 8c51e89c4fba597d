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
#include <vector>

#include "dtatg/dtcm.hpp"
#include "dtatg/rake.hpp"

namespace dtatg {

struct TestOutcome {
  bool pass = true;
  std::string reason;
};

struct TitleVerdict {
  TestOutcome concise;
  TestOutcome fluent;
  TestOutcome relevant;

  bool overall() const { return concise.pass && fluent.pass && relevant.pass; }
  int passed_count() const {
    return (concise.pass ? 1 : 0) + (fluent.pass ? 1 : 0) +
           (relevant.pass ? 1 : 0);
  }
};

inline constexpr int kMaxTitleTestWords = 15;
inline constexpr int kTopicKeywordCount = 5;

// Length cap, no clause-introducing kept edges, no verb-verb
// coordination, and (for verbal titles) a nominal subject.
TestOutcome conciseness_test(const CompressionResult& result);

// Structural fluency proxy: kept nodes hang together under the
// effective root, no case marker dangles, verbal roots keep a subject.
TestOutcome fluency_test(const CompressionResult& result);

// The title must share a member word with one of the top-m keywords.
TestOutcome topic_relevance_test(const std::string& title,
                                 const std::vector<Keyword>& keywords,
                                 int m = kTopicKeywordCount);

TitleVerdict title_test(const CompressionResult& result,
                        const std::string& title,
                        const std::vector<Keyword>& keywords,
                        int m = kTopicKeywordCount);

}  // namespace dtatg
