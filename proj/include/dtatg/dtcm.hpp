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
#include <vector>

#include "dtatg/deptree.hpp"
#include "dtatg/rake.hpp"

namespace dtatg {

struct CompressionResult {
  DependencyTree tree;     // the original, untrimmed tree
  std::vector<bool> kept;  // indexed by node id; slot 0 unused
  double rate = 0.0;       // kept word tokens / original word tokens
  int passes = 0;
  int effective_root = 0;  // root after any clause promotion
  int word_total = 0;      // original word-token count (rate denominator)

  int kept_words() const;
};

struct DtcmConfig {
  int max_title_words = 10;
  // Re-trim on rate < 0.5 instead of residual length; see trim_tree.
  bool rate_trigger = false;
  bool rule_edge_adverbials = true;  // R1
  bool rule_say_root = true;         // R2
  bool rule_and_conjunct = true;     // R3
  bool rule_that_clause = true;      // R4
  bool rule_stacked_nmod = true;     // R5
};

// Union of member words over all keywords, for protection lookups.
std::unordered_set<std::string> keyword_member_words(
    const std::vector<Keyword>& keywords);

// A node survives pruning when any of these hold: its form or lemma is
// a keyword member word; it is an endpoint of a subject, object,
// compound, or numeric-modifier edge; it is the root; it is an nmod
// dependent or the case marker attached to one.
bool is_protected(int node_id, const DependencyTree& tree,
                  const std::unordered_set<std::string>& member_words);
bool is_protected(int node_id, const DependencyTree& tree,
                  const std::vector<Keyword>& keywords);

// Preorder sweeps removing unprotected current leaves until fixpoint;
// punctuation leaves always go.
CompressionResult prune(const DependencyTree& tree,
                        const std::vector<Keyword>& keywords);

// The five trimming rules, applied in order, each at most once. A rule
// that would empty the mask is skipped with a warning.
void apply_deletion_rules(CompressionResult& result, const DtcmConfig& config);

// Re-trims long residues: original length > 20 words and kept length
// still above max_title_words (or rate < 0.5 with rate_trigger). The
// kept nodes are re-rooted into an induced tree and pruned again.
// At most two passes total.
CompressionResult maybe_second_pass(CompressionResult result,
                                    const std::vector<Keyword>& keywords,
                                    const DtcmConfig& config);

// prune + deletion rules + optional second pass.
CompressionResult trim_tree(const DependencyTree& tree,
                            const std::vector<Keyword>& keywords,
                            const DtcmConfig& config);

// Kept word tokens in sentence order, space-joined, first character
// uppercased. Punctuation nodes are never rendered.
std::string render_title(const DependencyTree& tree,
                         const std::vector<bool>& kept);

}  // namespace dtatg
