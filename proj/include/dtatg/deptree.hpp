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
#include <string_view>
#include <vector>

namespace dtatg {

struct DepNode {
  int id = 0;  // 1-based token index
  std::string form;
  std::string lemma;
  std::string upos;
  int head = 0;  // 0 = root
  std::string deprel;
};

class DependencyTree {
 public:
  DependencyTree() = default;

  // Validates the node list (consecutive ids, single root, acyclic,
  // all nodes reachable) and builds the child adjacency.
  // Throws a structural error when the invariants fail.
  static DependencyTree build(std::vector<DepNode> nodes);

  const std::vector<DepNode>& nodes() const { return nodes_; }
  const DepNode& node(int id) const;
  int size() const { return static_cast<int>(nodes_.size()); }
  int root_id() const { return root_id_; }

  const std::vector<int>& children_of(int id) const;
  bool is_punct(int id) const { return node(id).deprel == "punct"; }

  // Non-punctuation tokens; the n of the compression-rate formula.
  int word_count() const;

  // Ids in the subtree rooted at id, in ascending order.
  std::vector<int> subtree_ids(int id) const;

 private:
  std::vector<DepNode> nodes_;              // index i holds id i+1
  std::vector<std::vector<int>> children_;  // index by id, [0] = roots
  int root_id_ = 0;
};

// Maps parser-version-specific relation subtypes onto the label
// vocabulary the trimming rules use. Unknown labels pass through.
std::string normalize_deprel(std::string_view raw);

// One tree per sentence block. Comment lines and multiword-token or
// empty-node ids are skipped; malformed lines raise a format error
// carrying the 1-based line number.
std::vector<DependencyTree> parse_conllu(const std::string& text);

// Emits the consumed columns (id, form, lemma, upos, head, deprel);
// the remaining CoNLL-U columns are blanked with '_'.
std::string to_conllu(const DependencyTree& tree);

// Root first, children in ascending token-id order.
std::vector<int> preorder(const DependencyTree& tree);

}  // namespace dtatg
