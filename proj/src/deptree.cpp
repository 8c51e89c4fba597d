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

#include "dtatg/deptree.hpp"

#include <algorithm>
#include <sstream>

#include "dtatg/errors.hpp"
#include "dtatg/text.hpp"

namespace dtatg {

DependencyTree DependencyTree::build(std::vector<DepNode> nodes) {
  DependencyTree tree;
  const int n = static_cast<int>(nodes.size());
  if (n == 0) {
    fail(ErrorKind::kStructure, "dependency tree has no nodes");
  }
  for (int i = 0; i < n; ++i) {
    if (nodes[i].id != i + 1) {
      fail(ErrorKind::kStructure,
           "token ids are not consecutive from 1 (found id " +
               std::to_string(nodes[i].id) + " at slot " + std::to_string(i) +
               ")");
    }
    if (nodes[i].head < 0 || nodes[i].head > n) {
      fail(ErrorKind::kStructure,
           "head " + std::to_string(nodes[i].head) + " of token " +
               std::to_string(nodes[i].id) + " is out of range");
    }
    if (nodes[i].deprel.empty()) {
      fail(ErrorKind::kStructure,
           "token " + std::to_string(nodes[i].id) + " has an empty relation");
    }
  }

  tree.children_.assign(n + 1, {});
  int root = 0;
  for (const DepNode& node : nodes) {
    if (node.head == 0) {
      if (root != 0) {
        fail(ErrorKind::kStructure,
             "multiple roots: tokens " + std::to_string(root) + " and " +
                 std::to_string(node.id));
      }
      root = node.id;
    } else {
      tree.children_[node.head].push_back(node.id);
    }
  }
  if (root == 0) {
    fail(ErrorKind::kStructure, "no root token (head = 0) present");
  }

  // Reachability from the root doubles as the cycle check: n nodes,
  // n - 1 edges, so full coverage implies acyclicity.
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{root};
  seen[root] = true;
  int visited = 0;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    ++visited;
    for (int child : tree.children_[id]) {
      if (!seen[child]) {
        seen[child] = true;
        stack.push_back(child);
      }
    }
  }
  if (visited != n) {
    fail(ErrorKind::kStructure,
         "cycle detected: only " + std::to_string(visited) + " of " +
             std::to_string(n) + " tokens reachable from the root");
  }

  tree.nodes_ = std::move(nodes);
  tree.root_id_ = root;
  return tree;
}

const DepNode& DependencyTree::node(int id) const {
  if (id < 1 || id > size()) {
    fail(ErrorKind::kInternal, "node id " + std::to_string(id) + " out of range");
  }
  return nodes_[id - 1];
}

const std::vector<int>& DependencyTree::children_of(int id) const {
  if (id < 0 || id > size()) {
    fail(ErrorKind::kInternal, "node id " + std::to_string(id) + " out of range");
  }
  return children_[id];
}

int DependencyTree::word_count() const {
  int n = 0;
  for (const DepNode& node : nodes_) {
    if (node.deprel != "punct") ++n;
  }
  return n;
}

std::vector<int> DependencyTree::subtree_ids(int id) const {
  std::vector<int> out;
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (int child : children_of(cur)) stack.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string normalize_deprel(std::string_view raw) {
  std::string label(raw);
  if (label == "nsubj:pass") return "nsubjpass";
  if (label == "obj") return "dobj";
  if (label == "nmod" || label.rfind("nmod:", 0) == 0) return "nmod";
  if (label == "obl" || label.rfind("obl:", 0) == 0) return "nmod";
  if (label == "compound" || label.rfind("compound:", 0) == 0) return "compound";
  return label;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::vector<DependencyTree> parse_conllu(const std::string& text) {
  std::vector<DependencyTree> trees;
  std::vector<DepNode> block;
  auto flush = [&]() {
    if (!block.empty()) {
      trees.push_back(DependencyTree::build(std::move(block)));
      block.clear();
    }
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;

    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 10) {
      fail(ErrorKind::kFormat,
           "line " + std::to_string(line_no) + ": expected 10 tab-separated columns, got " +
               std::to_string(cols.size()));
    }
    const std::string& id_col = cols[0];
    // Multiword ranges ("4-5") and empty nodes ("5.1") carry no tree edges.
    if (id_col.find('-') != std::string::npos ||
        id_col.find('.') != std::string::npos) {
      continue;
    }
    if (!is_plain_integer(id_col) || !is_plain_integer(cols[6])) {
      fail(ErrorKind::kFormat,
           "line " + std::to_string(line_no) + ": ID and HEAD must be integers");
    }
    DepNode node;
    node.id = std::stoi(id_col);
    node.form = cols[1];
    node.lemma = cols[2];
    node.upos = cols[3];
    node.head = std::stoi(cols[6]);
    node.deprel = normalize_deprel(cols[7]);
    block.push_back(std::move(node));
  }
  flush();
  return trees;
}

std::string to_conllu(const DependencyTree& tree) {
  std::string out;
  for (const DepNode& node : tree.nodes()) {
    out += std::to_string(node.id);
    out += '\t';
    out += node.form;
    out += '\t';
    out += node.lemma;
    out += '\t';
    out += node.upos;
    out += "\t_\t_\t";
    out += std::to_string(node.head);
    out += '\t';
    out += node.deprel;
    out += "\t_\t_\n";
  }
  out += '\n';
  return out;
}

std::vector<int> preorder(const DependencyTree& tree) {
  std::vector<int> order;
  order.reserve(tree.size());
  // A stack visits children largest-id first so they pop in ascending order.
  std::vector<int> stack{tree.root_id()};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const std::vector<int>& kids = tree.children_of(id);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

}  // namespace dtatg
