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

#include "dtatg/dtcm.hpp"

#include <algorithm>
#include <unordered_map>

#include "dtatg/errors.hpp"
#include "dtatg/text.hpp"

namespace dtatg {

namespace {

const std::unordered_set<std::string>& argument_relations() {
  static const std::unordered_set<std::string> kRels = {
      "nsubj", "nsubjpass", "dobj", "iobj", "compound", "nummod"};
  return kRels;
}

std::vector<int> kept_word_ids(const CompressionResult& r) {
  std::vector<int> ids;
  for (const DepNode& node : r.tree.nodes()) {
    if (r.kept[node.id] && node.deprel != "punct") ids.push_back(node.id);
  }
  return ids;
}

std::vector<int> kept_subtree_ids(const CompressionResult& r, int id) {
  std::vector<int> out;
  for (int s : r.tree.subtree_ids(id)) {
    if (r.kept[s]) out.push_back(s);
  }
  return out;
}

int count_words(const CompressionResult& r, const std::vector<int>& ids) {
  int n = 0;
  for (int id : ids) {
    if (!r.tree.is_punct(id)) ++n;
  }
  return n;
}

void refresh_rate(CompressionResult& r) {
  r.rate = r.word_total > 0
               ? static_cast<double>(r.kept_words()) / r.word_total
               : 1.0;
}

// R1: strip leading and trailing adverbials. An advmod/advcl subtree
// whose surviving words open (or close) the sentence is removed; the
// widest such subtree wins.
void rule_edge_adverbials(CompressionResult& r) {
  auto apply_at = [&r](bool at_start) {
    std::vector<int> words = kept_word_ids(r);
    if (words.empty()) return;
    const int edge = at_start ? words.front() : words.back();

    int best = 0;
    size_t best_size = 0;
    for (const DepNode& node : r.tree.nodes()) {
      if (!r.kept[node.id]) continue;
      if (node.deprel != "advmod" && node.deprel != "advcl") continue;
      std::vector<int> sub = kept_subtree_ids(r, node.id);
      int touch = 0;
      if (at_start) {
        for (int id : sub) {
          if (!r.tree.is_punct(id)) {
            touch = id;
            break;
          }
        }
      } else {
        for (auto it = sub.rbegin(); it != sub.rend(); ++it) {
          if (!r.tree.is_punct(*it)) {
            touch = *it;
            break;
          }
        }
      }
      if (touch != edge) continue;
      if (sub.size() > best_size) {
        best = node.id;
        best_size = sub.size();
      }
    }
    if (best == 0) return;

    std::vector<int> doomed = kept_subtree_ids(r, best);
    if (r.kept_words() - count_words(r, doomed) <= 0) {
      warn("edge-adverbial removal would empty the title; skipped");
      return;
    }
    for (int id : doomed) r.kept[id] = false;
  };
  apply_at(true);
  apply_at(false);
}

// R2: a reporting root ("X says ...") is dropped in favor of the
// reported clause, which becomes the effective root.
void rule_say_root(CompressionResult& r) {
  const int root = r.effective_root;
  if (root == 0 || !r.kept[root]) return;
  if (ascii_lower(r.tree.node(root).lemma) != "say") return;

  int clause = 0;
  for (int child : r.tree.children_of(root)) {
    if (r.kept[child] && r.tree.node(child).deprel == "ccomp") {
      clause = child;
      break;
    }
  }
  if (clause == 0) return;

  std::vector<int> keep = kept_subtree_ids(r, clause);
  if (count_words(r, keep) == 0) {
    warn("reporting-clause removal would empty the title; skipped");
    return;
  }
  std::vector<bool> next(r.kept.size(), false);
  for (int id : keep) next[id] = true;
  r.kept = std::move(next);
  r.effective_root = clause;
}

// R3: drop the second conjunct of an "and" coordination when the first
// conjunct is already a full clause (subject plus verb).
void rule_and_conjunct(CompressionResult& r) {
  for (const DepNode& node : r.tree.nodes()) {
    if (!r.kept[node.id] || node.deprel != "conj") continue;
    const int governor = node.head;
    if (governor == 0 || !r.kept[governor]) continue;

    // The coordinator itself is usually an unprotected leaf that pruning
    // already removed, so the pattern is matched on the original tree.
    int cc = 0;
    for (int child : r.tree.children_of(node.id)) {
      const DepNode& c = r.tree.node(child);
      if (c.deprel == "cc" && ascii_lower(c.form) == "and") {
        cc = child;
        break;
      }
    }
    if (cc == 0) {
      // Some parses hang the coordinator off the first conjunct.
      for (int child : r.tree.children_of(governor)) {
        const DepNode& c = r.tree.node(child);
        if (c.deprel == "cc" && ascii_lower(c.form) == "and" &&
            child < node.id) {
          cc = child;
        }
      }
    }
    if (cc == 0) continue;

    std::vector<int> conj_sub = kept_subtree_ids(r, node.id);
    std::unordered_set<int> in_conj(conj_sub.begin(), conj_sub.end());
    bool has_subject = false;
    bool has_verb = false;
    for (int id : kept_subtree_ids(r, governor)) {
      if (in_conj.count(id) || id == cc) continue;
      const DepNode& d = r.tree.node(id);
      if (d.deprel == "nsubj" || d.deprel == "nsubjpass") has_subject = true;
      if (d.upos == "VERB") has_verb = true;
    }
    if (!has_subject || !has_verb) continue;

    int removed_words = count_words(r, conj_sub);
    if (!in_conj.count(cc) && r.kept[cc] && !r.tree.is_punct(cc)) {
      ++removed_words;
    }
    if (r.kept_words() - removed_words <= 0) {
      warn("conjunct removal would empty the title; skipped");
      return;
    }
    for (int id : conj_sub) r.kept[id] = false;
    r.kept[cc] = false;
    return;
  }
}

// R4: inside "... that <clause>", when the clause stands on its own,
// everything up to and including the marker goes.
void rule_that_clause(CompressionResult& r) {
  // Like the coordinator in R3, the marker itself rarely survives pruning;
  // its presence in the original tree is what triggers the rule.
  for (const DepNode& node : r.tree.nodes()) {
    if (node.deprel != "mark") continue;
    if (ascii_lower(node.form) != "that") continue;
    const int head = node.head;
    if (head == 0 || !r.kept[head]) continue;

    bool has_subject = false;
    bool has_verb = false;
    for (int id : kept_subtree_ids(r, head)) {
      const DepNode& d = r.tree.node(id);
      if ((d.deprel == "nsubj" || d.deprel == "nsubjpass") && d.head == head) {
        has_subject = true;
      }
      if (d.upos == "VERB") has_verb = true;
    }
    if (!has_subject || !has_verb) continue;

    std::vector<int> doomed;
    for (int id : kept_word_ids(r)) {
      if (id <= node.id) doomed.push_back(id);
    }
    for (const DepNode& p : r.tree.nodes()) {
      if (r.kept[p.id] && p.id <= node.id && p.deprel == "punct") {
        doomed.push_back(p.id);
      }
    }
    if (r.kept_words() - count_words(r, doomed) <= 0) {
      warn("clause-marker removal would empty the title; skipped");
      return;
    }
    bool root_removed = r.effective_root <= node.id;
    for (int id : doomed) r.kept[id] = false;
    if (root_removed) r.effective_root = head;
    return;
  }
}

// R5: of several nmod dependents of one governor sitting side by side,
// only the last survives.
void rule_stacked_nmod(CompressionResult& r) {
  for (const DepNode& gov : r.tree.nodes()) {
    if (!r.kept[gov.id]) continue;
    std::vector<int> mods;
    for (int child : r.tree.children_of(gov.id)) {
      if (r.kept[child] && r.tree.node(child).deprel == "nmod") {
        mods.push_back(child);
      }
    }
    if (mods.size() < 2) continue;

    struct Span {
      int id;
      int lo;
      int hi;
    };
    std::vector<Span> spans;
    for (int mod : mods) {
      std::vector<int> sub = kept_subtree_ids(r, mod);
      std::vector<int> sub_words;
      for (int id : sub) {
        if (!r.tree.is_punct(id)) sub_words.push_back(id);
      }
      if (sub_words.empty()) continue;
      spans.push_back({mod, sub_words.front(), sub_words.back()});
    }
    if (spans.size() < 2) continue;
    std::sort(spans.begin(), spans.end(),
              [](const Span& a, const Span& b) { return a.lo < b.lo; });

    std::vector<int> words = kept_word_ids(r);
    auto gap_empty = [&words](int hi, int lo) {
      for (int w : words) {
        if (w > hi && w < lo) return false;
      }
      return true;
    };

    // Maximal runs of adjacent spans; drop all but the last in each.
    size_t run_start = 0;
    for (size_t i = 1; i <= spans.size(); ++i) {
      bool joined =
          i < spans.size() && gap_empty(spans[i - 1].hi, spans[i].lo);
      if (joined) continue;
      for (size_t j = run_start; j + 1 < i; ++j) {
        for (int id : kept_subtree_ids(r, spans[j].id)) r.kept[id] = false;
      }
      run_start = i;
    }
  }
}

}  // namespace

int CompressionResult::kept_words() const {
  int n = 0;
  for (const DepNode& node : tree.nodes()) {
    if (kept[node.id] && node.deprel != "punct") ++n;
  }
  return n;
}

std::unordered_set<std::string> keyword_member_words(
    const std::vector<Keyword>& keywords) {
  std::unordered_set<std::string> words;
  for (const Keyword& kw : keywords) {
    words.insert(kw.member_words.begin(), kw.member_words.end());
  }
  return words;
}

bool is_protected(int node_id, const DependencyTree& tree,
                  const std::unordered_set<std::string>& member_words) {
  const DepNode& node = tree.node(node_id);
  if (member_words.count(ascii_lower(node.form)) ||
      member_words.count(ascii_lower(node.lemma))) {
    return true;
  }
  if (argument_relations().count(node.deprel)) return true;
  for (int child : tree.children_of(node_id)) {
    if (argument_relations().count(tree.node(child).deprel)) return true;
  }
  if (node.head == 0) return true;
  if (node.deprel == "nmod") return true;
  if (node.deprel == "case" && node.head != 0 &&
      tree.node(node.head).deprel == "nmod") {
    return true;
  }
  return false;
}

bool is_protected(int node_id, const DependencyTree& tree,
                  const std::vector<Keyword>& keywords) {
  return is_protected(node_id, tree, keyword_member_words(keywords));
}

CompressionResult prune(const DependencyTree& tree,
                        const std::vector<Keyword>& keywords) {
  const std::unordered_set<std::string> member_words =
      keyword_member_words(keywords);

  CompressionResult result;
  result.tree = tree;
  result.kept.assign(tree.size() + 1, true);
  result.kept[0] = false;
  result.passes = 1;
  result.effective_root = tree.root_id();
  result.word_total = tree.word_count();

  const std::vector<int> order = preorder(tree);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int id : order) {
      if (!result.kept[id] || id == tree.root_id()) continue;
      bool leaf = true;
      for (int child : tree.children_of(id)) {
        if (result.kept[child]) {
          leaf = false;
          break;
        }
      }
      if (!leaf) continue;
      if (tree.is_punct(id) || !is_protected(id, tree, member_words)) {
        result.kept[id] = false;
        changed = true;
      }
    }
  }
  refresh_rate(result);
  return result;
}

void apply_deletion_rules(CompressionResult& result, const DtcmConfig& config) {
  if (config.rule_edge_adverbials) rule_edge_adverbials(result);
  if (config.rule_say_root) rule_say_root(result);
  if (config.rule_and_conjunct) rule_and_conjunct(result);
  if (config.rule_that_clause) rule_that_clause(result);
  if (config.rule_stacked_nmod) rule_stacked_nmod(result);
  refresh_rate(result);
}

CompressionResult maybe_second_pass(CompressionResult result,
                                    const std::vector<Keyword>& keywords,
                                    const DtcmConfig& config) {
  if (result.passes >= 2) return result;
  bool trigger;
  if (config.rate_trigger) {
    trigger = result.word_total > 20 && result.rate < 0.5;
  } else {
    trigger = result.word_total > 20 &&
              result.kept_words() > config.max_title_words;
  }
  if (!trigger) return result;

  std::vector<int> kept_ids;
  for (const DepNode& node : result.tree.nodes()) {
    if (result.kept[node.id]) kept_ids.push_back(node.id);
  }
  if (kept_ids.empty()) return result;

  std::unordered_map<int, int> renumber;
  for (size_t i = 0; i < kept_ids.size(); ++i) {
    renumber[kept_ids[i]] = static_cast<int>(i) + 1;
  }

  // Survivors re-parent to their nearest surviving ancestor; orphans
  // attach to the effective root so the induced graph stays a tree.
  std::vector<DepNode> nodes;
  nodes.reserve(kept_ids.size());
  for (int old_id : kept_ids) {
    DepNode node = result.tree.node(old_id);
    node.id = renumber.at(old_id);
    if (old_id == result.effective_root) {
      node.head = 0;
      node.deprel = "root";
    } else {
      int p = result.tree.node(old_id).head;
      while (p != 0 && !result.kept[p]) p = result.tree.node(p).head;
      if (p == 0) p = result.effective_root;
      node.head = renumber.at(p);
    }
    nodes.push_back(std::move(node));
  }

  DependencyTree induced = DependencyTree::build(std::move(nodes));
  CompressionResult second = prune(induced, keywords);
  apply_deletion_rules(second, config);

  CompressionResult out;
  out.tree = result.tree;
  out.kept.assign(result.kept.size(), false);
  for (size_t i = 0; i < kept_ids.size(); ++i) {
    if (second.kept[static_cast<int>(i) + 1]) out.kept[kept_ids[i]] = true;
  }
  out.passes = result.passes + 1;
  out.word_total = result.word_total;
  out.effective_root = kept_ids[second.effective_root - 1];
  refresh_rate(out);
  return out;
}

CompressionResult trim_tree(const DependencyTree& tree,
                            const std::vector<Keyword>& keywords,
                            const DtcmConfig& config) {
  CompressionResult result = prune(tree, keywords);
  apply_deletion_rules(result, config);
  return maybe_second_pass(std::move(result), keywords, config);
}

std::string render_title(const DependencyTree& tree,
                         const std::vector<bool>& kept) {
  std::string out;
  for (const DepNode& node : tree.nodes()) {
    if (!kept[node.id] || node.deprel == "punct") continue;
    if (!out.empty()) out += ' ';
    out += node.form;
  }
  if (out.empty()) {
    fail(ErrorKind::kStructure, "cannot render a title: no kept word tokens");
  }
  if (out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 32);
  return out;
}

}  // namespace dtatg
