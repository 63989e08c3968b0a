#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seriesforge/oracle.hpp"

namespace seriesforge::oracle {

namespace {

using Mask = std::uint32_t;

constexpr std::size_t kMaxObjects = 10'000'000;

void require(bool ok, const std::string& what) {
  if (!ok) throw EnumerationBoundError(what);
}

TreePtr make_leaf(int label) {
  auto leaf = std::make_shared<TreeNode>();
  leaf->label = label;
  return leaf;
}

TreePtr make_inner(int color, int label, std::vector<TreePtr> children) {
  auto node = std::make_shared<TreeNode>();
  node->color = color;
  node->label = label;
  node->children = std::move(children);
  return node;
}

int lowest_label(Mask mask) { return std::countr_zero(mask) + 1; }

// Calls visit with every partition of the set bits of mask into blocks.
void for_each_set_partition(Mask mask, const std::function<void(const std::vector<Mask>&)>& visit) {
  std::vector<Mask> bits;
  for (Mask rest = mask; rest != 0; rest &= rest - 1) bits.push_back(rest & (~rest + 1));
  std::vector<Mask> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bits.size()) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bits[i];
      rec(i + 1);
      blocks[b] &= ~bits[i];
    }
    blocks.push_back(bits[i]);
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

// Cartesian product over per-slot candidate lists.
void for_each_choice(const std::vector<const std::vector<TreePtr>*>& slots,
                     const std::function<void(const std::vector<TreePtr>&)>& visit) {
  std::vector<TreePtr> pick(slots.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      visit(pick);
      return;
    }
    for (const auto& t : *slots[i]) {
      pick[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
}

class LabeledTreeGenerator {
 public:
  explicit LabeledTreeGenerator(unsigned colors) : colors_(static_cast<int>(colors)) {}

  // Trees on the label set `mask` whose root is a leaf or has a color other
  // than `forbidden` (0 forbids nothing).
  const std::vector<TreePtr>& trees(Mask mask, int forbidden) {
    const auto key = std::make_pair(mask, forbidden);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<TreePtr> out;
    if (std::popcount(mask) == 1) {
      out.push_back(make_leaf(lowest_label(mask)));
    } else {
      for (int c = 1; c <= colors_; ++c) {
        if (c == forbidden) continue;
        for_each_set_partition(mask, [&](const std::vector<Mask>& blocks) {
          if (blocks.size() < 2) return;
          std::vector<const std::vector<TreePtr>*> slots;
          for (Mask b : blocks) slots.push_back(&trees(b, c));
          for_each_choice(slots, [&](const std::vector<TreePtr>& children) {
            out.push_back(make_inner(c, 0, children));
            require(++produced_ <= kMaxObjects, "labeled tree enumeration exceeds 10^7 objects");
          });
        });
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  int colors_;
  std::size_t produced_ = 0;
  std::map<std::pair<Mask, int>, std::vector<TreePtr>> memo_;
};

std::string sorted_join(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto& p : parts) out += p;
  return out;
}

// Ordered compositions of n into at least two positive parts.
void for_each_composition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> parts;
  std::function<void(unsigned)> rec = [&](unsigned rest) {
    if (rest == 0) {
      if (parts.size() >= 2) visit(parts);
      return;
    }
    for (unsigned p = 1; p <= rest; ++p) {
      if (parts.empty() && p == n) continue;
      parts.push_back(p);
      rec(rest - p);
      parts.pop_back();
    }
  };
  rec(n);
}

void for_each_code_choice(const std::vector<const std::vector<std::string>*>& slots,
                          const std::function<void(const std::vector<std::string>&)>& visit) {
  std::vector<std::string> pick(slots.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      visit(pick);
      return;
    }
    for (const auto& code : *slots[i]) {
      pick[i] = code;
      rec(i + 1);
    }
  };
  rec(0);
}

std::string chain_code(const TreeNode& node) {
  if (node.label > 0) {
    std::string code = "c" + std::to_string(node.label) + "[";
    for (const auto& child : node.children) code += chain_code(*child);
    return code + "]";
  }
  std::vector<std::string> parts;
  for (const auto& child : node.children) parts.push_back(chain_code(*child));
  return "j(" + sorted_join(std::move(parts)) + ")";
}

bool chain_increasing_from(const TreeNode& node, int floor) {
  if (node.label > 0) {
    if (node.label <= floor || node.children.size() > 1) return false;
    floor = node.label;
  } else if (node.children.size() != 2) {
    return false;
  }
  return std::all_of(node.children.begin(), node.children.end(),
                     [&](const TreePtr& c) { return chain_increasing_from(*c, floor); });
}

void collect_chain_labels(const TreeNode& node, std::vector<int>& out) {
  if (node.label > 0) out.push_back(node.label);
  for (const auto& c : node.children) collect_chain_labels(*c, out);
}

std::size_t junction_count(const TreeNode& node) {
  std::size_t n = node.label == 0 ? 1 : 0;
  for (const auto& c : node.children) n += junction_count(*c);
  return n;
}

class ChainTreeGenerator {
 public:
  const std::vector<TreePtr>& trees(Mask mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<TreePtr> out;
    // Root chain: it must carry the smallest label of its subtree.
    const Mask low = mask & (~mask + 1);
    const Mask rest = mask & ~low;
    if (rest == 0) {
      out.push_back(make_leaf(lowest_label(mask)));
    } else {
      for (const auto& t : trees(rest)) out.push_back(make_inner(0, lowest_label(mask), {t}));
      // Root junction: unordered split, the part holding the lowest label first.
      for (Mask sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
        const Mask first = sub | low;
        const Mask second = mask & ~first;
        if (second != 0) {
          for (const auto& a : trees(first)) {
            for (const auto& b : trees(second)) out.push_back(make_inner(1, 0, {a, b}));
          }
        }
        if (sub == 0) break;
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

 private:
  std::map<Mask, std::vector<TreePtr>> memo_;
};

}  // namespace

bool is_series_reduced(const TreeNode& root) {
  if (root.children.size() == 1) return false;
  return std::all_of(root.children.begin(), root.children.end(),
                     [](const TreePtr& c) { return is_series_reduced(*c); });
}

bool is_multipartite(const TreeNode& root, int colors) {
  if (root.is_leaf()) return root.color == 0;
  if (root.color < 1 || root.color > colors) return false;
  for (const auto& c : root.children) {
    if (!c->is_leaf() && c->color == root.color) return false;
    if (!is_multipartite(*c, colors)) return false;
  }
  return true;
}

std::vector<int> leaf_labels(const TreeNode& root) {
  if (root.is_leaf()) return {root.label};
  std::vector<int> out;
  for (const auto& c : root.children) {
    auto sub = leaf_labels(*c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

WeightPoly tree_weight(const TreeNode& root) {
  if (root.is_leaf()) return WeightPoly(1);
  WeightPoly w = weight_var(root.color, static_cast<int>(root.children.size()));
  for (const auto& c : root.children) w = w * tree_weight(*c);
  return w;
}

BigInt cyclic_arrangements(const TreeNode& root) {
  if (root.is_leaf()) return BigInt(1);
  BigInt w = factorial(static_cast<unsigned>(root.children.size() - 1));
  for (const auto& c : root.children) w *= cyclic_arrangements(*c);
  return w;
}

std::size_t inner_vertex_count(const TreeNode& root) {
  if (root.is_leaf()) return 0;
  std::size_t n = 1;
  for (const auto& c : root.children) n += inner_vertex_count(*c);
  return n;
}

std::string canonical_labeled_code(const TreeNode& root) {
  if (root.is_leaf()) return std::to_string(root.label) + ",";
  std::vector<std::string> parts;
  for (const auto& c : root.children) parts.push_back(canonical_labeled_code(*c));
  return std::to_string(root.color) + "(" + sorted_join(std::move(parts)) + ")";
}

LabeledEnumeration enum_labeled_trees(unsigned s, unsigned m) {
  require(s >= 1 && s <= 8, "enum_labeled_trees: s must be in 1..8");
  require(m >= 1 && m <= 4, "enum_labeled_trees: m must be in 1..4");
  LabeledTreeGenerator gen(m);
  const Mask full = static_cast<Mask>((1u << s) - 1);
  std::vector<int> expected_labels(s);
  std::iota(expected_labels.begin(), expected_labels.end(), 1);

  LabeledEnumeration result{BigInt(0), WeightPoly(), BigInt(0)};
  std::set<std::string> seen;
  for (const auto& tree : gen.trees(full, 0)) {
    auto labels = leaf_labels(*tree);
    std::sort(labels.begin(), labels.end());
    if (!is_series_reduced(*tree) || !is_multipartite(*tree, static_cast<int>(m)) || labels != expected_labels) {
      throw std::logic_error("enum_labeled_trees generated an invalid tree: " + canonical_labeled_code(*tree));
    }
    if (!seen.insert(canonical_labeled_code(*tree)).second) {
      throw std::logic_error("enum_labeled_trees generated a duplicate: " + canonical_labeled_code(*tree));
    }
    result.count += BigInt(1);
    result.weight += tree_weight(*tree);
    result.mobile_count += cyclic_arrangements(*tree);
  }
  return result;
}

BigInt enum_mobiles(unsigned s, unsigned m) {
  require(s >= 1 && s <= 6, "enum_mobiles: s must be in 1..6");
  require(m >= 1 && m <= 3, "enum_mobiles: m must be in 1..3");
  return enum_labeled_trees(s, m).mobile_count;
}

std::map<unsigned, BigInt> enum_unlabeled_trees(unsigned s) {
  require(s >= 1 && s <= 8, "enum_unlabeled_trees: s must be in 1..8");
  std::vector<std::vector<std::string>> by_leaves(s + 1);
  by_leaves[1] = {"L"};
  for (unsigned n = 2; n <= s; ++n) {
    std::set<std::string> codes;
    for_each_composition(n, [&](const std::vector<unsigned>& parts) {
      std::vector<const std::vector<std::string>*> slots;
      for (unsigned p : parts) slots.push_back(&by_leaves[p]);
      for_each_code_choice(slots, [&](const std::vector<std::string>& children) {
        codes.insert("(" + sorted_join(children) + ")");
      });
    });
    by_leaves[n].assign(codes.begin(), codes.end());
  }
  std::map<unsigned, BigInt> buckets;
  for (const auto& code : by_leaves[s]) {
    auto inner = static_cast<unsigned>(std::count(code.begin(), code.end(), '('));
    auto [it, inserted] = buckets.try_emplace(inner, BigInt(0));
    it->second += BigInt(1);
  }
  return buckets;
}

BigInt enum_unlabeled_colored_trees(unsigned s, unsigned m) {
  require(s >= 1 && s <= 6, "enum_unlabeled_colored_trees: s must be in 1..6");
  require(m >= 1 && m <= 3, "enum_unlabeled_colored_trees: m must be in 1..3");
  if (s == 1) return BigInt(1);
  // rooted[n][c]: codes of trees with n >= 2 leaves and root color c.
  std::vector<std::vector<std::vector<std::string>>> rooted(s + 1, std::vector<std::vector<std::string>>(m + 1));
  auto children_for = [&](unsigned n, unsigned parent_color) {
    std::vector<std::string> out;
    if (n == 1) return std::vector<std::string>{"L"};
    for (unsigned c = 1; c <= m; ++c) {
      if (c == parent_color) continue;
      out.insert(out.end(), rooted[n][c].begin(), rooted[n][c].end());
    }
    return out;
  };
  for (unsigned n = 2; n <= s; ++n) {
    for (unsigned c = 1; c <= m; ++c) {
      std::vector<std::vector<std::string>> candidates(n);
      for (unsigned p = 1; p < n; ++p) candidates[p] = children_for(p, c);
      std::set<std::string> codes;
      for_each_composition(n, [&](const std::vector<unsigned>& parts) {
        std::vector<const std::vector<std::string>*> slots;
        for (unsigned p : parts) slots.push_back(&candidates[p]);
        for_each_code_choice(slots, [&](const std::vector<std::string>& children) {
          codes.insert(std::to_string(c) + "(" + sorted_join(children) + ")");
        });
      });
      rooted[n][c].assign(codes.begin(), codes.end());
    }
  }
  std::size_t total = 0;
  for (unsigned c = 1; c <= m; ++c) total += rooted[s][c].size();
  return BigInt(total);
}

BigInt enum_chain_increasing(unsigned s, unsigned m) {
  require(s >= 1 && s <= 7, "enum_chain_increasing: s must be in 1..7");
  require(m <= 3, "enum_chain_increasing: m must be <= 3");
  ChainTreeGenerator gen;
  const Mask full = static_cast<Mask>((1u << s) - 1);
  std::vector<int> expected_labels(s);
  std::iota(expected_labels.begin(), expected_labels.end(), 1);

  BigInt total(0);
  std::set<std::string> seen;
  for (const auto& tree : gen.trees(full)) {
    std::vector<int> labels;
    collect_chain_labels(*tree, labels);
    std::sort(labels.begin(), labels.end());
    if (!chain_increasing_from(*tree, 0) || labels != expected_labels) {
      throw std::logic_error("enum_chain_increasing generated an invalid tree: " + chain_code(*tree));
    }
    if (!seen.insert(chain_code(*tree)).second) {
      throw std::logic_error("enum_chain_increasing generated a duplicate: " + chain_code(*tree));
    }
    total += pow(BigInt(m), static_cast<unsigned>(junction_count(*tree)));
  }
  return total;
}

}  // namespace seriesforge::oracle
