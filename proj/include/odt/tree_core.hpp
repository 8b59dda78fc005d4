#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "odt/mtree.hpp"
#include "odt/rules.hpp"
#include "odt/types.hpp"

namespace odt {

/// Tree shape with rule labels and empty leaves.
using BTree = MTree<RuleId, std::monostate>;

/// Branch nodes carry rules, leaves carry the rows of the dataset that reach them.
using DecisionTree = MTree<RuleId, Subset>;

/// Ordered distinct rule indices.
using Permutation = std::vector<RuleId>;

enum class Turn { Left, Right };

struct Step {
  RuleId rule = 0;
  Turn turn = Turn::Left;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Root-to-leaf sequence of rules and the turns taken at each.
using Path = std::vector<Step>;

inline BTree bt_leaf() { return BTree::leaf({}); }
inline BTree bt_node(BTree left, RuleId rule, BTree right) {
  return BTree::node(std::move(left), rule, std::move(right));
}

/// Branch labels breadth first, left child before right.
template <class L>
Permutation level_order(const MTree<RuleId, L>& t) {
  Permutation out;
  std::deque<const MTree<RuleId, L>*> queue{&t};
  while (!queue.empty()) {
    const auto* n = queue.front();
    queue.pop_front();
    if (n->is_leaf()) continue;
    out.push_back(n->label());
    queue.push_back(&n->left());
    queue.push_back(&n->right());
  }
  return out;
}

/// Inserts the rules of perm one at a time, descending left on +1 and right
/// on -1. Returns nullopt if a 0 entry is met or the result's level order
/// differs from perm.
std::optional<BTree> tree_from_permutation(const Permutation& perm, const AncestryMatrix& matrix);

/// Replaces every leaf by the path leading to it.
template <class L>
MTree<RuleId, Path> paths(const MTree<RuleId, L>& t, Path prefix = {}) {
  using PT = MTree<RuleId, Path>;
  if (t.is_leaf()) return PT::leaf(std::move(prefix));
  Path left = prefix;
  left.push_back({t.label(), Turn::Left});
  prefix.push_back({t.label(), Turn::Right});
  return PT::node(paths(t.left(), std::move(left)), t.label(), paths(t.right(), std::move(prefix)));
}

/// Keeps the rows of leaf_init lying on the path's side of every rule on it.
/// Throws std::invalid_argument when a step names a rule outside the table.
Subset path_reduce(const Subset& leaf_init, const Path& path, std::span<const Rule> rules, const Dataset& data);

/// Intersects every leaf with the region of its path.
DecisionTree downward_accumulate(const DecisionTree& t, std::span<const Rule> rules, const Dataset& data);
DecisionTree downward_accumulate(const DecisionTree& t, const SideTable& sides);

/// Shape of t with every leaf set to the whole dataset, then accumulated.
template <class L>
DecisionTree complete(const MTree<RuleId, L>& t, const SideTable& sides, const Subset& data) {
  return downward_accumulate(map_leaves([&](const L&) { return data; }, t), sides);
}

/// Drops the leaf payloads.
template <class B, class L>
MTree<B, std::monostate> shape_of(const MTree<B, L>& t) {
  return map_leaves([](const L&) { return std::monostate{}; }, t);
}

/// True iff every rule appears at most once and each descendant sits on the
/// side of each ancestor that the matrix allows.
template <class L>
bool is_proper(const MTree<RuleId, L>& t, const AncestryMatrix& matrix) {
  std::vector<RuleId> seen = branch_labels(t);
  std::vector<RuleId> sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto check = [&](const auto& self, const MTree<RuleId, L>& n, const Path& above) -> bool {
    if (n.is_leaf()) return true;
    for (const Step& s : above) {
      const int want = s.turn == Turn::Left ? 1 : -1;
      if (matrix(s.rule, n.label()) != want) return false;
    }
    Path l = above;
    l.push_back({n.label(), Turn::Left});
    Path r = above;
    r.push_back({n.label(), Turn::Right});
    return self(self, n.left(), l) && self(self, n.right(), r);
  };
  return check(check, t, {});
}

}  // namespace odt
