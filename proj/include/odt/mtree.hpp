#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace odt {

/// Immutable binary tree whose leaves and branch nodes carry different types.
///
/// Nodes are shared, so copying a tree is O(1) and subtrees can be reused by
/// several parents. Construction is bottom-up through leaf() and node().
template <class Branch, class Leaf>
class MTree {
 public:
  using branch_type = Branch;
  using leaf_type = Leaf;

  static MTree leaf(Leaf payload) { return MTree(std::make_shared<const Rep>(Rep{std::move(payload)})); }

  static MTree node(MTree left, Branch label, MTree right) {
    return MTree(std::make_shared<const Rep>(Rep{NodeRep{std::move(left), std::move(label), std::move(right)}}));
  }

  bool is_leaf() const { return std::holds_alternative<Leaf>(rep_->value); }

  const Leaf& payload() const {
    assert(is_leaf());
    return std::get<Leaf>(rep_->value);
  }
  const Branch& label() const { return as_node().label; }
  const MTree& left() const { return as_node().left; }
  const MTree& right() const { return as_node().right; }

  friend bool operator==(const MTree& a, const MTree& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.payload() == b.payload();
    return a.label() == b.label() && a.left() == b.left() && a.right() == b.right();
  }

 private:
  struct NodeRep;
  struct Rep;

  explicit MTree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  const NodeRep& as_node() const {
    assert(!is_leaf());
    return std::get<NodeRep>(rep_->value);
  }

  std::shared_ptr<const Rep> rep_;
};

template <class Branch, class Leaf>
struct MTree<Branch, Leaf>::NodeRep {
  MTree left;
  Branch label;
  MTree right;
};

template <class Branch, class Leaf>
struct MTree<Branch, Leaf>::Rep {
  std::variant<Leaf, NodeRep> value;
};

/// Catamorphism: replaces leaves by on_leaf and branch nodes by on_node.
template <class B, class L, class OnLeaf, class OnNode>
auto fold(const MTree<B, L>& t, OnLeaf&& on_leaf, OnNode&& on_node)
    -> decltype(on_leaf(std::declval<const L&>())) {
  if (t.is_leaf()) return on_leaf(t.payload());
  auto l = fold(t.left(), on_leaf, on_node);
  auto r = fold(t.right(), on_leaf, on_node);
  return on_node(std::move(l), t.label(), std::move(r));
}

/// Applies f to every leaf payload; shape and branch labels are unchanged.
template <class B, class L, class F>
auto map_leaves(F&& f, const MTree<B, L>& t) {
  using L2 = std::decay_t<decltype(f(std::declval<const L&>()))>;
  using T2 = MTree<B, L2>;
  if (t.is_leaf()) return T2::leaf(f(t.payload()));
  return T2::node(map_leaves(f, t.left()), t.label(), map_leaves(f, t.right()));
}

template <class B, class L, class F>
auto map_branches(F&& f, const MTree<B, L>& t) {
  using B2 = std::decay_t<decltype(f(std::declval<const B&>()))>;
  using T2 = MTree<B2, L>;
  if (t.is_leaf()) return T2::leaf(t.payload());
  return T2::node(map_branches(f, t.left()), f(t.label()), map_branches(f, t.right()));
}

/// Number of branch nodes on the longest root-to-leaf path; a leaf has depth 0.
template <class B, class L>
std::size_t depth(const MTree<B, L>& t) {
  if (t.is_leaf()) return 0;
  return 1 + std::max(depth(t.left()), depth(t.right()));
}

template <class B, class L>
std::size_t branch_count(const MTree<B, L>& t) {
  if (t.is_leaf()) return 0;
  return 1 + branch_count(t.left()) + branch_count(t.right());
}

/// Leaf payloads in left-to-right order.
template <class B, class L>
std::vector<L> leaves(const MTree<B, L>& t) {
  std::vector<L> out;
  auto walk = [&out](const auto& self, const MTree<B, L>& n) -> void {
    if (n.is_leaf()) {
      out.push_back(n.payload());
      return;
    }
    self(self, n.left());
    self(self, n.right());
  };
  walk(walk, t);
  return out;
}

/// Branch labels in pre-order.
template <class B, class L>
std::vector<B> branch_labels(const MTree<B, L>& t) {
  std::vector<B> out;
  auto walk = [&out](const auto& self, const MTree<B, L>& n) -> void {
    if (n.is_leaf()) return;
    out.push_back(n.label());
    self(self, n.left());
    self(self, n.right());
  };
  walk(walk, t);
  return out;
}

}  // namespace odt
