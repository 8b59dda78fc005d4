#include "odt/tree_core.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace odt {

namespace {

struct Slot {
  RuleId rule;
  int left = -1;
  int right = -1;
};

BTree build(const std::vector<Slot>& slots, int at) {
  if (at < 0) return bt_leaf();
  const Slot& s = slots[static_cast<std::size_t>(at)];
  return bt_node(build(slots, s.left), s.rule, build(slots, s.right));
}

// A leaf keeps the part of its payload inside the region reached so far.
DecisionTree accumulate(const DecisionTree& t, const SideTable& sides, const Subset& region) {
  if (t.is_leaf()) {
    Subset out;
    std::set_intersection(t.payload().begin(), t.payload().end(), region.begin(), region.end(),
                          std::back_inserter(out));
    return DecisionTree::leaf(std::move(out));
  }
  const RuleId r = t.label();
  return DecisionTree::node(accumulate(t.left(), sides, sides.positive_part(r, region)), r,
                            accumulate(t.right(), sides, sides.negative_part(r, region)));
}

}  // namespace

std::optional<BTree> tree_from_permutation(const Permutation& perm, const AncestryMatrix& matrix) {
  if (perm.empty()) return bt_leaf();
  std::vector<Slot> slots{{perm[0]}};
  for (std::size_t k = 1; k < perm.size(); ++k) {
    const RuleId j = perm[k];
    int at = 0;
    while (true) {
      Slot& s = slots[static_cast<std::size_t>(at)];
      const int e = matrix(s.rule, j);
      if (e == 0) return std::nullopt;
      int& next = e > 0 ? s.left : s.right;
      if (next < 0) {
        next = static_cast<int>(slots.size());
        slots.push_back({j});
        break;
      }
      at = next;
    }
  }
  BTree t = build(slots, 0);
  if (level_order(t) != perm) return std::nullopt;
  return t;
}

Subset path_reduce(const Subset& leaf_init, const Path& path, std::span<const Rule> rules, const Dataset& data) {
  for (const Step& s : path) {
    if (s.rule >= rules.size()) {
      throw std::invalid_argument("path_reduce: path refers to unknown rule " + std::to_string(s.rule));
    }
  }
  Subset out;
  for (std::size_t p : leaf_init) {
    bool keep = true;
    for (const Step& s : path) {
      const bool pos = classify(rules[s.rule], data.points[p]) == Sign::Positive;
      if (pos != (s.turn == Turn::Left)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(p);
  }
  return out;
}

DecisionTree downward_accumulate(const DecisionTree& t, const SideTable& sides) {
  Subset everything(sides.point_count());
  for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = i;
  return accumulate(t, sides, everything);
}

DecisionTree downward_accumulate(const DecisionTree& t, std::span<const Rule> rules, const Dataset& data) {
  for (RuleId r : branch_labels(t)) {
    if (r >= rules.size()) throw std::invalid_argument("downward_accumulate: unknown rule " + std::to_string(r));
  }
  return downward_accumulate(t, SideTable(rules, data));
}

}  // namespace odt
