#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "odt/generator.hpp"
#include "odt/tree_core.hpp"
#include "support/oracles.hpp"

using namespace odt;

namespace {

BTree leaf() { return bt_leaf(); }
BTree node(BTree l, RuleId r, BTree rr) { return bt_node(std::move(l), r, std::move(rr)); }

// 3x3 matrix in which rule 1 may hold 2 on the left and 3 on the right,
// indexed 0..3 with row 0 unused.
AncestryMatrix three_rule_matrix() {
  return AncestryMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 1, -1}, {0, -1, 0, 1}, {0, 1, 1, 0}});
}

}  // namespace

TEST(LevelOrder, BalancedTree) {
  EXPECT_EQ(level_order(node(node(leaf(), 2, leaf()), 1, node(leaf(), 3, leaf()))), (Permutation{1, 2, 3}));
}

TEST(LevelOrder, LeafIsEmpty) { EXPECT_TRUE(level_order(leaf()).empty()); }

TEST(LevelOrder, Chain) {
  EXPECT_EQ(level_order(node(node(node(leaf(), 3, leaf()), 2, leaf()), 1, leaf())), (Permutation{1, 2, 3}));
}

TEST(LevelOrder, LeftSubtreeBeforeRightAtEachLevel) {
  const BTree t = node(node(leaf(), 4, node(leaf(), 5, leaf())), 1, node(node(leaf(), 6, leaf()), 2, leaf()));
  EXPECT_EQ(level_order(t), (Permutation{1, 4, 2, 5, 6}));
}

TEST(TreeFromPermutation, EmptyGivesLeaf) {
  const auto t = tree_from_permutation({}, AncestryMatrix(3));
  ASSERT_TRUE(t);
  EXPECT_TRUE(t->is_leaf());
}

TEST(TreeFromPermutation, ThreeRuleExample) {
  const auto t = tree_from_permutation({1, 2, 3}, three_rule_matrix());
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, node(node(leaf(), 2, leaf()), 1, node(leaf(), 3, leaf())));
}

TEST(TreeFromPermutation, ZeroEntryRejects) {
  AncestryMatrix m = three_rule_matrix();
  m.set(1, 2, 0);
  EXPECT_FALSE(tree_from_permutation({1, 2, 3}, m));
}

TEST(TreeFromPermutation, NonCanonicalOrderRejects) {
  // [1,3,2] inserts the same tree as [1,2,3] but is not its level order.
  EXPECT_FALSE(tree_from_permutation({1, 3, 2}, three_rule_matrix()));
}

TEST(TreeFromPermutation, MatchesBruteForceOverAllPermutations) {
  const AncestryMatrix m = AncestryMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {1, 1, 0}});
  std::set<Permutation> valid;
  Permutation p{0, 1, 2};
  do {
    if (auto t = tree_from_permutation(p, m)) {
      valid.insert(p);
      EXPECT_TRUE(is_proper(*t, m));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::set<Permutation> generated;
  for (const BTree& t : gen_btrees({0, 1, 2}, m)) generated.insert(level_order(t));
  EXPECT_EQ(valid, generated);
  // 0 cannot be the root (no relation to 2), so every valid permutation starts elsewhere.
  for (const Permutation& v : valid) EXPECT_NE(v.front(), 0u);
}

TEST(MapLeaves, IdentityAndConstant) {
  const DecisionTree t = DecisionTree::node(DecisionTree::leaf({0, 1}), 3,
                                            DecisionTree::node(DecisionTree::leaf({2}), 4, DecisionTree::leaf({})));
  EXPECT_EQ(map_leaves([](const Subset& s) { return s; }, t), t);
  const DecisionTree e = map_leaves([](const Subset&) { return Subset{}; }, t);
  EXPECT_EQ(branch_labels(e), branch_labels(t));
  for (const Subset& s : leaves(e)) EXPECT_TRUE(s.empty());
}

TEST(MapLeaves, IntersectWithHalfspace) {
  const Dataset d = make_dataset({{0, 0}, {5, 5}, {9, 1}}, {0, 1, 0});
  const std::vector<Rule> rules{make_axis_rule(0, 0, 4.0)};
  const DecisionTree t = DecisionTree::node(DecisionTree::leaf(d.all()), 0, DecisionTree::leaf(d.all()));
  const DecisionTree f = map_leaves(
      [&](const Subset& s) {
        Subset out;
        for (std::size_t i : s)
          if (classify(rules[0], d.points[i]) == Sign::Positive) out.push_back(i);
        return out;
      },
      t);
  EXPECT_EQ(leaves(f), (std::vector<Subset>{{0}, {0}}));
}

TEST(Paths, LeafHasEmptyPath) {
  const auto p = paths(DecisionTree::leaf({1}));
  ASSERT_TRUE(p.is_leaf());
  EXPECT_TRUE(p.payload().empty());
}

TEST(Paths, SingleNode) {
  const auto p = paths(DecisionTree::node(DecisionTree::leaf({}), 7, DecisionTree::leaf({})));
  EXPECT_EQ(p.left().payload(), (Path{{7, Turn::Left}}));
  EXPECT_EQ(p.right().payload(), (Path{{7, Turn::Right}}));
}

TEST(Paths, FiveBranchTree) {
  // r1 at the root; r2 (with r4 below-left) on the left; r3 (with r5 below-right) on the right.
  const BTree t = node(node(node(leaf(), 4, leaf()), 2, leaf()), 1, node(leaf(), 3, node(leaf(), 5, leaf())));
  const auto p = paths(t);
  const auto ls = leaves(p);
  ASSERT_EQ(ls.size(), 6u);
  using enum Turn;
  EXPECT_EQ(ls[0], (Path{{1, Left}, {2, Left}, {4, Left}}));
  EXPECT_EQ(ls[1], (Path{{1, Left}, {2, Left}, {4, Right}}));
  EXPECT_EQ(ls[2], (Path{{1, Left}, {2, Right}}));
  EXPECT_EQ(ls[3], (Path{{1, Right}, {3, Left}}));
  EXPECT_EQ(ls[4], (Path{{1, Right}, {3, Right}, {5, Left}}));
  EXPECT_EQ(ls[5], (Path{{1, Right}, {3, Right}, {5, Right}}));
  EXPECT_EQ(branch_labels(p), branch_labels(t));
  EXPECT_EQ(depth(p), depth(t));
}

TEST(PathReduce, Cases) {
  std::mt19937_64 rng(2);
  const Dataset d = oracle::random_dataset(rng, 20);
  const std::vector<Rule> rules{make_axis_rule(0, 0, 15), make_hyperplane_rule(1, {1, 1}, -30)};
  const Subset all = d.all();
  EXPECT_EQ(path_reduce(all, {}, rules, d), all);
  Subset pos;
  for (std::size_t i : all)
    if (d.points[i][0] <= 15) pos.push_back(i);
  EXPECT_EQ(path_reduce(all, {{0, Turn::Left}}, rules, d), pos);
  Subset both;
  for (std::size_t i : all)
    if (d.points[i][0] <= 15 && d.points[i][0] + d.points[i][1] - 30 < -kEpsilon) both.push_back(i);
  EXPECT_EQ(path_reduce(all, {{0, Turn::Left}, {1, Turn::Right}}, rules, d), both);
  EXPECT_EQ(path_reduce(all, {{1, Turn::Right}, {0, Turn::Left}}, rules, d), both);
  EXPECT_THROW(path_reduce(all, {{2, Turn::Left}}, rules, d), std::invalid_argument);
}

TEST(DownwardAccumulate, LeafUnchanged) {
  const Dataset d = make_dataset({{0, 0}, {1, 1}}, {0, 1});
  const std::vector<Rule> rules{make_axis_rule(0, 0, 0.5)};
  EXPECT_EQ(downward_accumulate(DecisionTree::leaf(d.all()), rules, d), DecisionTree::leaf(d.all()));
}

TEST(DownwardAccumulate, OneRulePartitions) {
  const Dataset d = make_dataset({{0, 0}, {1, 1}, {0.5, 3}}, {0, 1, 0});
  const std::vector<Rule> rules{make_axis_rule(0, 0, 0.5)};
  const DecisionTree t = DecisionTree::node(DecisionTree::leaf(d.all()), 0, DecisionTree::leaf(d.all()));
  const DecisionTree a = downward_accumulate(t, rules, d);
  EXPECT_EQ(a.left().payload(), (Subset{0, 2}));
  EXPECT_EQ(a.right().payload(), (Subset{1}));
}

TEST(DownwardAccumulate, EqualsPathsThenReduceAndPointRouting) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Dataset d = oracle::random_dataset(rng, 15);
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::vector<Point> pts{d.points[2 * i], d.points[2 * i + 1]};
      if (auto h = hyperplane_through(pts))
        rules.push_back(Rule{rules.size(), *h, pts});
      else
        rules.push_back(make_axis_rule(rules.size(), 0, d.points[2 * i][0], {d.points[2 * i]}));
    }
    const AncestryMatrix m = ancestry_matrix(rules);
    for (const BTree& shape : gen_btrees({0, 1, 2}, m)) {
      const DecisionTree full = map_leaves([&](const std::monostate&) { return d.all(); }, shape);
      const DecisionTree acc = downward_accumulate(full, rules, d);
      const auto ps = leaves(paths(full));
      const auto got = leaves(acc);
      ASSERT_EQ(ps.size(), got.size());
      for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(got[i], path_reduce(d.all(), ps[i], rules, d));
      EXPECT_EQ(got, oracle::routed_leaves(shape, rules, d));
      EXPECT_EQ(branch_labels(acc), branch_labels(shape));
    }
  }
}

TEST(IsProper, DetectsWrongSide) {
  const AncestryMatrix m = three_rule_matrix();
  EXPECT_TRUE(is_proper(node(node(leaf(), 2, leaf()), 1, node(leaf(), 3, leaf())), m));
  EXPECT_FALSE(is_proper(node(node(leaf(), 3, leaf()), 1, node(leaf(), 2, leaf())), m));
  EXPECT_FALSE(is_proper(node(node(leaf(), 2, leaf()), 2, leaf()), m));
}
