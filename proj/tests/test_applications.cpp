#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "odt/applications.hpp"
#include "support/oracles.hpp"

using namespace odt;

TEST(Bsp, SingleSegmentHasThreeNodes) {
  const std::vector<SceneSegment> scene{{{0, 0}, {1, 1}, 0}};
  const BspResult r = solve_bsp(scene);
  EXPECT_EQ(r.nodes, 3u);
  EXPECT_EQ(branch_count(r.tree), 1u);
}

TEST(Bsp, EmptyOrDegenerateSceneThrows) {
  EXPECT_THROW(solve_bsp(std::vector<SceneSegment>{}), std::invalid_argument);
  const std::vector<SceneSegment> dot{{{1, 1}, {1, 1}, 0}};
  EXPECT_THROW(solve_bsp(dot), std::invalid_argument);
}

TEST(Bsp, CrossingPairBothRootChoices) {
  // A long horizontal segment and a short vertical one below it: the
  // vertical line cuts the horizontal segment, the horizontal line misses
  // the vertical one.
  const std::vector<SceneSegment> scene{{{0, 0}, {4, 0}, 0}, {{2, -3}, {2, -1}, 1}};
  BspTree h = bsp_from_order(scene, std::vector<std::size_t>{0, 1});
  BspTree v = bsp_from_order(scene, std::vector<std::size_t>{1, 0});
  EXPECT_EQ(branch_count(h) * 2 + 1, 5u);
  EXPECT_EQ(branch_count(v) * 2 + 1, 7u);
  EXPECT_EQ(solve_bsp(scene).nodes, 5u);

  // Two segments that truly cross: each line cuts the other, so any root
  // leaves two fragments.
  const std::vector<SceneSegment> x{{{0, 0}, {4, 4}, 0}, {{0, 4}, {4, 0}, 1}};
  EXPECT_EQ(solve_bsp(x).nodes, 7u);
}

TEST(Bsp, LeavesHoldNoFragmentsAndEverySegmentIsUsed) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto scene = oracle::random_scene(rng, 4);
    const BspResult r = solve_bsp(scene);
    for (const auto& l : leaves(r.tree)) EXPECT_TRUE(l.empty());
    std::set<std::size_t> used;
    for (const auto& s : branch_labels(r.tree)) used.insert(s.payload);
    EXPECT_EQ(used.size(), scene.size());
    EXPECT_EQ(r.nodes, branch_count(r.tree) * 2 + 1);
  }
}

TEST(Bsp, NoWorseThanRandomOrdersAndEqualToExhaustive) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const auto scene = oracle::random_scene(rng, 1 + trial % 4);
    const BspResult r = solve_bsp(scene);
    EXPECT_LE(r.nodes, random_bsp_min(scene, 50, trial));
    EXPECT_EQ(r.nodes, oracle::exhaustive_bsp(scene).best);
  }
}

TEST(Bsp, RandomBaselineIsReproducible) {
  std::mt19937_64 rng(15);
  const auto scene = oracle::random_scene(rng, 5);
  EXPECT_EQ(random_bsp_min(scene, 30, 99), random_bsp_min(scene, 30, 99));
}

TEST(Mcmp, SingleMatrixCostsNothing) {
  const std::vector<MatrixDim> one{{3, 4}};
  const McmpResult r = solve_mcmp(one);
  EXPECT_EQ(r.cost.value, 0.0);
  EXPECT_EQ(parenthesize(r.tree), "A");
}

TEST(Mcmp, ClassicExample) {
  const std::vector<std::size_t> sizes{10, 30, 5, 60};
  const auto dims = chain_from_sizes(sizes);
  const McmpResult r = solve_mcmp(dims);
  EXPECT_EQ(r.cost.value, 4500.0);
  EXPECT_EQ(r.cost.value, oracle::chain_cost_dp(sizes));
  EXPECT_EQ(parenthesize(r.tree), "((AB)C)");
  EXPECT_EQ(r.cost.dims, (MatrixDim{10, 60}));
}

TEST(Mcmp, CatalanManyTrees) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<MatrixDim> dims(n, MatrixDim{2, 2});
    const auto trees = all_parenthesisations(dims);
    EXPECT_EQ(trees.size(), oracle::catalan(n - 1)) << n;
    std::set<std::string> distinct;
    for (const auto& t : trees) distinct.insert(parenthesize(t));
    EXPECT_EQ(distinct.size(), trees.size());
  }
  std::vector<MatrixDim> four(4, MatrixDim{1, 1});
  std::set<std::string> names;
  for (const auto& t : all_parenthesisations(four)) names.insert(parenthesize(t));
  EXPECT_EQ(names, (std::set<std::string>{"(A(B(CD)))", "(A((BC)D))", "((AB)(CD))", "((A(BC))D)", "(((AB)C)D)"}));
}

TEST(Mcmp, MatchesCubicTableOnRandomChains) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::size_t> sizes(2 + trial % 8);
    for (auto& s : sizes) s = size(rng);
    EXPECT_EQ(solve_mcmp(chain_from_sizes(sizes)).cost.value, oracle::chain_cost_dp(sizes));
  }
}

TEST(Mcmp, BadInput) {
  EXPECT_THROW(chain_from_sizes(std::vector<std::size_t>{5}), std::invalid_argument);
  EXPECT_THROW(chain_from_sizes(std::vector<std::size_t>{5, 0, 2}), std::invalid_argument);
  const std::vector<MatrixDim> bad{{2, 3}, {4, 5}};
  EXPECT_THROW(solve_mcmp(bad), std::invalid_argument);
  EXPECT_THROW(solve_mcmp(std::vector<MatrixDim>{}), std::invalid_argument);
}

namespace {

Dataset seven_points() {
  return make_dataset({{1, 3}, {2, 6}, {3, 1}, {4, 4}, {5, 7}, {6, 2}, {7, 5}}, std::vector<int>(7, 0));
}

void dims_by_level(const KdTree& t, std::size_t level, std::map<std::size_t, std::set<std::size_t>>& out) {
  if (t.is_leaf()) return;
  out[level].insert(t.label().dim);
  dims_by_level(t.left(), level + 1, out);
  dims_by_level(t.right(), level + 1, out);
}

}  // namespace

TEST(Kd, SinglePoint) {
  const Dataset d = make_dataset({{1, 1}}, {0});
  EXPECT_TRUE(solve_kd(d, 0).tree.is_leaf());
  const KdResult r = solve_kd(d, 1);
  ASSERT_FALSE(r.tree.is_leaf());
  EXPECT_EQ(r.tree.label().pivot, 0u);
  EXPECT_EQ(r.cost.value, 0.0);
}

TEST(Kd, SevenPointsSplitByLevel) {
  const Dataset d = seven_points();
  const KdResult r = solve_kd(d, 3);
  EXPECT_TRUE(level_consistent(r.tree, 2));
  std::map<std::size_t, std::set<std::size_t>> dims;
  dims_by_level(r.tree, 0, dims);
  EXPECT_EQ(dims[0], (std::set<std::size_t>{0}));
  EXPECT_EQ(dims[1], (std::set<std::size_t>{1}));
  EXPECT_EQ(dims[2], (std::set<std::size_t>{0}));
  EXPECT_EQ(r.cost.value, 0.0);
  EXPECT_EQ(r.tree.label().pivot, 3u);
}

TEST(Kd, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Dataset d = oracle::random_dataset(rng, 1 + trial % 8, 2, 6);
    for (std::size_t depth = 0; depth <= 3; ++depth) {
      const KdResult r = solve_kd(d, depth);
      EXPECT_TRUE(level_consistent(r.tree, d.dim));
      EXPECT_EQ(r.cost.value, oracle::exhaustive_kd(d, d.all(), 0, depth));
    }
  }
}

TEST(Kd, LevelConsistencyDetectsWrongDimension) {
  const KdTree bad = KdTree::node(KdTree::leaf({}), KdSplit{0, 1, 0.0}, KdTree::leaf({}));
  EXPECT_FALSE(level_consistent(bad, 2));
}
