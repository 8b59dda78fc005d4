#include <gtest/gtest.h>

#include <random>
#include <set>

#include "odt/combinatorics.hpp"
#include "odt/generator.hpp"
#include "support/oracles.hpp"

using namespace odt;

TEST(Combinations, LexicographicOrderAndCount) {
  std::vector<std::vector<std::size_t>> seen;
  for_each_combination(4, 2, [&](const std::vector<std::size_t>& c) { seen.push_back(c); });
  EXPECT_EQ(seen, (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  std::size_t n = 0;
  for_each_combination(7, 0, [&](const std::vector<std::size_t>& c) {
    EXPECT_TRUE(c.empty());
    ++n;
  });
  EXPECT_EQ(n, 1u);
  n = 0;
  for_each_combination(3, 4, [&](const std::vector<std::size_t>&) { ++n; });
  EXPECT_EQ(n, 0u);
  EXPECT_EQ(binomial(66, 2), 2145u);
}

TEST(GenBtrees, EmptyAndSingleton) {
  const auto e = gen_btrees({}, AncestryMatrix(2));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(e[0].is_leaf());
  const auto s = gen_btrees({1}, AncestryMatrix(2));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], bt_node(bt_leaf(), 1, bt_leaf()));
}

TEST(GenBtrees, AllOneSideGivesFactorialChains) {
  const std::size_t expect[] = {1, 1, 2, 6, 24, 120};
  for (std::size_t k = 0; k <= 5; ++k) {
    const AncestryMatrix m = AncestryMatrix::one_sided(k);
    const auto trees = gen_btrees(iota_set(k), m);
    EXPECT_EQ(trees.size(), expect[k]);
    EXPECT_EQ(count_btrees(iota_set(k), m), expect[k]);
    EXPECT_EQ(oracle_kperms(m, k).entries.size(), expect[k]);
    for (const BTree& t : trees) EXPECT_EQ(depth(t), k);
  }
  EXPECT_EQ(gen_btrees(iota_set(4), AncestryMatrix::one_sided(4, -1)).size(), 24u);
}

TEST(GenBtrees, FourLinesGiveThreeTrees) {
  const auto rules = oracle::four_line_rules();
  const AncestryMatrix m = ancestry_matrix(rules);
  const auto trees = gen_btrees({0, 1, 2, 3}, m);
  const BTree L = bt_leaf();
  auto N = [](BTree l, RuleId r, BTree rr) { return bt_node(std::move(l), r, std::move(rr)); };
  ASSERT_EQ(trees.size(), 3u);
  EXPECT_EQ(trees[0], N(N(N(N(L, 1, L), 3, L), 0, L), 2, L));
  EXPECT_EQ(trees[1], N(N(N(L, 1, L), 3, N(L, 0, L)), 2, L));
  EXPECT_EQ(trees[2], N(N(L, 1, L), 3, N(N(L, 0, L), 2, L)));
  const OracleResult o = oracle_kperms(rules, 4);
  EXPECT_EQ(o.permutations_tried, 24u);
  EXPECT_EQ(o.entries.size(), 3u);
}

TEST(GenBtrees, CountNeverExceedsFactorialAndTreesAreProper) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> e(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 5;
    AncestryMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j) m.set(i, j, e(rng));
    const auto trees = gen_btrees(iota_set(k), m);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= i;
    EXPECT_LE(trees.size(), fact);
    std::set<Permutation> codes;
    for (const BTree& t : trees) {
      EXPECT_TRUE(is_proper(t, m));
      const Permutation p = level_order(t);
      codes.insert(p);
      const auto back = tree_from_permutation(p, m);
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, t);
    }
    EXPECT_EQ(codes.size(), trees.size());
  }
}

TEST(OracleKperms, ZeroK) {
  const OracleResult o = oracle_kperms(AncestryMatrix(3), 0);
  ASSERT_EQ(o.entries.size(), 1u);
  EXPECT_TRUE(o.entries[0].permutation.empty());
  EXPECT_TRUE(o.entries[0].tree.is_leaf());
}

TEST(OracleKperms, MatchesGeneratorOnRandomData) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset d = oracle::random_dataset(rng, 7);
    const auto rules = enumerate_hyperplane_rules(d).rules;
    const AncestryMatrix m = ancestry_matrix(rules);
    const OracleResult o = oracle_kperms(rules, 2);
    std::set<Permutation> oracle;
    for (const auto& e : o.entries) {
      oracle.insert(e.permutation);
      EXPECT_EQ(level_order(e.tree), e.permutation);
    }
    std::set<Permutation> gen;
    for_each_combination(rules.size(), 2, [&](const std::vector<std::size_t>& c) {
      for (const BTree& t : gen_btrees(c, m)) gen.insert(level_order(t));
    });
    EXPECT_EQ(oracle, gen);
  }
}

TEST(GenDtrees, EmptyAndSingletonIntersectData) {
  const Dataset d = make_dataset({{0, 0}, {2, 2}, {5, 1}}, {0, 1, 1});
  const std::vector<Rule> rules{make_axis_rule(0, 0, 2, {{2, 2}})};
  const AncestryMatrix m = ancestry_matrix(rules);
  const SideTable sides(rules, d);
  const auto e = gen_dtrees({}, m, sides, Subset{0, 2});
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], DecisionTree::leaf({0, 2}));
  const auto s = gen_dtrees({0}, m, sides, Subset{0, 2});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], DecisionTree::node(DecisionTree::leaf({0}), 0, DecisionTree::leaf({2})));
}

TEST(GenDtrees, LeavesMatchPointRoutingAndShapesMatchGenBtrees) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Dataset d = oracle::random_dataset(rng, 10);
    auto all_rules = enumerate_axis_rules(d).rules;
    std::vector<Rule> rules(all_rules.begin(), all_rules.begin() + 4);
    for (std::size_t i = 0; i < rules.size(); ++i) rules[i].id = i;
    const AncestryMatrix m = ancestry_matrix(rules);
    const IndexSet idx{0, 1, 2};
    const auto shapes = gen_btrees(idx, m);
    const auto trees = gen_dtrees(idx, m, rules, d);
    ASSERT_EQ(trees.size(), shapes.size());
    for (std::size_t i = 0; i < trees.size(); ++i) {
      EXPECT_EQ(shape_of(trees[i]), shapes[i]);
      EXPECT_EQ(leaves(trees[i]), oracle::routed_leaves(shapes[i], rules, d));
      EXPECT_EQ(trees[i], downward_accumulate(map_leaves([&](const std::monostate&) { return d.all(); }, shapes[i]),
                                              rules, d));
    }
  }
}

namespace {

bool passes(const DecisionTree& t, std::size_t min_leaf, std::optional<std::size_t> max_depth) {
  if (max_depth && depth(t) > *max_depth) return false;
  for (const Subset& s : leaves(t))
    if (s.size() < min_leaf) return false;
  return true;
}

}  // namespace

TEST(GenDtreesFiltered, VacuousAndUnsatisfiable) {
  std::mt19937_64 rng(51);
  const Dataset d = oracle::random_dataset(rng, 9);
  const auto rules = enumerate_axis_rules(d).rules;
  const AncestryMatrix m = ancestry_matrix(rules);
  const SideTable sides(rules, d);
  const IndexSet idx{0, 3, 5};
  EXPECT_EQ(gen_dtrees_filtered(idx, m, sides, d.all(), 0, std::nullopt), gen_dtrees(idx, m, sides, d.all()));
  EXPECT_TRUE(gen_dtrees_filtered(idx, m, sides, d.all(), d.size() + 1, std::nullopt).empty());
  EXPECT_TRUE(gen_dtrees_filtered(idx, m, sides, d.all(), 0, 1).empty());
}

TEST(GenDtreesFiltered, EqualsPostFilter) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Dataset d = oracle::random_dataset(rng, 10);
    const auto rules = enumerate_axis_rules(d).rules;
    const AncestryMatrix m = ancestry_matrix(rules);
    const SideTable sides(rules, d);
    const std::size_t min_leaf = trial % 3;
    const std::optional<std::size_t> max_depth =
        trial % 4 == 0 ? std::nullopt : std::optional<std::size_t>(1 + trial % 3);
    for_each_combination(std::min<std::size_t>(rules.size(), 7), 3, [&](const std::vector<std::size_t>& c) {
      std::vector<DecisionTree> expect;
      for (const DecisionTree& t : gen_dtrees(c, m, sides, d.all()))
        if (passes(t, min_leaf, max_depth)) expect.push_back(t);
      EXPECT_EQ(gen_dtrees_filtered(c, m, sides, d.all(), min_leaf, max_depth), expect);
    });
  }
}
