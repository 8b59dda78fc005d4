#include "odt/generator.hpp"

#include <algorithm>
#include <iterator>

#include "odt/combinatorics.hpp"

namespace odt {

namespace {

Subset intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DecisionTree restrict(const DecisionTree& t, const Subset& region) {
  return map_leaves([&](const Subset& s) { return intersect(s, region); }, t);
}

}  // namespace

std::vector<BTree> gen_btrees(const IndexSet& indices, const AncestryMatrix& matrix) {
  if (indices.empty()) return {bt_leaf()};
  std::vector<BTree> out;
  for (const SplitTriple& t : splits_generic(indices, matrix)) {
    const auto us = gen_btrees(t.left, matrix);
    const auto vs = gen_btrees(t.right, matrix);
    for (const BTree& u : us)
      for (const BTree& v : vs) out.push_back(bt_node(u, t.root, v));
  }
  return out;
}

std::size_t count_btrees(const IndexSet& indices, const AncestryMatrix& matrix) {
  if (indices.empty()) return 1;
  std::size_t n = 0;
  for (const SplitTriple& t : splits_generic(indices, matrix)) {
    n += count_btrees(t.left, matrix) * count_btrees(t.right, matrix);
  }
  return n;
}

std::vector<DecisionTree> gen_dtrees(const IndexSet& indices, const AncestryMatrix& matrix, const SideTable& sides,
                                     const Subset& data) {
  if (indices.empty()) return {DecisionTree::leaf(data)};
  if (indices.size() == 1) {
    const RuleId r = indices.front();
    return {DecisionTree::node(DecisionTree::leaf(sides.positive_part(r, data)), r,
                               DecisionTree::leaf(sides.negative_part(r, data)))};
  }
  std::vector<DecisionTree> out;
  for (const SplitTriple& t : splits_generic(indices, matrix)) {
    const Subset pos = sides.positive_part(t.root, data);
    const Subset neg = sides.negative_part(t.root, data);
    const auto us = gen_dtrees(t.left, matrix, sides, data);
    const auto vs = gen_dtrees(t.right, matrix, sides, data);
    for (const DecisionTree& u : us)
      for (const DecisionTree& v : vs) out.push_back(DecisionTree::node(restrict(u, pos), t.root, restrict(v, neg)));
  }
  return out;
}

std::vector<DecisionTree> gen_dtrees(const IndexSet& indices, const AncestryMatrix& matrix,
                                     std::span<const Rule> rules, const Dataset& data) {
  return gen_dtrees(indices, matrix, SideTable(rules, data), data.all());
}

std::vector<DecisionTree> gen_dtrees_filtered(const IndexSet& indices, const AncestryMatrix& matrix,
                                              const SideTable& sides, const Subset& data, std::size_t min_leaf,
                                              std::optional<std::size_t> max_depth) {
  if (indices.empty()) {
    if (data.size() < min_leaf) return {};
    return {DecisionTree::leaf(data)};
  }
  if (max_depth && *max_depth == 0) return {};
  const std::optional<std::size_t> below = max_depth ? std::optional<std::size_t>(*max_depth - 1) : std::nullopt;
  std::vector<DecisionTree> out;
  for (const SplitTriple& t : splits_generic(indices, matrix)) {
    const auto us = gen_dtrees_filtered(t.left, matrix, sides, sides.positive_part(t.root, data), min_leaf, below);
    if (us.empty()) continue;
    const auto vs = gen_dtrees_filtered(t.right, matrix, sides, sides.negative_part(t.root, data), min_leaf, below);
    for (const DecisionTree& u : us)
      for (const DecisionTree& v : vs) out.push_back(DecisionTree::node(u, t.root, v));
  }
  return out;
}

OracleResult oracle_kperms(std::size_t n_rules, std::size_t k, const MatrixSupply& supply) {
  OracleResult result;
  for_each_combination(n_rules, k, [&](const std::vector<std::size_t>& combo) {
    const AncestryMatrix local = supply(combo);
    Permutation perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    do {
      ++result.permutations_tried;
      auto tree = tree_from_permutation(perm, local);
      if (!tree) continue;
      auto to_global = [&](RuleId local_id) { return combo[local_id]; };
      Permutation global(k);
      std::transform(perm.begin(), perm.end(), global.begin(), to_global);
      result.entries.push_back({combo, std::move(global), map_branches(to_global, *tree)});
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return result;
}

OracleResult oracle_kperms(std::span<const Rule> rules, std::size_t k) {
  return oracle_kperms(rules.size(), k, [&](const IndexSet& combo) {
    std::vector<Rule> chosen;
    for (std::size_t i : combo) chosen.push_back(rules[i]);
    return ancestry_matrix(chosen);
  });
}

OracleResult oracle_kperms(const AncestryMatrix& matrix, std::size_t k) {
  return oracle_kperms(matrix.size(), k, [&](const IndexSet& combo) { return matrix.submatrix(combo); });
}

}  // namespace odt
