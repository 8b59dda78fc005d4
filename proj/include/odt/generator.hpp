#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "odt/rule_systems.hpp"
#include "odt/rules.hpp"
#include "odt/tree_core.hpp"

namespace odt {

/// All proper tree shapes over indices: root ascending, then left subtree
/// choices, then right.
std::vector<BTree> gen_btrees(const IndexSet& indices, const AncestryMatrix& matrix);

/// Number of trees gen_btrees would return, without building them.
std::size_t count_btrees(const IndexSet& indices, const AncestryMatrix& matrix);

/// The trees of gen_btrees, each with leaves holding the rows of data inside
/// their region. Built by generating over the whole dataset and intersecting
/// each subtree with its side of the root afterwards.
std::vector<DecisionTree> gen_dtrees(const IndexSet& indices, const AncestryMatrix& matrix, const SideTable& sides,
                                     const Subset& data);
std::vector<DecisionTree> gen_dtrees(const IndexSet& indices, const AncestryMatrix& matrix,
                                     std::span<const Rule> rules, const Dataset& data);

/// gen_dtrees restricted to trees whose leaves all hold at least min_leaf
/// rows and whose depth is at most max_depth, pruned during generation.
std::vector<DecisionTree> gen_dtrees_filtered(const IndexSet& indices, const AncestryMatrix& matrix,
                                              const SideTable& sides, const Subset& data, std::size_t min_leaf,
                                              std::optional<std::size_t> max_depth);

struct OracleEntry {
  IndexSet combination;
  Permutation permutation;
  BTree tree;
};

struct OracleResult {
  std::vector<OracleEntry> entries;
  std::size_t permutations_tried = 0;
};

/// Supplies the ancestry matrix of a K-combination, rows in combination order.
using MatrixSupply = std::function<AncestryMatrix(const IndexSet&)>;

/// Brute force: every K-combination of n_rules, every ordering of it, kept
/// when tree_from_permutation accepts it. Permutations and trees use global
/// rule indices.
OracleResult oracle_kperms(std::size_t n_rules, std::size_t k, const MatrixSupply& supply);
OracleResult oracle_kperms(std::span<const Rule> rules, std::size_t k);
OracleResult oracle_kperms(const AncestryMatrix& matrix, std::size_t k);

}  // namespace odt
