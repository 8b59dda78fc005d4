#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odt/dp.hpp"
#include "odt/objective.hpp"
#include "odt/rule_systems.hpp"

namespace odt {

// Binary space partitions of 2D segment scenes.

using Fragments = std::vector<SceneSegment>;
using BspTree = MTree<SceneSegment, Fragments>;

/// Every fragment in a region must be used as a splitting line before the
/// region becomes a leaf, so leaves hold no fragments.
struct BspProblem {
  using State = Fragments;
  using Branch = SceneSegment;
  using Leaf = Fragments;

  StateKind kind(const State& s) const { return s.empty() ? StateKind::Leaf : StateKind::Split; }
  Leaf leaf(const State& s) const { return s; }
  std::vector<Candidate<State, Branch>> candidates(const State& s) const;
};

struct BspResult {
  BspTree tree;
  std::size_t nodes = 0;
  DpStats stats;
};

/// Smallest auto-partition. Throws std::invalid_argument on an empty scene or
/// a zero-length segment.
BspResult solve_bsp(std::span<const SceneSegment> segments);

/// The classical construction: in every region, split on the fragment whose
/// original segment comes first in order (a permutation of payload ids).
BspTree bsp_from_order(std::span<const SceneSegment> segments, std::span<const std::size_t> order);

/// Smallest node count over trials random orders drawn from seed.
std::size_t random_bsp_min(std::span<const SceneSegment> segments, std::size_t trials, std::uint64_t seed);

// Matrix chain multiplication.

struct ChainItem {
  MatrixDim dims;
  std::size_t position = 0;
  friend bool operator==(const ChainItem&, const ChainItem&) = default;
};

/// Branch labels are the position of the first matrix right of the cut.
using McmpTree = MTree<std::size_t, ChainItem>;

struct McmpProblem {
  using State = std::vector<ChainItem>;
  using Branch = std::size_t;
  using Leaf = ChainItem;

  StateKind kind(const State& s) const;
  Leaf leaf(const State& s) const { return s.front(); }
  std::vector<Candidate<State, Branch>> candidates(const State& s) const;
};

Objective<std::size_t, ChainItem> mcmp_objective();

/// [p0, p1, ..., pn] -> n matrices p_{i-1} x p_i. Throws on fewer than two
/// sizes or a zero size.
std::vector<MatrixDim> chain_from_sizes(std::span<const std::size_t> sizes);
std::vector<ChainItem> chain_items(std::span<const MatrixDim> dims);

struct McmpResult {
  McmpTree tree;
  CostValue cost;
};

/// Cheapest parenthesisation. Throws std::invalid_argument on an empty or
/// nonconforming chain.
McmpResult solve_mcmp(std::span<const MatrixDim> dims);

/// Every parenthesisation, in generation order.
std::vector<McmpTree> all_parenthesisations(std::span<const MatrixDim> dims);

/// Matrices are named A, B, C, ... by position, e.g. "((AB)C)".
std::string parenthesize(const McmpTree& t);

// K-D trees.

struct KdSplit {
  std::size_t pivot = 0;
  std::size_t dim = 0;
  double threshold = 0.0;
  friend bool operator==(const KdSplit&, const KdSplit&) = default;
};

using KdTree = MTree<KdSplit, Subset>;

struct KdState {
  Subset rows;
  std::size_t depth = 0;
};

/// A region stops splitting once it is empty or max_depth levels deep.
class KdProblem {
 public:
  using State = KdState;
  using Branch = KdSplit;
  using Leaf = Subset;

  KdProblem(const Dataset& data, std::size_t max_depth) : data_(data), max_depth_(max_depth) {}

  StateKind kind(const State& s) const;
  Leaf leaf(const State& s) const { return s.rows; }
  std::vector<Candidate<State, Branch>> candidates(const State& s) const;

 private:
  const Dataset& data_;
  std::size_t max_depth_;
};

struct KdResult {
  KdTree tree;
  CostValue cost;
  DpStats stats;
};

KdResult solve_kd(const Dataset& data, std::size_t max_depth);
KdResult solve_kd(const Dataset& data, std::size_t max_depth, const Objective<KdSplit, Subset>& obj);

/// True iff every branch at depth l splits on dimension l mod dim.
bool level_consistent(const KdTree& t, std::size_t dim);

}  // namespace odt
