#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "odt/rules.hpp"
#include "odt/types.hpp"

namespace odt {

/// Enumerated candidate rules plus bookkeeping about what was discarded.
struct RuleSet {
  std::vector<Rule> rules;
  std::size_t degenerate = 0;
  std::size_t duplicates = 0;
};

/// One rule per (dimension, distinct coordinate value), threshold at the
/// coordinate. The defining point is the first row carrying that value.
/// Throws std::invalid_argument on an empty dataset.
RuleSet enumerate_axis_rules(const Dataset& data);

/// One hyperplane per affinely independent D-combination of rows. Rules that
/// put every row on the same side (counting rows on the boundary separately)
/// are kept once. Throws std::invalid_argument when N < D.
RuleSet enumerate_hyperplane_rules(const Dataset& data);

/// Degree-2 curves: hyperplanes through G-combinations of lifted rows, where
/// G = lifted_dimension(D). Defining points stay in the input space.
RuleSet enumerate_surface2_rules(const Dataset& data);

struct SplitTriple {
  IndexSet left;
  RuleId root = 0;
  IndexSet right;
  friend bool operator==(const SplitTriple&, const SplitTriple&) = default;
};

/// Every feasible root of indices, in ascending order, with the rules that
/// must go left (+1) and right (-1) of it.
std::vector<SplitTriple> splits_generic(const IndexSet& indices, const AncestryMatrix& matrix);

struct SceneSegment {
  Point2 a{};
  Point2 b{};
  std::size_t payload = 0;
  friend bool operator==(const SceneSegment&, const SceneSegment&) = default;
};

double length(const SceneSegment& s);
/// The extending line of s as a rule (positive side on the left of a -> b).
Rule extending_rule(const SceneSegment& s, RuleId id = 0);

struct BspTriple {
  std::vector<SceneSegment> positive;
  SceneSegment root;
  std::vector<SceneSegment> negative;
};

/// Where one segment lands relative to the extending line of root. A crossing
/// segment is cut in two; pieces no longer than eps are dropped.
void place_segment(const SceneSegment& root, const SceneSegment& s, std::vector<SceneSegment>& positive,
                   std::vector<SceneSegment>& negative);

/// Every segment as root, the rest placed by place_segment.
std::vector<BspTriple> splits_bsp(std::span<const SceneSegment> segments);

template <class T>
struct ChainSplit {
  std::vector<T> prefix;
  std::size_t cut = 0;
  std::vector<T> suffix;
};

/// All cuts of a sequence into a non-empty prefix and suffix; cut is the
/// length of the prefix.
template <class T>
std::vector<ChainSplit<T>> splits_mcmp(std::span<const T> items) {
  std::vector<ChainSplit<T>> out;
  for (std::size_t c = 1; c < items.size(); ++c) {
    out.push_back({std::vector<T>(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(c)), c,
                   std::vector<T>(items.begin() + static_cast<std::ptrdiff_t>(c), items.end())});
  }
  return out;
}

struct KdTriple {
  Subset left;
  std::size_t pivot = 0;
  std::size_t dim = 0;
  Subset right;
};

/// Splits on dimension depth mod D at each row of subset in turn. Rows tied
/// with the pivot go left; the pivot itself goes to neither side.
std::vector<KdTriple> splits_kd(std::size_t depth, const Dataset& data, const Subset& subset);

}  // namespace odt
