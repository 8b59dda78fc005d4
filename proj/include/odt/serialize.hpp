#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "odt/applications.hpp"
#include "odt/rules.hpp"
#include "odt/tree_core.hpp"

namespace odt {

/// Chain cut before the matrix at position.
struct Cut {
  std::size_t position = 0;
  friend bool operator==(const Cut&, const Cut&) = default;
};

using RuleDesc = std::variant<AxisParallel, Hyperplane, LiftedHyperplane, Segment2D, Cut>;

/// Text form of any solved tree: branch descriptions and leaf sizes.
using SerialTree = MTree<RuleDesc, std::size_t>;

/// Grammar:
///   tree := "(leaf " count ")" | "(node " desc " " tree " " tree ")"
///   desc := "axis " dim " " t | "hyp " w... " " b | "quad " D " " w... " " b
///         | "seg " x1 " " y1 " " x2 " " y2 | "cut " position
/// Reals use 9 significant digits.
std::string serialize(const SerialTree& t);

/// Throws std::invalid_argument on malformed text.
SerialTree parse_tree(const std::string& text);

std::string format_real(double x);

SerialTree to_serial(const DecisionTree& t, std::span<const Rule> rules);
SerialTree to_serial(const BspTree& t);
SerialTree to_serial(const McmpTree& t);
SerialTree to_serial(const KdTree& t);

/// CSV with a header row, feature columns, and a final integer "label" column.
Dataset read_csv(std::istream& in);
/// One segment per line: "x1 y1 x2 y2". Payloads are line numbers from 0.
std::vector<SceneSegment> read_scene(std::istream& in);
/// K lines of K integers.
AncestryMatrix read_matrix(std::istream& in);
/// Comma-separated positive integers, e.g. "10,30,5,60".
std::vector<std::size_t> parse_sizes(const std::string& text);

}  // namespace odt
