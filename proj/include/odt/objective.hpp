#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "odt/mtree.hpp"
#include "odt/types.hpp"

namespace odt {

/// Scalar cost, plus the product shape for matrix chains.
struct CostValue {
  double value = 0.0;
  std::optional<MatrixDim> dims;
  friend bool operator==(const CostValue&, const CostValue&) = default;
};

/// leaf_cost prices a leaf; combine prices a branch node from its children.
/// combine must be nondecreasing in both child values for a fixed branch.
template <class Branch, class Leaf>
struct Objective {
  std::string name;
  std::function<CostValue(const Leaf&)> leaf_cost;
  std::function<CostValue(const CostValue&, const Branch&, const CostValue&)> combine;

  double score(const CostValue& c) const { return c.value; }
};

template <class B, class L>
CostValue evaluate(const MTree<B, L>& t, const Objective<B, L>& obj) {
  return fold(
      t, [&](const L& leaf) { return obj.leaf_cost(leaf); },
      [&](CostValue l, const B& b, CostValue r) { return obj.combine(l, b, r); });
}

/// Most frequent label, smallest label on ties. Requires a non-empty input.
int majority_label(std::span<const int> labels);
/// Number of labels differing from the majority label.
CostValue misclassification_cost(std::span<const int> labels);
CostValue misclassification_cost(const Dataset& data, const Subset& rows);

template <class Branch>
Objective<Branch, Subset> misclassification_objective(const Dataset& data) {
  return {"misclassification", [&data](const Subset& rows) { return misclassification_cost(data, rows); },
          [](const CostValue& a, const Branch&, const CostValue& b) { return CostValue{a.value + b.value, {}}; }};
}

/// Total number of nodes: 1 per leaf, left + right + 1 per branch.
template <class Branch, class Leaf>
Objective<Branch, Leaf> bsp_size_objective() {
  return {"bsp-size", [](const Leaf&) { return CostValue{1.0, {}}; },
          [](const CostValue& a, const Branch&, const CostValue& b) { return CostValue{a.value + b.value + 1.0, {}}; }};
}

/// Sum over leaves of the squared leaf size.
template <class Branch>
Objective<Branch, Subset> kd_balance_objective() {
  return {"balance",
          [](const Subset& rows) {
            const double n = static_cast<double>(rows.size());
            return CostValue{n * n, {}};
          },
          [](const CostValue& a, const Branch&, const CostValue& b) { return CostValue{a.value + b.value, {}}; }};
}

/// Chain multiplication cost of two conforming products. Throws
/// std::invalid_argument when the inner dimensions differ.
CostValue mcmp_combine(const CostValue& left, const CostValue& right);
CostValue mcmp_leaf(const MatrixDim& dims);

/// Index of the smallest score; the earliest wins ties. Throws on empty input.
template <class T, class Score>
std::size_t argmin_by(std::span<const T> xs, Score score) {
  if (xs.empty()) throw std::invalid_argument("min_by: empty candidate list");
  std::size_t best = 0;
  double best_score = score(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double s = score(xs[i]);
    if (s < best_score) {
      best = i;
      best_score = s;
    }
  }
  return best;
}

template <class B, class L>
const MTree<B, L>& min_by(std::span<const MTree<B, L>> candidates, const Objective<B, L>& obj) {
  return candidates[argmin_by(candidates, [&](const MTree<B, L>& t) { return obj.score(evaluate(t, obj)); })];
}

}  // namespace odt
