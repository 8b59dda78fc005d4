#include "odt/objective.hpp"

#include <map>

namespace odt {

int majority_label(std::span<const int> labels) {
  if (labels.empty()) throw std::invalid_argument("majority_label: no labels");
  std::map<int, std::size_t> counts;
  for (int l : labels) ++counts[l];
  int best = counts.begin()->first;
  std::size_t best_count = 0;
  for (const auto& [label, n] : counts) {
    if (n > best_count) {
      best = label;
      best_count = n;
    }
  }
  return best;
}

CostValue misclassification_cost(std::span<const int> labels) {
  if (labels.empty()) return {0.0, {}};
  const int m = majority_label(labels);
  std::size_t wrong = 0;
  for (int l : labels) wrong += l != m;
  return {static_cast<double>(wrong), {}};
}

CostValue misclassification_cost(const Dataset& data, const Subset& rows) {
  std::vector<int> labels;
  labels.reserve(rows.size());
  for (std::size_t r : rows) labels.push_back(data.labels[r]);
  return misclassification_cost(labels);
}

CostValue mcmp_leaf(const MatrixDim& dims) { return {0.0, dims}; }

CostValue mcmp_combine(const CostValue& left, const CostValue& right) {
  if (!left.dims || !right.dims) throw std::invalid_argument("mcmp: cost value without dimensions");
  if (left.dims->cols != right.dims->rows) {
    throw std::invalid_argument("mcmp: cannot multiply " + std::to_string(left.dims->rows) + "x" +
                                std::to_string(left.dims->cols) + " by " + std::to_string(right.dims->rows) + "x" +
                                std::to_string(right.dims->cols));
  }
  const double flops = static_cast<double>(left.dims->rows) * static_cast<double>(left.dims->cols) *
                       static_cast<double>(right.dims->cols);
  return {left.value + right.value + flops, MatrixDim{left.dims->rows, right.dims->cols}};
}

}  // namespace odt
