#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace odt {

using Point = std::vector<double>;

/// Index of a rule inside the rule table a function was given.
using RuleId = std::size_t;

/// Sorted, duplicate-free list of rule indices.
using IndexSet = std::vector<std::size_t>;

/// Sorted, duplicate-free list of row indices into a Dataset.
using Subset = std::vector<std::size_t>;

/// Labelled points of a fixed dimension. Never mutated during a solve.
struct Dataset {
  std::size_t dim = 0;
  std::vector<Point> points;
  std::vector<int> labels;

  std::size_t size() const { return points.size(); }

  Subset all() const {
    Subset s(points.size());
    std::iota(s.begin(), s.end(), std::size_t{0});
    return s;
  }

  /// Throws std::invalid_argument when points and labels disagree or a
  /// point has the wrong dimension.
  void check() const {
    if (points.size() != labels.size()) throw std::invalid_argument("dataset: points and labels differ in length");
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != dim) {
        throw std::invalid_argument("dataset: row " + std::to_string(i) + " has dimension " +
                                    std::to_string(points[i].size()) + ", expected " + std::to_string(dim));
      }
    }
  }
};

/// Shape of one matrix in a multiplication chain.
struct MatrixDim {
  std::size_t rows = 0;
  std::size_t cols = 0;
  friend bool operator==(const MatrixDim&, const MatrixDim&) = default;
};

inline Dataset make_dataset(std::vector<Point> points, std::vector<int> labels) {
  Dataset d;
  d.dim = points.empty() ? 0 : points.front().size();
  d.points = std::move(points);
  d.labels = std::move(labels);
  d.check();
  return d;
}

inline IndexSet iota_set(std::size_t n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}

}  // namespace odt
