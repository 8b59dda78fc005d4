#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "odt/types.hpp"

namespace odt {

/// Dead zone for orientation tests on unit-normalised coefficients.
inline constexpr double kEpsilon = 1e-9;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

using Point2 = std::array<double, 2>;

/// Positive side is x[dim] <= threshold.
struct AxisParallel {
  std::size_t dim = 0;
  double threshold = 0.0;
  friend bool operator==(const AxisParallel&, const AxisParallel&) = default;
};

/// Positive side is w.x + b >= -eps, with |w| = 1.
struct Hyperplane {
  std::vector<double> weights;
  double bias = 0.0;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Hyperplane in the degree-2 monomial space of an input_dim-dimensional point.
struct LiftedHyperplane {
  std::size_t input_dim = 0;
  std::vector<double> weights;
  double bias = 0.0;
  friend bool operator==(const LiftedHyperplane&, const LiftedHyperplane&) = default;
};

/// Directed line through two distinct points; positive side is on the left.
struct Segment2D {
  Point2 from{};
  Point2 to{};
  friend bool operator==(const Segment2D&, const Segment2D&) = default;
};

using RuleKind = std::variant<AxisParallel, Hyperplane, LiftedHyperplane, Segment2D>;

/// One splitting predicate together with the data points that define it.
struct Rule {
  RuleId id = 0;
  RuleKind kind;
  std::vector<Point> defining_points;
};

Rule make_axis_rule(RuleId id, std::size_t dim, double threshold, std::vector<Point> defining_points = {});
/// Normalises (w, b) so |w| = 1; throws if w is all zero.
Rule make_hyperplane_rule(RuleId id, std::vector<double> weights, double bias, std::vector<Point> defining_points = {});
/// Throws if the endpoints coincide. The endpoints become the defining points.
Rule make_segment_rule(RuleId id, Point2 from, Point2 to);

/// Hyperplane through points.size() points in R^points.size(), with unit
/// normal whose first non-zero coordinate is positive. Returns nullopt when
/// the points are affinely dependent.
std::optional<Hyperplane> hyperplane_through(std::span<const Point> points);

/// Monomials of degree 1 and 2: x_0..x_{D-1}, then x_i x_j for i <= j.
Point lift_degree2(const Point& p);
std::size_t lifted_dimension(std::size_t dim);

/// Signed distance-like value whose sign (with the eps dead zone) decides the side.
double rule_margin(const Rule& rule, const Point& p);
/// Side of p. Points on the boundary are Positive. Throws on dimension mismatch.
Sign classify(const Rule& rule, const Point& p);
/// True when p lies on the boundary within eps.
bool on_boundary(const Rule& rule, const Point& p);

/// K x K table with entries in {-1, 0, +1}: +1 when rule j may only sit in the
/// left (positive) subtree of rule i, -1 for the right subtree, 0 when rule j
/// can never be a descendant of rule i.
class AncestryMatrix {
 public:
  AncestryMatrix() = default;
  explicit AncestryMatrix(std::size_t size) : size_(size), entries_(size * size, 0) {}

  /// Builds a matrix from raw rows without checking the axioms.
  static AncestryMatrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Every off-diagonal entry equals side (+1 or -1): the chain-only family.
  static AncestryMatrix one_sided(std::size_t size, int side = 1);

  std::size_t size() const { return size_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  void set(std::size_t i, std::size_t j, int value) { entries_[i * size_ + j] = value; }

  /// Rows and columns restricted to idx, in the given order.
  AncestryMatrix submatrix(std::span<const std::size_t> idx) const;

  friend bool operator==(const AncestryMatrix&, const AncestryMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<int> entries_;
};

/// Throws std::invalid_argument if some rule has no defining points.
AncestryMatrix ancestry_matrix(std::span<const Rule> rules);

struct AxiomReport {
  std::vector<std::pair<std::size_t, std::size_t>> diagonal_offenders;
  std::vector<std::pair<std::size_t, std::size_t>> range_offenders;

  bool diagonal_zero() const { return diagonal_offenders.empty(); }
  bool value_range() const { return range_offenders.empty(); }
  bool ok() const { return diagonal_zero() && value_range(); }
};

AxiomReport validate_axioms(const AncestryMatrix& matrix);

/// True iff rule i is related (non-zero entry) to every other rule in indices.
bool root_feasible(std::size_t i, std::span<const std::size_t> indices, const AncestryMatrix& matrix);

std::string describe(const RuleKind& kind);

/// Side of every data point for every rule, computed once.
class SideTable {
 public:
  SideTable() = default;
  SideTable(std::span<const Rule> rules, const Dataset& data);

  std::size_t rule_count() const { return rules_; }
  std::size_t point_count() const { return points_; }
  bool positive(RuleId rule, std::size_t point) const { return bits_[rule * points_ + point] != 0; }

  Subset positive_part(RuleId rule, const Subset& s) const;
  Subset negative_part(RuleId rule, const Subset& s) const;

 private:
  std::size_t rules_ = 0;
  std::size_t points_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace odt
