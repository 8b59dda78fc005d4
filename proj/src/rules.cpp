#include "odt/rules.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace odt {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double dot(const std::vector<double>& w, const Point& p) {
  return std::inner_product(w.begin(), w.end(), p.begin(), 0.0);
}

void check_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw std::invalid_argument(std::string(what) + ": point has dimension " + std::to_string(got) + ", rule expects " +
                                std::to_string(expected));
  }
}

// Unit normal, first coordinate above eps made positive.
void normalise(std::vector<double>& w, double& b) {
  double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
  if (!(norm > 0.0)) throw std::invalid_argument("hyperplane weights are all zero");
  for (double& x : w) x /= norm;
  b /= norm;
  for (double x : w) {
    if (std::abs(x) > kEpsilon) {
      if (x < 0.0) {
        for (double& y : w) y = -y;
        b = -b;
      }
      break;
    }
  }
}

}  // namespace

Rule make_axis_rule(RuleId id, std::size_t dim, double threshold, std::vector<Point> defining_points) {
  return Rule{id, AxisParallel{dim, threshold}, std::move(defining_points)};
}

Rule make_hyperplane_rule(RuleId id, std::vector<double> weights, double bias, std::vector<Point> defining_points) {
  normalise(weights, bias);
  return Rule{id, Hyperplane{std::move(weights), bias}, std::move(defining_points)};
}

Rule make_segment_rule(RuleId id, Point2 from, Point2 to) {
  if (std::hypot(to[0] - from[0], to[1] - from[1]) <= kEpsilon) {
    throw std::invalid_argument("segment endpoints coincide");
  }
  return Rule{id, Segment2D{from, to}, {Point{from[0], from[1]}, Point{to[0], to[1]}}};
}

std::optional<Hyperplane> hyperplane_through(std::span<const Point> points) {
  const std::size_t dim = points.size();
  if (dim == 0) throw std::invalid_argument("hyperplane_through: no points");
  for (const Point& p : points) check_dim(dim, p.size(), "hyperplane_through");

  std::vector<double> w(dim);
  if (dim == 1) {
    w[0] = 1.0;
  } else {
    Eigen::MatrixXd diffs(dim - 1, dim);
    for (std::size_t r = 1; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) diffs(r - 1, c) = points[r][c] - points[0][c];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(diffs);
    lu.setThreshold(1e-10);
    if (static_cast<std::size_t>(lu.rank()) != dim - 1) return std::nullopt;
    Eigen::VectorXd normal = lu.kernel().col(0);
    for (std::size_t c = 0; c < dim; ++c) w[c] = normal(c);
  }
  double b = -dot(w, points[0]);
  normalise(w, b);
  return Hyperplane{std::move(w), b};
}

std::size_t lifted_dimension(std::size_t dim) { return dim + dim * (dim + 1) / 2; }

Point lift_degree2(const Point& p) {
  Point out(p.begin(), p.end());
  out.reserve(lifted_dimension(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j) out.push_back(p[i] * p[j]);
  return out;
}

double rule_margin(const Rule& rule, const Point& p) {
  return std::visit(
      Overloaded{
          [&](const AxisParallel& a) {
            if (a.dim >= p.size()) check_dim(a.dim + 1, p.size(), "classify");
            return a.threshold - p[a.dim];
          },
          [&](const Hyperplane& h) {
            check_dim(h.weights.size(), p.size(), "classify");
            return dot(h.weights, p) + h.bias;
          },
          [&](const LiftedHyperplane& h) {
            if (p.size() == h.input_dim) return dot(h.weights, lift_degree2(p)) + h.bias;
            check_dim(h.weights.size(), p.size(), "classify");
            return dot(h.weights, p) + h.bias;
          },
          [&](const Segment2D& s) {
            check_dim(2, p.size(), "classify");
            const double dx = s.to[0] - s.from[0];
            const double dy = s.to[1] - s.from[1];
            const double cross = dx * (p[1] - s.from[1]) - dy * (p[0] - s.from[0]);
            return cross / std::hypot(dx, dy);
          },
      },
      rule.kind);
}

Sign classify(const Rule& rule, const Point& p) {
  const double m = rule_margin(rule, p);
  // Axis thresholds sit exactly on data coordinates, so compare exactly.
  if (std::holds_alternative<AxisParallel>(rule.kind)) return m >= 0.0 ? Sign::Positive : Sign::Negative;
  return m >= -kEpsilon ? Sign::Positive : Sign::Negative;
}

bool on_boundary(const Rule& rule, const Point& p) {
  const double m = rule_margin(rule, p);
  if (std::holds_alternative<AxisParallel>(rule.kind)) return m == 0.0;
  return std::abs(m) <= kEpsilon;
}

AncestryMatrix AncestryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  AncestryMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("ancestry matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

AncestryMatrix AncestryMatrix::one_sided(std::size_t size, int side) {
  AncestryMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (i != j) m.set(i, j, side);
  return m;
}

AncestryMatrix AncestryMatrix::submatrix(std::span<const std::size_t> idx) const {
  AncestryMatrix m(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) m.set(a, b, (*this)(idx[a], idx[b]));
  return m;
}

AncestryMatrix ancestry_matrix(std::span<const Rule> rules) {
  AncestryMatrix m(rules.size());
  for (std::size_t j = 0; j < rules.size(); ++j) {
    if (rules[j].defining_points.empty()) {
      throw std::invalid_argument("ancestry_matrix: rule " + std::to_string(rules[j].id) + " has no defining points");
    }
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (i == j) continue;
      bool all_pos = true;
      bool all_neg = true;
      for (const Point& q : rules[j].defining_points) {
        if (classify(rules[i], q) == Sign::Positive)
          all_neg = false;
        else
          all_pos = false;
      }
      m.set(i, j, all_pos ? 1 : (all_neg ? -1 : 0));
    }
  }
  return m;
}

AxiomReport validate_axioms(const AncestryMatrix& matrix) {
  AxiomReport report;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      const int v = matrix(i, j);
      if (v != -1 && v != 0 && v != 1) report.range_offenders.emplace_back(i, j);
      if (i == j && v != 0) report.diagonal_offenders.emplace_back(i, j);
    }
  }
  return report;
}

bool root_feasible(std::size_t i, std::span<const std::size_t> indices, const AncestryMatrix& matrix) {
  for (std::size_t j : indices)
    if (j != i && matrix(i, j) == 0) return false;
  return true;
}

std::string describe(const RuleKind& kind) {
  char buf[64];
  auto num = [&buf](double x) {
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  return std::visit(Overloaded{
                        [&](const AxisParallel& a) { return "x" + std::to_string(a.dim) + " <= " + num(a.threshold); },
                        [&](const Hyperplane& h) {
                          std::string s;
                          for (std::size_t i = 0; i < h.weights.size(); ++i)
                            s += (i ? " + " : "") + num(h.weights[i]) + "*x" + std::to_string(i);
                          return s + " + " + num(h.bias) + " >= 0";
                        },
                        [&](const LiftedHyperplane& h) {
                          return "quadratic surface (" + std::to_string(h.weights.size()) + " terms)";
                        },
                        [&](const Segment2D& s) {
                          return "left of (" + num(s.from[0]) + "," + num(s.from[1]) + ")->(" + num(s.to[0]) + "," +
                                 num(s.to[1]) + ")";
                        },
                    },
                    kind);
}

SideTable::SideTable(std::span<const Rule> rules, const Dataset& data)
    : rules_(rules.size()), points_(data.size()), bits_(rules.size() * data.size()) {
  for (std::size_t r = 0; r < rules_; ++r)
    for (std::size_t p = 0; p < points_; ++p) bits_[r * points_ + p] = classify(rules[r], data.points[p]) == Sign::Positive;
}

Subset SideTable::positive_part(RuleId rule, const Subset& s) const {
  Subset out;
  for (std::size_t p : s)
    if (positive(rule, p)) out.push_back(p);
  return out;
}

Subset SideTable::negative_part(RuleId rule, const Subset& s) const {
  Subset out;
  for (std::size_t p : s)
    if (!positive(rule, p)) out.push_back(p);
  return out;
}

}  // namespace odt
