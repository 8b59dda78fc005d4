#include "odt/rule_systems.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "odt/combinatorics.hpp"

namespace odt {

namespace {

// Side of every row, with rows on the boundary kept apart: two hyperplanes
// with the same key cut the data identically.
std::vector<std::int8_t> boundary_key(const Rule& rule, const Dataset& data) {
  std::vector<std::int8_t> key;
  key.reserve(data.size());
  for (const Point& p : data.points) {
    if (on_boundary(rule, p))
      key.push_back(0);
    else
      key.push_back(classify(rule, p) == Sign::Positive ? 1 : -1);
  }
  return key;
}

template <class MakeRule>
RuleSet enumerate_through_combinations(const Dataset& data, std::size_t k, MakeRule make) {
  RuleSet out;
  std::set<std::vector<std::int8_t>> seen;
  for_each_combination(data.size(), k, [&](const std::vector<std::size_t>& combo) {
    std::optional<Rule> rule = make(combo, out.rules.size());
    if (!rule) {
      ++out.degenerate;
      return;
    }
    if (!seen.insert(boundary_key(*rule, data)).second) {
      ++out.duplicates;
      return;
    }
    out.rules.push_back(std::move(*rule));
  });
  return out;
}

}  // namespace

RuleSet enumerate_axis_rules(const Dataset& data) {
  if (data.size() == 0) throw std::invalid_argument("enumerate_axis_rules: empty dataset");
  data.check();
  RuleSet out;
  for (std::size_t d = 0; d < data.dim; ++d) {
    std::map<double, std::size_t> first_row;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (!first_row.emplace(data.points[i][d], i).second) ++out.duplicates;
    }
    for (const auto& [value, row] : first_row) {
      out.rules.push_back(make_axis_rule(out.rules.size(), d, value, {data.points[row]}));
    }
  }
  return out;
}

RuleSet enumerate_hyperplane_rules(const Dataset& data) {
  data.check();
  if (data.size() < data.dim || data.dim == 0) {
    throw std::invalid_argument("enumerate_hyperplane_rules: need at least D rows");
  }
  return enumerate_through_combinations(
      data, data.dim, [&](const std::vector<std::size_t>& combo, RuleId id) -> std::optional<Rule> {
        std::vector<Point> pts;
        for (std::size_t i : combo) pts.push_back(data.points[i]);
        auto h = hyperplane_through(pts);
        if (!h) return std::nullopt;
        return Rule{id, std::move(*h), std::move(pts)};
      });
}

RuleSet enumerate_surface2_rules(const Dataset& data) {
  data.check();
  const std::size_t g = lifted_dimension(data.dim);
  if (data.size() < g || data.dim == 0) {
    throw std::invalid_argument("enumerate_surface2_rules: need at least " + std::to_string(g) + " rows");
  }
  return enumerate_through_combinations(
      data, g, [&](const std::vector<std::size_t>& combo, RuleId id) -> std::optional<Rule> {
        std::vector<Point> lifted;
        std::vector<Point> pts;
        for (std::size_t i : combo) {
          pts.push_back(data.points[i]);
          lifted.push_back(lift_degree2(data.points[i]));
        }
        auto h = hyperplane_through(lifted);
        if (!h) return std::nullopt;
        return Rule{id, LiftedHyperplane{data.dim, std::move(h->weights), h->bias}, std::move(pts)};
      });
}

std::vector<SplitTriple> splits_generic(const IndexSet& indices, const AncestryMatrix& matrix) {
  std::vector<SplitTriple> out;
  for (RuleId i : indices) {
    if (!root_feasible(i, indices, matrix)) continue;
    SplitTriple t;
    t.root = i;
    for (RuleId j : indices) {
      if (j == i) continue;
      (matrix(i, j) > 0 ? t.left : t.right).push_back(j);
    }
    out.push_back(std::move(t));
  }
  return out;
}

double length(const SceneSegment& s) { return std::hypot(s.b[0] - s.a[0], s.b[1] - s.a[1]); }

Rule extending_rule(const SceneSegment& s, RuleId id) { return make_segment_rule(id, s.a, s.b); }

void place_segment(const SceneSegment& root, const SceneSegment& s, std::vector<SceneSegment>& positive,
                   std::vector<SceneSegment>& negative) {
  const Rule line = extending_rule(root);
  const double da = rule_margin(line, Point{s.a[0], s.a[1]});
  const double db = rule_margin(line, Point{s.b[0], s.b[1]});
  if (da >= -kEpsilon && db >= -kEpsilon) {
    positive.push_back(s);
    return;
  }
  if (da <= kEpsilon && db <= kEpsilon) {
    negative.push_back(s);
    return;
  }
  const double t = da / (da - db);
  const Point2 x{s.a[0] + t * (s.b[0] - s.a[0]), s.a[1] + t * (s.b[1] - s.a[1])};
  SceneSegment first{s.a, x, s.payload};
  SceneSegment second{x, s.b, s.payload};
  auto keep = [&](const SceneSegment& piece, bool pos) {
    if (length(piece) > kEpsilon) (pos ? positive : negative).push_back(piece);
  };
  keep(first, da > 0);
  keep(second, db > 0);
}

std::vector<BspTriple> splits_bsp(std::span<const SceneSegment> segments) {
  std::vector<BspTriple> out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    BspTriple t;
    t.root = segments[i];
    for (std::size_t j = 0; j < segments.size(); ++j) {
      if (j != i) place_segment(segments[i], segments[j], t.positive, t.negative);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<KdTriple> splits_kd(std::size_t depth, const Dataset& data, const Subset& subset) {
  std::vector<KdTriple> out;
  if (subset.empty() || data.dim == 0) return out;
  const std::size_t d = depth % data.dim;
  for (std::size_t x : subset) {
    KdTriple t;
    t.pivot = x;
    t.dim = d;
    const double v = data.points[x][d];
    for (std::size_t y : subset) {
      if (y == x) continue;
      (data.points[y][d] <= v ? t.left : t.right).push_back(y);
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace odt
