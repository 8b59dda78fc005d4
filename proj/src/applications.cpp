#include "odt/applications.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace odt {

std::vector<Candidate<Fragments, SceneSegment>> BspProblem::candidates(const State& s) const {
  std::vector<Candidate<Fragments, SceneSegment>> out;
  for (BspTriple& t : splits_bsp(s)) out.push_back({std::move(t.positive), t.root, std::move(t.negative)});
  return out;
}

namespace {

void check_scene(std::span<const SceneSegment> segments) {
  if (segments.empty()) throw std::invalid_argument("bsp: empty scene");
  for (const SceneSegment& s : segments) {
    if (length(s) <= kEpsilon) throw std::invalid_argument("bsp: zero-length segment");
  }
}

BspTree build_ordered(const Fragments& region, const std::vector<std::size_t>& rank) {
  if (region.empty()) return BspTree::leaf({});
  std::size_t pick = 0;
  for (std::size_t i = 1; i < region.size(); ++i)
    if (rank[region[i].payload] < rank[region[pick].payload]) pick = i;
  Fragments pos;
  Fragments neg;
  for (std::size_t i = 0; i < region.size(); ++i)
    if (i != pick) place_segment(region[pick], region[i], pos, neg);
  return BspTree::node(build_ordered(pos, rank), region[pick], build_ordered(neg, rank));
}

}  // namespace

BspResult solve_bsp(std::span<const SceneSegment> segments) {
  check_scene(segments);
  BspProblem problem;
  const auto obj = bsp_size_objective<SceneSegment, Fragments>();
  DpSolver solver(problem, obj);
  auto best = solver.solve(Fragments(segments.begin(), segments.end()));
  return {best->tree, static_cast<std::size_t>(best->cost.value), solver.stats()};
}

BspTree bsp_from_order(std::span<const SceneSegment> segments, std::span<const std::size_t> order) {
  check_scene(segments);
  std::size_t max_payload = 0;
  for (const SceneSegment& s : segments) max_payload = std::max(max_payload, s.payload);
  std::vector<std::size_t> rank(max_payload + 1, order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] < rank.size()) rank[order[i]] = i;
  return build_ordered(Fragments(segments.begin(), segments.end()), rank);
}

std::size_t random_bsp_min(std::span<const SceneSegment> segments, std::size_t trials, std::uint64_t seed) {
  check_scene(segments);
  std::vector<std::size_t> order;
  for (const SceneSegment& s : segments) order.push_back(s.payload);
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t n = branch_count(bsp_from_order(segments, order)) * 2 + 1;
    if (t == 0 || n < best) best = n;
  }
  return best;
}

StateKind McmpProblem::kind(const State& s) const {
  if (s.empty()) return StateKind::Infeasible;
  return s.size() == 1 ? StateKind::Leaf : StateKind::Split;
}

std::vector<Candidate<std::vector<ChainItem>, std::size_t>> McmpProblem::candidates(const State& s) const {
  std::vector<Candidate<std::vector<ChainItem>, std::size_t>> out;
  for (auto& c : splits_mcmp<ChainItem>(s)) {
    const std::size_t cut = c.suffix.front().position;
    out.push_back({std::move(c.prefix), cut, std::move(c.suffix)});
  }
  return out;
}

Objective<std::size_t, ChainItem> mcmp_objective() {
  return {"mcmp", [](const ChainItem& m) { return mcmp_leaf(m.dims); },
          [](const CostValue& a, const std::size_t&, const CostValue& b) { return mcmp_combine(a, b); }};
}

std::vector<MatrixDim> chain_from_sizes(std::span<const std::size_t> sizes) {
  if (sizes.size() < 2) throw std::invalid_argument("mcmp: need at least two sizes");
  std::vector<MatrixDim> out;
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i - 1] == 0 || sizes[i] == 0) throw std::invalid_argument("mcmp: zero matrix size");
    out.push_back({sizes[i - 1], sizes[i]});
  }
  return out;
}

std::vector<ChainItem> chain_items(std::span<const MatrixDim> dims) {
  std::vector<ChainItem> out;
  for (std::size_t i = 0; i < dims.size(); ++i) out.push_back({dims[i], i});
  return out;
}

McmpResult solve_mcmp(std::span<const MatrixDim> dims) {
  if (dims.empty()) throw std::invalid_argument("mcmp: empty chain");
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i - 1].cols != dims[i].rows) {
      throw std::invalid_argument("mcmp: matrices " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                  " do not conform");
    }
  }
  McmpProblem problem;
  const auto obj = mcmp_objective();
  DpSolver solver(problem, obj);
  auto best = solver.solve(chain_items(dims));
  return {best->tree, best->cost};
}

std::vector<McmpTree> all_parenthesisations(std::span<const MatrixDim> dims) {
  McmpProblem problem;
  const auto obj = mcmp_objective();
  DpSolver solver(problem, obj);
  std::vector<McmpTree> out;
  for (auto& s : solver.enumerate(chain_items(dims))) out.push_back(std::move(s.tree));
  return out;
}

std::string parenthesize(const McmpTree& t) {
  return fold(
      t,
      [](const ChainItem& m) {
        return m.position < 26 ? std::string(1, static_cast<char>('A' + m.position))
                               : "M" + std::to_string(m.position);
      },
      [](std::string l, std::size_t, std::string r) { return "(" + l + r + ")"; });
}

StateKind KdProblem::kind(const State& s) const {
  if (s.rows.empty() || s.depth >= max_depth_) return StateKind::Leaf;
  return StateKind::Split;
}

std::vector<Candidate<KdState, KdSplit>> KdProblem::candidates(const State& s) const {
  std::vector<Candidate<KdState, KdSplit>> out;
  for (KdTriple& t : splits_kd(s.depth, data_, s.rows)) {
    const KdSplit split{t.pivot, t.dim, data_.points[t.pivot][t.dim]};
    out.push_back({KdState{std::move(t.left), s.depth + 1}, split, KdState{std::move(t.right), s.depth + 1}});
  }
  return out;
}

KdResult solve_kd(const Dataset& data, std::size_t max_depth) {
  return solve_kd(data, max_depth, kd_balance_objective<KdSplit>());
}

KdResult solve_kd(const Dataset& data, std::size_t max_depth, const Objective<KdSplit, Subset>& obj) {
  data.check();
  KdProblem problem(data, max_depth);
  DpSolver solver(problem, obj);
  auto best = solver.solve(KdState{data.all(), 0});
  return {best->tree, best->cost, solver.stats()};
}

bool level_consistent(const KdTree& t, std::size_t dim) {
  auto walk = [dim](const auto& self, const KdTree& n, std::size_t level) -> bool {
    if (n.is_leaf()) return true;
    if (dim == 0 || n.label().dim != level % dim) return false;
    return self(self, n.left(), level + 1) && self(self, n.right(), level + 1);
  };
  return walk(walk, t, 0);
}

}  // namespace odt
