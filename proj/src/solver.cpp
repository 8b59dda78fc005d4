#include "odt/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "odt/combinatorics.hpp"

namespace odt {

StateKind ClassificationProblem::kind(const State& s) const {
  if (s.rules.empty()) return s.data.size() < cons_.min_leaf ? StateKind::Infeasible : StateKind::Leaf;
  if (cons_.max_depth && s.depth >= *cons_.max_depth) return StateKind::Infeasible;
  return StateKind::Split;
}

std::vector<Candidate<ClassState, RuleId>> ClassificationProblem::candidates(const State& s) const {
  std::vector<Candidate<ClassState, RuleId>> out;
  for (SplitTriple& t : splits_generic(s.rules, matrix_)) {
    out.push_back({ClassState{std::move(t.left), sides_.positive_part(t.root, s.data), s.depth + 1}, t.root,
                   ClassState{std::move(t.right), sides_.negative_part(t.root, s.data), s.depth + 1}});
  }
  return out;
}

std::string ClassificationProblem::overlap_key(const State& s) const {
  std::string key;
  for (RuleId r : s.rules) key += std::to_string(r) + ",";
  return key;
}

std::optional<ClassSolution> sodt(const IndexSet& indices, const AncestryMatrix& matrix, const SideTable& sides,
                                  const Subset& data, const ClassObjective& obj, const SolveConstraints& cons,
                                  DpStats* stats, bool track_overlap) {
  ClassificationProblem problem(matrix, sides, cons);
  DpSolver solver(problem, obj, track_overlap);
  auto result = solver.solve(ClassState{indices, data, 0});
  if (stats) *stats += solver.stats();
  return result;
}

std::optional<ClassSolution> sodt_thinned(const IndexSet& indices, const AncestryMatrix& matrix,
                                          const SideTable& sides, const Subset& data, const ClassObjective& obj,
                                          const SolveConstraints& cons, const Dominance<RuleId, Subset>& dominates,
                                          DpStats* stats) {
  ClassificationProblem problem(matrix, sides, cons);
  DpSolver solver(problem, obj);
  auto result = solver.solve_thinned(ClassState{indices, data, 0}, dominates);
  if (stats) *stats += solver.stats();
  return result;
}

Dominance<RuleId, Subset> never_dominates() {
  return [](const ClassSolution&, const ClassSolution&) { return false; };
}

Dominance<RuleId, Subset> same_partition_dominance(const ClassObjective& obj) {
  return [obj](const ClassSolution& a, const ClassSolution& b) {
    if (obj.score(a.cost) > obj.score(b.cost)) return false;
    auto la = leaves(a.tree);
    auto lb = leaves(b.tree);
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    return la == lb;
  };
}

Dominance<RuleId, Subset> same_root_dominance(const ClassObjective& obj) {
  return [obj](const ClassSolution& a, const ClassSolution& b) {
    if (a.tree.is_leaf() || b.tree.is_leaf()) return false;
    return a.tree.label() == b.tree.label() && obj.score(a.cost) <= obj.score(b.cost);
  };
}

namespace {

struct Best {
  std::optional<ClassSolution> solution;
  IndexSet combination;
  std::size_t order = 0;
};

bool better(const Best& a, const Best& b, const ClassObjective& obj) {
  if (!a.solution) return false;
  if (!b.solution) return true;
  const double sa = obj.score(a.solution->cost);
  const double sb = obj.score(b.solution->cost);
  return sa < sb || (sa == sb && a.order < b.order);
}

}  // namespace

std::optional<OdtResult> odt(std::span<const Rule> rules, std::size_t k, const Dataset& data,
                             const ClassObjective& obj, const SolveConstraints& cons, const OdtOptions& options) {
  if (k > rules.size()) {
    throw std::invalid_argument("odt: K = " + std::to_string(k) + " exceeds the " + std::to_string(rules.size()) +
                                " available rules");
  }
  data.check();
  const AncestryMatrix matrix = k > 1 ? ancestry_matrix(rules) : AncestryMatrix(rules.size());
  const SideTable sides(rules, data);
  const Subset all = data.all();
  const std::size_t threads = std::max<std::size_t>(1, options.threads);

  std::vector<Best> best(threads);
  std::vector<DpStats> stats(threads);
  std::vector<std::size_t> seen(threads, 0);
  auto work = [&](std::size_t tid) {
    std::size_t order = 0;
    for_each_combination(rules.size(), k, [&](const std::vector<std::size_t>& combo) {
      const std::size_t mine = order++;
      if (mine % threads != tid) return;
      ++seen[tid];
      DpStats local;
      Best b{sodt(combo, matrix, sides, all, obj, cons, &local, options.track_overlap), combo, mine};
      stats[tid] += local;
      if (better(b, best[tid], obj)) best[tid] = std::move(b);
    });
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::size_t winner = 0;
  DpStats total;
  std::size_t combos = 0;
  for (std::size_t t = 0; t < threads; ++t) {
    if (better(best[t], best[winner], obj)) winner = t;
    total += stats[t];
    combos += seen[t];
  }
  Best& w = best[winner];
  if (!w.solution) return std::nullopt;
  return OdtResult{w.solution->tree, w.solution->cost, std::move(w.combination), total, combos};
}

}  // namespace odt
