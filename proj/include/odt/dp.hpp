#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "odt/mtree.hpp"
#include "odt/objective.hpp"

namespace odt {

enum class StateKind { Split, Leaf, Infeasible };

template <class State, class Branch>
struct Candidate {
  State left;
  Branch root;
  State right;
};

struct DpStats {
  std::uint64_t calls = 0;
  std::uint64_t candidates = 0;
  std::uint64_t leaves = 0;
  std::uint64_t repeated_subproblems = 0;

  DpStats& operator+=(const DpStats& o) {
    calls += o.calls;
    candidates += o.candidates;
    leaves += o.leaves;
    repeated_subproblems += o.repeated_subproblems;
    return *this;
  }
};

template <class Branch, class Leaf>
struct Solution {
  MTree<Branch, Leaf> tree;
  CostValue cost;
};

/// A problem plugs into the recursion through:
///   StateKind kind(const State&)
///   Leaf leaf(const State&)
///   std::vector<Candidate<State, Branch>> candidates(const State&)
/// and may add std::string overlap_key(const State&) to let the solver count
/// subproblems it meets more than once.
template <class P>
concept DpProblem = requires(const P& p, const typename P::State& s) {
  typename P::Branch;
  typename P::Leaf;
  { p.kind(s) } -> std::same_as<StateKind>;
  { p.leaf(s) } -> std::convertible_to<typename P::Leaf>;
  p.candidates(s);
};

/// Partial order on candidate solutions: dominates(a, b) means b can be
/// discarded when a is kept.
template <class Branch, class Leaf>
using Dominance = std::function<bool(const Solution<Branch, Leaf>&, const Solution<Branch, Leaf>&)>;

/// The optimal-tree recursion without memoisation. Each split candidate is
/// solved recursively and priced by combine; a candidate replaces the current
/// best only when strictly cheaper, so the earliest optimum is returned.
template <DpProblem P>
class DpSolver {
 public:
  using State = typename P::State;
  using Branch = typename P::Branch;
  using Leaf = typename P::Leaf;
  using Tree = MTree<Branch, Leaf>;
  using Sol = Solution<Branch, Leaf>;

  DpSolver(const P& problem, const Objective<Branch, Leaf>& objective, bool track_overlap = false)
      : problem_(problem), objective_(objective), track_overlap_(track_overlap) {}

  std::optional<Sol> solve(const State& s) {
    note(s);
    switch (problem_.kind(s)) {
      case StateKind::Infeasible:
        return std::nullopt;
      case StateKind::Leaf:
        return make_leaf(s);
      case StateKind::Split:
        break;
    }
    std::optional<Sol> best;
    for (auto& c : problem_.candidates(s)) {
      ++stats_.candidates;
      auto u = solve(c.left);
      if (!u) continue;
      auto v = solve(c.right);
      if (!v) continue;
      CostValue cost = objective_.combine(u->cost, c.root, v->cost);
      if (!best || objective_.score(cost) < objective_.score(best->cost)) {
        best = Sol{Tree::node(std::move(u->tree), c.root, std::move(v->tree)), std::move(cost)};
      }
    }
    return best;
  }

  /// Every feasible tree in generation order: candidates in the order the
  /// problem lists them, left choices outer, right choices inner.
  std::vector<Sol> enumerate(const State& s) { return enumerate_thinned(s, nullptr); }

  /// Like enumerate, but at every state drops candidates dominated by one
  /// that is kept. With a null dominance nothing is dropped.
  std::vector<Sol> enumerate_thinned(const State& s, const Dominance<Branch, Leaf>& dominates) {
    note(s);
    switch (problem_.kind(s)) {
      case StateKind::Infeasible:
        return {};
      case StateKind::Leaf:
        return {make_leaf(s)};
      case StateKind::Split:
        break;
    }
    std::vector<Sol> out;
    for (auto& c : problem_.candidates(s)) {
      ++stats_.candidates;
      auto us = enumerate_thinned(c.left, dominates);
      if (us.empty()) continue;
      auto vs = enumerate_thinned(c.right, dominates);
      for (const Sol& u : us)
        for (const Sol& v : vs)
          out.push_back(Sol{Tree::node(u.tree, c.root, v.tree), objective_.combine(u.cost, c.root, v.cost)});
    }
    return dominates ? thin(std::move(out), dominates) : out;
  }

  /// Minimum of enumerate_thinned, earliest on ties.
  std::optional<Sol> solve_thinned(const State& s, const Dominance<Branch, Leaf>& dominates) {
    auto all = enumerate_thinned(s, dominates);
    if (all.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i)
      if (objective_.score(all[i].cost) < objective_.score(all[best].cost)) best = i;
    return all[best];
  }

  const DpStats& stats() const { return stats_; }

 private:
  Sol make_leaf(const State& s) {
    ++stats_.leaves;
    Leaf l = problem_.leaf(s);
    CostValue c = objective_.leaf_cost(l);
    return Sol{Tree::leaf(std::move(l)), std::move(c)};
  }

  void note(const State& s) {
    ++stats_.calls;
    if constexpr (requires { problem_.overlap_key(s); }) {
      if (track_overlap_ && !seen_.insert(problem_.overlap_key(s)).second) ++stats_.repeated_subproblems;
    }
  }

  static std::vector<Sol> thin(std::vector<Sol> xs, const Dominance<Branch, Leaf>& dominates) {
    std::vector<Sol> kept;
    for (Sol& x : xs) {
      bool beaten = false;
      for (const Sol& k : kept) {
        if (dominates(k, x)) {
          beaten = true;
          break;
        }
      }
      if (beaten) continue;
      std::erase_if(kept, [&](const Sol& k) { return dominates(x, k); });
      kept.push_back(std::move(x));
    }
    return kept;
  }

  const P& problem_;
  const Objective<Branch, Leaf>& objective_;
  bool track_overlap_;
  DpStats stats_;
  std::unordered_set<std::string> seen_;
};

}  // namespace odt
