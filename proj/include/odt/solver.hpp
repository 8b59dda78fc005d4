#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odt/dp.hpp"
#include "odt/objective.hpp"
#include "odt/rule_systems.hpp"
#include "odt/rules.hpp"
#include "odt/tree_core.hpp"

namespace odt {

struct SolveConstraints {
  std::size_t min_leaf = 0;
  std::optional<std::size_t> max_depth;
};

using ClassObjective = Objective<RuleId, Subset>;
using ClassSolution = Solution<RuleId, Subset>;

struct ClassState {
  IndexSet rules;
  Subset data;
  std::size_t depth = 0;
};

/// Proper trees over a fixed rule subset: a state with no rules left is a
/// leaf, otherwise each feasible root splits the rules by the matrix and the
/// rows by the rule's sides.
class ClassificationProblem {
 public:
  using State = ClassState;
  using Branch = RuleId;
  using Leaf = Subset;

  ClassificationProblem(const AncestryMatrix& matrix, const SideTable& sides, SolveConstraints cons)
      : matrix_(matrix), sides_(sides), cons_(cons) {}

  StateKind kind(const State& s) const;
  Leaf leaf(const State& s) const { return s.data; }
  std::vector<Candidate<State, Branch>> candidates(const State& s) const;
  std::string overlap_key(const State& s) const;

 private:
  const AncestryMatrix& matrix_;
  const SideTable& sides_;
  SolveConstraints cons_;
};

/// Optimal proper tree using exactly the rules in indices; nullopt when the
/// constraints rule out every tree.
std::optional<ClassSolution> sodt(const IndexSet& indices, const AncestryMatrix& matrix, const SideTable& sides,
                                  const Subset& data, const ClassObjective& obj, const SolveConstraints& cons = {},
                                  DpStats* stats = nullptr, bool track_overlap = false);

std::optional<ClassSolution> sodt_thinned(const IndexSet& indices, const AncestryMatrix& matrix,
                                          const SideTable& sides, const Subset& data, const ClassObjective& obj,
                                          const SolveConstraints& cons, const Dominance<RuleId, Subset>& dominates,
                                          DpStats* stats = nullptr);

/// Never discards anything.
Dominance<RuleId, Subset> never_dominates();
/// a beats b when both induce the same leaf sets and a costs no more.
Dominance<RuleId, Subset> same_partition_dominance(const ClassObjective& obj);
/// a beats b when both have the same root rule and a costs no more.
Dominance<RuleId, Subset> same_root_dominance(const ClassObjective& obj);

struct OdtOptions {
  std::size_t threads = 1;
  bool track_overlap = false;
};

struct OdtResult {
  DecisionTree tree;
  CostValue cost;
  IndexSet combination;
  DpStats stats;
  std::size_t combinations = 0;
};

/// Best sodt result over every K-combination of rules. Ties go to the
/// lexicographically smallest combination, whatever the thread count.
/// Throws std::invalid_argument when K exceeds the number of rules.
std::optional<OdtResult> odt(std::span<const Rule> rules, std::size_t k, const Dataset& data,
                             const ClassObjective& obj, const SolveConstraints& cons = {},
                             const OdtOptions& options = {});

}  // namespace odt
