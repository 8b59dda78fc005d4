#include "odt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "odt/applications.hpp"
#include "odt/combinatorics.hpp"
#include "odt/generator.hpp"
#include "odt/objective.hpp"
#include "odt/serialize.hpp"
#include "odt/solver.hpp"

namespace odt {

namespace {

struct RunConfig {
  std::string rule_kind = "axis";
  std::size_t k = 1;
  std::size_t min_leaf = 0;
  std::optional<std::size_t> max_depth;
  std::string objective = "misclassification";
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::size_t threads = 1;
  std::string input;
  std::string output;
  std::string matrix_file;
  std::string rule_file;
  std::string sizes;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

Dataset load_csv(const std::string& path) {
  auto in = open_input(path);
  Dataset d = read_csv(in);
  if (d.size() == 0) throw std::invalid_argument("'" + path + "' has no data rows");
  return d;
}

void write_tree(const RunConfig& cfg, const SerialTree& t) {
  if (cfg.output.empty()) return;
  std::ofstream out(cfg.output);
  if (!out) throw std::invalid_argument("cannot write '" + cfg.output + "'");
  out << serialize(t) << "\n";
}

RuleSet enumerate_rules(const std::string& kind, const Dataset& data) {
  if (kind == "axis") return enumerate_axis_rules(data);
  if (kind == "hyperplane") return enumerate_hyperplane_rules(data);
  if (data.dim != 2) throw std::invalid_argument("surface2 rules need two-dimensional data");
  return enumerate_surface2_rules(data);
}

SolveConstraints constraints_of(const RunConfig& cfg) { return {cfg.min_leaf, cfg.max_depth}; }

bool satisfies(const DecisionTree& t, const SolveConstraints& cons) {
  if (cons.max_depth && depth(t) > *cons.max_depth) return false;
  for (const Subset& s : leaves(t))
    if (s.size() < cons.min_leaf) return false;
  return true;
}

void print_leaves(std::ostream& out, const DecisionTree& t, const Dataset& data) {
  std::size_t i = 0;
  std::size_t wrong = 0;
  out << "leaves:\n";
  for (const Subset& s : leaves(t)) {
    out << "  leaf " << i++ << ": rows=" << s.size();
    if (s.empty()) {
      out << " majority=-\n";
      continue;
    }
    std::vector<int> labels;
    for (std::size_t r : s) labels.push_back(data.labels[r]);
    const int m = majority_label(labels);
    std::size_t errors = 0;
    for (int l : labels) errors += l != m;
    wrong += errors;
    out << " majority=" << m << " errors=" << errors << "\n";
  }
  out << "misclassified: " << wrong << " of " << data.size() << "\n";
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
  const Dataset data = load_csv(cfg.input);
  const RuleSet rs = enumerate_rules(cfg.rule_kind, data);
  out << "rules: " << cfg.rule_kind << ", " << rs.rules.size() << " candidates (" << rs.degenerate << " degenerate, "
      << rs.duplicates << " duplicates)\n";
  const auto obj = misclassification_objective<RuleId>(data);
  OdtOptions opts;
  opts.threads = cfg.threads;
  auto result = odt(rs.rules, cfg.k, data, obj, constraints_of(cfg), opts);
  if (!result) throw InfeasibleError("no tree satisfies the constraints");
  const SerialTree st = to_serial(result->tree, rs.rules);
  out << "tree: " << serialize(st) << "\n";
  out << "score: " << format_real(result->cost.value) << "\n";
  out << "combination:";
  for (RuleId r : result->combination) out << " " << r;
  out << "\n";
  for (RuleId r : branch_labels(result->tree)) out << "  rule " << r << ": " << describe(rs.rules[r].kind) << "\n";
  print_leaves(out, result->tree, data);
  write_tree(cfg, st);
  return kExitOk;
}

struct CountReport {
  std::size_t valid = 0;
  std::size_t tried = 0;
  std::size_t proper = 0;
  bool sets_equal = true;
};

// Oracle permutations against the canonical level orders of generated trees,
// one K-combination at a time.
CountReport compare_counts(const OracleResult& oracle, const AncestryMatrix& full, std::size_t n, std::size_t k) {
  CountReport rep;
  rep.valid = oracle.entries.size();
  rep.tried = oracle.permutations_tried;
  std::set<Permutation> from_oracle;
  for (const OracleEntry& e : oracle.entries) from_oracle.insert(e.permutation);
  std::set<Permutation> from_gen;
  for_each_combination(n, k, [&](const std::vector<std::size_t>& combo) {
    for (const BTree& t : gen_btrees(combo, full)) {
      ++rep.proper;
      from_gen.insert(level_order(t));
    }
  });
  rep.sets_equal = from_oracle == from_gen;
  return rep;
}

void print_matrix(std::ostream& out, const AncestryMatrix& m) {
  out << "matrix:\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.size(); ++j) out << (m(i, j) < 0 ? " " : "  ") << m(i, j);
    out << "\n";
  }
}

int report_counts(std::ostream& out, const CountReport& rep) {
  out << "valid permutations: " << rep.valid << " of " << rep.tried << "\n";
  out << "proper trees: " << rep.proper << "\n";
  out << "generator matches oracle: " << (rep.sets_equal ? "yes" : "no") << "\n";
  const bool ok = rep.sets_equal && rep.valid == rep.proper;
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int check_matrix(const RunConfig& cfg, const AncestryMatrix& m, std::ostream& out) {
  const AxiomReport axioms = validate_axioms(m);
  if (!axioms.ok()) throw std::invalid_argument("matrix violates the ancestry axioms");
  const std::size_t k = cfg.k == 0 ? 0 : std::min(cfg.k, m.size());
  if (m.size() > 14 || k > 6) throw std::invalid_argument("check is limited to 14 rules and K <= 6 for matrices");
  print_matrix(out, m);
  out << "K: " << k << "\n";
  return report_counts(out, compare_counts(oracle_kperms(m, k), m, m.size(), k));
}

std::vector<Rule> read_rule_file(const std::string& path) {
  auto in = open_input(path);
  std::vector<Rule> rules;
  for (const SceneSegment& s : read_scene(in)) {
    const std::vector<Point> pts{{s.a[0], s.a[1]}, {s.b[0], s.b[1]}};
    auto h = hyperplane_through(pts);
    rules.push_back(Rule{rules.size(), std::move(*h), pts});
  }
  return rules;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.matrix_file.empty()) {
    auto in = open_input(cfg.matrix_file);
    return check_matrix(cfg, read_matrix(in), out);
  }
  if (!cfg.rule_file.empty()) return check_matrix(cfg, ancestry_matrix(read_rule_file(cfg.rule_file)), out);
  if (cfg.input.empty()) throw std::invalid_argument("check needs a CSV file, --matrix or --rule-file");

  const Dataset data = load_csv(cfg.input);
  if (data.size() > 14 || cfg.k > 4) throw std::invalid_argument("check is limited to N <= 14 and K <= 4");
  const RuleSet rs = enumerate_rules(cfg.rule_kind, data);
  if (cfg.k > rs.rules.size()) throw std::invalid_argument("K exceeds the number of candidate rules");
  const auto obj = misclassification_objective<RuleId>(data);
  const SolveConstraints cons = constraints_of(cfg);

  auto fast = odt(rs.rules, cfg.k, data, obj, cons);
  const OracleResult oracle = oracle_kperms(rs.rules, cfg.k);
  const SideTable sides(rs.rules, data);
  std::optional<double> brute;
  for (const OracleEntry& e : oracle.entries) {
    const DecisionTree t = complete(e.tree, sides, data.all());
    if (!satisfies(t, cons)) continue;
    const double s = evaluate(t, obj).value;
    if (!brute || s < *brute) brute = s;
  }
  const AncestryMatrix full = cfg.k > 1 ? ancestry_matrix(rs.rules) : AncestryMatrix(rs.rules.size());
  const CountReport rep = compare_counts(oracle, full, rs.rules.size(), cfg.k);

  out << "rules: " << cfg.rule_kind << ", " << rs.rules.size() << " candidates\n";
  out << "K: " << cfg.k << "\n";
  out << "valid permutations: " << rep.valid << " of " << rep.tried << "\n";
  out << "proper trees: " << rep.proper << "\n";
  out << "generator matches oracle: " << (rep.sets_equal ? "yes" : "no") << "\n";
  out << "recursion score: " << (fast ? format_real(fast->cost.value) : "infeasible") << "\n";
  out << "oracle score: " << (brute ? format_real(*brute) : "infeasible") << "\n";
  const bool same = fast.has_value() == brute.has_value() && (!fast || fast->cost.value == *brute);
  const bool ok = same && rep.sets_equal && rep.valid == rep.proper;
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_bsp(const RunConfig& cfg, std::ostream& out) {
  auto in = open_input(cfg.input);
  const auto scene = read_scene(in);
  if (scene.empty()) throw std::invalid_argument("scene has no segments");
  const BspResult r = solve_bsp(scene);
  const SerialTree st = to_serial(r.tree);
  out << "tree: " << serialize(st) << "\n";
  out << "nodes: " << r.nodes << "\n";
  out << "random orders (" << cfg.trials << ", seed " << cfg.seed
      << "): " << random_bsp_min(scene, cfg.trials, cfg.seed) << "\n";
  write_tree(cfg, st);
  return kExitOk;
}

int cmd_mcmp(const RunConfig& cfg, std::ostream& out) {
  const auto dims = chain_from_sizes(parse_sizes(cfg.sizes));
  const McmpResult r = solve_mcmp(dims);
  const SerialTree st = to_serial(r.tree);
  out << "tree: " << serialize(st) << "\n";
  out << "cost: " << format_real(r.cost.value) << "\n";
  out << "order: " << parenthesize(r.tree) << "\n";
  write_tree(cfg, st);
  return kExitOk;
}

int cmd_kd(const RunConfig& cfg, std::ostream& out) {
  const Dataset data = load_csv(cfg.input);
  const std::size_t max_depth = cfg.max_depth.value_or(3);
  const KdResult r = solve_kd(data, max_depth);
  const SerialTree st = to_serial(r.tree);
  out << "tree: " << serialize(st) << "\n";
  out << "score: " << format_real(r.cost.value) << "\n";
  out << "level dimensions consistent: " << (level_consistent(r.tree, data.dim) ? "yes" : "no") << "\n";
  write_tree(cfg, st);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Optimal proper decision trees"};
  app.name("odt");
  app.require_subcommand(1);

  const std::vector<std::string> rule_kinds{"axis", "hyperplane", "surface2"};
  auto add_tree_options = [&](CLI::App* sub) {
    sub->add_option("--rules", cfg.rule_kind, "candidate rule family")->check(CLI::IsMember(rule_kinds));
    sub->add_option("--k", cfg.k, "number of splitting rules in the tree");
    sub->add_option("--min-leaf", cfg.min_leaf, "smallest allowed leaf");
    sub->add_option("--max-depth", cfg.max_depth, "deepest allowed tree");
    sub->add_option("--objective", cfg.objective, "objective")->check(CLI::IsMember({"misclassification"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--threads", cfg.threads, "worker threads for the K-combination sweep");
  };

  auto* fit = app.add_subcommand("fit", "fit an optimal classification tree to a CSV file");
  fit->add_option("csv", cfg.input, "input CSV")->required();
  add_tree_options(fit);
  fit->add_option("--out", cfg.output, "write the tree here");

  auto* check = app.add_subcommand("check", "compare the recursion against brute-force permutation search");
  check->add_option("csv", cfg.input, "input CSV");
  add_tree_options(check);
  check->add_option("--matrix", cfg.matrix_file, "ancestry matrix file instead of a dataset");
  check->add_option("--rule-file", cfg.rule_file, "lines through point pairs ('x1 y1 x2 y2') instead of a dataset");

  auto* bsp = app.add_subcommand("bsp", "smallest auto-partition of a segment scene");
  bsp->add_option("scene", cfg.input, "scene file")->required();
  bsp->add_option("--seed", cfg.seed, "seed for the random-order baseline");
  bsp->add_option("--trials", cfg.trials, "random orders to try");
  bsp->add_option("--out", cfg.output, "write the tree here");

  auto* mcmp = app.add_subcommand("mcmp", "optimal matrix chain order");
  mcmp->add_option("sizes", cfg.sizes, "comma-separated sizes, e.g. 10,30,5,60")->required();
  mcmp->add_option("--out", cfg.output, "write the tree here");

  auto* kd = app.add_subcommand("kd", "most balanced K-D tree");
  kd->add_option("csv", cfg.input, "input CSV")->required();
  kd->add_option("--max-depth", cfg.max_depth, "number of levels (default 3)");
  kd->add_option("--objective", cfg.objective, "objective")->check(CLI::IsMember({"balance"}));
  kd->add_option("--out", cfg.output, "write the tree here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "odt: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (fit->parsed()) return cmd_fit(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (bsp->parsed()) return cmd_bsp(cfg, out);
    if (mcmp->parsed()) return cmd_mcmp(cfg, out);
    return cmd_kd(cfg, out);
  } catch (const InfeasibleError& e) {
    err << "odt: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "odt: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace odt
