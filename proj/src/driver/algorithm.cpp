#include "conemod/driver/algorithm.hpp"

#include <algorithm>

namespace conemod {

std::vector<std::size_t> ChartTree::terminals() const {
  std::vector<std::size_t> out;
  for (const auto& n : nodes)
    if (n.terminal) out.push_back(n.id);
  return out;
}

std::size_t ChartTree::depth() const {
  std::size_t d = 0;
  for (const auto& n : nodes) d = std::max(d, n.step);
  return d;
}

std::optional<std::size_t> ChartTree::depth_bound() const {
  if (nodes.empty() || nodes.front().index_after.infinite()) return std::nullopt;
  std::uint64_t largest = 0;
  for (const auto& n : nodes)
    if (n.index_after.e) largest = std::max(largest, *n.index_after.e);
  const IndexPair& start = nodes.front().index_after;
  return 2 * (start.d * largest + *start.e) + 1;
}

ConeInstance with_limits(const ConeInstance& inst, const GroebnerLimits& limits) {
  ConeInstance out = inst;
  out.algebra = GradedAlgebra(inst.ring_ptr(), inst.algebra.relations().generators(), limits);
  return out;
}

namespace {

class Runner {
 public:
  Runner(const RunConfig& cfg, ChartTree& tree) : cfg_(cfg), tree_(tree) {}

  std::size_t add(ChartNode node) {
    node.id = tree_.nodes.size();
    if (node.parent) tree_.nodes[*node.parent].children.push_back(node.id);
    tree_.nodes.push_back(std::move(node));
    return tree_.nodes.size() - 1;
  }

  ChartNode child_of(std::size_t parent, ModType kind, Chart chart, const CentreData& centre) {
    ChartNode node;
    node.parent = parent;
    node.step = tree_.nodes[parent].step + 1;
    node.mod_type = kind;
    node.index_before = tree_.nodes[parent].index_after;
    if (!chart.identity) {
      const Chart& from = tree_.nodes[parent].chart;
      for (const auto& g : centre.core) node.centre.push_back(substitute(g, from.embedding, from.root_ring));
    }
    node.warnings = centre.warnings;
    node.chart = std::move(chart);
    node.index_after = compute_index(node.chart.instance);
    return node;
  }

  bool out_of_steps(std::size_t id) {
    if (tree_.nodes[id].step + 1 <= cfg_.max_steps) return false;
    tree_.nodes[id].truncated = true;
    tree_.complete = false;
    return true;
  }

  // `id` is the root or the result of a Modification II.
  void expand(std::size_t id) {
    if (out_of_steps(id)) return;
    const CentreData centre = centre_modI(tree_.nodes[id].chart.instance);
    for (Chart& c : blowup_charts(tree_.nodes[id].chart, centre)) {
      const std::size_t child = add(child_of(id, ModType::I, std::move(c), centre));
      if (tree_.nodes[child].index_after.infinite()) {
        finish(child);
        continue;
      }
      if (out_of_steps(child)) continue;
      const CentreData centre2 = centre_modII(tree_.nodes[child].chart.instance);
      for (Chart& g : blowup_charts(tree_.nodes[child].chart, centre2))
        expand(add(child_of(child, ModType::II, std::move(g), centre2)));
    }
  }

  void finish(std::size_t id) {
    ChartNode& node = tree_.nodes[id];
    node.terminal = true;
    if (!cfg_.compute_quotients) return;
    if (!check_uu(node.chart.instance)) {
      node.warnings.push_back("terminal chart fails the constant stabiliser check");
      return;
    }
    try {
      const SliceData slice = find_slice(node.chart.instance, cfg_.slice);
      node.quotient = invariant_ring(node.chart, slice, cfg_.bound);
    } catch (const SliceNotFound& e) {
      node.warnings.push_back(std::string(e.what()) + (e.best_minor.empty() ? "" : "; best minor " + e.best_minor));
    }
  }

 private:
  const RunConfig& cfg_;
  ChartTree& tree_;
};

}  // namespace

ChartTree run_algorithm(const ConeInstance& inst, const RunConfig& cfg) {
  ChartTree tree;
  tree.root = with_limits(inst, cfg.limits);
  const auto report = verify_action(tree.root);
  if (!report.ok()) {
    std::string names;
    for (const auto& f : report.failures()) names += (names.empty() ? "" : ", ") + f;
    throw PreconditionViolation("action verification failed: " + names);
  }
  Runner runner(cfg, tree);
  ChartNode root;
  root.chart = root_chart(tree.root);
  root.index_after = compute_index(tree.root);
  runner.expand(runner.add(std::move(root)));
  if (const auto bound = tree.depth_bound(); bound && tree.depth() > *bound)
    tree.nodes.front().warnings.push_back("tree depth " + std::to_string(tree.depth()) + " exceeds the bound " +
                                          std::to_string(*bound));
  return tree;
}

std::vector<std::string> edge_sequence(const ChartTree& tree, std::size_t node) {
  std::vector<std::string> out;
  for (std::size_t cur = node; tree.nodes[cur].parent; cur = *tree.nodes[cur].parent) {
    const ChartNode& n = tree.nodes[cur];
    std::string s = to_string(*n.mod_type);
    if (n.chart.identity) s += "=";
    out.push_back(s);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace conemod
