#ifndef CONEMOD_DRIVER_ALGORITHM_HPP
#define CONEMOD_DRIVER_ALGORITHM_HPP

#include <optional>
#include <string>
#include <vector>

#include "conemod/fitting/fitting.hpp"
#include "conemod/modification/modification.hpp"
#include "conemod/quotient/quotient.hpp"

namespace conemod {

struct RunConfig {
  /// Maximum chart depth; deeper charts are left unexpanded and the tree is flagged.
  std::size_t max_steps = 32;
  GroebnerLimits limits;
  SliceSearch slice;
  /// Degree cap for quotient presentations and membership checks.
  unsigned bound = 12;
  bool compute_quotients = true;
};

struct ChartNode {
  std::size_t id = 0;
  std::optional<std::size_t> parent;
  std::size_t step = 0;
  std::optional<ModType> mod_type;  // unset for the root
  Chart chart;
  /// Centre generators in root coordinates; empty for the root and for identity edges.
  std::vector<Fraction> centre;
  std::optional<IndexPair> index_before;
  IndexPair index_after;
  bool terminal = false;
  /// Left unexpanded because the step budget ran out.
  bool truncated = false;
  std::optional<QuotientPresentation> quotient;
  std::vector<std::string> warnings;
  std::vector<std::size_t> children;
};

struct ChartTree {
  ConeInstance root;
  std::vector<ChartNode> nodes;
  bool complete = true;

  std::vector<std::size_t> terminals() const;
  std::size_t depth() const;
  /// 2 * (d0 * E + e0) + 1, E the largest finite e in the tree; nullopt when e0 is infinite.
  std::optional<std::size_t> depth_bound() const;
};

/// Instance with its Groebner limits replaced.
ConeInstance with_limits(const ConeInstance& inst, const GroebnerLimits& limits);

/// Modification I on every chart; charts with e = infinity are terminal, the
/// others go through Modification II and repeat.
ChartTree run_algorithm(const ConeInstance& inst, const RunConfig& cfg = {});

/// Mod types along the path from the root to `node`, with identity edges as "I=".
std::vector<std::string> edge_sequence(const ChartTree& tree, std::size_t node);

}  // namespace conemod

#endif
