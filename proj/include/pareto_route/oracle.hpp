#pragma once

#include <cstdint>
#include <vector>

#include "pareto_route/cost_vector.hpp"
#include "pareto_route/graph.hpp"

namespace pareto_route {

/// Reference frontier computation for tests. Deliberately simple and
/// written without the solver's dominance helpers.
enum class OracleMode : std::uint8_t {
  dfs,                // all simple s-t paths, then filter; n <= 64
  label_correcting,   // per-node Pareto sets until fixpoint; n <= 5000
};

inline constexpr std::size_t kOracleDfsLimit = 64;
inline constexpr std::size_t kOracleLabelCorrectingLimit = 5000;

/// Lex-sorted, pairwise non-dominated, duplicate-free cost vectors.
using FrontierSet = std::vector<CostVector>;

/// Throws OracleGuardExceeded above the mode's node limit.
FrontierSet oracle_frontier(const Instance& instance, OracleMode mode = OracleMode::label_correcting);

/// Pareto set of every node reachable from the source (label-correcting).
std::vector<FrontierSet> oracle_node_frontiers(const Instance& instance);

/// Keeps the non-dominated, distinct vectors, lex-sorted.
FrontierSet pareto_filter(std::vector<CostVector> vectors);

}  // namespace pareto_route
