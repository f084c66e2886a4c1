#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pareto_route/cost_vector.hpp"

namespace pareto_route {

/// Result of one solver run plus the bookkeeping the benchmark tables need.
/// `frontier` is lex-sorted and mutually non-dominated; `paths`, when not
/// empty, runs parallel to it and holds source-to-target node sequences.
struct SolutionRecord {
  std::string instance;
  NodeId source = 0;
  NodeId target = 0;
  std::string algorithm;
  std::string queue;
  std::size_t inserted = 0;
  std::size_t extracted = 0;
  double time_ms = 0.0;
  std::optional<double> preprocess_ms;
  std::vector<CostVector> frontier;
  std::vector<std::vector<NodeId>> paths;
  /// Set when a deadline stopped the run; the frontier is then partial.
  bool timed_out = false;
  /// Bucket queue only: insertions below the last extracted key. Not serialized.
  std::size_t queue_regressions = 0;

  std::size_t n_t() const { return frontier.size(); }
};

/// Sorts lex and drops every vector dominated by or equal to an earlier one.
/// Paths (if present) follow their cost vectors; on equal vectors the one
/// that came first in the input survives.
void canonicalize_frontier(SolutionRecord& record);

}  // namespace pareto_route
