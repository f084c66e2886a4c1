#pragma once

#include "pareto_route/graph.hpp"
#include "pareto_route/preprocessing.hpp"
#include "pareto_route/solution.hpp"
#include "pareto_route/tbda.hpp"

namespace pareto_route {

enum class BidirectionalMode : std::uint8_t {
  parallel,     // one thread per direction
  interleaved,  // single thread, one iteration per side in turn
};

struct BtbdaOptions {
  QueueMode queue = QueueMode::heap;
  bool shortcuts = true;
  BidirectionalMode mode = BidirectionalMode::parallel;
  /// Share the stop/frontier bounds between the two searches. Without it
  /// each search keeps private bounds and runs to completion on its own.
  bool share_bounds = true;
  /// Publish raised heuristic values at first visits (needs share_bounds).
  bool share_heuristics = true;
  bool keep_paths = true;
  Deadline deadline;
};

/// Preprocessing for the backward search: preprocess() on the reversed
/// instance, i.e. two lexicographic queries out of s on the original graph.
PreprocessData preprocess_backward(const Instance& instance, const PreprocessOptions& options = {});

/// Forward T-BDA on the instance and backward T-BDA on its reversal, meeting
/// in the middle. The result merges both partial frontiers (backward paths
/// mirrored into forward coordinates), keeping the forward representative
/// when both found the same cost vector. Requires d = 2.
SolutionRecord solve_btbda(const Instance& instance, const PreprocessData& forward,
                           const PreprocessData& backward, const BtbdaOptions& options = {});

}  // namespace pareto_route
