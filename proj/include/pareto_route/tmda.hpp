#pragma once

#include <span>
#include <vector>

#include "pareto_route/frontier_queue.hpp"
#include "pareto_route/graph.hpp"
#include "pareto_route/preprocessing.hpp"
#include "pareto_route/search_common.hpp"
#include "pareto_route/solution.hpp"

namespace pareto_route {

/// Hooks into a T-MDA run. Intended for tests and tracing; every method has
/// an empty default.
class TmdaObserver {
 public:
  virtual ~TmdaObserver() = default;
  /// A label left the queue; `reduced` is its queue key.
  virtual void on_extract(NodeId /*node*/, CostView /*cost*/, CostView /*reduced*/) {}
  /// A label was appended to the permanent list of `node`.
  virtual void on_permanent(NodeId /*node*/, CostView /*cost*/) {}
  /// The NQP list of `arc` changed; `keys` holds its reduced costs front to back.
  virtual void on_nqp_change(ArcId /*arc*/, std::span<const CostVector> /*keys*/) {}
  /// The s-t frontier changed; `frontier` holds its costs in list order.
  virtual void on_frontier(std::span<const CostVector> /*frontier*/) {}
};

struct TmdaOptions {
  QueueMode queue = QueueMode::heap;
  HeuristicMode heuristic = HeuristicMode::computed;
  /// Reconstruct node sequences for the frontier.
  bool keep_paths = true;
  Deadline deadline;
  TmdaObserver* observer = nullptr;
};

/// Targeted Multiobjective Dijkstra for any d. Returns a minimal complete
/// set of efficient s-t paths, lex-sorted. `pre` must come from
/// preprocess() on the same instance.
SolutionRecord solve_tmda(const Instance& instance, const PreprocessData& pre,
                          const TmdaOptions& options = {});

}  // namespace pareto_route
