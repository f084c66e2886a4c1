#pragma once

#include <memory>

#include "pareto_route/frontier_queue.hpp"
#include "pareto_route/graph.hpp"
#include "pareto_route/preprocessing.hpp"
#include "pareto_route/search_common.hpp"
#include "pareto_route/shared_bounds.hpp"
#include "pareto_route/solution.hpp"

namespace pareto_route {

class TbdaObserver {
 public:
  virtual ~TbdaObserver() = default;
  virtual void on_extract(NodeId /*node*/, CostView /*cost*/, CostView /*reduced*/) {}
  virtual void on_permanent(NodeId /*node*/, CostView /*cost*/) {}
  /// A vector was appended to the s-t frontier.
  virtual void on_frontier_add(CostView /*cost*/) {}
  /// The last frontier vector `old_cost` was replaced by `new_cost`.
  virtual void on_frontier_replace(CostView /*old_cost*/, CostView /*new_cost*/) {}
};

struct TbdaOptions {
  QueueMode queue = QueueMode::heap;
  /// Concatenate extracted paths with the (1,2)-lexicographic tree path to t.
  bool shortcuts = true;
  /// Prune at w against the static nadir value beta_w,2 instead of gamma*_w,
  /// as the pseudocode is printed. For comparison only; not exact.
  bool literal_nadir_check = false;
  /// In a bidirectional run, publish and use raised heuristic values.
  bool share_heuristics = true;
  bool keep_paths = true;
  Deadline deadline;
  TbdaObserver* observer = nullptr;
};

/// One biobjective search that can be advanced an iteration at a time, so
/// two of them can be interleaved deterministically or run on two threads.
class Bda2dSearch {
 public:
  virtual ~Bda2dSearch() = default;
  /// Runs one main-loop iteration. Returns false once the search is over.
  virtual bool step() = 0;
  virtual bool done() const = 0;
  /// Frontier and paths in the coordinates of the searched instance.
  virtual SolutionRecord result() const = 0;
};

/// `shared` may be null for a standalone search. With a handle, the stop
/// bound is the one the opposite side tightens and the frontier bound the
/// one this side tightens.
std::unique_ptr<Bda2dSearch> make_bda2d_search(const Instance& instance, const PreprocessData& pre,
                                               const TbdaOptions& options,
                                               SharedBounds* shared = nullptr,
                                               SearchSide side = SearchSide::forward);

/// Targeted Biobjective Dijkstra. Requires d = 2 (UnsupportedDimension).
SolutionRecord solve_tbda(const Instance& instance, const PreprocessData& pre,
                          const TbdaOptions& options = {});

}  // namespace pareto_route
