#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

#include "pareto_route/cost_vector.hpp"
#include "pareto_route/preprocessing.hpp"

namespace pareto_route {

enum class SearchSide : std::uint8_t { forward, backward };

/// Bounds exchanged between the forward and the backward search of the
/// bidirectional solver, all in the coordinates of the forward instance.
///
/// Bounds only decrease, heuristic values only increase, so a stale read is
/// always conservative. Every access is a relaxed atomic.
class SharedBounds {
 public:
  enum class Which : std::uint8_t { beta1, beta2 };

  SharedBounds(std::size_t node_count, Cost beta1, Cost beta2);
  /// Bounds from the forward data; per-node heuristic values from the second
  /// component of each side's own potential.
  SharedBounds(const PreprocessData& forward, const PreprocessData& backward);

  Cost bound(Which which) const { return slot(which).load(std::memory_order_relaxed); }
  /// stored <- min(stored, value)
  void tighten_bound(Which which, Cost value);

  /// Lower bound on the second component (in that side's own coordinates)
  /// of any path from `node` to that side's target.
  Cost heuristic(SearchSide side, NodeId node) const {
    return array(side)[node].load(std::memory_order_relaxed);
  }
  /// stored <- max(stored, value)
  void raise_heuristic(SearchSide side, NodeId node, Cost value);

  std::size_t node_count() const { return node_count_; }

 private:
  std::atomic<Cost>& slot(Which which) { return which == Which::beta1 ? beta1_ : beta2_; }
  const std::atomic<Cost>& slot(Which which) const {
    return which == Which::beta1 ? beta1_ : beta2_;
  }
  std::atomic<Cost>* array(SearchSide side) const {
    return side == SearchSide::forward ? fwd_pi2_.get() : bwd_pi1_.get();
  }

  std::size_t node_count_;
  std::atomic<Cost> beta1_;
  std::atomic<Cost> beta2_;
  std::unique_ptr<std::atomic<Cost>[]> fwd_pi2_;
  std::unique_ptr<std::atomic<Cost>[]> bwd_pi1_;
};

}  // namespace pareto_route
