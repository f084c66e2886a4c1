#include "pareto_route/shared_bounds.hpp"

namespace pareto_route {

SharedBounds::SharedBounds(std::size_t node_count, Cost beta1, Cost beta2)
    : node_count_(node_count),
      beta1_(beta1),
      beta2_(beta2),
      fwd_pi2_(new std::atomic<Cost>[node_count]),
      bwd_pi1_(new std::atomic<Cost>[node_count]) {
  for (std::size_t v = 0; v < node_count; ++v) {
    fwd_pi2_[v].store(0, std::memory_order_relaxed);
    bwd_pi1_[v].store(0, std::memory_order_relaxed);
  }
}

SharedBounds::SharedBounds(const PreprocessData& forward, const PreprocessData& backward)
    : SharedBounds(forward.pi.size(), forward.beta_t[0], forward.beta_t[1]) {
  PR_CHECK(forward.dimension == 2 && backward.dimension == 2);
  PR_CHECK(backward.pi.size() == node_count_);
  for (std::size_t v = 0; v < node_count_; ++v) {
    fwd_pi2_[v].store(forward.pi[v][1], std::memory_order_relaxed);
    bwd_pi1_[v].store(backward.pi[v][1], std::memory_order_relaxed);
  }
}

void SharedBounds::tighten_bound(Which which, Cost value) {
  auto& target = slot(which);
  Cost current = target.load(std::memory_order_relaxed);
  while (value < current &&
         !target.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

void SharedBounds::raise_heuristic(SearchSide side, NodeId node, Cost value) {
  PR_CHECK(node < node_count_);
  auto& target = array(side)[node];
  Cost current = target.load(std::memory_order_relaxed);
  while (value > current &&
         !target.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

}  // namespace pareto_route
