#include "pareto_route/label_pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace pareto_route {

LabelId LabelPool::allocate(NodeId head, LabelId pred, ArcId last_arc, CostView cost,
                            CostView reduced) {
  PR_DCHECK(cost.size() == dimension_ && reduced.size() == dimension_);
  LabelId id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
    heads_[id] = head;
    preds_[id] = pred;
    arcs_[id] = last_arc;
  } else {
    PR_CHECK(heads_.size() < kNoLabel);
    id = static_cast<LabelId>(heads_.size());
    heads_.push_back(head);
    preds_.push_back(pred);
    arcs_.push_back(last_arc);
    costs_.resize(costs_.size() + 2 * dimension_);
  }
  Cost* slot = costs_.data() + std::size_t{id} * 2 * dimension_;
  std::copy(cost.begin(), cost.end(), slot);
  std::copy(reduced.begin(), reduced.end(), slot + dimension_);
  return id;
}

void LabelPool::release(LabelId id) {
  PR_DCHECK(id < heads_.size());
  heads_[id] = kNoNode;
  free_.push_back(id);
}

Label LabelPool::label(LabelId id) const {
  return Label{heads_[id], CostVector(cost(id)), CostVector(reduced(id)), preds_[id], arcs_[id]};
}

std::vector<NodeId> reconstruct_path(const LabelPool& pool, LabelId label) {
  std::vector<NodeId> nodes;
  std::size_t steps = 0;
  for (LabelId at = label; at != kNoLabel; at = pool.pred(at)) {
    if (++steps > pool.capacity()) throw std::logic_error("cycle in label predecessor chain");
    nodes.push_back(pool.head(at));
  }
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace pareto_route
