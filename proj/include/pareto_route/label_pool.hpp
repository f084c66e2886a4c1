#pragma once

#include <cstdint>
#include <vector>

#include "pareto_route/cost_vector.hpp"
#include "pareto_route/frontier_queue.hpp"
#include "pareto_route/graph.hpp"

namespace pareto_route {

/// Materialized copy of one pooled label.
struct Label {
  NodeId head = kNoNode;
  CostVector cost;
  CostVector reduced;
  LabelId pred = kNoLabel;
  ArcId last_arc = kNoArc;
};

/// Arena of path labels. A label encodes a path by its head node, its cost
/// vectors and a reference to the label of its prefix. Released slots are
/// recycled; a released label must not be referenced by any live label.
class LabelPool {
 public:
  explicit LabelPool(std::size_t dimension) : dimension_(dimension) {}

  LabelId allocate(NodeId head, LabelId pred, ArcId last_arc, CostView cost, CostView reduced);
  void release(LabelId id);

  NodeId head(LabelId id) const { return heads_[id]; }
  LabelId pred(LabelId id) const { return preds_[id]; }
  ArcId last_arc(LabelId id) const { return arcs_[id]; }
  CostView cost(LabelId id) const { return {costs_.data() + std::size_t{id} * 2 * dimension_, dimension_}; }
  CostView reduced(LabelId id) const {
    return {costs_.data() + std::size_t{id} * 2 * dimension_ + dimension_, dimension_};
  }
  Label label(LabelId id) const;

  std::size_t dimension() const { return dimension_; }
  /// Slots ever handed out (live + recyclable).
  std::size_t capacity() const { return heads_.size(); }
  std::size_t live() const { return heads_.size() - free_.size(); }

 private:
  std::size_t dimension_;
  std::vector<NodeId> heads_;
  std::vector<LabelId> preds_;
  std::vector<ArcId> arcs_;
  std::vector<Cost> costs_;  // cost then reduced, 2*d per slot
  std::vector<LabelId> free_;
};

/// Node sequence from the source to the label's head, following pred links.
/// Throws std::logic_error if the chain is longer than the pool (a cycle).
std::vector<NodeId> reconstruct_path(const LabelPool& pool, LabelId label);

}  // namespace pareto_route
