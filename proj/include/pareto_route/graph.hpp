#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pareto_route/cost_vector.hpp"

namespace pareto_route {

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  CostVector cost;
};

/// Immutable digraph with per-arc cost vectors, stored as forward and
/// reverse stars over a shared arc table. Arc ids are dense in [0, m) and
/// follow the order of the input list after self-loops are removed.
class Graph {
 public:
  Graph() = default;
  /// Self-loops are dropped; parallel arcs are kept.
  Graph(std::size_t node_count, std::size_t dimension, std::span<const Arc> arcs);

  std::size_t node_count() const { return node_count_; }
  std::size_t arc_count() const { return tails_.size(); }
  std::size_t dimension() const { return dimension_; }

  NodeId tail(ArcId a) const { return tails_[a]; }
  NodeId head(ArcId a) const { return heads_[a]; }
  CostView cost(ArcId a) const { return {costs_.data() + std::size_t{a} * dimension_, dimension_}; }

  std::span<const ArcId> outgoing(NodeId v) const {
    return {out_arcs_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const ArcId> incoming(NodeId v) const {
    return {in_arcs_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  Arc arc(ArcId a) const { return {tails_[a], heads_[a], CostVector(cost(a))}; }
  std::vector<Arc> arcs() const;

 private:
  std::size_t node_count_ = 0;
  std::size_t dimension_ = 0;
  std::vector<NodeId> tails_;
  std::vector<NodeId> heads_;
  std::vector<Cost> costs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<ArcId> out_arcs_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<ArcId> in_arcs_;
};

/// One-to-one query: a shared graph plus source and target.
struct Instance {
  std::shared_ptr<const Graph> graph;
  NodeId source = 0;
  NodeId target = 0;

  const Graph& g() const { return *graph; }
  std::size_t dimension() const { return graph->dimension(); }
};

/// Validates s != t and both in range; throws std::invalid_argument.
Instance make_instance(std::shared_ptr<const Graph> graph, NodeId source, NodeId target);

/// Arcs reversed, source/target swapped, the two cost components of every
/// arc swapped. Requires d = 2 (UnsupportedDimension otherwise).
Instance reverse_instance(const Instance& instance);

}  // namespace pareto_route
