#include "pareto_route/graph.hpp"

#include <stdexcept>
#include <string>

#include "pareto_route/errors.hpp"

namespace pareto_route {

namespace {

void build_star(std::size_t node_count, const std::vector<NodeId>& keys,
                std::vector<std::size_t>& offsets, std::vector<ArcId>& arcs) {
  offsets.assign(node_count + 1, 0);
  for (NodeId k : keys) ++offsets[k + 1];
  for (std::size_t v = 0; v < node_count; ++v) offsets[v + 1] += offsets[v];
  arcs.resize(keys.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t a = 0; a < keys.size(); ++a) arcs[fill[keys[a]]++] = static_cast<ArcId>(a);
}

}  // namespace

Graph::Graph(std::size_t node_count, std::size_t dimension, std::span<const Arc> arcs)
    : node_count_(node_count), dimension_(dimension) {
  PR_CHECK(dimension >= 1 && dimension <= kMaxDimension);
  tails_.reserve(arcs.size());
  heads_.reserve(arcs.size());
  costs_.reserve(arcs.size() * dimension);
  for (const Arc& arc : arcs) {
    if (arc.tail >= node_count || arc.head >= node_count) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (arc.cost.size() != dimension) {
      throw std::invalid_argument("arc cost dimension mismatch");
    }
    if (arc.tail == arc.head) continue;
    for (Cost c : arc.cost) {
      if (c < 0) throw std::invalid_argument("negative arc cost");
    }
    tails_.push_back(arc.tail);
    heads_.push_back(arc.head);
    costs_.insert(costs_.end(), arc.cost.begin(), arc.cost.end());
  }
  build_star(node_count, tails_, out_offsets_, out_arcs_);
  build_star(node_count, heads_, in_offsets_, in_arcs_);
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (ArcId a = 0; a < arc_count(); ++a) out.push_back(arc(a));
  return out;
}

Instance make_instance(std::shared_ptr<const Graph> graph, NodeId source, NodeId target) {
  if (!graph) throw std::invalid_argument("instance without graph");
  if (source >= graph->node_count() || target >= graph->node_count()) {
    throw std::invalid_argument("source or target out of range");
  }
  if (source == target) throw std::invalid_argument("source equals target");
  return Instance{std::move(graph), source, target};
}

Instance reverse_instance(const Instance& instance) {
  const Graph& g = instance.g();
  if (g.dimension() != 2) {
    throw UnsupportedDimension("reverse_instance requires d = 2, got d = " +
                               std::to_string(g.dimension()));
  }
  std::vector<Arc> reversed;
  reversed.reserve(g.arc_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const CostView c = g.cost(a);
    reversed.push_back(Arc{g.head(a), g.tail(a), CostVector{c[1], c[0]}});
  }
  auto graph = std::make_shared<const Graph>(g.node_count(), 2, reversed);
  return Instance{std::move(graph), instance.target, instance.source};
}

}  // namespace pareto_route
