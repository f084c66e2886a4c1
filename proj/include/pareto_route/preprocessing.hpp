#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "pareto_route/cost_vector.hpp"
#include "pareto_route/graph.hpp"

namespace pareto_route {

enum class SearchDirection : std::uint8_t {
  forward,  // root-to-all along outgoing arcs
  reverse,  // all-to-root along incoming arcs
};

/// Shortest path tree of a lexicographic one-to-all (or all-to-one) query.
///
/// For a reverse tree rooted at t, `parent_arc[v]` is the first arc of the
/// tree path v -> t and `cost(v)` the cost of that path. For a forward tree
/// rooted at s, `parent_arc[v]` is the last arc of the tree path s -> v.
struct LexTree {
  ComponentOrder order;
  SearchDirection direction = SearchDirection::reverse;
  NodeId root = kNoNode;
  std::vector<ArcId> parent_arc;
  CostTable tree_cost;
  std::vector<std::uint8_t> reachable;

  CostView cost(NodeId v) const { return tree_cost[v]; }
  bool is_reachable(NodeId v) const { return reachable[v] != 0; }
};

/// The d preprocessing orders: order i starts with component i, the
/// remaining components follow in ascending order.
std::vector<ComponentOrder> preprocessing_orders(std::size_t dimension);

/// Label-setting Dijkstra whose keys are full cost vectors compared
/// lexicographically under `order`. Equal keys settle by smaller node id.
LexTree lex_dijkstra(const Graph& graph, NodeId root, SearchDirection direction,
                     const ComponentOrder& order);

/// Componentwise minimum of a set of vectors (the ideal point).
CostVector ideal_point(std::span<const CostVector> points);

/// Per-node ideal point over the trees. Unreachable nodes get infinity.
CostTable compute_heuristic(std::span<const LexTree> trees);

/// Per-node nadir point for d = 2: (c1 of the (2,1) tree path, c2 of the
/// (1,2) tree path). Throws UnsupportedDimension for d != 2.
CostTable compute_nadir_2d(const LexTree& order_12, const LexTree& order_21);

/// beta_t,i = max over trees of component i of the tree cost at `source`,
/// plus epsilon. nullopt when `source` is unreachable (infeasible instance).
std::optional<CostVector> compute_dominance_bound(std::span<const LexTree> trees,
                                                  NodeId source, Cost epsilon);

struct PreprocessOptions {
  Cost epsilon = 1;
  /// Run the d lexicographic queries on separate threads.
  bool parallel = false;
};

/// Everything the goal-directed solvers need besides the instance itself.
struct PreprocessData {
  NodeId source = kNoNode;
  NodeId target = kNoNode;
  std::size_t dimension = 0;
  /// False iff the source cannot reach the target.
  bool feasible = false;
  /// Ideal point of the efficient v-t costs; infinity when v cannot reach t.
  CostTable pi;
  /// Nadir point of the efficient v-t costs; only filled for d = 2.
  CostTable beta_v;
  /// Global dominance bound; infinity when infeasible.
  CostVector beta_t;
  /// The (1,2,...,d)-lexicographic reverse tree, kept for shortcuts.
  LexTree shortcut;
  std::vector<std::uint8_t> reachable;

  bool is_reachable(NodeId v) const { return reachable[v] != 0; }
};

PreprocessData preprocess(const Instance& instance, const PreprocessOptions& options = {});

/// Cache file: one header line and one row per node. See README for layout.
void write_preprocess_cache(const PreprocessData& data, std::ostream& out);
PreprocessData read_preprocess_cache(std::istream& in);

}  // namespace pareto_route
