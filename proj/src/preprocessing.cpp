#include "pareto_route/preprocessing.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <ostream>
#include <queue>
#include <string>

#include "pareto_route/errors.hpp"
#include "text_util.hpp"

namespace pareto_route {

std::vector<ComponentOrder> preprocessing_orders(std::size_t dimension) {
  PR_CHECK(dimension >= 1 && dimension <= kMaxDimension);
  std::vector<ComponentOrder> orders;
  orders.reserve(dimension);
  for (std::size_t first = 0; first < dimension; ++first) {
    ComponentOrder order{static_cast<std::uint8_t>(first)};
    for (std::size_t i = 0; i < dimension; ++i) {
      if (i != first) order.push_back(static_cast<std::uint8_t>(i));
    }
    orders.push_back(std::move(order));
  }
  return orders;
}

LexTree lex_dijkstra(const Graph& graph, NodeId root, SearchDirection direction,
                     const ComponentOrder& order) {
  const std::size_t n = graph.node_count();
  const std::size_t d = graph.dimension();
  PR_CHECK(root < n);
  PR_CHECK(is_permutation_order(order, d));

  LexTree tree;
  tree.order = order;
  tree.direction = direction;
  tree.root = root;
  tree.parent_arc.assign(n, kNoArc);
  tree.tree_cost = CostTable(n, d, kInfiniteCost);
  tree.reachable.assign(n, 0);

  struct Entry {
    CostVector key;
    NodeId node;
  };
  auto greater = [&order](const Entry& a, const Entry& b) {
    if (lex_less(b.key, a.key, order)) return true;
    if (lex_less(a.key, b.key, order)) return false;
    return a.node > b.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> heap(greater);

  std::vector<std::uint8_t> settled(n, 0);
  tree.tree_cost.assign_row(root, CostVector::zeros(d));
  heap.push({CostVector::zeros(d), root});

  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    const NodeId u = top.node;
    if (settled[u]) continue;
    settled[u] = 1;
    tree.reachable[u] = 1;

    const auto arcs = direction == SearchDirection::forward ? graph.outgoing(u) : graph.incoming(u);
    for (ArcId a : arcs) {
      const NodeId w = direction == SearchDirection::forward ? graph.head(a) : graph.tail(a);
      if (settled[w]) continue;
      CostVector candidate = top.key + graph.cost(a);
      if (lex_less(candidate, tree.tree_cost[w], order)) {
        tree.tree_cost.assign_row(w, candidate);
        tree.parent_arc[w] = a;
        heap.push({candidate, w});
      }
    }
  }
  return tree;
}

CostVector ideal_point(std::span<const CostVector> points) {
  PR_CHECK(!points.empty());
  CostVector ideal = points.front();
  for (const CostVector& p : points.subspan(1)) {
    PR_CHECK(p.size() == ideal.size());
    for (std::size_t i = 0; i < ideal.size(); ++i) ideal[i] = std::min(ideal[i], p[i]);
  }
  return ideal;
}

CostTable compute_heuristic(std::span<const LexTree> trees) {
  PR_CHECK(!trees.empty());
  const std::size_t n = trees.front().tree_cost.size();
  const std::size_t d = trees.front().tree_cost.dimension();
  CostTable pi(n, d, kInfiniteCost);
  for (const LexTree& tree : trees) {
    PR_CHECK(tree.tree_cost.size() == n);
    for (NodeId v = 0; v < n; ++v) {
      if (!tree.is_reachable(v)) continue;
      auto row = pi.row(v);
      const CostView c = tree.cost(v);
      for (std::size_t i = 0; i < d; ++i) row[i] = std::min(row[i], c[i]);
    }
  }
  return pi;
}

CostTable compute_nadir_2d(const LexTree& order_12, const LexTree& order_21) {
  if (order_12.tree_cost.dimension() != 2 || order_21.tree_cost.dimension() != 2) {
    throw UnsupportedDimension("nadir points are only computed for d = 2");
  }
  const std::size_t n = order_12.tree_cost.size();
  CostTable nadir(n, 2, kInfiniteCost);
  for (NodeId v = 0; v < n; ++v) {
    if (!order_12.is_reachable(v)) continue;
    auto row = nadir.row(v);
    row[0] = order_21.cost(v)[0];
    row[1] = order_12.cost(v)[1];
  }
  return nadir;
}

std::optional<CostVector> compute_dominance_bound(std::span<const LexTree> trees,
                                                  NodeId source, Cost epsilon) {
  PR_CHECK(!trees.empty());
  PR_CHECK(epsilon >= 0);
  if (!trees.front().is_reachable(source)) return std::nullopt;
  const std::size_t d = trees.front().tree_cost.dimension();
  CostVector bound(d, 0);
  for (const LexTree& tree : trees) {
    const CostView c = tree.cost(source);
    for (std::size_t i = 0; i < d; ++i) bound[i] = std::max(bound[i], c[i]);
  }
  for (std::size_t i = 0; i < d; ++i) bound[i] += epsilon;
  return bound;
}

PreprocessData preprocess(const Instance& instance, const PreprocessOptions& options) {
  const Graph& graph = instance.g();
  const std::size_t d = graph.dimension();
  const auto orders = preprocessing_orders(d);

  std::vector<LexTree> trees(d);
  if (options.parallel && d > 1) {
    std::vector<std::future<LexTree>> jobs;
    for (const auto& order : orders) {
      jobs.push_back(std::async(std::launch::async, [&graph, &instance, &order] {
        return lex_dijkstra(graph, instance.target, SearchDirection::reverse, order);
      }));
    }
    for (std::size_t i = 0; i < d; ++i) trees[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      trees[i] = lex_dijkstra(graph, instance.target, SearchDirection::reverse, orders[i]);
    }
  }

  PreprocessData data;
  data.source = instance.source;
  data.target = instance.target;
  data.dimension = d;
  data.pi = compute_heuristic(trees);
  if (d == 2) data.beta_v = compute_nadir_2d(trees[0], trees[1]);
  data.reachable = trees.front().reachable;
  auto bound = compute_dominance_bound(trees, instance.source, options.epsilon);
  data.feasible = bound.has_value();
  data.beta_t = bound.value_or(CostVector::infinity(d));
  data.shortcut = std::move(trees.front());
  return data;
}

// Cache layout (0-based ids, "inf" for the infinity sentinel):
//   line 1: pareto_route-preprocess,1
//   line 2: d,n,source,target,feasible,beta_t_1..beta_t_d
//   then one line per node:
//     node,reachable,parent_arc,pi_1..pi_d,[beta_1,beta_2 if d = 2],tree_1..tree_d

namespace {

std::string cost_token(Cost c) { return c >= kInfiniteCost ? "inf" : std::to_string(c); }

Cost parse_cost_token(const std::string& token, std::size_t line) {
  if (token == "inf") return kInfiniteCost;
  try {
    std::size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size()) throw ParseError("bad number '" + token + "'", line);
    return value;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + token + "'", line);
  }
}

void write_row(std::ostream& out, CostView row) {
  for (Cost c : row) out << ',' << cost_token(c);
}

}  // namespace

void write_preprocess_cache(const PreprocessData& data, std::ostream& out) {
  const std::size_t d = data.dimension;
  const std::size_t n = data.pi.size();
  out << "pareto_route-preprocess,1\n";
  out << d << ',' << n << ',' << data.source << ',' << data.target << ','
      << (data.feasible ? 1 : 0);
  write_row(out, data.beta_t);
  out << '\n';
  for (NodeId v = 0; v < n; ++v) {
    const ArcId parent = data.shortcut.parent_arc[v];
    out << v << ',' << int{data.reachable[v]} << ','
        << (parent == kNoArc ? std::string("-1") : std::to_string(parent));
    write_row(out, data.pi[v]);
    if (d == 2) write_row(out, data.beta_v[v]);
    write_row(out, data.shortcut.cost(v));
    out << '\n';
  }
}

PreprocessData read_preprocess_cache(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != "pareto_route-preprocess,1") {
    throw ParseError("missing preprocess cache header", line_no);
  }
  ++line_no;
  if (!std::getline(in, line)) throw ParseError("missing summary line", line_no);
  auto head = detail::split_csv(line);
  if (head.size() < 5) throw ParseError("short summary line", line_no);
  PreprocessData data;
  const auto d = static_cast<std::size_t>(parse_cost_token(head[0], line_no));
  const auto n = static_cast<std::size_t>(parse_cost_token(head[1], line_no));
  if (d < 1 || d > kMaxDimension || head.size() != 5 + d) {
    throw ParseError("bad dimension in summary line", line_no);
  }
  data.dimension = d;
  data.source = static_cast<NodeId>(parse_cost_token(head[2], line_no));
  data.target = static_cast<NodeId>(parse_cost_token(head[3], line_no));
  data.feasible = head[4] == "1";
  data.beta_t = CostVector(d);
  for (std::size_t i = 0; i < d; ++i) data.beta_t[i] = parse_cost_token(head[5 + i], line_no);

  data.pi = CostTable(n, d, kInfiniteCost);
  if (d == 2) data.beta_v = CostTable(n, 2, kInfiniteCost);
  data.reachable.assign(n, 0);
  data.shortcut.order = identity_order(d);
  data.shortcut.direction = SearchDirection::reverse;
  data.shortcut.root = data.target;
  data.shortcut.parent_arc.assign(n, kNoArc);
  data.shortcut.tree_cost = CostTable(n, d, kInfiniteCost);

  const std::size_t width = 3 + d + (d == 2 ? 2 : 0) + d;
  for (std::size_t v = 0; v < n; ++v) {
    ++line_no;
    if (!std::getline(in, line)) throw ParseError("missing node row", line_no);
    auto fields = detail::split_csv(line);
    if (fields.size() != width) throw ParseError("wrong field count in node row", line_no);
    if (parse_cost_token(fields[0], line_no) != static_cast<Cost>(v)) {
      throw ParseError("node rows out of order", line_no);
    }
    data.reachable[v] = fields[1] == "1" ? 1 : 0;
    const Cost parent = parse_cost_token(fields[2], line_no);
    data.shortcut.parent_arc[v] = parent < 0 ? kNoArc : static_cast<ArcId>(parent);
    std::size_t k = 3;
    for (std::size_t i = 0; i < d; ++i) data.pi.row(v)[i] = parse_cost_token(fields[k++], line_no);
    if (d == 2) {
      for (std::size_t i = 0; i < 2; ++i) data.beta_v.row(v)[i] = parse_cost_token(fields[k++], line_no);
    }
    for (std::size_t i = 0; i < d; ++i) {
      data.shortcut.tree_cost.row(v)[i] = parse_cost_token(fields[k++], line_no);
    }
  }
  data.shortcut.reachable = data.reachable;
  return data;
}

}  // namespace pareto_route
