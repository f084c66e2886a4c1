#include "pareto_route/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pareto_route/errors.hpp"

namespace pareto_route {

namespace {

// Local comparison loops so the oracle does not share code with the
// relations under test.
bool leq(const CostVector& a, const CostVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool lex_before(const CostVector& a, const CostVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

CostVector plus(const CostVector& a, CostView b) {
  CostVector sum = a;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
  return sum;
}

void check_guard(const Instance& instance, std::size_t limit, const char* mode) {
  if (instance.g().node_count() > limit) {
    throw OracleGuardExceeded(std::string(mode) + " oracle refuses graphs with more than " +
                              std::to_string(limit) + " nodes");
  }
}

class SimplePathEnumerator {
 public:
  explicit SimplePathEnumerator(const Instance& instance)
      : graph_(instance.g()), target_(instance.target), on_path_(graph_.node_count(), 0) {}

  std::vector<CostVector> run(NodeId source) {
    visit(source, CostVector::zeros(graph_.dimension()));
    return std::move(found_);
  }

 private:
  void visit(NodeId v, const CostVector& cost) {
    if (v == target_) {
      found_.push_back(cost);
      return;
    }
    // Non-negative costs: an extension of a path that is already matched by a
    // complete s-t path can never be better than that path.
    for (const CostVector& f : found_) {
      if (leq(f, cost)) return;
    }
    on_path_[v] = 1;
    for (ArcId a : graph_.outgoing(v)) {
      const NodeId w = graph_.head(a);
      if (!on_path_[w]) visit(w, plus(cost, graph_.cost(a)));
    }
    on_path_[v] = 0;
  }

  const Graph& graph_;
  NodeId target_;
  std::vector<std::uint8_t> on_path_;
  std::vector<CostVector> found_;
};

std::vector<FrontierSet> label_correcting(const Instance& instance) {
  const Graph& graph = instance.g();
  std::vector<FrontierSet> sets(graph.node_count());
  struct Pending {
    NodeId node;
    CostVector cost;
  };
  std::deque<Pending> work;
  sets[instance.source].push_back(CostVector::zeros(graph.dimension()));
  work.push_back({instance.source, sets[instance.source].front()});

  while (!work.empty()) {
    const Pending item = work.front();
    work.pop_front();
    const auto& here = sets[item.node];
    if (std::find(here.begin(), here.end(), item.cost) == here.end()) continue;  // superseded
    for (ArcId a : graph.outgoing(item.node)) {
      const NodeId w = graph.head(a);
      const CostVector next = plus(item.cost, graph.cost(a));
      auto& there = sets[w];
      bool covered = false;
      for (const CostVector& z : there) {
        if (leq(z, next)) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      there.erase(std::remove_if(there.begin(), there.end(),
                                 [&](const CostVector& z) { return leq(next, z); }),
                  there.end());
      there.push_back(next);
      work.push_back({w, next});
    }
  }
  for (auto& set : sets) std::sort(set.begin(), set.end(), lex_before);
  return sets;
}

}  // namespace

FrontierSet pareto_filter(std::vector<CostVector> vectors) {
  std::sort(vectors.begin(), vectors.end(), lex_before);
  FrontierSet kept;
  for (const CostVector& v : vectors) {
    bool covered = false;
    for (const CostVector& k : kept) {
      if (leq(k, v)) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(v);
  }
  return kept;
}

FrontierSet oracle_frontier(const Instance& instance, OracleMode mode) {
  if (mode == OracleMode::dfs) {
    check_guard(instance, kOracleDfsLimit, "dfs");
    return pareto_filter(SimplePathEnumerator(instance).run(instance.source));
  }
  check_guard(instance, kOracleLabelCorrectingLimit, "label-correcting");
  return label_correcting(instance)[instance.target];
}

std::vector<FrontierSet> oracle_node_frontiers(const Instance& instance) {
  check_guard(instance, kOracleLabelCorrectingLimit, "label-correcting");
  return label_correcting(instance);
}

}  // namespace pareto_route
