#include "pareto_route/solution.hpp"

#include <algorithm>
#include <numeric>

namespace pareto_route {

void canonicalize_frontier(SolutionRecord& record) {
  const bool with_paths = !record.paths.empty();
  PR_CHECK(!with_paths || record.paths.size() == record.frontier.size());

  std::vector<std::size_t> order(record.frontier.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(record.frontier[a], record.frontier[b]);
  });

  std::vector<CostVector> costs;
  std::vector<std::vector<NodeId>> paths;
  for (std::size_t i : order) {
    const CostVector& candidate = record.frontier[i];
    const bool covered = std::any_of(costs.begin(), costs.end(), [&](const CostVector& kept) {
      return dominates_or_equal(kept, candidate);
    });
    if (covered) continue;
    costs.push_back(candidate);
    if (with_paths) paths.push_back(std::move(record.paths[i]));
  }
  record.frontier = std::move(costs);
  record.paths = std::move(paths);
}

}  // namespace pareto_route
