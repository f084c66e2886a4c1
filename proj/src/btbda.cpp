#include "pareto_route/btbda.hpp"

#include <algorithm>
#include <thread>

#include "pareto_route/errors.hpp"

namespace pareto_route {

PreprocessData preprocess_backward(const Instance& instance, const PreprocessOptions& options) {
  return preprocess(reverse_instance(instance), options);
}

SolutionRecord solve_btbda(const Instance& instance, const PreprocessData& forward,
                           const PreprocessData& backward, const BtbdaOptions& options) {
  if (instance.dimension() != 2) throw UnsupportedDimension("BT-BDA requires d = 2");
  const Instance reversed = reverse_instance(instance);
  PR_CHECK(backward.source == reversed.source && backward.target == reversed.target);

  TbdaOptions side_options;
  side_options.queue = options.queue;
  side_options.shortcuts = options.shortcuts;
  side_options.share_heuristics = options.share_heuristics;
  side_options.keep_paths = options.keep_paths;
  side_options.deadline = options.deadline;

  const auto start = SteadyClock::now();
  SharedBounds shared(forward, backward);
  // Without sharing each side gets its own handle, so the opposite stop
  // bound never moves and both searches run to completion.
  SharedBounds private_forward(forward, backward);
  SharedBounds private_backward(forward, backward);
  SharedBounds* forward_bounds = options.share_bounds ? &shared : &private_forward;
  SharedBounds* backward_bounds = options.share_bounds ? &shared : &private_backward;

  auto fwd = make_bda2d_search(instance, forward, side_options, forward_bounds, SearchSide::forward);
  auto bwd = make_bda2d_search(reversed, backward, side_options, backward_bounds, SearchSide::backward);

  if (options.mode == BidirectionalMode::parallel) {
    std::thread worker([&bwd] {
      while (bwd->step()) {
      }
    });
    while (fwd->step()) {
    }
    worker.join();
  } else {
    bool forward_running = true;
    bool backward_running = true;
    while (forward_running || backward_running) {
      if (forward_running) forward_running = fwd->step();
      if (backward_running) backward_running = bwd->step();
    }
  }

  SolutionRecord f = fwd->result();
  SolutionRecord b = bwd->result();
  SolutionRecord record;
  record.source = instance.source;
  record.target = instance.target;
  record.algorithm = "btbda";
  record.queue = std::string(to_string(options.queue));
  record.inserted = f.inserted + b.inserted;
  record.extracted = f.extracted + b.extracted;
  record.timed_out = f.timed_out || b.timed_out;
  record.queue_regressions = f.queue_regressions + b.queue_regressions;

  record.frontier = std::move(f.frontier);
  record.paths = std::move(f.paths);
  for (std::size_t i = 0; i < b.frontier.size(); ++i) {
    record.frontier.push_back(CostVector{b.frontier[i][1], b.frontier[i][0]});
    if (options.keep_paths) {
      std::vector<NodeId> nodes = std::move(b.paths[i]);
      std::reverse(nodes.begin(), nodes.end());
      record.paths.push_back(std::move(nodes));
    }
  }
  // Forward entries come first, so on equal vectors the forward one stays.
  canonicalize_frontier(record);
  record.time_ms = std::chrono::duration<double, std::milli>(SteadyClock::now() - start).count();
  return record;
}

}  // namespace pareto_route
