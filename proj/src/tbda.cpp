#include "pareto_route/tbda.hpp"

#include <algorithm>
#include <type_traits>

#include "pareto_route/errors.hpp"
#include "pareto_route/label_pool.hpp"

namespace pareto_route {

namespace {

struct FrontierEntry {
  CostVector cost;
  LabelId prefix;
  NodeId via;  // the prefix continues along the shortcut tree from here
};

template <class Queue>
class Bda2dSearchImpl final : public Bda2dSearch {
 public:
  Bda2dSearchImpl(const Instance& instance, const PreprocessData& pre, const TbdaOptions& options,
                  SharedBounds* shared, SearchSide side, Queue queue)
      : graph_(instance.g()),
        source_(instance.source),
        target_(instance.target),
        pre_(pre),
        options_(options),
        shared_(shared),
        side_(side),
        raise_(shared != nullptr && options.share_heuristics),
        pool_(2),
        queue_(std::move(queue)),
        gamma_(graph_.node_count(), kInfiniteCost),
        visited_(graph_.node_count(), 0),
        permanent_(graph_.node_count()),
        last_processed_(graph_.arc_count(), 0),
        local_stop_(pre.beta_t[0]),
        local_frontier_(pre.beta_t[1]) {
    if (!pre_.feasible) {
      done_ = true;
      return;
    }
    const CostVector zero = CostVector::zeros(2);
    const LabelId init = pool_.allocate(source_, kNoLabel, kNoArc, zero, pre_.pi[source_]);
    queue_.insert(source_, init, pool_.reduced(init));
    ++inserted_;
  }

  bool done() const override { return done_; }

  bool step() override {
    if (done_) return false;
    if (queue_.empty() || options_.deadline.expired(++iteration_)) {
      timed_out_ = !queue_.empty();
      done_ = true;
      return false;
    }
    const QueueItem item = queue_.extract_min();
    ++extracted_;
    const NodeId v = item.node;
    const LabelId p = item.label;
    const CostVector cost(pool_.cost(p));
    const CostVector reduced(pool_.reduced(p));
    if (options_.observer) options_.observer->on_extract(v, cost, reduced);

    if (reduced[0] >= stop_bound()) {
      done_ = true;
      return false;
    }
    gamma_[v] = cost[1];

    const LabelId next = next_candidate(cost, v);
    if (next != kNoLabel) {
      queue_.insert(v, next, pool_.reduced(next));
      ++inserted_;
    }

    if (frontier_bound() <= cost[1] + prune_pi2(v)) return discard(p);
    if (!visited_[v]) {
      visited_[v] = 1;
      if (raise_) shared_->raise_heuristic(opposite(side_), v, cost[0]);
    }

    if (options_.shortcuts || v == target_) {
      const CostVector candidate{reduced[0], cost[1] + pre_.beta_v[v][1]};
      if (frontier_bound() > candidate[1]) {
        add_to_frontier(candidate, p, v);
        if (v == target_ || pre_.pi[v][0] == pre_.beta_v[v][0]) return true;
      }
    }
    if (v == target_) return discard(p);

    bool success = false;
    for (ArcId a : graph_.outgoing(v)) success = propagate(cost, p, a) || success;
    if (!success) return discard(p);
    permanent_[v].push_back(p);
    if (options_.observer) options_.observer->on_permanent(v, cost);
    return true;
  }

  SolutionRecord result() const override {
    SolutionRecord record;
    record.source = source_;
    record.target = target_;
    record.queue = std::string(to_string(options_.queue));
    record.inserted = inserted_;
    record.extracted = extracted_;
    record.timed_out = timed_out_;
    if constexpr (std::is_same_v<Queue, BucketQueue>) {
      record.queue_regressions = queue_.pointer_regressions();
    }
    for (const FrontierEntry& entry : frontier_) {
      record.frontier.push_back(entry.cost);
      if (!options_.keep_paths) continue;
      std::vector<NodeId> nodes = reconstruct_path(pool_, entry.prefix);
      for (NodeId x = entry.via; x != target_;) {
        const ArcId a = pre_.shortcut.parent_arc[x];
        PR_CHECK(a != kNoArc);
        x = graph_.head(a);
        nodes.push_back(x);
      }
      record.paths.push_back(std::move(nodes));
    }
    return record;
  }

 private:
  static SearchSide opposite(SearchSide side) {
    return side == SearchSide::forward ? SearchSide::backward : SearchSide::forward;
  }

  Cost stop_bound() const {
    if (!shared_) return local_stop_;
    return shared_->bound(side_ == SearchSide::forward ? SharedBounds::Which::beta1
                                                       : SharedBounds::Which::beta2);
  }
  Cost frontier_bound() const {
    if (!shared_) return local_frontier_;
    return shared_->bound(side_ == SearchSide::forward ? SharedBounds::Which::beta2
                                                       : SharedBounds::Which::beta1);
  }
  void tighten_frontier_bound(Cost value) {
    if (!shared_) {
      local_frontier_ = std::min(local_frontier_, value);
      return;
    }
    shared_->tighten_bound(
        side_ == SearchSide::forward ? SharedBounds::Which::beta2 : SharedBounds::Which::beta1, value);
  }
  // Second heuristic component used in pruning checks only; queue keys keep
  // the preprocessing potential so extraction order stays consistent.
  Cost prune_pi2(NodeId v) const {
    const Cost base = pre_.pi[v][1];
    return raise_ ? std::max(base, shared_->heuristic(side_, v)) : base;
  }

  bool discard(LabelId p) {
    if (!pinned(p)) pool_.release(p);
    return true;
  }
  bool pinned(LabelId p) const { return p < pinned_.size() && pinned_[p]; }

  void add_to_frontier(const CostVector& cost, LabelId prefix, NodeId via) {
    if (pinned_.size() <= prefix) pinned_.resize(pool_.capacity(), 0);
    pinned_[prefix] = 1;
    if (!frontier_.empty() && frontier_.back().cost[0] == cost[0] &&
        frontier_.back().cost[1] > cost[1]) {
      if (options_.observer) options_.observer->on_frontier_replace(frontier_.back().cost, cost);
      frontier_.back() = {cost, prefix, via};
    } else {
      PR_DCHECK(frontier_.empty() || (frontier_.back().cost[0] < cost[0] &&
                                      frontier_.back().cost[1] > cost[1]));
      frontier_.push_back({cost, prefix, via});
      if (options_.observer) options_.observer->on_frontier_add(cost);
    }
    tighten_frontier_bound(cost[1]);
  }

  bool propagate(const CostVector& base, LabelId p, ArcId a) {
    const NodeId w = graph_.head(a);
    if (!pre_.is_reachable(w)) return false;
    const CostVector cost = base + graph_.cost(a);
    if (frontier_bound() <= cost[1] + prune_pi2(w)) return false;
    const Cost dominance = options_.literal_nadir_check ? pre_.beta_v[w][1] : gamma_[w];
    if (dominance <= cost[1]) return false;

    const CostVector reduced = cost + pre_.pi[w];
    if (!queue_.contains(w)) {
      const LabelId fresh = pool_.allocate(w, p, a, cost, reduced);
      queue_.insert(w, fresh, reduced);
      ++inserted_;
    } else if (lex_less(reduced, queue_.key(w))) {
      const LabelId fresh = pool_.allocate(w, p, a, cost, reduced);
      pool_.release(queue_.decrease_key(w, fresh, reduced));
      ++inserted_;
    }
    return true;
  }

  bool candidate_survives(const CostVector& candidate, const CostVector& extracted, NodeId v) const {
    if (frontier_bound() <= candidate[1] + prune_pi2(v)) return false;
    // Bucket order can deliver an s-v path before a lex-smaller one with the
    // same first component, so equality on c1 has to stay admissible there.
    const bool first_ok = options_.queue == QueueMode::bucket ? candidate[0] >= extracted[0]
                                                               : candidate[0] > extracted[0];
    return first_ok && candidate[1] < extracted[1];
  }

  LabelId next_candidate(const CostVector& extracted, NodeId v) {
    bool found = false;
    CostVector best_cost;
    CostVector best_reduced;
    LabelId best_pred = kNoLabel;
    ArcId best_arc = kNoArc;
    for (ArcId a : graph_.incoming(v)) {
      const auto& list = permanent_[graph_.tail(a)];
      std::size_t& index = last_processed_[a];
      for (; index < list.size(); ++index) {
        const CostVector candidate = pool_.cost(list[index]) + graph_.cost(a);
        if (!candidate_survives(candidate, extracted, v)) continue;
        const CostVector reduced = candidate + pre_.pi[v];
        if (!found || lex_less(reduced, best_reduced)) {
          found = true;
          best_cost = candidate;
          best_reduced = reduced;
          best_pred = list[index];
          best_arc = a;
        }
        break;
      }
    }
    if (!found) return kNoLabel;
    return pool_.allocate(v, best_pred, best_arc, best_cost, best_reduced);
  }

  const Graph& graph_;
  NodeId source_;
  NodeId target_;
  const PreprocessData& pre_;
  const TbdaOptions& options_;
  SharedBounds* shared_;
  SearchSide side_;
  bool raise_;
  LabelPool pool_;
  Queue queue_;
  std::vector<Cost> gamma_;
  std::vector<std::uint8_t> visited_;
  std::vector<std::vector<LabelId>> permanent_;
  std::vector<std::size_t> last_processed_;
  std::vector<FrontierEntry> frontier_;
  std::vector<std::uint8_t> pinned_;
  Cost local_stop_;
  Cost local_frontier_;
  std::size_t inserted_ = 0;
  std::size_t extracted_ = 0;
  std::uint64_t iteration_ = 0;
  bool done_ = false;
  bool timed_out_ = false;
};

}  // namespace

std::unique_ptr<Bda2dSearch> make_bda2d_search(const Instance& instance, const PreprocessData& pre,
                                               const TbdaOptions& options, SharedBounds* shared,
                                               SearchSide side) {
  if (instance.dimension() != 2) throw UnsupportedDimension("T-BDA requires d = 2");
  PR_CHECK(pre.source == instance.source && pre.target == instance.target);
  PR_CHECK(pre.dimension == 2);
  const std::size_t n = instance.g().node_count();
  if (options.queue == QueueMode::heap) {
    return std::make_unique<Bda2dSearchImpl<HeapQueue>>(instance, pre, options, shared, side,
                                                       HeapQueue(n, 2));
  }
  const Cost expected = pre.feasible ? std::min<Cost>(pre.beta_t[0], Cost{1} << 20) : 0;
  return std::make_unique<Bda2dSearchImpl<BucketQueue>>(instance, pre, options, shared, side,
                                                       BucketQueue(n, 2, expected));
}

SolutionRecord solve_tbda(const Instance& instance, const PreprocessData& pre,
                          const TbdaOptions& options) {
  const auto start = SteadyClock::now();
  auto search = make_bda2d_search(instance, pre, options);
  while (search->step()) {
  }
  SolutionRecord record = search->result();
  record.time_ms = std::chrono::duration<double, std::milli>(SteadyClock::now() - start).count();
  record.algorithm = "tbda";
  return record;
}

}  // namespace pareto_route
