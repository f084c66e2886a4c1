#include "pareto_route/tmda.hpp"

#include <algorithm>
#include <type_traits>

#include "pareto_route/label_pool.hpp"

namespace pareto_route {

std::string_view to_string(HeuristicMode mode) {
  return mode == HeuristicMode::computed ? "computed" : "zero";
}

std::optional<HeuristicMode> parse_heuristic_mode(std::string_view text) {
  if (text == "computed") return HeuristicMode::computed;
  if (text == "zero") return HeuristicMode::zero;
  return std::nullopt;
}

namespace {

template <class Queue>
class TmdaSearch {
 public:
  TmdaSearch(const Instance& instance, const PreprocessData& pre, const TmdaOptions& options,
             Queue queue)
      : graph_(instance.g()),
        source_(instance.source),
        target_(instance.target),
        pre_(pre),
        options_(options),
        d_(graph_.dimension()),
        pool_(d_),
        queue_(std::move(queue)),
        nqp_head_(graph_.arc_count(), kNoLabel),
        nqp_tail_(graph_.arc_count(), kNoLabel),
        permanent_(graph_.node_count()) {
    if (options.heuristic == HeuristicMode::zero) {
      pi_ = CostTable(graph_.node_count(), d_, 0);
    }
  }

  SolutionRecord run() {
    SolutionRecord record;
    record.source = source_;
    record.target = target_;
    record.queue = std::string(to_string(options_.queue));
    if (!pre_.feasible) return record;

    const CostVector zero = CostVector::zeros(d_);
    const LabelId init = pool_.allocate(source_, kNoLabel, kNoArc, zero, pi(source_));
    grow_links();
    queue_.insert(source_, init, pool_.reduced(init));
    ++inserted_;

    std::uint64_t iteration = 0;
    while (!queue_.empty()) {
      if (options_.deadline.expired(++iteration)) {
        record.timed_out = true;
        break;
      }
      const QueueItem item = queue_.extract_min();
      ++extracted_;
      const NodeId v = item.node;
      const LabelId p = item.label;
      if (options_.observer) options_.observer->on_extract(v, pool_.cost(p), pool_.reduced(p));

      // A label queued before the s-t path that dominates it was found.
      const bool stale = pruned_at_target(pool_.reduced(p));
      if (!stale) make_permanent(v, p);

      const LabelId next = next_queue_path(p, v);
      if (next != kNoLabel) {
        queue_.insert(v, next, pool_.reduced(next));
        ++inserted_;
      }
      if (stale) {
        pool_.release(p);
        continue;
      }
      if (v == target_) continue;
      for (ArcId a : graph_.outgoing(v)) propagate(p, a);
    }

    const auto& frontier = permanent_[target_];
    for (LabelId l : frontier) {
      record.frontier.emplace_back(pool_.cost(l));
      if (options_.keep_paths) record.paths.push_back(reconstruct_path(pool_, l));
    }
    // Bucket order appends equal-first-component vectors out of lex order.
    canonicalize_frontier(record);
    record.inserted = inserted_;
    record.extracted = extracted_;
    if constexpr (std::is_same_v<Queue, BucketQueue>) {
      record.queue_regressions = queue_.pointer_regressions();
    }
    return record;
  }

 private:
  CostView pi(NodeId v) const { return pi_.empty() ? pre_.pi[v] : pi_[v]; }

  auto cost_of() const {
    return [this](LabelId l) { return pool_.cost(l); };
  }

  bool pruned_at_target(CostView reduced) const {
    return set_dominates(permanent_[target_], reduced, cost_of()) ||
           dominates_or_equal(pre_.beta_t, reduced);
  }

  void make_permanent(NodeId v, LabelId p) {
    auto& list = permanent_[v];
    if (v == target_) {
      // Bucket order may deliver an s-t path after one with the same first
      // component that it dominates.
      const CostView c = pool_.cost(p);
      while (!list.empty() && pool_.cost(list.back())[0] == c[0] &&
             dominates_or_equal(c, pool_.cost(list.back()))) {
        list.pop_back();
      }
    }
    list.push_back(p);
    if (options_.observer) {
      options_.observer->on_permanent(v, pool_.cost(p));
      if (v == target_) notify_frontier();
    }
  }

  void propagate(LabelId p, ArcId a) {
    const NodeId w = graph_.head(a);
    if (!pre_.is_reachable(w)) return;
    const CostVector cost = pool_.cost(p) + graph_.cost(a);
    const CostVector reduced = cost + pi(w);
    if (pruned_at_target(reduced)) return;
    if (set_dominates(permanent_[w], cost, cost_of())) return;

    if (!queue_.contains(w)) {
      const LabelId fresh = pool_.allocate(w, p, a, cost, reduced);
      grow_links();
      queue_.insert(w, fresh, reduced);
      ++inserted_;
    } else if (lex_less(reduced, queue_.key(w))) {
      const LabelId fresh = pool_.allocate(w, p, a, cost, reduced);
      grow_links();
      const LabelId displaced = queue_.decrease_key(w, fresh, reduced);
      ++inserted_;
      nqp_prepend(pool_.last_arc(displaced), displaced);
    } else {
      const LabelId fresh = pool_.allocate(w, p, a, cost, reduced);
      grow_links();
      nqp_append(a, fresh);
    }
  }

  LabelId next_queue_path(LabelId pstar, NodeId v) {
    const CostVector pstar_cost(pool_.cost(pstar));
    LabelId best = kNoLabel;
    ArcId best_arc = kNoArc;
    for (ArcId a : graph_.incoming(v)) {
      bool changed = false;
      while (nqp_head_[a] != kNoLabel) {
        const LabelId l = nqp_head_[a];
        const CostView reduced = pool_.reduced(l);
        const CostView cost = pool_.cost(l);
        // Entries dominated at P_sv or by p* stay dominated forever since
        // permanent lists only grow, so they are dropped as well.
        if (pruned_at_target(reduced) || set_dominates(permanent_[v], cost, cost_of()) ||
            dominates_or_equal(pstar_cost, cost)) {
          nqp_pop_front(a);
          pool_.release(l);
          changed = true;
          continue;
        }
        if (best == kNoLabel || lex_less(reduced, pool_.reduced(best))) {
          best = l;
          best_arc = a;
        }
        break;
      }
      if (changed) notify_nqp(a);
    }
    if (best != kNoLabel) {
      nqp_pop_front(best_arc);
      notify_nqp(best_arc);
    }
    return best;
  }

  void grow_links() {
    if (next_.size() < pool_.capacity()) next_.resize(pool_.capacity(), kNoLabel);
  }

  void nqp_prepend(ArcId a, LabelId l) {
    next_[l] = nqp_head_[a];
    nqp_head_[a] = l;
    if (nqp_tail_[a] == kNoLabel) nqp_tail_[a] = l;
    notify_nqp(a);
  }

  void nqp_append(ArcId a, LabelId l) {
    next_[l] = kNoLabel;
    if (nqp_tail_[a] == kNoLabel) {
      nqp_head_[a] = l;
    } else {
      next_[nqp_tail_[a]] = l;
    }
    nqp_tail_[a] = l;
    notify_nqp(a);
  }

  void nqp_pop_front(ArcId a) {
    const LabelId l = nqp_head_[a];
    nqp_head_[a] = next_[l];
    if (nqp_head_[a] == kNoLabel) nqp_tail_[a] = kNoLabel;
    next_[l] = kNoLabel;
  }

  void notify_nqp(ArcId a) {
    if (!options_.observer) return;
    std::vector<CostVector> keys;
    for (LabelId l = nqp_head_[a]; l != kNoLabel; l = next_[l]) keys.emplace_back(pool_.reduced(l));
    options_.observer->on_nqp_change(a, keys);
  }

  void notify_frontier() {
    std::vector<CostVector> costs;
    for (LabelId l : permanent_[target_]) costs.emplace_back(pool_.cost(l));
    options_.observer->on_frontier(costs);
  }

  const Graph& graph_;
  NodeId source_;
  NodeId target_;
  const PreprocessData& pre_;
  const TmdaOptions& options_;
  std::size_t d_;
  CostTable pi_;  // only filled for the zero heuristic
  LabelPool pool_;
  Queue queue_;
  std::vector<LabelId> nqp_head_;
  std::vector<LabelId> nqp_tail_;
  std::vector<LabelId> next_;
  std::vector<std::vector<LabelId>> permanent_;
  std::size_t inserted_ = 0;
  std::size_t extracted_ = 0;
};

}  // namespace

SolutionRecord solve_tmda(const Instance& instance, const PreprocessData& pre,
                          const TmdaOptions& options) {
  PR_CHECK(pre.source == instance.source && pre.target == instance.target);
  PR_CHECK(pre.dimension == instance.dimension());
  const std::size_t n = instance.g().node_count();
  const std::size_t d = instance.dimension();
  SolutionRecord record;
  const auto start = SteadyClock::now();
  if (options.queue == QueueMode::heap) {
    record = TmdaSearch<HeapQueue>(instance, pre, options, HeapQueue(n, d)).run();
  } else {
    const Cost expected = pre.feasible ? std::min<Cost>(pre.beta_t[0], Cost{1} << 20) : 0;
    record = TmdaSearch<BucketQueue>(instance, pre, options, BucketQueue(n, d, expected)).run();
  }
  record.time_ms = std::chrono::duration<double, std::milli>(SteadyClock::now() - start).count();
  record.algorithm = options.heuristic == HeuristicMode::computed ? "tmda" : "mda";
  return record;
}

}  // namespace pareto_route
