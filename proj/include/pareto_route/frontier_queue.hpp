#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "pareto_route/cost_vector.hpp"

namespace pareto_route {

using LabelId = std::uint32_t;
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

enum class QueueMode : std::uint8_t { heap, bucket };

std::string_view to_string(QueueMode mode);
std::optional<QueueMode> parse_queue_mode(std::string_view text);

struct QueueItem {
  NodeId node = kNoNode;
  LabelId label = kNoLabel;
};

// Both queues hold at most one entry per node and are addressed by node id.
// They share the interface below so the solvers can be instantiated over
// either one.

/// Indexed binary heap keyed by the full reduced-cost vector in lex order,
/// ties broken by smaller node id.
class HeapQueue {
 public:
  HeapQueue(std::size_t node_count, std::size_t dimension);

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool contains(NodeId v) const { return position_[v] != kAbsent; }
  LabelId get_path(NodeId v) const;
  CostView key(NodeId v) const { return keys_[v]; }

  void insert(NodeId v, LabelId label, CostView key);
  /// Replaces v's entry by a lex-smaller one and returns the displaced label.
  LabelId decrease_key(NodeId v, LabelId label, CostView key);
  QueueItem extract_min();

 private:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

  bool before(NodeId a, NodeId b) const;
  void sift_up(std::size_t i);
  void sift_down(std::size_t i);
  void place(std::size_t i, NodeId v);

  std::vector<NodeId> heap_;
  std::vector<std::uint32_t> position_;
  std::vector<LabelId> labels_;
  CostTable keys_;
};

/// Dial-style bucket queue keyed by the first reduced-cost component only.
/// Buckets are FIFO, so entries sharing a first component come out in
/// insertion order, not lex order. The minimum pointer only moves forward
/// as long as no key below the last extracted one is inserted; such
/// insertions are counted.
class BucketQueue {
 public:
  BucketQueue(std::size_t node_count, std::size_t dimension, Cost expected_max_key = 0);

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }
  bool contains(NodeId v) const { return labels_[v] != kNoLabel; }
  LabelId get_path(NodeId v) const;
  CostView key(NodeId v) const { return keys_[v]; }

  void insert(NodeId v, LabelId label, CostView key);
  LabelId decrease_key(NodeId v, LabelId label, CostView key);
  QueueItem extract_min();

  /// First component of the lowest bucket that may be non-empty.
  Cost min_pointer() const { return base_ + static_cast<Cost>(current_); }
  /// Number of insertions with a key below the last extracted key.
  std::size_t pointer_regressions() const { return regressions_; }

 private:
  std::size_t bucket_index(Cost first);
  void link_back(NodeId v, std::size_t bucket);
  void unlink(NodeId v);

  std::vector<NodeId> head_;
  std::vector<NodeId> tail_;
  std::vector<NodeId> next_;
  std::vector<NodeId> prev_;
  std::vector<std::size_t> bucket_of_;
  std::vector<LabelId> labels_;
  CostTable keys_;
  Cost base_ = 0;
  bool based_ = false;
  std::size_t current_ = 0;
  std::size_t size_ = 0;
  std::size_t regressions_ = 0;
  Cost last_extracted_ = std::numeric_limits<Cost>::min();
};

}  // namespace pareto_route
