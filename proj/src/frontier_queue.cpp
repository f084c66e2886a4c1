#include "pareto_route/frontier_queue.hpp"

namespace pareto_route {

std::string_view to_string(QueueMode mode) {
  return mode == QueueMode::heap ? "heap" : "bucket";
}

std::optional<QueueMode> parse_queue_mode(std::string_view text) {
  if (text == "heap") return QueueMode::heap;
  if (text == "bucket") return QueueMode::bucket;
  return std::nullopt;
}

// ---------------------------------------------------------------- heap

HeapQueue::HeapQueue(std::size_t node_count, std::size_t dimension)
    : position_(node_count, kAbsent), labels_(node_count, kNoLabel), keys_(node_count, dimension) {}

LabelId HeapQueue::get_path(NodeId v) const {
  PR_CHECK(contains(v));
  return labels_[v];
}

bool HeapQueue::before(NodeId a, NodeId b) const {
  const CostView ka = keys_[a];
  const CostView kb = keys_[b];
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (ka[i] != kb[i]) return ka[i] < kb[i];
  }
  return a < b;
}

void HeapQueue::place(std::size_t i, NodeId v) {
  heap_[i] = v;
  position_[v] = static_cast<std::uint32_t>(i);
}

void HeapQueue::sift_up(std::size_t i) {
  const NodeId v = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!before(v, heap_[parent])) break;
    place(i, heap_[parent]);
    i = parent;
  }
  place(i, v);
}

void HeapQueue::sift_down(std::size_t i) {
  const NodeId v = heap_[i];
  const std::size_t n = heap_.size();
  while (true) {
    std::size_t child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
    if (!before(heap_[child], v)) break;
    place(i, heap_[child]);
    i = child;
  }
  place(i, v);
}

void HeapQueue::insert(NodeId v, LabelId label, CostView key) {
  PR_CHECK(!contains(v));
  labels_[v] = label;
  keys_.assign_row(v, key);
  heap_.push_back(v);
  position_[v] = static_cast<std::uint32_t>(heap_.size() - 1);
  sift_up(heap_.size() - 1);
}

LabelId HeapQueue::decrease_key(NodeId v, LabelId label, CostView key) {
  PR_CHECK(contains(v));
  PR_CHECK(lex_less(key, keys_[v]));
  const LabelId displaced = labels_[v];
  labels_[v] = label;
  keys_.assign_row(v, key);
  sift_up(position_[v]);
  return displaced;
}

QueueItem HeapQueue::extract_min() {
  PR_CHECK(!heap_.empty());
  const NodeId v = heap_.front();
  const NodeId last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    place(0, last);
    sift_down(0);
  }
  position_[v] = kAbsent;
  const LabelId label = labels_[v];
  labels_[v] = kNoLabel;
  return {v, label};
}

// -------------------------------------------------------------- buckets

BucketQueue::BucketQueue(std::size_t node_count, std::size_t dimension, Cost expected_max_key)
    : next_(node_count, kNoNode),
      prev_(node_count, kNoNode),
      bucket_of_(node_count, 0),
      labels_(node_count, kNoLabel),
      keys_(node_count, dimension) {
  if (expected_max_key > 0 && expected_max_key < kInfiniteCost) {
    head_.reserve(static_cast<std::size_t>(expected_max_key) + 1);
    tail_.reserve(static_cast<std::size_t>(expected_max_key) + 1);
  }
}

LabelId BucketQueue::get_path(NodeId v) const {
  PR_CHECK(contains(v));
  return labels_[v];
}

std::size_t BucketQueue::bucket_index(Cost first) {
  PR_CHECK(first >= 0 && first < kInfiniteCost);
  if (!based_) {
    base_ = first;
    based_ = true;
  }
  if (first < base_) {
    // Shift every bucket up; only reachable after a pointer regression.
    const auto shift = static_cast<std::size_t>(base_ - first);
    head_.insert(head_.begin(), shift, kNoNode);
    tail_.insert(tail_.begin(), shift, kNoNode);
    for (NodeId v = 0; v < labels_.size(); ++v) {
      if (labels_[v] != kNoLabel) bucket_of_[v] += shift;
    }
    current_ += shift;
    base_ = first;
  }
  const auto index = static_cast<std::size_t>(first - base_);
  if (index >= head_.size()) {
    head_.resize(index + 1, kNoNode);
    tail_.resize(index + 1, kNoNode);
  }
  return index;
}

void BucketQueue::link_back(NodeId v, std::size_t bucket) {
  if (bucket < current_ || size_ == 0) {
    current_ = bucket;
  }
  bucket_of_[v] = bucket;
  next_[v] = kNoNode;
  prev_[v] = tail_[bucket];
  if (tail_[bucket] == kNoNode) {
    head_[bucket] = v;
  } else {
    next_[tail_[bucket]] = v;
  }
  tail_[bucket] = v;
  ++size_;
}

void BucketQueue::unlink(NodeId v) {
  const std::size_t bucket = bucket_of_[v];
  if (prev_[v] == kNoNode) {
    head_[bucket] = next_[v];
  } else {
    next_[prev_[v]] = next_[v];
  }
  if (next_[v] == kNoNode) {
    tail_[bucket] = prev_[v];
  } else {
    prev_[next_[v]] = prev_[v];
  }
  next_[v] = prev_[v] = kNoNode;
  --size_;
}

void BucketQueue::insert(NodeId v, LabelId label, CostView key) {
  PR_CHECK(!contains(v));
  if (key[0] < last_extracted_) ++regressions_;
  labels_[v] = label;
  keys_.assign_row(v, key);
  link_back(v, bucket_index(key[0]));
}

LabelId BucketQueue::decrease_key(NodeId v, LabelId label, CostView key) {
  PR_CHECK(contains(v));
  PR_CHECK(lex_less(key, keys_[v]));
  if (key[0] < last_extracted_) ++regressions_;
  const LabelId displaced = labels_[v];
  unlink(v);
  labels_[v] = label;
  keys_.assign_row(v, key);
  link_back(v, bucket_index(key[0]));
  return displaced;
}

QueueItem BucketQueue::extract_min() {
  PR_CHECK(size_ > 0);
  while (head_[current_] == kNoNode) ++current_;
  const NodeId v = head_[current_];
  unlink(v);
  const LabelId label = labels_[v];
  labels_[v] = kNoLabel;
  last_extracted_ = keys_[v][0];
  return {v, label};
}

}  // namespace pareto_route
