#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "pareto_route/check.hpp"

namespace pareto_route {

using Cost = std::int64_t;
using NodeId = std::uint32_t;
using ArcId = std::uint32_t;

inline constexpr std::size_t kMinDimension = 2;
inline constexpr std::size_t kMaxDimension = 8;

/// Sentinel for "unreachable" / "no bound". Chosen so that adding a few
/// of them never overflows a 64-bit component.
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max() / 8;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

/// Read-only view of d cost components. Every relation below works on views
/// so that pooled label storage and CostVector values mix freely.
using CostView = std::span<const Cost>;

/// Fixed-capacity vector of non-negative integer costs, 1 <= d <= 8.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::size_t dimension, Cost fill = 0);
  CostVector(std::initializer_list<Cost> values);
  explicit CostVector(CostView values);

  static CostVector zeros(std::size_t dimension) { return CostVector(dimension, 0); }
  static CostVector infinity(std::size_t dimension) {
    return CostVector(dimension, kInfiniteCost);
  }

  std::size_t size() const { return dimension_; }
  Cost operator[](std::size_t i) const { return data_[i]; }
  Cost& operator[](std::size_t i) { return data_[i]; }

  const Cost* begin() const { return data_.data(); }
  const Cost* end() const { return data_.data() + dimension_; }
  Cost* begin() { return data_.data(); }
  Cost* end() { return data_.data() + dimension_; }

  CostView view() const { return {data_.data(), dimension_}; }
  operator CostView() const { return view(); }  // NOLINT(google-explicit-constructor)

  bool is_infinite() const;

  CostVector& operator+=(CostView other);

  friend bool operator==(const CostVector& a, const CostVector& b) {
    return a.dimension_ == b.dimension_ &&
           std::equal(a.begin(), a.end(), b.begin());
  }

 private:
  std::array<Cost, kMaxDimension> data_{};
  std::uint8_t dimension_ = 0;
};

/// Dense table of equally sized cost rows (one per node, label, ...).
class CostTable {
 public:
  CostTable() = default;
  CostTable(std::size_t rows, std::size_t dimension, Cost fill = 0)
      : dimension_(dimension), data_(rows * dimension, fill) {}

  std::size_t size() const { return dimension_ == 0 ? 0 : data_.size() / dimension_; }
  std::size_t dimension() const { return dimension_; }
  bool empty() const { return data_.empty(); }

  CostView operator[](std::size_t row) const { return {data_.data() + row * dimension_, dimension_}; }
  std::span<Cost> row(std::size_t row) { return {data_.data() + row * dimension_, dimension_}; }

  void assign_row(std::size_t row, CostView values) {
    PR_DCHECK(values.size() == dimension_);
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(row * dimension_));
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<Cost> data_;
};

CostVector operator+(CostView a, CostView b);
std::ostream& operator<<(std::ostream& os, const CostVector& v);
std::string to_string(CostView v);

/// A permutation of component indices (0-based in memory; printed 1-based).
using ComponentOrder = std::vector<std::uint8_t>;

ComponentOrder identity_order(std::size_t dimension);
bool is_permutation_order(const ComponentOrder& order, std::size_t dimension);

/// x <= y componentwise and x != y.
bool dominates(CostView x, CostView y);

/// x <= y componentwise; equality counts.
bool dominates_or_equal(CostView x, CostView y);

/// Lexicographic comparison over identity order.
bool lex_less(CostView x, CostView y);

/// Lexicographic comparison where components are compared in `order`.
bool lex_less(CostView x, CostView y, const ComponentOrder& order);

/// True iff some vector of `frontier` is <= y componentwise.
///
/// `frontier` must be lex-sorted non-decreasing (the shape permanent lists
/// have in every solver). For d = 2 this inspects the last element only:
/// under the sortedness precondition, and with y not lex-smaller than the
/// last element, the last element carries the smallest second component. For
/// d > 2 the scan stops as soon as the first component exceeds y's.
template <std::ranges::random_access_range Frontier, class Proj = std::identity>
bool set_dominates(const Frontier& frontier, CostView y, Proj proj = {}) {
  if (std::ranges::empty(frontier)) return false;
  if (y.size() == 2) {
    const CostView last = std::invoke(proj, *(std::ranges::end(frontier) - 1));
    PR_CHECK(last.size() == 2);
    if (last[0] <= y[0]) return last[1] <= y[1];
    // y lex-smaller than the last entry (bucket-queue order): the relevant
    // entry is the last one whose first component is still <= y[0].
    for (auto it = std::ranges::end(frontier) - 1; it != std::ranges::begin(frontier);) {
      --it;
      const CostView z = std::invoke(proj, *it);
      if (z[0] <= y[0]) return z[1] <= y[1];
    }
    return false;
  }
  for (const auto& element : frontier) {
    const CostView z = std::invoke(proj, element);
    if (z[0] > y[0]) break;
    if (dominates_or_equal(z, y)) return true;
  }
  return false;
}

}  // namespace pareto_route
