#include "pareto_route/cost_vector.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace pareto_route {

CostVector::CostVector(std::size_t dimension, Cost fill)
    : dimension_(static_cast<std::uint8_t>(dimension)) {
  PR_CHECK(dimension <= kMaxDimension);
  std::fill_n(data_.begin(), dimension, fill);
}

CostVector::CostVector(std::initializer_list<Cost> values)
    : dimension_(static_cast<std::uint8_t>(values.size())) {
  PR_CHECK(values.size() <= kMaxDimension);
  std::copy(values.begin(), values.end(), data_.begin());
}

CostVector::CostVector(CostView values)
    : dimension_(static_cast<std::uint8_t>(values.size())) {
  PR_CHECK(values.size() <= kMaxDimension);
  std::copy(values.begin(), values.end(), data_.begin());
}

bool CostVector::is_infinite() const {
  return std::any_of(begin(), end(), [](Cost c) { return c >= kInfiniteCost; });
}

CostVector& CostVector::operator+=(CostView other) {
  PR_CHECK(other.size() == dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) data_[i] += other[i];
  return *this;
}

CostVector operator+(CostView a, CostView b) {
  CostVector sum(a);
  sum += b;
  return sum;
}

std::ostream& operator<<(std::ostream& os, const CostVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ',';
    os << v[i];
  }
  return os << ')';
}

std::string to_string(CostView v) {
  std::ostringstream os;
  os << CostVector(v);
  return os.str();
}

ComponentOrder identity_order(std::size_t dimension) {
  ComponentOrder order(dimension);
  std::iota(order.begin(), order.end(), std::uint8_t{0});
  return order;
}

bool is_permutation_order(const ComponentOrder& order, std::size_t dimension) {
  if (order.size() != dimension) return false;
  std::vector<bool> seen(dimension, false);
  for (auto i : order) {
    if (i >= dimension || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

bool dominates_or_equal(CostView x, CostView y) {
  PR_CHECK(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

bool dominates(CostView x, CostView y) {
  PR_CHECK(x.size() == y.size());
  bool strict = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
    strict = strict || x[i] < y[i];
  }
  return strict;
}

bool lex_less(CostView x, CostView y) {
  PR_CHECK(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

bool lex_less(CostView x, CostView y, const ComponentOrder& order) {
  PR_CHECK(x.size() == y.size());
  PR_CHECK(order.size() == x.size());
  for (auto i : order) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

}  // namespace pareto_route
