#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "pareto_route/cost_vector.hpp"

namespace pareto_route {

/// `computed` uses the ideal-point potential from preprocessing; `zero`
/// replaces it by the zero vector while keeping the dominance bound and the
/// reachability mask (the goal-agnostic MDA baseline).
enum class HeuristicMode : std::uint8_t { computed, zero };

std::string_view to_string(HeuristicMode mode);
std::optional<HeuristicMode> parse_heuristic_mode(std::string_view text);

using SteadyClock = std::chrono::steady_clock;

/// Optional wall-clock limit, polled every few hundred iterations.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::optional<SteadyClock::time_point> at) : at_(at) {}
  static Deadline after(std::chrono::duration<double> limit) {
    return Deadline(SteadyClock::now() + std::chrono::duration_cast<SteadyClock::duration>(limit));
  }

  bool expired(std::uint64_t iteration) const {
    return at_ && (iteration & 0xff) == 0 && SteadyClock::now() >= *at_;
  }
  bool active() const { return at_.has_value(); }

 private:
  std::optional<SteadyClock::time_point> at_;
};

}  // namespace pareto_route
