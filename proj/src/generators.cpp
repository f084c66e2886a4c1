#include "pareto_route/generators.hpp"

#include <array>
#include <stdexcept>
#include <unordered_set>

namespace pareto_route {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  PR_CHECK(lo <= hi);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

namespace {

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i - 1)));
    std::swap(items[i - 1], items[j]);
  }
}

std::uint64_t pair_key(NodeId u, NodeId v) { return (std::uint64_t{u} << 32) | v; }

// Picks `count` ordered pairs (u != v) not in `taken`, adding them to it.
std::vector<std::pair<NodeId, NodeId>> draw_distinct_pairs(std::size_t n, std::size_t count,
                                                           std::unordered_set<std::uint64_t>& taken,
                                                           std::mt19937_64& rng) {
  const std::size_t total = n * (n - 1);
  if (count + taken.size() > total) throw std::invalid_argument("too many arcs requested");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(count);
  const auto last = static_cast<std::int64_t>(n - 1);
  if (2 * (count + taken.size()) <= total) {
    while (pairs.size() < count) {
      const auto u = static_cast<NodeId>(uniform_int(rng, 0, last));
      const auto v = static_cast<NodeId>(uniform_int(rng, 0, last));
      if (u == v || !taken.insert(pair_key(u, v)).second) continue;
      pairs.emplace_back(u, v);
    }
    return pairs;
  }
  // Dense request: partial shuffle over every free pair.
  std::vector<std::pair<NodeId, NodeId>> free;
  free.reserve(total - taken.size());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && !taken.count(pair_key(u, v))) free.emplace_back(u, v);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(
        uniform_int(rng, static_cast<std::int64_t>(i), static_cast<std::int64_t>(free.size() - 1)));
    std::swap(free[i], free[j]);
    taken.insert(pair_key(free[i].first, free[i].second));
    pairs.push_back(free[i]);
  }
  return pairs;
}

}  // namespace

Instance generate_grid(std::size_t width, std::size_t height, std::uint64_t seed, Cost max_cost) {
  if (width == 0 || height == 0) throw std::invalid_argument("grid needs width, height >= 1");
  if (max_cost < 1) throw std::invalid_argument("max cost must be >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t cells = width * height;
  const auto source = static_cast<NodeId>(cells);
  const auto target = static_cast<NodeId>(cells + 1);
  auto cell = [width](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * width + c); };

  std::vector<Arc> arcs;
  auto add = [&](NodeId u, NodeId v) {
    const Cost c1 = uniform_int(rng, 1, max_cost);
    const Cost c2 = uniform_int(rng, 1, max_cost);
    arcs.push_back({u, v, CostVector{c1, c2}});
  };
  for (std::size_t r = 0; r < height; ++r) add(source, cell(r, 0));
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c + 1 < width) {
        add(cell(r, c), cell(r, c + 1));
        add(cell(r, c + 1), cell(r, c));
      }
      if (r + 1 < height) {
        add(cell(r, c), cell(r + 1, c));
        add(cell(r + 1, c), cell(r, c));
      }
    }
  }
  for (std::size_t r = 0; r < height; ++r) add(cell(r, width - 1), target);
  auto graph = std::make_shared<const Graph>(cells + 2, 2, arcs);
  return make_instance(std::move(graph), source, target);
}

std::shared_ptr<const Graph> generate_netmaker(std::size_t node_count, std::size_t extra_arcs,
                                               std::uint64_t seed) {
  if (node_count < 2) throw std::invalid_argument("netmaker needs at least 2 nodes");
  const std::size_t cycle_arcs = node_count == 2 ? 2 : node_count;
  if (extra_arcs > node_count * (node_count - 1) - cycle_arcs) {
    throw std::invalid_argument("too many extra arcs for " + std::to_string(node_count) + " nodes");
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeId> perm(node_count);
  for (NodeId v = 0; v < node_count; ++v) perm[v] = v;
  shuffle(perm, rng);

  std::unordered_set<std::uint64_t> taken;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (std::size_t i = 0; i < node_count; ++i) {
    const NodeId u = perm[i];
    const NodeId v = perm[(i + 1) % node_count];
    if (taken.insert(pair_key(u, v)).second) pairs.emplace_back(u, v);
  }
  auto extra = draw_distinct_pairs(node_count, extra_arcs, taken, rng);
  pairs.insert(pairs.end(), extra.begin(), extra.end());

  static constexpr std::array<std::pair<Cost, Cost>, 3> kBands{{{1, 333}, {334, 666}, {667, 1000}}};
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    std::vector<std::size_t> band{0, 1, 2};
    shuffle(band, rng);
    CostVector cost(3, 0);
    for (std::size_t k = 0; k < 3; ++k) cost[k] = uniform_int(rng, kBands[band[k]].first, kBands[band[k]].second);
    arcs.push_back({u, v, cost});
  }
  return std::make_shared<const Graph>(node_count, 3, arcs);
}

std::shared_ptr<const Graph> generate_random(std::size_t node_count, std::size_t arc_count,
                                             std::size_t dimension, std::uint64_t seed,
                                             Cost max_cost) {
  if (node_count < 2) throw std::invalid_argument("random graph needs at least 2 nodes");
  if (dimension < 1 || dimension > kMaxDimension) throw std::invalid_argument("bad dimension");
  if (max_cost < 1) throw std::invalid_argument("max cost must be >= 1");
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> taken;
  const auto pairs = draw_distinct_pairs(node_count, arc_count, taken, rng);
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    CostVector cost(dimension, 0);
    for (std::size_t k = 0; k < dimension; ++k) cost[k] = uniform_int(rng, 1, max_cost);
    arcs.push_back({u, v, cost});
  }
  return std::make_shared<const Graph>(node_count, dimension, arcs);
}

std::vector<std::pair<NodeId, NodeId>> generate_st_pairs(std::size_t node_count, std::size_t count,
                                                         std::uint64_t seed) {
  if (node_count < 2) throw std::invalid_argument("pairs need at least 2 nodes");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  const auto last = static_cast<std::int64_t>(node_count - 1);
  while (pairs.size() < count) {
    const auto s = static_cast<NodeId>(uniform_int(rng, 0, last));
    const auto t = static_cast<NodeId>(uniform_int(rng, 0, last));
    if (s != t) pairs.emplace_back(s, t);
  }
  return pairs;
}

}  // namespace pareto_route
