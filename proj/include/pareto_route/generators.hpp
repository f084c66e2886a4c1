#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "pareto_route/graph.hpp"

namespace pareto_route {

/// Uniform integer in [lo, hi] from a 64-bit engine. Unlike
/// std::uniform_int_distribution, the result is the same on every standard
/// library, which keeps generated files byte-identical across platforms.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Grid of width x height cells with 4-neighbour arcs in both directions, a
/// super source feeding the leftmost column and a super target fed by the
/// rightmost column. Cell (row, col) is node row*width + col; the source is
/// node width*height, the target width*height + 1. d = 2, every component
/// uniform in [1, max_cost].
Instance generate_grid(std::size_t width, std::size_t height, std::uint64_t seed,
                       Cost max_cost = 10);

/// NetMaker-style graph with d = 3: a Hamiltonian cycle over a random node
/// permutation plus `extra_arcs` distinct random arcs. Every arc draws one
/// component from each of [1,333], [334,666], [667,1000], assigned to the
/// three components in random order. Throws std::invalid_argument when more
/// extra arcs are requested than fit.
std::shared_ptr<const Graph> generate_netmaker(std::size_t node_count, std::size_t extra_arcs,
                                               std::uint64_t seed);

/// Random digraph with `arc_count` distinct non-loop arcs and d components
/// uniform in [1, max_cost].
std::shared_ptr<const Graph> generate_random(std::size_t node_count, std::size_t arc_count,
                                             std::size_t dimension, std::uint64_t seed,
                                             Cost max_cost = 10);

/// `count` random pairs with s != t.
std::vector<std::pair<NodeId, NodeId>> generate_st_pairs(std::size_t node_count, std::size_t count,
                                                         std::uint64_t seed);

}  // namespace pareto_route
