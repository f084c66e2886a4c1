#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pareto_route/graph.hpp"
#include "pareto_route/solution.hpp"

namespace pareto_route {

/// Reads one DIMACS .gr stream per cost component. Stream k supplies
/// component k of every arc. All streams must describe the same arcs: after
/// sorting by (tail, head, occurrence index) they have to match entry by
/// entry. Arc order follows the first stream. Ids are 1-based on disk.
///
/// Throws ParseError (with line number) for malformed lines and FormatError
/// for negative weights, arc-count or topology mismatches.
std::shared_ptr<const Graph> parse_dimacs_gr(std::span<std::istream* const> streams);

/// Convenience overload that opens the given files.
std::shared_ptr<const Graph> read_dimacs_files(std::span<const std::string> paths);

/// Writes cost component `component` (0-based) of every arc.
void write_dimacs_gr(const Graph& graph, std::size_t component, std::ostream& out,
                     const std::string& comment = {});

/// Appends a component that is 1 on every arc.
std::shared_ptr<const Graph> synthesize_unit_component(const Graph& graph);

/// Source-target pairs, 0-based in memory. On disk: `q <s> <t>` lines with
/// 1-based ids; `c` lines and blank lines are ignored.
using StPair = std::pair<NodeId, NodeId>;
std::vector<StPair> read_st_pairs(std::istream& in, std::size_t node_count);
void write_st_pairs(std::span<const StPair> pairs, std::ostream& out);

/// Solution CSV: header `instance,s,t,algo,queue,n_t,inserted,extracted,time_ms`
/// (plus `,preprocess_ms` when that value is present), one data row, then one
/// `f,<c1>,...,<cd>` line per frontier vector, each optionally followed by a
/// `p,<v1>,...,<vk>` node-sequence line. Node ids are written 1-based.
void write_solution(const SolutionRecord& record, std::ostream& out);
SolutionRecord read_solution(std::istream& in);

}  // namespace pareto_route
