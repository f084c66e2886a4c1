#include "pareto_route/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pareto_route/errors.hpp"
#include "text_util.hpp"

namespace pareto_route {

namespace {

struct RawArc {
  NodeId tail;
  NodeId head;
  Cost weight;
};

struct GrStream {
  std::size_t node_count = 0;
  std::vector<RawArc> arcs;
};

GrStream parse_one_gr(std::istream& in) {
  GrStream result;
  bool have_problem = false;
  std::size_t declared_arcs = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_problem) throw ParseError("second problem line", line_no);
      if (tokens.size() != 4 || tokens[1] != "sp") throw ParseError("expected 'p sp <n> <m>'", line_no);
      const auto n = detail::parse_int<std::uint64_t>(tokens[2]);
      const auto m = detail::parse_int<std::uint64_t>(tokens[3]);
      if (!n || !m) throw ParseError("bad problem line", line_no);
      if (*n >= kNoNode || *m >= kNoArc) throw FormatError("graph too large");
      result.node_count = static_cast<std::size_t>(*n);
      declared_arcs = static_cast<std::size_t>(*m);
      result.arcs.reserve(declared_arcs);
      have_problem = true;
    } else if (tokens[0] == "a") {
      if (!have_problem) throw ParseError("arc before problem line", line_no);
      if (tokens.size() != 4) throw ParseError("expected 'a <tail> <head> <weight>'", line_no);
      const auto u = detail::parse_int<std::int64_t>(tokens[1]);
      const auto v = detail::parse_int<std::int64_t>(tokens[2]);
      const auto w = detail::parse_int<std::int64_t>(tokens[3]);
      if (!u || !v || !w) throw ParseError("bad arc line", line_no);
      const auto n = static_cast<std::int64_t>(result.node_count);
      if (*u < 1 || *u > n || *v < 1 || *v > n) throw ParseError("node id out of range", line_no);
      if (*w < 0) throw FormatError("line " + std::to_string(line_no) + ": negative arc weight");
      if (*w >= kInfiniteCost / (n + 1)) {
        throw FormatError("line " + std::to_string(line_no) + ": arc weight too large");
      }
      result.arcs.push_back({static_cast<NodeId>(*u - 1), static_cast<NodeId>(*v - 1), *w});
    } else {
      throw ParseError("unknown line type '" + tokens[0] + "'", line_no);
    }
  }
  if (!have_problem) throw ParseError("missing problem line", line_no);
  if (result.arcs.size() != declared_arcs) {
    throw FormatError("problem line declares " + std::to_string(declared_arcs) + " arcs, found " +
                      std::to_string(result.arcs.size()));
  }
  return result;
}

// Arc indices ordered by (tail, head, occurrence).
std::vector<std::size_t> topology_order(const std::vector<RawArc>& arcs) {
  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(arcs[a].tail, arcs[a].head) < std::tie(arcs[b].tail, arcs[b].head);
  });
  return order;
}

}  // namespace

std::shared_ptr<const Graph> parse_dimacs_gr(std::span<std::istream* const> streams) {
  if (streams.empty()) throw std::invalid_argument("at least one cost stream is required");
  if (streams.size() > kMaxDimension) {
    throw UnsupportedDimension("at most " + std::to_string(kMaxDimension) + " cost streams");
  }
  std::vector<GrStream> parsed;
  parsed.reserve(streams.size());
  for (std::size_t k = 0; k < streams.size(); ++k) {
    try {
      parsed.push_back(parse_one_gr(*streams[k]));
    } catch (const ParseError& e) {
      throw ParseError("stream " + std::to_string(k + 1) + ": " + e.message(), e.line());
    } catch (const FormatError& e) {
      throw FormatError("stream " + std::to_string(k + 1) + ": " + e.what());
    }
  }

  const GrStream& first = parsed.front();
  const std::size_t d = streams.size();
  std::vector<Arc> arcs(first.arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    arcs[i] = {first.arcs[i].tail, first.arcs[i].head, CostVector(d, 0)};
    arcs[i].cost[0] = first.arcs[i].weight;
  }
  const auto order0 = topology_order(first.arcs);
  for (std::size_t k = 1; k < d; ++k) {
    const GrStream& other = parsed[k];
    if (other.node_count != first.node_count) {
      throw FormatError("stream " + std::to_string(k + 1) + ": node count differs from stream 1");
    }
    if (other.arcs.size() != first.arcs.size()) {
      throw FormatError("stream " + std::to_string(k + 1) + ": arc count differs from stream 1");
    }
    const auto order_k = topology_order(other.arcs);
    for (std::size_t j = 0; j < order0.size(); ++j) {
      const RawArc& a = first.arcs[order0[j]];
      const RawArc& b = other.arcs[order_k[j]];
      if (a.tail != b.tail || a.head != b.head) {
        throw FormatError("stream " + std::to_string(k + 1) + ": topology differs from stream 1");
      }
      arcs[order0[j]].cost[k] = b.weight;
    }
  }
  return std::make_shared<const Graph>(first.node_count, d, arcs);
}

std::shared_ptr<const Graph> read_dimacs_files(std::span<const std::string> paths) {
  std::vector<std::ifstream> files;
  files.reserve(paths.size());
  std::vector<std::istream*> streams;
  for (const std::string& path : paths) {
    files.emplace_back(path);
    if (!files.back()) throw std::ios_base::failure("cannot open " + path);
    streams.push_back(&files.back());
  }
  return parse_dimacs_gr(streams);
}

void write_dimacs_gr(const Graph& graph, std::size_t component, std::ostream& out,
                     const std::string& comment) {
  PR_CHECK(component < graph.dimension());
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p sp " << graph.node_count() << ' ' << graph.arc_count() << '\n';
  for (ArcId a = 0; a < graph.arc_count(); ++a) {
    out << "a " << graph.tail(a) + 1 << ' ' << graph.head(a) + 1 << ' ' << graph.cost(a)[component]
        << '\n';
  }
}

std::shared_ptr<const Graph> synthesize_unit_component(const Graph& graph) {
  const std::size_t d = graph.dimension() + 1;
  if (d > kMaxDimension) throw UnsupportedDimension("dimension limit reached");
  std::vector<Arc> arcs = graph.arcs();
  for (Arc& arc : arcs) {
    CostVector extended(d, 1);
    std::copy(arc.cost.begin(), arc.cost.end(), extended.begin());
    arc.cost = extended;
  }
  return std::make_shared<const Graph>(graph.node_count(), d, arcs);
}

std::vector<StPair> read_st_pairs(std::istream& in, std::size_t node_count) {
  std::vector<StPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] != "q" || tokens.size() != 3) throw ParseError("expected 'q <s> <t>'", line_no);
    const auto s = detail::parse_int<std::int64_t>(tokens[1]);
    const auto t = detail::parse_int<std::int64_t>(tokens[2]);
    if (!s || !t) throw ParseError("bad node id", line_no);
    const auto n = static_cast<std::int64_t>(node_count);
    if (*s < 1 || *s > n || *t < 1 || *t > n) throw ParseError("node id out of range", line_no);
    pairs.emplace_back(static_cast<NodeId>(*s - 1), static_cast<NodeId>(*t - 1));
  }
  return pairs;
}

void write_st_pairs(std::span<const StPair> pairs, std::ostream& out) {
  for (const auto& [s, t] : pairs) out << "q " << s + 1 << ' ' << t + 1 << '\n';
}

namespace {

constexpr const char* kBaseHeader[] = {"instance", "s",        "t",         "algo",   "queue",
                                       "n_t",      "inserted", "extracted", "time_ms"};
constexpr std::size_t kBaseColumns = std::size(kBaseHeader);

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

void check_field(const std::string& value, const char* what) {
  if (value.find_first_of(",\n\r") != std::string::npos || detail::trim(value) != value) {
    throw std::invalid_argument(std::string(what) +
                                " must not contain commas, line breaks or surrounding blanks");
  }
}

}  // namespace

void write_solution(const SolutionRecord& record, std::ostream& out) {
  check_field(record.instance, "instance name");
  check_field(record.algorithm, "algorithm tag");
  check_field(record.queue, "queue tag");
  PR_CHECK(record.paths.empty() || record.paths.size() == record.frontier.size());

  for (std::size_t i = 0; i < kBaseColumns; ++i) out << (i ? "," : "") << kBaseHeader[i];
  if (record.preprocess_ms) out << ",preprocess_ms";
  out << '\n';
  out << record.instance << ',' << record.source + 1 << ',' << record.target + 1 << ','
      << record.algorithm << ',' << record.queue << ',' << record.n_t() << ',' << record.inserted
      << ',' << record.extracted << ',' << format_double(record.time_ms);
  if (record.preprocess_ms) out << ',' << format_double(*record.preprocess_ms);
  out << '\n';
  for (std::size_t i = 0; i < record.frontier.size(); ++i) {
    out << 'f';
    for (Cost c : record.frontier[i]) out << ',' << c;
    out << '\n';
    if (!record.paths.empty()) {
      out << 'p';
      for (NodeId v : record.paths[i]) out << ',' << v + 1;
      out << '\n';
    }
  }
}

SolutionRecord read_solution(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!detail::trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("missing header", line_no);
  const auto header = detail::split_csv(line);
  const bool with_preprocess = header.size() == kBaseColumns + 1;
  if (header.size() != kBaseColumns && !with_preprocess) throw ParseError("bad header", line_no);
  for (std::size_t i = 0; i < kBaseColumns; ++i) {
    if (header[i] != kBaseHeader[i]) throw ParseError("bad header column '" + header[i] + "'", line_no);
  }
  if (with_preprocess && header.back() != "preprocess_ms") throw ParseError("bad header", line_no);

  if (!next_line()) throw ParseError("missing data row", line_no);
  const auto row = detail::split_csv(line);
  if (row.size() != header.size()) throw ParseError("data row has wrong field count", line_no);

  SolutionRecord record;
  auto node_field = [&](const std::string& text) {
    const auto value = detail::parse_int<std::int64_t>(text);
    if (!value || *value < 1 || *value > static_cast<std::int64_t>(kNoNode)) {
      throw ParseError("bad node id '" + text + "'", line_no);
    }
    return static_cast<NodeId>(*value - 1);
  };
  auto count_field = [&](const std::string& text) {
    const auto value = detail::parse_int<std::uint64_t>(text);
    if (!value) throw ParseError("bad count '" + text + "'", line_no);
    return static_cast<std::size_t>(*value);
  };
  auto double_field = [&](const std::string& text) {
    const auto value = detail::parse_double(text);
    if (!value) throw ParseError("bad number '" + text + "'", line_no);
    return *value;
  };
  record.instance = row[0];
  record.source = node_field(row[1]);
  record.target = node_field(row[2]);
  record.algorithm = row[3];
  record.queue = row[4];
  const std::size_t n_t = count_field(row[5]);
  record.inserted = count_field(row[6]);
  record.extracted = count_field(row[7]);
  record.time_ms = double_field(row[8]);
  if (with_preprocess) record.preprocess_ms = double_field(row[9]);

  std::size_t paths_seen = 0;
  while (next_line()) {
    const auto fields = detail::split_csv(line);
    if (fields[0] == "f") {
      if (fields.size() < 2 || fields.size() - 1 > kMaxDimension) {
        throw ParseError("bad frontier dimension", line_no);
      }
      CostVector cost(fields.size() - 1, 0);
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto value = detail::parse_int<std::int64_t>(fields[i]);
        if (!value || *value < 0) throw ParseError("bad cost '" + fields[i] + "'", line_no);
        cost[i - 1] = *value;
      }
      if (!record.frontier.empty() && record.frontier.front().size() != cost.size()) {
        throw ParseError("frontier dimension changes", line_no);
      }
      record.frontier.push_back(cost);
    } else if (fields[0] == "p") {
      if (record.frontier.size() != paths_seen + 1) {
        throw ParseError("path line without its frontier line", line_no);
      }
      std::vector<NodeId> nodes;
      for (std::size_t i = 1; i < fields.size(); ++i) nodes.push_back(node_field(fields[i]));
      record.paths.push_back(std::move(nodes));
      ++paths_seen;
    } else {
      throw ParseError("unknown record type '" + fields[0] + "'", line_no);
    }
  }
  if (paths_seen != 0 && paths_seen != record.frontier.size()) {
    throw ParseError("paths given for only some frontier vectors", line_no);
  }
  if (record.frontier.size() != n_t) throw ParseError("n_t does not match frontier lines", line_no);
  return record;
}

}  // namespace pareto_route
