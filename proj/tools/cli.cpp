#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "pareto_route/errors.hpp"
#include "pareto_route/generators.hpp"
#include "pareto_route/instance_io.hpp"
#include "pareto_route/oracle.hpp"
#include "pareto_route/preprocessing.hpp"

namespace pareto_route::cli {

LogLevel log_level_from_env() {
  const char* value = std::getenv("PARETO_ROUTE_LOG");
  if (value == nullptr) return LogLevel::warn;
  const std::string text(value);
  if (text == "quiet" || text == "0") return LogLevel::quiet;
  if (text == "info" || text == "2") return LogLevel::info;
  if (text == "debug" || text == "3") return LogLevel::debug;
  return LogLevel::warn;
}

void Logger::log(LogLevel level, const std::string& message) const {
  if (!enabled(level)) return;
  static constexpr const char* kNames[] = {"error", "warn", "info", "debug"};
  sink_ << '[' << kNames[static_cast<int>(level)] << "] " << message << '\n';
}

void check_config(const SolverConfig& config, std::size_t dimension) {
  const std::string& algo = config.algo;
  if (algo != "tmda" && algo != "mda" && algo != "tbda" && algo != "btbda") {
    throw UsageError("unknown algorithm " + algo);
  }
  if ((algo == "tbda" || algo == "btbda") && dimension != 2) {
    throw UsageError(algo + " needs exactly two cost components, got " + std::to_string(dimension));
  }
  if ((algo == "tbda" || algo == "btbda") && config.heuristic == HeuristicMode::zero) {
    throw UsageError(algo + " has no zero-heuristic variant; use mda");
  }
  if (dimension < 2) throw UsageError("at least two cost components are needed");
}

SolutionRecord run_solver(const Instance& instance, const SolverConfig& config) {
  check_config(config, instance.dimension());
  const auto since = [](auto start) {
    return std::chrono::duration<double, std::milli>(SteadyClock::now() - start).count();
  };
  const auto deadline = [&config] {
    return config.time_limit_s > 0 ? Deadline::after(std::chrono::duration<double>(config.time_limit_s))
                                   : Deadline();
  };

  auto start = SteadyClock::now();
  const PreprocessData pre = preprocess(instance);
  SolutionRecord record;
  if (config.algo == "btbda") {
    const PreprocessData bwd = preprocess_backward(instance);
    const double pre_ms = since(start);
    record = solve_btbda(instance, pre, bwd,
                         {.queue = config.queue, .shortcuts = config.shortcuts, .mode = config.mode,
                          .share_bounds = config.share, .share_heuristics = config.share,
                          .keep_paths = config.keep_paths, .deadline = deadline()});
    record.preprocess_ms = pre_ms;
    return record;
  }
  const double pre_ms = since(start);
  if (config.algo == "tbda") {
    record = solve_tbda(instance, pre,
                        {.queue = config.queue, .shortcuts = config.shortcuts,
                         .keep_paths = config.keep_paths, .deadline = deadline(),
                         .observer = config.trace});
  } else {
    const HeuristicMode heuristic = config.algo == "mda" ? HeuristicMode::zero : config.heuristic;
    record = solve_tmda(instance, pre,
                        {.queue = config.queue, .heuristic = heuristic,
                         .keep_paths = config.keep_paths, .deadline = deadline()});
  }
  record.preprocess_ms = pre_ms;
  return record;
}

std::shared_ptr<const Graph> load_graph(std::span<const std::string> files, bool unit_component) {
  if (files.empty()) throw UsageError("no graph files given");
  for (const std::string& file : files) {
    if (!std::filesystem::is_regular_file(file)) throw IoError("cannot open " + file);
  }
  auto graph = read_dimacs_files(files);
  if (unit_component) graph = synthesize_unit_component(*graph);
  return graph;
}

namespace {

std::vector<StPair> load_pairs(const std::string& path, std::size_t node_count) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_st_pairs(in, node_count);
}

// 1-based ids from the command line.
NodeId node_arg(std::int64_t id, std::size_t node_count, const char* what) {
  if (id < 1 || static_cast<std::size_t>(id) > node_count) {
    throw UsageError(std::string(what) + " must be in 1.." + std::to_string(node_count));
  }
  return static_cast<NodeId>(id - 1);
}

struct TraceLog : TbdaObserver {
  const Logger* logger;
  void on_frontier_add(CostView cost) override {
    logger->log(LogLevel::debug, "frontier add " + to_string(cost));
  }
  void on_frontier_replace(CostView old_cost, CostView new_cost) override {
    logger->log(LogLevel::debug, "frontier replace " + to_string(old_cost) + " by " + to_string(new_cost));
  }
};

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  body(out);
  if (!out) throw IoError("write failed for " + path);
}

struct GenerateArgs {
  std::string kind;
  std::string out;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t nodes = 0;
  std::size_t arcs = 0;
  std::size_t extra_arcs = 0;
  std::size_t dimension = 2;
  Cost max_cost = 10;
  std::size_t pairs = 0;
  std::uint64_t seed = 1;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  std::shared_ptr<const Graph> graph;
  std::vector<StPair> pairs;
  std::string comment;
  if (args.kind == "grid") {
    if (args.width == 0 || args.height == 0) throw UsageError("grid needs --width and --height");
    const Instance inst = generate_grid(args.width, args.height, args.seed, args.max_cost);
    graph = inst.graph;
    pairs.emplace_back(inst.source, inst.target);
    comment = "grid " + std::to_string(args.width) + "x" + std::to_string(args.height);
  } else if (args.kind == "netmaker") {
    if (args.nodes < 2) throw UsageError("netmaker needs --nodes >= 2");
    graph = generate_netmaker(args.nodes, args.extra_arcs, args.seed);
    comment = "netmaker " + std::to_string(args.nodes) + " nodes";
  } else {
    if (args.nodes < 2) throw UsageError("random needs --nodes >= 2");
    graph = generate_random(args.nodes, args.arcs, args.dimension, args.seed, args.max_cost);
    comment = "random " + std::to_string(args.nodes) + " nodes";
  }
  if (args.pairs > 0) {
    for (const StPair& p : generate_st_pairs(graph->node_count(), args.pairs, args.seed)) pairs.push_back(p);
  }
  comment += " seed " + std::to_string(args.seed);
  for (std::size_t k = 0; k < graph->dimension(); ++k) {
    const std::string path = args.out + ".c" + std::to_string(k + 1) + ".gr";
    write_file(path, [&](std::ostream& o) {
      write_dimacs_gr(*graph, k, o, comment + " component " + std::to_string(k + 1));
    });
    out << path << '\n';
  }
  if (!pairs.empty()) {
    const std::string path = args.out + ".pairs";
    write_file(path, [&](std::ostream& o) { write_st_pairs(pairs, o); });
    out << path << '\n';
  }
  return kOk;
}

struct InstanceArgs {
  std::vector<std::string> graphs;
  bool unit_component = false;
  std::int64_t source = 0;
  std::int64_t target = 0;
};

struct SolverArgs {
  std::string algo = "tmda";
  std::string queue = "heap";
  std::string shortcuts = "on";
  std::string heuristic = "computed";
  std::string mode = "parallel";
  bool no_share = false;
  double time_limit = 0;

  SolverConfig config() const {
    SolverConfig c;
    c.algo = algo;
    c.queue = *parse_queue_mode(queue);
    c.shortcuts = shortcuts == "on";
    c.heuristic = *parse_heuristic_mode(heuristic);
    c.mode = mode == "parallel" ? BidirectionalMode::parallel : BidirectionalMode::interleaved;
    c.share = !no_share;
    c.time_limit_s = time_limit;
    return c;
  }
};

int cmd_preprocess(const InstanceArgs& args, const std::string& out_path, std::ostream& out) {
  const auto graph = load_graph(args.graphs, args.unit_component);
  const Instance inst = make_instance(graph, node_arg(args.source, graph->node_count(), "--source"),
                                      node_arg(args.target, graph->node_count(), "--target"));
  const PreprocessData pre = preprocess(inst);
  if (out_path.empty()) {
    write_preprocess_cache(pre, out);
  } else {
    write_file(out_path, [&](std::ostream& o) { write_preprocess_cache(pre, o); });
  }
  return kOk;
}

int cmd_solve(const InstanceArgs& args, const SolverArgs& solver, const std::string& name,
              const std::string& out_path, bool no_paths, std::ostream& out, const Logger& logger) {
  const auto graph = load_graph(args.graphs, args.unit_component);
  const Instance inst = make_instance(graph, node_arg(args.source, graph->node_count(), "--source"),
                                      node_arg(args.target, graph->node_count(), "--target"));
  SolverConfig config = solver.config();
  config.keep_paths = !no_paths;
  TraceLog trace;
  trace.logger = &logger;
  if (logger.enabled(LogLevel::debug)) config.trace = &trace;
  SolutionRecord record = run_solver(inst, config);
  record.instance = name.empty() ? std::filesystem::path(args.graphs.front()).stem().string() : name;
  logger.log(LogLevel::info, record.algorithm + ": " + std::to_string(record.n_t()) + " efficient paths, " +
                                 std::to_string(record.inserted) + " insertions");
  if (record.timed_out) logger.log(LogLevel::warn, "time limit reached; the frontier is partial");
  if (out_path.empty()) {
    write_solution(record, out);
  } else {
    write_file(out_path, [&](std::ostream& o) { write_solution(record, o); });
  }
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  for (char c : text + ",") {
    if (c == ',') {
      if (!item.empty()) items.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  return items;
}

int cmd_validate(const InstanceArgs& args, const std::string& pairs_path, const std::string& algos,
                 const SolverArgs& solver, std::ostream& out, const Logger& logger) {
  const auto graph = load_graph(args.graphs, args.unit_component);
  std::vector<StPair> pairs;
  if (!pairs_path.empty()) pairs = load_pairs(pairs_path, graph->node_count());
  if (args.source != 0 || args.target != 0) {
    pairs.emplace_back(node_arg(args.source, graph->node_count(), "--source"),
                       node_arg(args.target, graph->node_count(), "--target"));
  }
  if (pairs.empty()) throw UsageError("validate needs --pairs or --source/--target");
  const std::vector<std::string> names = split_list(algos);
  if (names.empty()) throw UsageError("empty --algos list");
  for (const std::string& algo : names) {
    if (algo != "tmda" && algo != "mda" && algo != "tbda" && algo != "btbda") {
      throw UsageError("unknown algorithm " + algo);
    }
  }

  bool failed = false;
  for (const auto& [s, t] : pairs) {
    const Instance inst = make_instance(graph, s, t);
    FrontierSet expected;
    try {
      expected = oracle_frontier(inst);
    } catch (const OracleGuardExceeded& e) {
      logger.log(LogLevel::warn, "skipping pair " + std::to_string(s + 1) + " " + std::to_string(t + 1) +
                                     ": " + e.what());
      continue;
    }
    for (const std::string& algo : names) {
      SolverConfig config = solver.config();
      config.algo = algo;
      if ((algo == "tbda" || algo == "btbda") && inst.dimension() != 2) {
        logger.log(LogLevel::warn, "skipping " + algo + ": needs two cost components");
        continue;
      }
      if (algo == "tbda" || algo == "btbda") config.heuristic = HeuristicMode::computed;
      const SolutionRecord record = run_solver(inst, config);
      const bool pass = !record.timed_out && record.frontier == expected;
      failed = failed || !pass;
      out << (pass ? "PASS " : "FAIL ") << algo << ' ' << s + 1 << ' ' << t + 1 << " n_t=" << record.n_t()
          << " expected=" << expected.size() << '\n';
    }
  }
  return failed ? kValidationFailed : kOk;
}

void add_instance_options(CLI::App* cmd, InstanceArgs& args, bool need_pair) {
  cmd->add_option("-g,--graph", args.graphs, "DIMACS .gr files, one per cost component")->required();
  cmd->add_flag("--unit-component", args.unit_component, "append a component that is 1 on every arc");
  auto* s = cmd->add_option("-s,--source", args.source, "source node (1-based)");
  auto* t = cmd->add_option("-t,--target", args.target, "target node (1-based)");
  if (need_pair) {
    s->required();
    t->required();
  }
}

void add_solver_options(CLI::App* cmd, SolverArgs& args) {
  cmd->add_option("--algo", args.algo, "tmda, mda, tbda or btbda")
      ->check(CLI::IsMember({"tmda", "mda", "tbda", "btbda"}));
  cmd->add_option("--queue", args.queue, "heap or bucket")->check(CLI::IsMember({"heap", "bucket"}));
  cmd->add_option("--shortcuts", args.shortcuts, "on or off (tbda, btbda)")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--heuristic", args.heuristic, "computed or zero (tmda)")
      ->check(CLI::IsMember({"computed", "zero"}));
  cmd->add_option("--mode", args.mode, "parallel or interleaved (btbda)")
      ->check(CLI::IsMember({"parallel", "interleaved"}));
  cmd->add_flag("--no-share", args.no_share, "btbda: do not share bounds between the two searches");
  cmd->add_option("--time-limit", args.time_limit, "seconds per solver run, 0 for none")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact one-to-one multiobjective shortest paths"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a benchmark instance as DIMACS files");
  generate->add_option("kind", gen.kind, "grid, netmaker or random")
      ->required()
      ->check(CLI::IsMember({"grid", "netmaker", "random"}));
  generate->add_option("-o,--out", gen.out, "output prefix")->required();
  generate->add_option("--width", gen.width);
  generate->add_option("--height", gen.height);
  generate->add_option("--nodes", gen.nodes);
  generate->add_option("--arcs", gen.arcs, "random: number of arcs");
  generate->add_option("--extra-arcs", gen.extra_arcs, "netmaker: arcs beyond the cycle");
  generate->add_option("--dimension", gen.dimension, "random: cost components")->check(CLI::Range(1, 8));
  generate->add_option("--max-cost", gen.max_cost)->check(CLI::PositiveNumber);
  generate->add_option("--pairs", gen.pairs, "also write this many random s-t pairs");
  generate->add_option("--seed", gen.seed);

  InstanceArgs pre_args;
  std::string pre_out;
  auto* pre_cmd = app.add_subcommand("preprocess", "write the heuristic and bounds of one query");
  add_instance_options(pre_cmd, pre_args, true);
  pre_cmd->add_option("-o,--out", pre_out, "cache file (default stdout)");

  InstanceArgs solve_args;
  SolverArgs solve_solver;
  std::string solve_out;
  std::string solve_name;
  bool no_paths = false;
  auto* solve = app.add_subcommand("solve", "compute the efficient s-t frontier");
  add_instance_options(solve, solve_args, true);
  add_solver_options(solve, solve_solver);
  solve->add_option("-o,--out", solve_out, "solution CSV (default stdout)");
  solve->add_option("--name", solve_name, "instance name for the CSV");
  solve->add_flag("--no-paths", no_paths, "omit node sequences");

  InstanceArgs val_args;
  SolverArgs val_solver;
  std::string val_pairs;
  std::string val_algos = "tmda,mda,tbda,btbda";
  auto* validate = app.add_subcommand("validate", "compare solvers against the reference oracle");
  add_instance_options(validate, val_args, false);
  add_solver_options(validate, val_solver);
  validate->add_option("--pairs", val_pairs, "s-t pair file");
  validate->add_option("--algos", val_algos, "comma-separated algorithms");

  std::string manifest;
  std::string bench_out = ".";
  std::size_t workers = 1;
  double bench_limit = 0;
  auto* bench = app.add_subcommand("bench", "run a JSON manifest and write CSV tables");
  bench->add_option("manifest", manifest, "JSON manifest")->required();
  bench->add_option("-o,--out-dir", bench_out, "directory for runs.csv, aggregate.csv, scatter.csv");
  bench->add_option("--workers", workers, "concurrent runs")->check(CLI::Range(1, 256));
  bench->add_option("--time-limit", bench_limit, "seconds per run, 0 for none")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  const Logger logger(err, log_level_from_env());
  try {
    if (*generate) return cmd_generate(gen, out);
    if (*pre_cmd) return cmd_preprocess(pre_args, pre_out, out);
    if (*solve) return cmd_solve(solve_args, solve_solver, solve_name, solve_out, no_paths, out, logger);
    if (*validate) return cmd_validate(val_args, val_pairs, val_algos, val_solver, out, logger);
    return run_bench(manifest, bench_out, workers, bench_limit, logger);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace pareto_route::cli
