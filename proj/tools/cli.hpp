#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "pareto_route/btbda.hpp"
#include "pareto_route/graph.hpp"
#include "pareto_route/solution.hpp"
#include "pareto_route/tbda.hpp"
#include "pareto_route/tmda.hpp"

namespace pareto_route::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidationFailed = 2,
  kIoError = 3,
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Verbosity from PARETO_ROUTE_LOG: quiet|warn|info|debug or 0..3.
/// Unset means warn.
enum class LogLevel : int { quiet = 0, warn = 1, info = 2, debug = 3 };
LogLevel log_level_from_env();

class Logger {
 public:
  Logger(std::ostream& sink, LogLevel level) : sink_(sink), level_(level) {}
  bool enabled(LogLevel level) const { return level <= level_; }
  void log(LogLevel level, const std::string& message) const;

 private:
  std::ostream& sink_;
  LogLevel level_;
};

/// One solver configuration as named on the command line.
struct SolverConfig {
  std::string algo = "tmda";  // tmda | mda | tbda | btbda
  QueueMode queue = QueueMode::heap;
  bool shortcuts = true;
  HeuristicMode heuristic = HeuristicMode::computed;
  BidirectionalMode mode = BidirectionalMode::parallel;
  bool share = true;
  double time_limit_s = 0;  // 0 = none
  bool keep_paths = true;
  TbdaObserver* trace = nullptr;
};

/// Throws UsageError for unknown names or an algorithm the instance's
/// dimension does not allow.
void check_config(const SolverConfig& config, std::size_t dimension);

/// Preprocesses, then solves; solve time excludes preprocessing, which goes
/// to preprocess_ms.
SolutionRecord run_solver(const Instance& instance, const SolverConfig& config);

std::shared_ptr<const Graph> load_graph(std::span<const std::string> files, bool unit_component);

/// exp of the mean log; 0 when any value is 0, nullopt when empty.
std::optional<double> geometric_mean(std::span<const double> values);

/// Solve-time interval in seconds: (0,0.5], (0.5,5], (5,50], (50,500], (500,inf).
std::string time_bucket(double seconds);

/// Runs the manifest and writes runs.csv, aggregate.csv and scatter.csv into
/// `out_dir`. Returns an exit code.
int run_bench(const std::string& manifest_path, const std::string& out_dir, std::size_t workers,
              double time_limit_s, const Logger& logger);

/// Entry point of the command-line tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pareto_route::cli
