#include <json.hpp>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "pareto_route/errors.hpp"
#include "pareto_route/instance_io.hpp"

namespace pareto_route::cli {

std::optional<double> geometric_mean(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  double log_sum = 0;
  for (double v : values) {
    if (v <= 0) return 0.0;
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(values.size()));
}

std::string time_bucket(double seconds) {
  if (seconds <= 0.5) return "(0,0.5]";
  if (seconds <= 5) return "(0.5,5]";
  if (seconds <= 50) return "(5,50]";
  if (seconds <= 500) return "(50,500]";
  return "(500,inf)";
}

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

const std::vector<std::string> kBuckets{"(0,0.5]", "(0.5,5]", "(5,50]", "(50,500]", "(500,inf)"};

struct Variant {
  std::string name;
  SolverConfig config;
};

struct InstanceEntry {
  std::string name;
  std::vector<std::string> graphs;
  std::string pairs;
  bool unit_component = false;
};

struct Manifest {
  std::vector<InstanceEntry> instances;
  std::vector<Variant> variants;
  std::string reference;
  std::string baseline;
};

Variant parse_variant(const Json& j) {
  Variant v;
  SolverConfig& c = v.config;
  c.algo = j.value("algo", "tmda");
  const auto queue = parse_queue_mode(j.value("queue", "heap"));
  if (!queue) throw UsageError("bad queue in manifest variant");
  c.queue = *queue;
  c.shortcuts = j.value("shortcuts", true);
  const auto heuristic = parse_heuristic_mode(j.value("heuristic", "computed"));
  if (!heuristic) throw UsageError("bad heuristic in manifest variant");
  c.heuristic = *heuristic;
  const std::string mode = j.value("mode", "parallel");
  if (mode != "parallel" && mode != "interleaved") throw UsageError("bad mode in manifest variant");
  c.mode = mode == "parallel" ? BidirectionalMode::parallel : BidirectionalMode::interleaved;
  c.share = j.value("share", true);
  c.keep_paths = false;
  std::string name = c.algo + "/" + std::string(to_string(c.queue));
  if (c.algo == "tmda" && c.heuristic == HeuristicMode::zero) name = "mda/" + std::string(to_string(c.queue));
  if (!c.shortcuts) name += "/no-shortcuts";
  if (c.algo == "btbda" && c.mode == BidirectionalMode::interleaved) name += "/interleaved";
  if (c.algo == "btbda" && !c.share) name += "/no-share";
  v.name = j.value("name", name);
  return v;
}

Manifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
  if (!j.is_object()) throw IoError(path + ": manifest must be a JSON object");
  const fs::path base = fs::path(path).parent_path();
  const auto resolve = [&base](const std::string& p) {
    return fs::path(p).is_absolute() ? p : (base / p).string();
  };
  Manifest m;
  try {
    for (const Json& e : j.value("instances", Json::array())) {
      InstanceEntry entry;
      for (const Json& g : e.at("graphs")) entry.graphs.push_back(resolve(g.get<std::string>()));
      entry.name = e.value("name", entry.graphs.empty() ? std::string("unnamed")
                                                        : fs::path(entry.graphs.front()).stem().string());
      entry.pairs = resolve(e.at("pairs").get<std::string>());
      entry.unit_component = e.value("unit_component", false);
      m.instances.push_back(entry);
    }
    for (const Json& v : j.value("variants", Json::array())) m.variants.push_back(parse_variant(v));
    m.reference = j.value("reference", m.variants.empty() ? std::string() : m.variants.front().name);
    m.baseline = j.value("baseline", m.variants.size() < 2 ? m.reference : m.variants[1].name);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return m;
}

struct Job {
  std::size_t instance;
  StPair pair;
  std::size_t variant;
};

struct Outcome {
  SolutionRecord record;
  std::string error;
};

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace

int run_bench(const std::string& manifest_path, const std::string& out_dir, std::size_t workers,
              double time_limit_s, const Logger& logger) {
  const Manifest manifest = read_manifest(manifest_path);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir);

  struct Loaded {
    std::shared_ptr<const Graph> graph;
    std::vector<StPair> pairs;
    std::string error;
  };
  std::vector<Loaded> loaded(manifest.instances.size());
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < manifest.instances.size(); ++i) {
    const InstanceEntry& entry = manifest.instances[i];
    try {
      loaded[i].graph = load_graph(entry.graphs, entry.unit_component);
      std::ifstream in(entry.pairs);
      if (!in) throw IoError("cannot open " + entry.pairs);
      loaded[i].pairs = read_st_pairs(in, loaded[i].graph->node_count());
    } catch (const std::exception& e) {
      loaded[i].error = e.what();
      logger.log(LogLevel::warn, entry.name + ": " + e.what());
      continue;
    }
    for (const StPair& pair : loaded[i].pairs) {
      for (std::size_t v = 0; v < manifest.variants.size(); ++v) jobs.push_back({i, pair, v});
    }
  }

  std::vector<Outcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  const auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      SolverConfig config = manifest.variants[job.variant].config;
      config.time_limit_s = time_limit_s;
      try {
        const Instance inst = make_instance(loaded[job.instance].graph, job.pair.first, job.pair.second);
        outcomes[k].record = run_solver(inst, config);
      } catch (const std::exception& e) {
        outcomes[k].error = e.what();
        const std::lock_guard lock(log_mutex);
        logger.log(LogLevel::warn, manifest.instances[job.instance].name + ": " + e.what());
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t w = 1; w < std::min(workers, jobs.size()); ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::ofstream runs = open_output(fs::path(out_dir) / "runs.csv");
  runs << "instance,s,t,variant,algo,queue,n_t,inserted,extracted,time_ms,preprocess_ms,timed_out,error\n";
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    if (!loaded[i].error.empty()) {
      runs << csv_field(manifest.instances[i].name) << ",,,,,,,,,,,," << csv_field(loaded[i].error) << '\n';
    }
  }
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const Job& job = jobs[k];
    const Variant& variant = manifest.variants[job.variant];
    const SolutionRecord& r = outcomes[k].record;
    runs << csv_field(manifest.instances[job.instance].name) << ',' << job.pair.first + 1 << ','
         << job.pair.second + 1 << ',' << csv_field(variant.name) << ',' << variant.config.algo << ','
         << to_string(variant.config.queue) << ',';
    if (outcomes[k].error.empty()) {
      runs << r.n_t() << ',' << r.inserted << ',' << r.extracted << ',' << r.time_ms << ','
           << r.preprocess_ms.value_or(0) << ',' << (r.timed_out ? 1 : 0) << ",\n";
    } else {
      runs << ",,,,,," << csv_field(outcomes[k].error) << '\n';
    }
  }

  // Per query: the outcome of every variant.
  std::map<std::tuple<std::size_t, NodeId, NodeId>, std::map<std::string, const SolutionRecord*>> queries;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (!outcomes[k].error.empty()) continue;
    queries[{jobs[k].instance, jobs[k].pair.first, jobs[k].pair.second}]
           [manifest.variants[jobs[k].variant].name] = &outcomes[k].record;
  }

  struct Samples {
    std::vector<double> n_t, inserted, time_s;
  };
  // instance -> bucket -> variant -> samples
  std::map<std::size_t, std::map<std::string, std::map<std::string, Samples>>> groups;
  std::ofstream scatter = open_output(fs::path(out_dir) / "scatter.csv");
  scatter << "instance,s,t,variant,baseline_time_ms,variant_time_ms\n";
  for (const auto& [key, by_variant] : queries) {
    const auto& [instance, s, t] = key;
    const auto ref = by_variant.find(manifest.reference);
    if (ref != by_variant.end()) {
      const std::string bucket =
          ref->second->timed_out ? kBuckets.back() : time_bucket(ref->second->time_ms / 1000.0);
      for (const auto& [name, record] : by_variant) {
        Samples& samples = groups[instance][bucket][name];
        samples.n_t.push_back(static_cast<double>(record->n_t()));
        samples.inserted.push_back(static_cast<double>(record->inserted));
        samples.time_s.push_back(record->time_ms / 1000.0);
      }
    }
    const auto base = by_variant.find(manifest.baseline);
    if (base == by_variant.end()) continue;
    for (const auto& [name, record] : by_variant) {
      if (name == manifest.baseline) continue;
      scatter << csv_field(manifest.instances[instance].name) << ',' << s + 1 << ',' << t + 1 << ','
              << csv_field(name) << ',' << base->second->time_ms << ',' << record->time_ms << '\n';
    }
  }

  std::ofstream aggregate = open_output(fs::path(out_dir) / "aggregate.csv");
  aggregate << "instance,bucket,variant,count,n_t,inserted,time_s,time_ratio\n";
  for (const auto& [instance, buckets] : groups) {
    for (const std::string& bucket : kBuckets) {
      const auto it = buckets.find(bucket);
      if (it == buckets.end()) continue;
      const auto ref = it->second.find(manifest.reference);
      const double ref_time = ref == it->second.end() ? 0.0 : *geometric_mean(ref->second.time_s);
      for (const auto& [name, samples] : it->second) {
        const double time = *geometric_mean(samples.time_s);
        aggregate << csv_field(manifest.instances[instance].name) << ',' << bucket << ',' << csv_field(name)
                  << ',' << samples.time_s.size() << ',' << *geometric_mean(samples.n_t) << ','
                  << *geometric_mean(samples.inserted) << ',' << time << ',';
        if (ref_time > 0) aggregate << time / ref_time;
        aggregate << '\n';
      }
    }
  }

  if (!runs || !scatter || !aggregate) throw IoError("write failed in " + out_dir);
  logger.log(LogLevel::info, std::to_string(jobs.size()) + " runs written to " + out_dir);
  const bool any_error =
      std::any_of(loaded.begin(), loaded.end(), [](const Loaded& l) { return !l.error.empty(); }) ||
      std::any_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return !o.error.empty(); });
  return any_error ? kIoError : kOk;
}

}  // namespace pareto_route::cli
