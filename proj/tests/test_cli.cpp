#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "pareto_route/instance_io.hpp"
#include "test_support.hpp"

namespace pareto_route {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pareto_route");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pareto_route_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // The four-node overtaking example as two DIMACS files.
  std::vector<std::string> write_overtaking() const {
    const Instance inst = testing::overtaking_example();
    std::vector<std::string> files;
    for (std::size_t k = 0; k < 2; ++k) {
      files.push_back(path("fig.c" + std::to_string(k + 1) + ".gr"));
      std::ofstream out(files.back());
      write_dimacs_gr(inst.g(), k, out);
    }
    return files;
  }

  fs::path dir_;
};

TEST(CliMath, GeometricMean) {
  const std::vector<double> values{2, 8};
  EXPECT_DOUBLE_EQ(*cli::geometric_mean(values), 4.0);
  EXPECT_FALSE(cli::geometric_mean(std::vector<double>{}).has_value());
  EXPECT_EQ(*cli::geometric_mean(std::vector<double>{0, 5}), 0.0);
}

TEST(CliMath, TimeBuckets) {
  EXPECT_EQ(cli::time_bucket(0.001), "(0,0.5]");
  EXPECT_EQ(cli::time_bucket(0.5), "(0,0.5]");
  EXPECT_EQ(cli::time_bucket(0.50001), "(0.5,5]");
  EXPECT_EQ(cli::time_bucket(5), "(0.5,5]");
  EXPECT_EQ(cli::time_bucket(50), "(5,50]");
  EXPECT_EQ(cli::time_bucket(500), "(50,500]");
  EXPECT_EQ(cli::time_bucket(18000), "(500,inf)");
}

TEST_F(CliTest, SolvesOvertakingExample) {
  const auto files = write_overtaking();
  const Result r = run_cli({"solve", "-g", files[0], files[1], "-s", "1", "-t", "4", "--algo", "tbda",
                            "--queue", "heap", "-o", path("out.csv")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::ifstream in(path("out.csv"));
  const SolutionRecord record = read_solution(in);
  EXPECT_EQ(record.n_t(), 3u);
  EXPECT_EQ(record.frontier, testing::overtaking_frontier());
  EXPECT_TRUE(record.preprocess_ms.has_value());
  for (const char* algo : {"tmda", "mda", "btbda"}) {
    const Result other = run_cli({"solve", "-g", files[0], files[1], "-s", "1", "-t", "4", "--algo", algo});
    ASSERT_EQ(other.code, cli::kOk) << algo << other.err;
    std::istringstream text(other.out);
    EXPECT_EQ(read_solution(text).frontier, testing::overtaking_frontier()) << algo;
  }
}

TEST_F(CliTest, DebugLogShowsShortcutReplaced) {
  const auto files = write_overtaking();
  ::setenv("PARETO_ROUTE_LOG", "debug", 1);
  const Result r = run_cli({"solve", "-g", files[0], files[1], "-s", "1", "-t", "4", "--algo", "tbda"});
  ::unsetenv("PARETO_ROUTE_LOG");
  ASSERT_EQ(r.code, cli::kOk);
  const auto added = r.err.find("frontier add (3,5)");
  const auto replaced = r.err.find("frontier replace (3,5) by (3,4)");
  ASSERT_NE(added, std::string::npos) << r.err;
  ASSERT_NE(replaced, std::string::npos) << r.err;
  EXPECT_LT(added, replaced);
}

TEST_F(CliTest, ExitCodes) {
  const auto files = write_overtaking();
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
  EXPECT_EQ(run_cli({"solve", "-g", path("missing.gr"), "-s", "1", "-t", "2"}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"solve", "-g", files[0], files[1], "-s", "1", "-t", "9"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve", "-g", files[0], files[1], "-s", "1", "-t", "4", "--algo", "foo"}).code,
            cli::kUsage);
  EXPECT_EQ(run_cli({"solve", "-g", files[0], files[1], "-s", "1", "-t", "4", "--algo", "tbda",
                     "--heuristic", "zero"})
                .code,
            cli::kUsage);
  EXPECT_EQ(run_cli({"generate", "grid", "-o", path("g")}).code, cli::kUsage);
  {
    std::ofstream bad(path("bad.gr"));
    bad << "p sp 2 1\na 1 3 4\n";
  }
  EXPECT_EQ(run_cli({"solve", "-g", path("bad.gr"), path("bad.gr"), "-s", "1", "-t", "2"}).code,
            cli::kIoError);
}

TEST_F(CliTest, IncompatibleDimension) {
  ASSERT_EQ(run_cli({"generate", "netmaker", "--nodes", "100", "--extra-arcs", "300", "-o", path("n")}).code,
            cli::kOk);
  const std::vector<std::string> graph{path("n.c1.gr"), path("n.c2.gr"), path("n.c3.gr")};
  for (const auto& f : graph) EXPECT_TRUE(fs::exists(f));
  Result r = run_cli({"solve", "-g", graph[0], graph[1], graph[2], "-s", "1", "-t", "50", "--algo", "tbda"});
  EXPECT_EQ(r.code, cli::kUsage);
  r = run_cli({"solve", "-g", graph[0], graph[1], graph[2], "-s", "1", "-t", "50", "--algo", "tmda"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
}

TEST_F(CliTest, GenerateIsDeterministic) {
  ASSERT_EQ(run_cli({"generate", "grid", "--width", "300", "--height", "300", "--seed", "1", "-o", path("a")}).code,
            cli::kOk);
  ASSERT_EQ(run_cli({"generate", "grid", "--width", "300", "--height", "300", "--seed", "1", "-o", path("b")}).code,
            cli::kOk);
  EXPECT_EQ(slurp(path("a.c1.gr")), slurp(path("b.c1.gr")));
  EXPECT_EQ(slurp(path("a.c2.gr")), slurp(path("b.c2.gr")));
  EXPECT_EQ(slurp(path("a.pairs")), "q 90001 90002\n");
}

TEST_F(CliTest, SolveIsReproducible) {
  ASSERT_EQ(run_cli({"generate", "grid", "--width", "15", "--height", "15", "--seed", "4", "-o", path("g")}).code,
            cli::kOk);
  const auto strip_times = [](std::string csv) {
    std::istringstream in(csv);
    SolutionRecord r = read_solution(in);
    r.time_ms = 0;
    r.preprocess_ms = 0;
    std::ostringstream out;
    write_solution(r, out);
    return out.str();
  };
  const std::vector<std::string> args{"solve", "-g", path("g.c1.gr"), path("g.c2.gr"), "-s", "226", "-t", "227"};
  EXPECT_EQ(strip_times(run_cli(args).out), strip_times(run_cli(args).out));
}

TEST_F(CliTest, ValidateAgainstOracle) {
  ASSERT_EQ(run_cli({"generate", "random", "--nodes", "30", "--arcs", "100", "--pairs", "4", "--seed", "9", "-o",
                     path("r")})
                .code,
            cli::kOk);
  const Result r = run_cli({"validate", "-g", path("r.c1.gr"), path("r.c2.gr"), "--pairs", path("r.pairs")});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_EQ(line_count(r.out), 16u);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, BenchWritesTables) {
  ASSERT_EQ(run_cli({"generate", "grid", "--width", "12", "--height", "12", "--pairs", "3", "--seed", "2", "-o",
                     path("g")})
                .code,
            cli::kOk);
  {
    std::ofstream m(path("manifest.json"));
    m << R"({"instances": [{"name": "grid12", "graphs": ["g.c1.gr", "g.c2.gr"], "pairs": "g.pairs"}],
             "variants": [{"algo": "tmda"}, {"algo": "tmda", "heuristic": "zero"},
                          {"algo": "tbda", "queue": "bucket"}]})";
  }
  const Result r = run_cli({"bench", path("manifest.json"), "-o", path("out"), "--workers", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const std::string runs = slurp(path("out/runs.csv"));
  EXPECT_EQ(line_count(runs), 1u + 4u * 3u);
  EXPECT_NE(runs.find("grid12,145,146,mda/heap,tmda,heap,"), std::string::npos) << runs;
  const std::string aggregate = slurp(path("out/aggregate.csv"));
  EXPECT_NE(aggregate.find("grid12,(0,0.5],tmda/heap,4,"), std::string::npos) << aggregate;
  EXPECT_NE(aggregate.find("grid12,(0,0.5],mda/heap,4,"), std::string::npos) << aggregate;
  const std::string scatter = slurp(path("out/scatter.csv"));
  EXPECT_EQ(line_count(scatter), 1u + 4u * 2u);
}

TEST_F(CliTest, BenchEmptyManifestAndMissingFiles) {
  {
    std::ofstream m(path("empty.json"));
    m << "{}";
  }
  ASSERT_EQ(run_cli({"bench", path("empty.json"), "-o", path("e")}).code, cli::kOk);
  EXPECT_EQ(line_count(slurp(path("e/runs.csv"))), 1u);
  EXPECT_EQ(line_count(slurp(path("e/aggregate.csv"))), 1u);
  EXPECT_EQ(line_count(slurp(path("e/scatter.csv"))), 1u);

  {
    std::ofstream m(path("missing.json"));
    m << R"({"instances": [{"name": "gone", "graphs": ["nope.gr", "nope2.gr"], "pairs": "nope.pairs"}],
             "variants": [{"algo": "tmda"}]})";
  }
  const Result r = run_cli({"bench", path("missing.json"), "-o", path("m")});
  EXPECT_EQ(r.code, cli::kIoError);
  const std::string runs = slurp(path("m/runs.csv"));
  EXPECT_EQ(line_count(runs), 2u);
  EXPECT_NE(runs.find("gone,"), std::string::npos);
  EXPECT_EQ(run_cli({"bench", path("absent.json")}).code, cli::kIoError);
}

}  // namespace
}  // namespace pareto_route
