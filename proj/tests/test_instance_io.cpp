#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "pareto_route/errors.hpp"
#include "pareto_route/instance_io.hpp"
#include "test_support.hpp"

namespace pareto_route {
namespace {

std::shared_ptr<const Graph> parse(const std::vector<std::string>& texts) {
  std::vector<std::istringstream> streams;
  streams.reserve(texts.size());
  for (const std::string& text : texts) streams.emplace_back(text);
  std::vector<std::istream*> pointers;
  for (auto& s : streams) pointers.push_back(&s);
  return parse_dimacs_gr(pointers);
}

TEST(Dimacs, TwoStreamsSingleArc) {
  const auto g = parse({"c first\np sp 2 1\na 1 2 5\n", "p sp 2 1\na 1 2 7\n"});
  EXPECT_EQ(g->node_count(), 2u);
  EXPECT_EQ(g->arc_count(), 1u);
  EXPECT_EQ(g->dimension(), 2u);
  EXPECT_EQ(CostVector(g->cost(0)), (CostVector{5, 7}));
  EXPECT_EQ(g->tail(0), 0u);
  EXPECT_EQ(g->head(0), 1u);
}

TEST(Dimacs, NodeOutOfRangeIsParseError) {
  try {
    parse({"p sp 2 1\na 1 3 5\n"});
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Dimacs, MalformedLines) {
  EXPECT_THROW(parse({"p sp 2 1\na 1 x 5\n"}), ParseError);
  EXPECT_THROW(parse({"a 1 2 5\n"}), ParseError);
  EXPECT_THROW(parse({"p sp 2\n"}), ParseError);
  EXPECT_THROW(parse({"p sp 2 1\nz\n"}), ParseError);
  EXPECT_THROW(parse({"c only a comment\n"}), ParseError);
}

TEST(Dimacs, StructuralErrors) {
  EXPECT_THROW(parse({"p sp 2 1\na 1 2 -1\n"}), FormatError);
  EXPECT_THROW(parse({"p sp 2 2\na 1 2 1\n"}), FormatError);
  EXPECT_THROW(parse({"p sp 2 1\na 1 2 1\n", "p sp 2 1\na 2 1 1\n"}), FormatError);
  EXPECT_THROW(parse({"p sp 2 1\na 1 2 1\n", "p sp 3 1\na 1 2 1\n"}), FormatError);
  EXPECT_THROW(parse({"p sp 3 1\na 1 2 1\n", "p sp 3 2\na 1 2 1\na 2 3 1\n"}), FormatError);
  EXPECT_THROW(parse({"p sp 2 1\na 1 2 999999999999999999\n"}), FormatError);
}

TEST(Dimacs, StreamsMayListArcsInDifferentOrder) {
  const auto g = parse({"p sp 3 3\na 1 2 1\na 2 3 2\na 1 2 3\n",
                        "p sp 3 3\na 2 3 20\na 1 2 10\na 1 2 30\n"});
  ASSERT_EQ(g->arc_count(), 3u);
  EXPECT_EQ(CostVector(g->cost(0)), (CostVector{1, 10}));
  EXPECT_EQ(CostVector(g->cost(1)), (CostVector{2, 20}));
  EXPECT_EQ(CostVector(g->cost(2)), (CostVector{3, 30}));
}

TEST(Dimacs, WriteParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto g = generate_random(20, 50, 3, rng());
    std::vector<std::string> texts;
    for (std::size_t k = 0; k < 3; ++k) {
      std::ostringstream out;
      write_dimacs_gr(*g, k, out, "component " + std::to_string(k));
      texts.push_back(out.str());
    }
    const auto back = parse(texts);
    ASSERT_EQ(back->arc_count(), g->arc_count());
    for (ArcId a = 0; a < g->arc_count(); ++a) {
      EXPECT_EQ(back->tail(a), g->tail(a));
      EXPECT_EQ(back->head(a), g->head(a));
      EXPECT_EQ(CostVector(back->cost(a)), CostVector(g->cost(a)));
    }
    const auto single = parse({texts[0]});
    EXPECT_EQ(single->arc_count(), back->arc_count());
  }
}

TEST(UnitComponent, AppendsOnes) {
  const auto g = std::make_shared<const Graph>(2, 2, std::vector<Arc>{{0, 1, {5, 7}}});
  const auto once = synthesize_unit_component(*g);
  EXPECT_EQ(CostVector(once->cost(0)), (CostVector{5, 7, 1}));
  const auto twice = synthesize_unit_component(*once);
  EXPECT_EQ(CostVector(twice->cost(0)), (CostVector{5, 7, 1, 1}));
  const Graph empty(3, 2, std::vector<Arc>{});
  const auto grown = synthesize_unit_component(empty);
  EXPECT_EQ(grown->dimension(), 3u);
  EXPECT_EQ(grown->arc_count(), 0u);
  EXPECT_EQ(grown->node_count(), 3u);
}

TEST(StPairs, RoundTripAndErrors) {
  const std::vector<StPair> pairs{{0, 3}, {2, 1}};
  std::ostringstream out;
  write_st_pairs(pairs, out);
  EXPECT_EQ(out.str(), "q 1 4\nq 3 2\n");
  std::istringstream in("c pairs\n\n" + out.str());
  EXPECT_EQ(read_st_pairs(in, 4), pairs);
  std::istringstream bad("q 1 5\n");
  EXPECT_THROW(read_st_pairs(bad, 4), ParseError);
  std::istringstream malformed("q 1\n");
  EXPECT_THROW(read_st_pairs(malformed, 4), ParseError);
}

SolutionRecord overtaking_record() {
  SolutionRecord r;
  r.instance = "fig";
  r.source = testing::kS;
  r.target = testing::kT;
  r.algorithm = "tmda";
  r.queue = "heap";
  r.inserted = 7;
  r.extracted = 6;
  r.time_ms = 0.125;
  r.frontier = testing::overtaking_frontier();
  return r;
}

void expect_same(const SolutionRecord& a, const SolutionRecord& b) {
  EXPECT_EQ(a.instance, b.instance);
  EXPECT_EQ(a.source, b.source);
  EXPECT_EQ(a.target, b.target);
  EXPECT_EQ(a.algorithm, b.algorithm);
  EXPECT_EQ(a.queue, b.queue);
  EXPECT_EQ(a.inserted, b.inserted);
  EXPECT_EQ(a.extracted, b.extracted);
  EXPECT_EQ(a.time_ms, b.time_ms);
  EXPECT_EQ(a.preprocess_ms, b.preprocess_ms);
  EXPECT_EQ(a.frontier, b.frontier);
  EXPECT_EQ(a.paths, b.paths);
}

SolutionRecord round_trip(const SolutionRecord& record) {
  std::stringstream buffer;
  write_solution(record, buffer);
  return read_solution(buffer);
}

TEST(SolutionCsv, OvertakingFrontierRoundTrips) {
  const SolutionRecord r = overtaking_record();
  expect_same(round_trip(r), r);
  std::ostringstream out;
  write_solution(r, out);
  EXPECT_EQ(out.str(),
            "instance,s,t,algo,queue,n_t,inserted,extracted,time_ms\n"
            "fig,1,4,tmda,heap,3,7,6,0.125\n"
            "f,1,10\nf,3,4\nf,4,3\n");
}

TEST(SolutionCsv, EmptyFrontierRoundTrips) {
  SolutionRecord r = overtaking_record();
  r.frontier.clear();
  expect_same(round_trip(r), r);
}

TEST(SolutionCsv, PathsAndPreprocessColumn) {
  SolutionRecord r = overtaking_record();
  r.paths = {{0, 3}, {0, 2, 3}, {0, 1, 2, 3}};
  r.preprocess_ms = 1.5;
  expect_same(round_trip(r), r);
}

TEST(SolutionCsv, ToleratesWhitespace) {
  std::istringstream in(
      "  instance , s,t,algo,queue,n_t,inserted,extracted,time_ms \n\n"
      " fig , 1 ,4,tmda, heap,2,3,4, 0.5\n"
      " f , 1 , 10 \n\nf,3,4\n");
  const SolutionRecord r = read_solution(in);
  EXPECT_EQ(r.instance, "fig");
  EXPECT_EQ(r.queue, "heap");
  EXPECT_EQ(r.time_ms, 0.5);
  EXPECT_EQ(r.frontier, (std::vector<CostVector>{{1, 10}, {3, 4}}));
}

TEST(SolutionCsv, RejectsMalformedInput) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_solution(in);
  };
  const std::string header = "instance,s,t,algo,queue,n_t,inserted,extracted,time_ms\n";
  EXPECT_THROW(read(""), ParseError);
  EXPECT_THROW(read("instance,s\n"), ParseError);
  EXPECT_THROW(read(header), ParseError);
  EXPECT_THROW(read(header + "x,1,2,tmda,heap,1,0,0,0\n"), ParseError);
  EXPECT_THROW(read(header + "x,1,2,tmda,heap,1,0,0,0\nf,1,x\n"), ParseError);
  EXPECT_THROW(read(header + "x,0,2,tmda,heap,0,0,0,0\n"), ParseError);
  EXPECT_THROW(read(header + "x,1,2,tmda,heap,1,0,0,0\ng,1,2\n"), ParseError);
  EXPECT_THROW(read(header + "x,1,2,tmda,heap,2,0,0,0\nf,1,2\nf,1,2,3\n"), ParseError);
}

TEST(SolutionCsv, RejectsUnwritableNames) {
  SolutionRecord r = overtaking_record();
  r.instance = "a,b";
  std::ostringstream out;
  EXPECT_THROW(write_solution(r, out), std::invalid_argument);
  r.instance = " padded";
  EXPECT_THROW(write_solution(r, out), std::invalid_argument);
}

}  // namespace
}  // namespace pareto_route
