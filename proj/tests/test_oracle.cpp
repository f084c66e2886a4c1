#include <gtest/gtest.h>

#include <random>

#include "pareto_route/errors.hpp"
#include "pareto_route/oracle.hpp"
#include "test_support.hpp"

namespace pareto_route {
namespace {

TEST(Oracle, OvertakingExample) {
  const Instance inst = testing::overtaking_example();
  EXPECT_EQ(oracle_frontier(inst, OracleMode::dfs), testing::overtaking_frontier());
  EXPECT_EQ(oracle_frontier(inst, OracleMode::label_correcting), testing::overtaking_frontier());
}

TEST(Oracle, SingleArcAndDisconnected) {
  const auto g = std::make_shared<const Graph>(3, 2, std::vector<Arc>{{0, 1, {5, 7}}});
  for (OracleMode mode : {OracleMode::dfs, OracleMode::label_correcting}) {
    EXPECT_EQ(oracle_frontier(make_instance(g, 0, 1), mode), (FrontierSet{{5, 7}}));
    EXPECT_TRUE(oracle_frontier(make_instance(g, 0, 2), mode).empty());
  }
}

TEST(Oracle, NodeFrontiers) {
  const auto per_node = oracle_node_frontiers(testing::overtaking_example());
  EXPECT_EQ(per_node[testing::kS], (FrontierSet{{0, 0}}));
  EXPECT_EQ(per_node[testing::kV], (FrontierSet{{1, 1}}));
  EXPECT_EQ(per_node[testing::kW], (FrontierSet{{2, 2}, {3, 1}}));
  EXPECT_EQ(per_node[testing::kT], testing::overtaking_frontier());
}

TEST(Oracle, Guards) {
  const auto big = generate_random(65, 70, 2, 1);
  EXPECT_THROW(oracle_frontier(make_instance(big, 0, 1), OracleMode::dfs), OracleGuardExceeded);
  const auto huge = std::make_shared<const Graph>(5001, 2, std::vector<Arc>{});
  EXPECT_THROW(oracle_frontier(make_instance(huge, 0, 1)), OracleGuardExceeded);
}

TEST(ParetoFilter, KeepsNonDominatedDistinctSorted) {
  EXPECT_EQ(pareto_filter({{3, 5}, {1, 10}, {3, 4}, {4, 3}, {3, 4}, {5, 5}}),
            testing::overtaking_frontier());
  EXPECT_TRUE(pareto_filter({}).empty());
}

TEST(OracleProperties, ModesAgree) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 300; ++i) {
    const testing::RandomSpec spec{.max_nodes = 20, .dimension = static_cast<std::size_t>(2 + i % 2),
                                   .max_cost = 10, .zero_percent = i % 4 == 0 ? 30 : 0};
    const Instance inst = testing::random_instance(rng, spec);
    const FrontierSet dfs = oracle_frontier(inst, OracleMode::dfs);
    const FrontierSet lc = oracle_frontier(inst, OracleMode::label_correcting);
    ASSERT_EQ(dfs, lc) << "instance " << i;
    for (std::size_t a = 0; a < lc.size(); ++a) {
      for (std::size_t b = 0; b < lc.size(); ++b) {
        if (a != b) EXPECT_FALSE(dominates_or_equal(lc[a], lc[b]));
      }
      if (a > 0) EXPECT_TRUE(lex_less(lc[a - 1], lc[a]));
    }
  }
}

}  // namespace
}  // namespace pareto_route
