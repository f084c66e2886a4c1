#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "pareto_route/cost_vector.hpp"
#include "pareto_route/errors.hpp"
#include "pareto_route/graph.hpp"
#include "test_support.hpp"

namespace pareto_route {
namespace {

using testing::kS;
using testing::kT;
using testing::kV;
using testing::kW;

TEST(CostVector, BasicArithmetic) {
  CostVector a{1, 2, 3};
  const CostVector b{4, 5, 6};
  EXPECT_EQ(a + b, (CostVector{5, 7, 9}));
  a += b;
  EXPECT_EQ(a, (CostVector{5, 7, 9}));
  EXPECT_EQ(CostVector::zeros(2), (CostVector{0, 0}));
  EXPECT_TRUE(CostVector::infinity(3).is_infinite());
  EXPECT_FALSE(a.is_infinite());
  EXPECT_EQ(to_string(CostVector{3, 4}), "(3,4)");
  std::ostringstream os;
  os << CostVector{1, 10};
  EXPECT_EQ(os.str(), "(1,10)");
}

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(CostVector{1, 2}, CostVector{2, 2}));
  EXPECT_FALSE(dominates(CostVector{1, 2}, CostVector{1, 2}));
  EXPECT_FALSE(dominates(CostVector{2, 1}, CostVector{1, 2}));
}

TEST(DominatesOrEqual, Examples) {
  EXPECT_TRUE(dominates_or_equal(CostVector{1, 2}, CostVector{1, 2}));
  EXPECT_TRUE(dominates_or_equal(CostVector{0, 0, 0}, CostVector{4, 2, 4}));
  EXPECT_TRUE(dominates_or_equal(CostVector{3, 4}, CostVector{3, 5}));
  EXPECT_FALSE(dominates_or_equal(CostVector{3, 5}, CostVector{3, 4}));
}

TEST(LexLess, Examples) {
  EXPECT_TRUE(lex_less(CostVector{3, 3}, CostVector{3, 4}));
  EXPECT_FALSE(lex_less(CostVector{1, 2}, CostVector{1, 2}));
  // Order (2,1,3) written 0-based.
  EXPECT_TRUE(lex_less(CostVector{8, 2, 4}, CostVector{4, 7, 3}, ComponentOrder{1, 0, 2}));
  EXPECT_FALSE(lex_less(CostVector{8, 2, 4}, CostVector{4, 7, 3}));
  EXPECT_TRUE(lex_less(CostVector{8, 2, 4}, CostVector{8, 2, 5}, identity_order(3)));
}

TEST(ComponentOrder, PermutationCheck) {
  EXPECT_TRUE(is_permutation_order(ComponentOrder{2, 0, 1}, 3));
  EXPECT_FALSE(is_permutation_order(ComponentOrder{0, 0, 1}, 3));
  EXPECT_FALSE(is_permutation_order(ComponentOrder{0, 1}, 3));
  EXPECT_EQ(identity_order(3), (ComponentOrder{0, 1, 2}));
}

TEST(SetDominates, Examples) {
  const std::vector<CostVector> frontier{{1, 10}, {3, 5}};
  EXPECT_FALSE(set_dominates(frontier, CostVector{3, 4}));
  EXPECT_TRUE(set_dominates(frontier, CostVector{3, 5}));
  EXPECT_FALSE(set_dominates(std::vector<CostVector>{}, CostVector{1, 1}));
  const std::vector<CostVector> three{{4, 2, 4}};
  EXPECT_TRUE(set_dominates(three, CostVector{4, 2, 4}));
  EXPECT_FALSE(set_dominates(three, CostVector{4, 1, 4}));
}

TEST(SetDominates, ProjectionOverIds) {
  const std::vector<CostVector> storage{{1, 10}, {3, 5}};
  const std::vector<int> ids{0, 1};
  EXPECT_TRUE(set_dominates(ids, CostVector{4, 6}, [&](int i) { return storage[i].view(); }));
}

TEST(ContractDeathTest, DimensionMismatchAborts) {
  EXPECT_DEATH(dominates(CostVector{1, 2}, CostVector{1, 2, 3}), "contract violation");
  EXPECT_DEATH(dominates_or_equal(CostVector{1, 2}, CostVector{1}), "contract violation");
  EXPECT_DEATH(lex_less(CostVector{1, 2}, CostVector{1, 2, 3}), "contract violation");
}

CostVector random_vector(std::mt19937_64& rng, std::size_t d, Cost max) {
  CostVector v(d, 0);
  for (Cost& c : v) c = uniform_int(rng, 0, max);
  return v;
}

TEST(RelationProperties, RandomTriples) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    const CostVector x = random_vector(rng, d, 3);
    const CostVector y = random_vector(rng, d, 3);
    const CostVector z = random_vector(rng, d, 3);
    if (dominates(x, y)) EXPECT_TRUE(dominates_or_equal(x, y));
    EXPECT_FALSE(dominates(x, x));
    EXPECT_TRUE(dominates_or_equal(x, x));
    if (dominates_or_equal(x, y) && dominates_or_equal(y, z)) EXPECT_TRUE(dominates_or_equal(x, z));
    if (dominates_or_equal(x, y) && dominates_or_equal(y, x)) EXPECT_EQ(x, y);
  }
}

TEST(RelationProperties, LexIsStrictTotalOrderForEveryPermutation) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    ComponentOrder order = identity_order(d);
    for (std::size_t k = d; k > 1; --k) {
      std::swap(order[k - 1], order[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(k - 1)))]);
    }
    const CostVector x = random_vector(rng, d, 2);
    const CostVector y = random_vector(rng, d, 2);
    const CostVector z = random_vector(rng, d, 2);
    EXPECT_FALSE(lex_less(x, x, order));
    if (x == y) {
      EXPECT_FALSE(lex_less(x, y, order));
    } else {
      EXPECT_NE(lex_less(x, y, order), lex_less(y, x, order));
    }
    if (lex_less(x, y, order) && lex_less(y, z, order)) EXPECT_TRUE(lex_less(x, z, order));
  }
}

bool brute_force_set_dominates(const std::vector<CostVector>& frontier, const CostVector& y) {
  for (const CostVector& z : frontier) {
    bool leq = true;
    for (std::size_t i = 0; i < y.size(); ++i) leq = leq && z[i] <= y[i];
    if (leq) return true;
  }
  return false;
}

TEST(RelationProperties, SetDominatesMatchesBruteForce) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20000; ++i) {
    const std::size_t d = i % 2 == 0 ? 2 : 3;
    // Sorted, mutually non-dominated frontier, the shape solvers maintain.
    std::vector<CostVector> candidates;
    const int count = static_cast<int>(uniform_int(rng, 0, 8));
    for (int k = 0; k < count; ++k) candidates.push_back(random_vector(rng, d, 12));
    std::sort(candidates.begin(), candidates.end(),
              [](const CostVector& a, const CostVector& b) { return lex_less(a, b); });
    std::vector<CostVector> frontier;
    for (const CostVector& c : candidates) {
      if (!brute_force_set_dominates(frontier, c)) frontier.push_back(c);
    }
    const CostVector y = random_vector(rng, d, 12);
    EXPECT_EQ(set_dominates(frontier, y), brute_force_set_dominates(frontier, y))
        << testing::describe(frontier) << " y=" << to_string(y);
  }
}

TEST(Graph, DropsSelfLoopsKeepsParallelArcs) {
  const std::vector<Arc> arcs{{0, 0, {1, 1}}, {0, 1, {1, 2}}, {0, 1, {2, 1}}};
  const Graph g(2, 2, arcs);
  EXPECT_EQ(g.arc_count(), 2u);
  EXPECT_EQ(g.outgoing(0).size(), 2u);
  EXPECT_EQ(g.incoming(1).size(), 2u);
  EXPECT_EQ(g.outgoing(1).size(), 0u);
  EXPECT_EQ(g.cost(1)[0], 2);
}

TEST(Graph, RejectsBadInput) {
  const std::vector<Arc> out_of_range{{0, 5, {1, 1}}};
  EXPECT_THROW(Graph(2, 2, out_of_range), std::invalid_argument);
  const std::vector<Arc> wrong_dimension{{0, 1, {1, 1, 1}}};
  EXPECT_THROW(Graph(2, 2, wrong_dimension), std::invalid_argument);
  const std::vector<Arc> negative{{0, 1, {-1, 1}}};
  EXPECT_THROW(Graph(2, 2, negative), std::invalid_argument);
}

TEST(Graph, StarsDescribeSameArcSet) {
  std::mt19937_64 rng(3);
  const auto g = generate_random(30, 90, 2, 5);
  std::size_t out_total = 0;
  std::size_t in_total = 0;
  for (NodeId v = 0; v < g->node_count(); ++v) {
    for (ArcId a : g->outgoing(v)) {
      EXPECT_EQ(g->tail(a), v);
      ++out_total;
    }
    for (ArcId a : g->incoming(v)) {
      EXPECT_EQ(g->head(a), v);
      ++in_total;
    }
  }
  EXPECT_EQ(out_total, g->arc_count());
  EXPECT_EQ(in_total, g->arc_count());
}

TEST(Instance, Validation) {
  auto g = std::make_shared<const Graph>(3, 2, std::vector<Arc>{});
  EXPECT_THROW(make_instance(g, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_instance(g, 0, 3), std::invalid_argument);
  EXPECT_NO_THROW(make_instance(g, 0, 2));
}

TEST(ReverseInstance, OvertakingExample) {
  const Instance inst = testing::overtaking_example();
  const Instance rev = reverse_instance(inst);
  EXPECT_EQ(rev.source, kT);
  EXPECT_EQ(rev.target, kS);
  bool found = false;
  for (ArcId a : rev.g().outgoing(kT)) {
    if (rev.g().head(a) == kW) {
      EXPECT_EQ(CostVector(rev.g().cost(a)), (CostVector{2, 1}));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(ReverseInstance, IsInvolutionPreservingSizes) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = testing::random_instance(rng, {});
    const Instance twice = reverse_instance(reverse_instance(inst));
    EXPECT_EQ(twice.source, inst.source);
    EXPECT_EQ(twice.target, inst.target);
    ASSERT_EQ(twice.g().node_count(), inst.g().node_count());
    ASSERT_EQ(twice.g().arc_count(), inst.g().arc_count());
    EXPECT_EQ(reverse_instance(inst).g().arc_count(), inst.g().arc_count());
    for (ArcId a = 0; a < inst.g().arc_count(); ++a) {
      EXPECT_EQ(twice.g().tail(a), inst.g().tail(a));
      EXPECT_EQ(twice.g().head(a), inst.g().head(a));
      EXPECT_EQ(CostVector(twice.g().cost(a)), CostVector(inst.g().cost(a)));
    }
  }
}

TEST(ReverseInstance, RequiresTwoDimensions) {
  auto g = std::make_shared<const Graph>(2, 3, std::vector<Arc>{{0, 1, {1, 2, 3}}});
  EXPECT_THROW(reverse_instance(make_instance(g, 0, 1)), UnsupportedDimension);
}

}  // namespace
}  // namespace pareto_route
