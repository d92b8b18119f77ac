#include <random>

#include <gtest/gtest.h>

#include "gaindex/errors.hpp"
#include "gaindex/indices.hpp"
#include "gaindex/line_graph.hpp"
#include "oracle.hpp"

using namespace gaindex;

TEST(LineGraph, MatchesDefinition) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_connected(rng, 3 + trial % 9, 0.3);
    const auto pairs = oracle::pairs_of(g);
    const LineGraphResult result = line_graph(g);
    // Vertices follow the lexicographic edge order, which is pairs_of's order.
    EXPECT_EQ(oracle::pairs_of(result.lg), oracle::line_graph(pairs));
    EXPECT_EQ(result.stats.order, g.size());
    EXPECT_TRUE(verify_degree_identity(g));
    const CheckReport identity = m1_line_identity(g);
    EXPECT_TRUE(identity.holds);
    EXPECT_TRUE(identity.lhs.value() == identity.rhs.value());
  }
}

TEST(LineGraph, SmallExamples) {
  EXPECT_TRUE(is_path(line_graph(path_graph(5)).lg));
  EXPECT_TRUE(is_cycle(line_graph(star_graph(4)).lg));
  EXPECT_TRUE(is_complete(line_graph(star_graph(6)).lg));
  EXPECT_TRUE(are_isomorphic(line_graph(cycle_graph(5)).lg, cycle_graph(5)));
  EXPECT_THROW(line_graph(path_graph(2)), StandingAssumptionError);
  EXPECT_THROW(line_graph(disjoint_union(path_graph(3), path_graph(2))), StandingAssumptionError);
}

TEST(LineGraph, RegularityCharacterization) {
  EXPECT_TRUE(line_regularity_condition(star_graph(5)));
  EXPECT_TRUE(line_regularity_condition(complete_bipartite_graph(2, 3)));
  EXPECT_FALSE(line_regularity_condition(path_graph(4)));
  // C4 and S4 share Delta + delta = 4; S3 = P3 has 3.
  EXPECT_FALSE(line_regularity_condition(disjoint_union(cycle_graph(4), star_graph(3))));
  EXPECT_TRUE(line_regularity_condition(disjoint_union(cycle_graph(4), star_graph(4))));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected(rng, 3 + trial % 6, 0.5);
    const CheckReport r = line_regularity_characterization(g);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(is_regular(line_graph(g).lg), line_regularity_condition(g));
  }
}

TEST(LineGraph, TreeCharacterization) {
  EXPECT_TRUE(line_tree_characterization(path_graph(6)).holds);
  EXPECT_TRUE(line_tree_characterization(star_graph(5)).holds);
  EXPECT_TRUE(line_tree_characterization(paw_graph()).holds);
}
