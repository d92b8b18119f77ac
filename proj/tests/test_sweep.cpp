#include <gtest/gtest.h>

#include "gaindex/errors.hpp"
#include "gaindex/sweep.hpp"

using namespace gaindex;

namespace {

SweepConfig small(unsigned threads) {
  SweepConfig config;
  config.exhaustive_nmax = 5;
  config.random_trials = 150;
  config.random_nmax = 9;
  config.seed = 1234;
  config.threads = threads;
  return config;
}

}  // namespace

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const SweepSummary one = run_sweep(small(1));
  const SweepSummary four = run_sweep(small(4));
  ASSERT_EQ(one.tallies.size(), four.tallies.size());
  for (std::size_t i = 0; i < one.tallies.size(); ++i) {
    const TheoremTally& a = one.tallies[i];
    const TheoremTally& b = four.tallies[i];
    EXPECT_EQ(a.id, b.id);
    EXPECT_EQ(a.evaluated, b.evaluated);
    EXPECT_EQ(a.equalities, b.equalities);
    EXPECT_EQ(a.violations, b.violations);
    EXPECT_EQ(a.witnesses, b.witnesses);
  }
  EXPECT_EQ(one.exhaustive_graphs, 1 + 1 + 2 + 6 + 21);
  EXPECT_EQ(one.random_graphs, 150);
}

TEST(Sweep, SeedChangesRandomPart) {
  SweepConfig a = small(1);
  SweepConfig b = small(1);
  a.exhaustive_nmax = b.exhaustive_nmax = 0;
  b.seed = 99;
  std::mt19937_64 ra(a.seed), rb(b.seed);
  EXPECT_NE(random_connected_graph(ra, 2, 12), random_connected_graph(rb, 2, 12));
}

TEST(Sweep, RandomGraphsAreConnected) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(rng, 2, 12);
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.order(), 2);
    EXPECT_LE(g.order(), 12);
  }
  for (int i = 0; i < 1000; ++i) {
    const int x = uniform_int(rng, 3, 5);
    EXPECT_GE(x, 3);
    EXPECT_LE(x, 5);
    const double u = uniform_unit(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Sweep, SelectedTheoremsOnly) {
  SweepConfig config = small(1);
  config.theorems = {"t_end", "gam20"};
  config.random_lemmas = false;
  const SweepSummary s = run_sweep(config);
  ASSERT_EQ(s.tallies.size(), 2u);
  EXPECT_TRUE(s.clean());
}

TEST(Sweep, Guards) {
  SweepConfig config;
  config.exhaustive_nmax = 8;
  EXPECT_THROW(run_sweep(config), LimitError);
  config.exhaustive_nmax = 3;
  config.theorems = {"unknown"};
  EXPECT_THROW(run_sweep(config), std::invalid_argument);
}
