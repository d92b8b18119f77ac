#include <gtest/gtest.h>

#include "gaindex/enumeration.hpp"
#include "gaindex/errors.hpp"
#include "gaindex/indices.hpp"
#include "oracle.hpp"

using namespace gaindex;

TEST(Enumeration, MatchesBruteForceClasses) {
  for (int n = 1; n <= 5; ++n) {
    const auto reps = oracle::connected_classes(n);
    const auto graphs = enumerate_connected(n);
    ASSERT_EQ(graphs.size(), reps.size()) << "n=" << n;
    // Each oracle class is hit exactly once.
    for (const auto& pairs : reps) {
      int hits = 0;
      for (const Graph& g : graphs) hits += oracle::isomorphic(n, pairs, g.order(), oracle::pairs_of(g));
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(Enumeration, Census) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = enumerate_connected(n);
    EXPECT_EQ(graphs.size(), expected[n - 1]) << "n=" << n;
    for (std::size_t i = 1; i < graphs.size(); ++i) {
      EXPECT_LT(canonical_form(graphs[i - 1]), canonical_form(graphs[i]));
    }
  }
  const std::size_t trees[] = {1, 1, 1, 2, 3, 6, 11};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_trees(n).size(), trees[n - 1]);
  EXPECT_THROW(enumerate_connected(8), LimitError);
  EXPECT_THROW(enumerate_connected(9, 9), LimitError);
}

TEST(Enumeration, SixVerticesAgainstPairwiseIsomorphism) {
  const auto graphs = enumerate_connected(6);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_TRUE(is_connected(graphs[i]));
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      if (graphs[i].size() != graphs[j].size()) continue;
      EXPECT_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
    }
  }
}

TEST(Enumeration, TreeExtremality) {
  for (int n = 3; n <= 7; ++n) {
    const RadicalNumber star = ga1(star_graph(n)).value();
    const RadicalNumber path = ga1(path_graph(n)).value();
    for (const Graph& t : enumerate_trees(n)) {
      const RadicalNumber v = ga1(t).value();
      EXPECT_LE(star, v);
      EXPECT_LE(v, path);
    }
  }
}

TEST(Enumeration, ExtremalSearch) {
  const ExtremalResult min5 = extremal_search(5, 4, Objective::kMin);
  ASSERT_EQ(min5.graphs.size(), 1u);
  EXPECT_TRUE(is_star(min5.graphs[0]));
  EXPECT_EQ(min5.value, RadicalNumber(ratio(16, 5)));
  const ExtremalResult max5 = extremal_search(5, 4, Objective::kMax);
  EXPECT_TRUE(is_path(max5.graphs.at(0)));
  const ExtremalResult c4 = extremal_search(4, 4, Objective::kMax);
  EXPECT_TRUE(is_cycle(c4.graphs.at(0)));
  EXPECT_EQ(c4.value, RadicalNumber(4L));
  EXPECT_THROW(extremal_search(4, 2, Objective::kMin), std::invalid_argument);
  EXPECT_THROW(extremal_search(4, 7, Objective::kMin), std::invalid_argument);
}

TEST(Enumeration, Examples) {
  const CheckReport e23 = example5(2, 3);
  EXPECT_TRUE(e23.holds);
  EXPECT_EQ(e23.lhs.value(), RadicalNumber(ratio(528, 65)));
  EXPECT_NE(example5(1, 2).notes.find("degenerate"), std::string::npos);
  EXPECT_THROW(example5(3, 3), std::invalid_argument);
  EXPECT_EQ(example6(2).lhs.value(), RadicalNumber(320L));
  EXPECT_THROW(example6(41), LimitError);
}

TEST(Enumeration, Preimages) {
  EXPECT_TRUE(verify_no_preimage(double_star_graph(1, 2)));
  EXPECT_TRUE(verify_no_preimage(star_graph(4)));
  const auto c3 = find_line_preimages(cycle_graph(3));
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_FALSE(verify_no_preimage(cycle_graph(5)));
}
