#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gaindex/errors.hpp"
#include "gaindex/graph.hpp"
#include "gaindex/graph_io.hpp"
#include "oracle.hpp"

using namespace gaindex;

TEST(Graph, ConstructionNormalizesEdges) {
  const Graph g = Graph::from_edge_list(4, {{1, 0}, {0, 1}, {2, 3}, {3, 2}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_THROW(Graph::from_edge_list(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), GraphError);
}

TEST(Graph, LabeledPairs) {
  const std::pair<std::string, std::string> pairs[] = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
  const Graph g = from_labeled_pairs(pairs);
  EXPECT_TRUE(is_cycle(g));
  EXPECT_EQ(g.order(), 3);
}

TEST(Graph, Components) {
  const Graph g = disjoint_union(disjoint_union(path_graph(3), cycle_graph(4)),
                                 Graph::from_edge_list(1, std::span<const std::pair<int, int>>()));
  const Components c = components(g);
  ASSERT_EQ(c.graphs.size(), 2u);
  EXPECT_TRUE(is_path(c.graphs[0]));
  EXPECT_TRUE(is_cycle(c.graphs[1]));
  EXPECT_EQ(c.isolated, std::vector<Vertex>{7});
  EXPECT_FALSE(is_connected(g));
  EXPECT_FALSE(is_nontrivial(g));
  EXPECT_FALSE(is_nontrivial(disjoint_union(path_graph(3), path_graph(2))));
  EXPECT_TRUE(is_nontrivial(disjoint_union(path_graph(3), cycle_graph(3))));
}

TEST(Graph, Classification) {
  EXPECT_EQ(classify(path_graph(5)).kind, GraphKind::kPath);
  EXPECT_EQ(classify(cycle_graph(4)).kind, GraphKind::kCycle);
  EXPECT_EQ(classify(star_graph(5)).kind, GraphKind::kStar);
  EXPECT_EQ(classify(double_star_graph(1, 2)).kind, GraphKind::kDoubleStar);
  EXPECT_EQ(classify(complete_graph(4)).kind, GraphKind::kRegular);
  EXPECT_EQ(classify(complete_bipartite_graph(2, 3)).kind, GraphKind::kCompleteBipartite);
  EXPECT_EQ(classify(paw_graph()).kind, GraphKind::kOther);
  EXPECT_EQ(classify(disjoint_union(path_graph(2), path_graph(3))).kind, GraphKind::kDisconnected);
  EXPECT_EQ(family_name(double_star_graph(1, 2)).value(), "DS1,2");
  EXPECT_EQ(family_name(paw_graph()).value(), "paw");
  EXPECT_EQ(family_name(cycle_graph(4)).value(), "C4");
  EXPECT_TRUE(is_biregular(star_graph(4)));
  EXPECT_FALSE(is_regular_or_biregular(path_graph(4)));
  EXPECT_TRUE(is_biregular(complete_bipartite_graph(2, 3)));
}

TEST(Graph, MinimalEdgesAndEdits) {
  const Graph g = path_graph(4);
  EXPECT_TRUE(is_minimal_edge(g, Edge(0, 1)));
  EXPECT_FALSE(is_minimal_edge(g, Edge(1, 2)));
  EXPECT_THROW(is_minimal_edge(g, Edge(0, 3)), GraphError);
  EXPECT_EQ(delete_edge(g, Edge(1, 2)).size(), 2);
  EXPECT_TRUE(is_cycle(add_edge(g, Edge(0, 3))));
}

TEST(Graph, NamedParsing) {
  EXPECT_TRUE(is_star(parse_named_graph("S6").value()));
  EXPECT_EQ(parse_named_graph("K2,3").value().size(), 6);
  EXPECT_EQ(parse_named_graph("DS3,8").value().order(), 13);
  EXPECT_FALSE(parse_named_graph("X9").has_value());
}

TEST(GraphIO, Graph6MatchesReferenceEncoder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 20;
    const Graph g = oracle::random_connected(rng, n, 0.3);
    const std::string text = to_graph6(g);
    EXPECT_EQ(text, oracle::graph6(n, oracle::pairs_of(g)));
    EXPECT_EQ(parse_graph6(text), g);
  }
  EXPECT_EQ(to_graph6(path_graph(2)), "A_");
  EXPECT_EQ(to_graph6(cycle_graph(3)), "Bw");
}

TEST(GraphIO, Graph6Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C~~"), ParseError);
  std::istringstream in("Bw\nA_\nB\x01\n");
  try {
    read_graph6(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(GraphIO, EdgeLists) {
  const Graph g = paw_graph();
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  const auto many = parse_edge_lists("# two graphs\n3 2\n0 1\n1 2\n\n2 1\n0 1\n");
  ASSERT_EQ(many.size(), 2u);
  EXPECT_TRUE(is_path(many[0]));
  EXPECT_THROW(parse_edge_lists("3 2\n0 1\n"), ParseError);
}

TEST(Canonical, AgreesWithPermutationIsomorphism) {
  std::mt19937_64 rng(5);
  std::vector<Graph> graphs;
  for (int i = 0; i < 60; ++i) graphs.push_back(oracle::random_connected(rng, 4 + i % 3, 0.35));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      const bool same = canonical_form(graphs[i]) == canonical_form(graphs[j]);
      EXPECT_EQ(same, oracle::isomorphic(graphs[i], graphs[j]));
    }
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected(rng, 8, 0.4);
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(oracle::isomorphic(graph_from_canonical(canonical_form(g)), g));
  }
}

TEST(Canonical, SizeGuard) {
  EXPECT_THROW(canonical_form(path_graph(10)), LimitError);
  EXPECT_NO_THROW(canonical_form(path_graph(10), 10));
  EXPECT_THROW(canonical_form(path_graph(12), 12), LimitError);
}
