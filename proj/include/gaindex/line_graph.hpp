#pragma once

#include <map>

#include "gaindex/graph.hpp"
#include "gaindex/report.hpp"

namespace gaindex {

struct LineGraphStats {
  int max_degree = 0;  // Delta of L(G)
  int min_degree = 0;  // delta of L(G)
  int order = 0;       // n_L = m(G)
  int size = 0;        // m_L
};

/// L(G): one vertex per edge of G, numbered in the lexicographic order of
/// G's edges; two vertices are adjacent iff the edges share an endpoint.
struct LineGraphResult {
  Graph lg;
  std::map<Edge, Vertex> vertex_of_edge;
  LineGraphStats stats;
};

/// Throws StandingAssumptionError unless g is non-trivial (every component
/// has at least two edges): L(P2) is a single vertex without edges.
LineGraphResult line_graph(const Graph& g);

/// The line-graph vertex of uv has degree d_u + d_v - 2, and
/// Delta_L <= 2 Delta - 2, delta_L >= 2 delta - 2.
bool verify_degree_identity(const Graph& g);

/// M1(L(G)) == 4m - 4 M1(G) + 2 M2(G) + F(G), in exact integers.
CheckReport m1_line_identity(const Graph& g);

/// L(G) regular  <=>  every component is regular or biregular and all
/// components share Delta_i + delta_i = Delta + delta. lhs/rhs are the two
/// truth values; per-component (Delta_i, delta_i) go to notes.
CheckReport line_regularity_characterization(const Graph& g);

/// For connected non-trivial g: L(g) is a tree <=> g is a path, and when g
/// is not a path, m <= m_L.
CheckReport line_tree_characterization(const Graph& g);

/// The structural side of the regularity characterization.
bool line_regularity_condition(const Graph& g);

}  // namespace gaindex
