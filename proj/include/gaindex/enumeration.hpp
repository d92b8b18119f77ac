#pragma once

// Isomorph-free generation of small connected graphs and the exhaustive
// classifications built on it.

#include <optional>
#include <string>
#include <vector>

#include "gaindex/graph.hpp"
#include "gaindex/radical.hpp"
#include "gaindex/report.hpp"

namespace gaindex {

inline constexpr int kDefaultEnumerationLimit = 7;
inline constexpr int kMaxEnumerationLimit = 8;

/// One representative per isomorphism class of connected graphs on n
/// vertices, each in its canonical labeling, sorted by canonical form.
/// n <= 5 is generated from all labeled graphs; larger n by adding one edge at
/// a time to spanning trees. Throws LimitError if n > limit or limit > 8.
std::vector<Graph> enumerate_connected(int n, int limit = kDefaultEnumerationLimit);

/// Isomorphism classes of trees on n vertices (from Pruefer sequences).
std::vector<Graph> enumerate_trees(int n, int limit = kDefaultEnumerationLimit);

struct BucketMember {
  Graph graph;
  CanonicalForm form;
  RadicalNumber value;
  /// Family name of the graph, or its graph6 string when unnamed.
  std::string name;
  /// For line-graph buckets: the name of L(graph).
  std::optional<std::string> line_name;
};

/// Members whose value lies in (low, high], compared exactly.
struct Bucket {
  Rational low;
  Rational high;
  std::vector<BucketMember> members;

  std::string label() const;
};

/// Buckets (0,1], (1,2], (2,3], (3,4] of GA1 over all connected graphs with
/// at least one edge and at most n_max vertices. Members are sorted by value
/// then canonical form. Requires 6 <= n_max <= 8.
std::vector<Bucket> classify_small_values(int n_max = 6);

/// The same buckets over GA1(L(g)) for connected non-trivial g with
/// n(g) <= n_max. Requires 7 <= n_max <= 8.
std::vector<Bucket> classify_line_small_values(int n_max = 7);

/// Connected non-trivial g with m(g) = n(target) and n(g) <= n_max whose
/// line graph is isomorphic to target. n_max defaults to n(target) + 1, the
/// largest order of a connected graph with n(target) edges.
std::vector<Graph> find_line_preimages(const Graph& target, std::optional<int> n_max = {});

/// True iff find_line_preimages is empty.
bool verify_no_preimage(const Graph& target, std::optional<int> n_max = {});

/// The double star with n1^2 - 1 and n2^2 - 1 leaves: checks that GA1 equals
/// 2(n1^2-1)n1/(n1^2+1) + 2(n2^2-1)n2/(n2^2+1) + 2 n1 n2/(n1^2+n2^2),
/// that it is rational and that the graph is not biregular. With n1 or n2
/// equal to 1 one centre has no leaves, the graph is a star (which is
/// biregular) and the report is flagged degenerate in its notes.
/// Throws std::invalid_argument unless n1, n2 >= 1 and n1 != n2.
CheckReport example5(int n1, int n2);

/// K_{5k,20k}: GA1 = 80 k^2 exactly, an integer, on a graph that is not
/// regular. Throws LimitError when k > guard, std::invalid_argument if k < 1.
CheckReport example6(int k, int guard = 40);

enum class Objective { kMin, kMax };

struct ExtremalResult {
  RadicalNumber value;
  /// Every connected (n, m)-graph attaining the optimum.
  std::vector<Graph> graphs;
};

/// Exhaustive optimum of GA1 over connected graphs with n vertices and m
/// edges. Throws std::invalid_argument when no such graph exists and
/// LimitError when n exceeds the enumeration limit.
ExtremalResult extremal_search(int n, int m, Objective objective,
                               int limit = kDefaultEnumerationLimit);

/// Family name or graph6 fallback.
std::string display_name(const Graph& g);

}  // namespace gaindex
