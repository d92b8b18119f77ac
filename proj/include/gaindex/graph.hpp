#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, plus the structural
// predicates the index theorems are conditioned on.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gaindex {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple graph. Edges are deduplicated and kept in lexicographic
/// order; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError for self-loops or out-of-range endpoints. Repeated
  /// pairs (in either orientation) collapse to one edge.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  std::vector<int> degrees() const;

  /// Maximum / minimum degree over all vertices (0 for the empty graph).
  int max_degree() const;
  int min_degree() const;

  bool has_edge(Vertex a, Vertex b) const;
  bool has_isolated_vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Maps arbitrary labels to dense ids in first-appearance order.
Graph from_labeled_pairs(std::span<const std::pair<std::string, std::string>> pairs);

/// Connected pieces with at least one edge, each relabeled to 0..k-1 in
/// increasing original-id order; isolated vertices are listed separately.
struct Components {
  std::vector<Graph> graphs;
  std::vector<std::vector<Vertex>> vertex_ids;
  std::vector<Vertex> isolated;

  bool has_isolated() const { return !isolated.empty(); }
};

Components components(const Graph& g);
bool is_connected(const Graph& g);

/// Every component has at least two edges (and there are no isolated vertices).
bool is_nontrivial(const Graph& g);

/// Both endpoints have degree no larger than any of their other neighbours.
/// Throws GraphError when e is not an edge of g.
bool is_minimal_edge(const Graph& g, Edge e);

/// Same vertex set without e; isolated vertices are kept.
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

Graph disjoint_union(const Graph& a, const Graph& b);
/// Relabels so that vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Structural predicates. Biregular means: every edge joins a vertex of degree
// Delta to one of degree delta with Delta != delta (so the degree classes form
// the bipartition). Stars S_n, n >= 3, are (n-1, 1)-biregular.
std::optional<int> regular_degree(const Graph& g);
std::optional<std::pair<int, int>> biregular_degrees(const Graph& g);
bool is_regular(const Graph& g);
bool is_biregular(const Graph& g);
bool is_regular_or_biregular(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
/// K_{1,n-1} with n >= 2 (P_2 and P_3 count as stars).
bool is_star(const Graph& g);
bool is_complete(const Graph& g);
bool is_paw(const Graph& g);
/// Leaf counts (a <= b) of a double star: two adjacent centres, each other
/// vertex a leaf attached to one of them, both centres of degree >= 2.
std::optional<std::pair<int, int>> double_star_leaves(const Graph& g);
/// Side sizes (p <= q) when g is a complete bipartite graph with p, q >= 1.
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g);

enum class GraphKind {
  kPath,
  kCycle,
  kStar,
  kDoubleStar,
  kRegular,
  kCompleteBipartite,
  kBiregular,
  kOther,
  kDisconnected,
};

std::string to_string(GraphKind kind);

/// Reported class of a graph. Parameters by kind: Regular(r) -> a = r;
/// Biregular -> (a, b) = (Delta, delta); DoubleStar / CompleteBipartite ->
/// (a, b) = leaf counts / side sizes with a <= b; Path, Cycle, Star -> a = n.
struct GraphClass {
  GraphKind kind = GraphKind::kOther;
  int a = 0;
  int b = 0;
  std::map<int, int> degree_class_counts;

  std::string describe() const;
};

/// Most specific class, precedence Path, Cycle, Star, DoubleStar, Regular,
/// CompleteBipartite, Biregular, Other. Disconnected graphs report
/// kDisconnected; use classify_components for the pieces.
GraphClass classify(const Graph& g);
std::vector<GraphClass> classify_components(const Graph& g);

/// Short family name ("P5", "C4", "S6", "DS1,2", "K4", "K2,3", "paw") for
/// connected graphs in a recognised family, using the same precedence.
std::optional<std::string> family_name(const Graph& g);

// Named constructions.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);
/// Two adjacent centres with a and b pendant leaves; centres are 0 and 1.
Graph double_star_graph(int a, int b);
Graph paw_graph();

/// Parses P{n}, C{n}, S{n}, K{n}, K{p},{q}, DS{a},{b} and "paw".
std::optional<Graph> parse_named_graph(std::string_view text);

/// Permutation-minimal upper-triangle adjacency bitstring. Bits are taken
/// column by column (pairs (0,1), (0,2), (1,2), (0,3), ...), the graph6 order;
/// the first pair is the most significant bit of `bits`.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string to_string() const;
};

inline constexpr int kDefaultCanonicalLimit = 9;
inline constexpr int kMaxCanonicalLimit = 11;

/// Throws LimitError when g.order() > limit (limit at most 11).
CanonicalForm canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit);
Graph graph_from_canonical(const CanonicalForm& form);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace gaindex
