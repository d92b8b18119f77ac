#include "gaindex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "gaindex/errors.hpp"

namespace gaindex {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    out[v] = static_cast<int>(adjacency_[v].size());
  }
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int best = order();
  for (const auto& list : adjacency_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

bool Graph::has_isolated_vertices() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& list) { return list.empty(); });
}

Graph from_labeled_pairs(std::span<const std::pair<std::string, std::string>> pairs) {
  std::unordered_map<std::string, int> ids;
  std::vector<std::pair<int, int>> edges;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<int>(ids.size()));
    return it->second;
  };
  for (const auto& [a, b] : pairs) {
    const int u = id_of(a);
    const int v = id_of(b);
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(static_cast<int>(ids.size()), edges);
}

Components components(const Graph& g) {
  Components out;
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (Vertex start = 0; start < n; ++start) {
    if (label[start] != -1) continue;
    if (g.degree(start) == 0) {
      label[start] = -2;
      out.isolated.push_back(start);
      continue;
    }
    std::vector<Vertex> members;
    std::queue<Vertex> frontier;
    frontier.push(start);
    label[start] = static_cast<int>(out.graphs.size());
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == -1) {
          label[w] = label[start];
          frontier.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::unordered_map<Vertex, int> local;
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
      if (label[e.u] == label[start]) edges.emplace_back(local[e.u], local[e.v]);
    }
    out.graphs.push_back(Graph::from_edge_list(static_cast<int>(members.size()), edges));
    out.vertex_ids.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  if (g.order() == 1) return true;
  const auto parts = components(g);
  return parts.graphs.size() == 1 && !parts.has_isolated();
}

bool is_nontrivial(const Graph& g) {
  if (g.order() == 0) return false;
  const auto parts = components(g);
  if (parts.has_isolated()) return false;
  return std::all_of(parts.graphs.begin(), parts.graphs.end(),
                     [](const Graph& c) { return c.size() >= 2; });
}

bool is_minimal_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw GraphError("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not an edge");
  }
  auto endpoint_ok = [&](Vertex end, Vertex other) {
    const int d = g.degree(end);
    for (Vertex w : g.neighbors(end)) {
      if (w != other && d > g.degree(w)) return false;
    }
    return true;
  };
  return endpoint_ok(e.u, e.v) && endpoint_ok(e.v, e.u);
}

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw GraphError("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not an edge");
  }
  std::vector<std::pair<int, int>> out;
  for (const Edge& f : g.edges()) {
    if (f != e) out.emplace_back(f.u, f.v);
  }
  return Graph::from_edge_list(g.order(), out);
}

Graph add_edge(const Graph& g, Edge e) {
  auto pairs = edge_pairs(g);
  pairs.emplace_back(e.u, e.v);
  return Graph::from_edge_list(g.order(), pairs);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto pairs = edge_pairs(a);
  for (const Edge& e : b.edges()) pairs.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph::from_edge_list(a.order() + b.order(), pairs);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw GraphError("relabel: permutation size mismatch");
  }
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edge_list(g.order(), pairs);
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::optional<std::pair<int, int>> biregular_degrees(const Graph& g) {
  if (g.size() == 0 || g.has_isolated_vertices()) return std::nullopt;
  const int hi = g.max_degree();
  const int lo = g.min_degree();
  if (hi == lo) return std::nullopt;
  for (const Edge& e : g.edges()) {
    const int du = g.degree(e.u);
    const int dv = g.degree(e.v);
    if (!((du == hi && dv == lo) || (du == lo && dv == hi))) return std::nullopt;
  }
  return std::make_pair(hi, lo);
}

bool is_regular(const Graph& g) { return regular_degree(g).has_value(); }
bool is_biregular(const Graph& g) { return biregular_degrees(g).has_value(); }
bool is_regular_or_biregular(const Graph& g) { return is_regular(g) || is_biregular(g); }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          frontier.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

bool is_path(const Graph& g) {
  if (g.order() < 2 || !is_tree(g)) return false;
  return g.max_degree() <= 2;
}

bool is_cycle(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && regular_degree(g) == 2;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_tree(g)) return false;
  return g.max_degree() == n - 1;
}

bool is_complete(const Graph& g) {
  return g.order() >= 1 && regular_degree(g) == g.order() - 1;
}

bool is_paw(const Graph& g) {
  if (g.order() != 4 || g.size() != 4 || !is_connected(g)) return false;
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d == std::vector<int>{1, 2, 2, 3};
}

std::optional<std::pair<int, int>> double_star_leaves(const Graph& g) {
  if (!is_tree(g) || g.order() < 4) return std::nullopt;
  std::vector<Vertex> centres;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 2) centres.push_back(v);
  }
  if (centres.size() != 2 || !g.has_edge(centres[0], centres[1])) return std::nullopt;
  int a = g.degree(centres[0]) - 1;
  int b = g.degree(centres[1]) - 1;
  if (a > b) std::swap(a, b);
  return std::make_pair(a, b);
}

std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
  if (g.order() < 2 || !is_connected(g) || !is_bipartite(g)) return std::nullopt;
  // Connected bipartite graph is complete bipartite iff m = p * q.
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  side[0] = 0;
  std::queue<Vertex> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (side[w] == -1) {
        side[w] = 1 - side[v];
        frontier.push(w);
      }
    }
  }
  const int p = static_cast<int>(std::count(side.begin(), side.end(), 0));
  const int q = g.order() - p;
  if (g.size() != p * q) return std::nullopt;
  return std::make_pair(std::min(p, q), std::max(p, q));
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kPath: return "Path";
    case GraphKind::kCycle: return "Cycle";
    case GraphKind::kStar: return "Star";
    case GraphKind::kDoubleStar: return "DoubleStar";
    case GraphKind::kRegular: return "Regular";
    case GraphKind::kCompleteBipartite: return "CompleteBipartite";
    case GraphKind::kBiregular: return "Biregular";
    case GraphKind::kOther: return "Other";
    case GraphKind::kDisconnected: return "Disconnected";
  }
  return "Other";
}

std::string GraphClass::describe() const {
  const std::string name = gaindex::to_string(kind);
  switch (kind) {
    case GraphKind::kRegular:
      return name + "(" + std::to_string(a) + ")";
    case GraphKind::kPath:
    case GraphKind::kCycle:
    case GraphKind::kStar:
      return name + "(" + std::to_string(a) + ")";
    case GraphKind::kBiregular:
    case GraphKind::kDoubleStar:
    case GraphKind::kCompleteBipartite:
      return name + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    default:
      return name;
  }
}

namespace {

GraphClass classify_connected(const Graph& g) {
  GraphClass out;
  for (int d : g.degrees()) ++out.degree_class_counts[d];
  const int n = g.order();
  if (is_path(g)) {
    out.kind = GraphKind::kPath;
    out.a = n;
  } else if (is_cycle(g)) {
    out.kind = GraphKind::kCycle;
    out.a = n;
  } else if (is_star(g)) {
    out.kind = GraphKind::kStar;
    out.a = n;
  } else if (auto leaves = double_star_leaves(g)) {
    out.kind = GraphKind::kDoubleStar;
    std::tie(out.a, out.b) = *leaves;
  } else if (auto r = regular_degree(g)) {
    out.kind = GraphKind::kRegular;
    out.a = *r;
  } else if (auto sides = complete_bipartite_sides(g)) {
    out.kind = GraphKind::kCompleteBipartite;
    std::tie(out.a, out.b) = *sides;
  } else if (auto bi = biregular_degrees(g)) {
    out.kind = GraphKind::kBiregular;
    std::tie(out.a, out.b) = *bi;
  }
  return out;
}

}  // namespace

GraphClass classify(const Graph& g) {
  if (is_connected(g)) return classify_connected(g);
  GraphClass out;
  out.kind = GraphKind::kDisconnected;
  for (int d : g.degrees()) ++out.degree_class_counts[d];
  return out;
}

std::vector<GraphClass> classify_components(const Graph& g) {
  std::vector<GraphClass> out;
  for (const Graph& c : components(g).graphs) out.push_back(classify_connected(c));
  return out;
}

std::optional<std::string> family_name(const Graph& g) {
  if (!is_connected(g) || g.order() < 2) return std::nullopt;
  const GraphClass c = classify_connected(g);
  switch (c.kind) {
    case GraphKind::kPath: return "P" + std::to_string(c.a);
    case GraphKind::kCycle: return "C" + std::to_string(c.a);
    case GraphKind::kStar: return "S" + std::to_string(c.a);
    case GraphKind::kDoubleStar:
      return "DS" + std::to_string(c.a) + "," + std::to_string(c.b);
    case GraphKind::kCompleteBipartite:
      return "K" + std::to_string(c.a) + "," + std::to_string(c.b);
    default:
      break;
  }
  if (is_complete(g)) return "K" + std::to_string(g.order());
  if (auto sides = complete_bipartite_sides(g)) {
    return "K" + std::to_string(sides->first) + "," + std::to_string(sides->second);
  }
  if (is_paw(g)) return "paw";
  return std::nullopt;
}

}  // namespace gaindex
