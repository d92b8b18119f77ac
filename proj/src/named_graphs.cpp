#include <charconv>
#include <string_view>

#include "gaindex/errors.hpp"
#include "gaindex/graph.hpp"

namespace gaindex {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path_graph: n must be >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, pairs);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph: n must be >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, pairs);
}

Graph star_graph(int n) {
  require(n >= 2, "star_graph: n must be >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(0, v);
  return Graph::from_edge_list(n, pairs);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete_graph: n must be >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, pairs);
}

Graph complete_bipartite_graph(int p, int q) {
  require(p >= 1 && q >= 1, "complete_bipartite_graph: sides must be >= 1");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
  for (int u = 0; u < p; ++u) {
    for (int v = 0; v < q; ++v) pairs.emplace_back(u, p + v);
  }
  return Graph::from_edge_list(p + q, pairs);
}

Graph double_star_graph(int a, int b) {
  require(a >= 0 && b >= 0, "double_star_graph: leaf counts must be >= 0");
  std::vector<std::pair<int, int>> pairs{{0, 1}};
  int next = 2;
  for (int i = 0; i < a; ++i) pairs.emplace_back(0, next++);
  for (int i = 0; i < b; ++i) pairs.emplace_back(1, next++);
  return Graph::from_edge_list(next, pairs);
}

Graph paw_graph() {
  return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

std::optional<Graph> parse_named_graph(std::string_view text) {
  if (text == "paw") return paw_graph();
  auto parse_int = [](std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  auto parse_two = [&](std::string_view s, int& a, int& b) {
    const auto comma = s.find(',');
    return comma != std::string_view::npos && parse_int(s.substr(0, comma), a) &&
           parse_int(s.substr(comma + 1), b);
  };
  int a = 0;
  int b = 0;
  try {
    if (text.starts_with("DS")) {
      if (parse_two(text.substr(2), a, b)) return double_star_graph(a, b);
      return std::nullopt;
    }
    if (text.size() < 2) return std::nullopt;
    const std::string_view rest = text.substr(1);
    switch (text.front()) {
      case 'P':
        if (parse_int(rest, a)) return path_graph(a);
        break;
      case 'C':
        if (parse_int(rest, a)) return cycle_graph(a);
        break;
      case 'S':
        if (parse_int(rest, a)) return star_graph(a);
        break;
      case 'K':
        if (parse_two(rest, a, b)) return complete_bipartite_graph(a, b);
        if (parse_int(rest, a)) return complete_graph(a);
        break;
      default:
        break;
    }
  } catch (const GraphError&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace gaindex
