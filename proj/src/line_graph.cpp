#include "gaindex/line_graph.hpp"

#include <algorithm>
#include <sstream>

#include "gaindex/errors.hpp"

namespace gaindex {

LineGraphResult line_graph(const Graph& g) {
  if (!is_nontrivial(g)) {
    throw StandingAssumptionError(
        "line graph requires a non-trivial graph: every component needs at least two "
        "edges (the line graph of P2 is a single vertex without edges); trivial "
        "component found");
  }
  LineGraphResult out;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.vertex_of_edge.emplace(edges[i], static_cast<Vertex>(i));
  }
  // Edges through a common vertex form a clique in L(G).
  std::vector<std::pair<int, int>> pairs;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> incident;
    for (Vertex w : g.neighbors(v)) incident.push_back(out.vertex_of_edge.at(Edge(v, w)));
    for (std::size_t a = 0; a < incident.size(); ++a) {
      for (std::size_t b = a + 1; b < incident.size(); ++b) {
        pairs.emplace_back(incident[a], incident[b]);
      }
    }
  }
  out.lg = Graph::from_edge_list(static_cast<int>(edges.size()), pairs);
  out.stats.order = out.lg.order();
  out.stats.size = out.lg.size();
  out.stats.max_degree = out.lg.max_degree();
  out.stats.min_degree = out.lg.min_degree();
  return out;
}

bool verify_degree_identity(const Graph& g) {
  const LineGraphResult result = line_graph(g);
  for (const auto& [e, a] : result.vertex_of_edge) {
    if (result.lg.degree(a) != g.degree(e.u) + g.degree(e.v) - 2) return false;
  }
  return result.stats.max_degree <= 2 * g.max_degree() - 2 &&
         result.stats.min_degree >= 2 * g.min_degree() - 2;
}

CheckReport m1_line_identity(const Graph& g) {
  const LineGraphResult result = line_graph(g);
  CheckReport report;
  report.theorem_id = "m1_line_identity";
  report.relation = Relation::kEqual;
  const long m = g.size();
  report.lhs = m1(result.lg);
  report.rhs = IndexValue::from_exact(RadicalNumber(4 * m) - m1(g).value() * Rational(4) +
                                      m2(g).value() * Rational(2) + forgotten(g).value());
  decide_exact(report);
  return report;
}

bool line_regularity_condition(const Graph& g) {
  const int target = g.max_degree() + g.min_degree();
  for (const Graph& c : components(g).graphs) {
    if (!is_regular_or_biregular(c)) return false;
    if (c.max_degree() + c.min_degree() != target) return false;
  }
  return true;
}

CheckReport line_regularity_characterization(const Graph& g) {
  const LineGraphResult result = line_graph(g);
  CheckReport report;
  report.theorem_id = "line_regularity";
  report.relation = Relation::kEqual;
  const bool line_regular = is_regular(result.lg);
  const bool condition = line_regularity_condition(g);
  report.lhs = IndexValue::indicator(line_regular);
  report.rhs = IndexValue::indicator(condition);
  decide_exact(report);
  std::ostringstream notes;
  notes << "L(G) regular=" << (line_regular ? "yes" : "no") << "; components (Delta,delta):";
  for (const Graph& c : components(g).graphs) {
    notes << " (" << c.max_degree() << "," << c.min_degree() << ")";
  }
  report.notes = notes.str();
  return report;
}

CheckReport line_tree_characterization(const Graph& g) {
  if (!is_connected(g)) {
    return unmet("line_tree", Relation::kEqual, "requires a connected graph");
  }
  const LineGraphResult result = line_graph(g);
  CheckReport report;
  report.theorem_id = "line_tree";
  report.relation = Relation::kEqual;
  const bool line_is_tree = is_tree(result.lg);
  const bool path = is_path(g);
  report.lhs = IndexValue::indicator(line_is_tree);
  report.rhs = IndexValue::indicator(path);
  decide_exact(report);
  const int m = g.size();
  const int m_line = result.stats.size;
  std::string note = "m=" + std::to_string(m) + ", m_L=" + std::to_string(m_line);
  if (!path) {
    const bool size_bound = m <= m_line;
    note += size_bound ? ", m <= m_L holds" : ", m <= m_L VIOLATED";
    report.holds = report.holds && size_bound;
  }
  report.notes = note;
  return report;
}

}  // namespace gaindex
