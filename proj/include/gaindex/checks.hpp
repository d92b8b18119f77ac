#pragma once

// One checker per inequality or identity on GA1 and on GA1 of line graphs.
//
// Every checker validates its hypotheses and reports preconditions_met=false
// instead of throwing. Two-sided bounds produce one report per side
// ("p0.lower", "p0.upper", ...). Sides that live in the radical field are
// compared exactly; bounds with a radical-sum denominator are compared by
// cross-multiplying with the (positive) denominator. Bounds with irrational
// exponents are evaluated in double precision with relative tolerance 1e-9,
// and any double-precision violation is re-derived at 256 bits.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gaindex/graph.hpp"
#include "gaindex/report.hpp"

namespace gaindex {

// f(t) = 2t / (1 + t^2): increasing on [0,1], decreasing on [1,inf), max f(1)=1.
double helper_f(double t);
Rational helper_f(const Rational& t);
// g(x, y) = 2 sqrt(xy) / (x + y), exact for positive rationals.
RadicalNumber helper_g(const Rational& x, const Rational& y);

/// 2m sqrt(Delta delta)/(Delta + delta) <= GA1 <= m.
/// Lower equality iff regular or biregular; upper iff regular.
std::vector<CheckReport> check_p0(const Graph& g);

/// Connected g: GA1 >= 2 (n-1)^(3/2) / n and GA1 >= 2m / n.
std::vector<CheckReport> check_eq23(const Graph& g);

/// GA1 >= 2m sqrt(n-1) / n, equality iff g is a star.
CheckReport check_t_end(const Graph& g);

/// Connected g with Delta <= n-2: GA1 > 2m sqrt(n-2)/(n-1) >= 2 sqrt(n-2).
std::vector<CheckReport> check_nostar(const Graph& g);

/// For a minimal edge u0v0: GA1(g - e) < GA1(g) - 2 sqrt(d_u0 d_v0)/(d_u0 + d_v0).
CheckReport check_edge_deletion(const Graph& g, Edge e);

/// GA1 rational  <=>  d_u d_v is a perfect square on every edge.
CheckReport check_rationality(const Graph& g);

/// (M1 - 2m) sqrt((Delta-1)(delta-1))/(Delta+delta-2) <= GA1(L) <= M1/2 - m.
std::vector<CheckReport> check_line02(const Graph& g);

/// M1 sqrt((Delta-1)(delta-1))/(Delta+delta-2) <= GA1 + GA1(L) <= M1/2.
std::vector<CheckReport> check_nordhaus_gaddum(const Graph& g);

/// sqrt((delta+t-1)(delta-1))/(2delta+t-2) <= sqrt((delta+t)delta)/(2delta+t)
/// for delta >= 1, t >= 0, 2delta + t > 2. Exact for integer t.
CheckReport check_lemma_line3(long delta, long t);
CheckReport check_lemma_line3(long delta, double t);

/// GA1(L) >= min{3/(4 sqrt 2), 2 sqrt(ab)/(a+b)} GA1, a = 2Delta-2,
/// b = max{2delta-2, 1}.
CheckReport check_t_line6(const Graph& g);

/// Components regular or biregular and none isomorphic to P3:
/// GA1(L) >= GA1, equality iff every component is a cycle.
CheckReport check_t_line7(const Graph& g);

/// GA1(L) >= 2 (m-1)^(3/2) / m.
CheckReport check_p_line8(const Graph& g);

/// No component is a path on <= 6 vertices: GA1(L) >= 2 sqrt(m-1).
CheckReport check_t_line8(const Graph& g);

/// sum sqrt(x_j - 1) >= sqrt(sum x_j - 1) for x_j >= 2.
CheckReport check_lemma_line8(std::span<const long> xs);
CheckReport check_lemma_line8(std::span<const double> xs);

/// M1(L) >= 4m + (delta-4) M1 + 2 M2, equality iff regular.
CheckReport check_c_line10(const Graph& g);

/// GA1 >= 2^(1/2a) delta^(1/2) m^((2a+1)/2a) / (Delta M1^(1-a)^(1/2a)),
/// equality iff regular. M1^(1-a) is the variable Zagreb index. Exact at
/// a = 1/2 and a = 1.
CheckReport check_pi1tris(const Graph& g, double alpha);

/// Line-graph version of check_pi1tris (separate forms for 0 < a <= 1 and
/// a > 1), using chi_(1-a)(G).
CheckReport check_c_pi1tris(const Graph& g, double alpha);

/// The alpha > 1 case of check_c_pi1tris re-derived with the factor
/// (delta/(delta-1))^(alpha-1), which is what bounding
/// (d_u + d_v - 2)^(1-alpha) by (d_u + d_v)^(1-alpha) requires when
/// 1 - alpha < 0:
/// GA1(L) >= sqrt 2 (delta-1)^((2a-1)/2a) delta^((1-a)/2a) (M1-2m)^((2a+1)/2a)
///           / (4 (Delta-1) chi_(1-a)^(1/2a)).
/// Unmet for alpha <= 1, where the statement is unchanged.
CheckReport check_c_pi1tris_rederived(const Graph& g, double alpha);

/// GA1 >= 2 delta^(1/2) m^2 / M1^(3/2), equality iff regular.
CheckReport check_gam20(const Graph& g);

/// GA1(L) >= (2delta-2)^(1/2) Delta^(3/2) (M1-2m)^2 / (2 (Delta-1)^(3/2) chi_(3/2)).
CheckReport check_gam20_line(const Graph& g);

/// Graph-driven checker in a registry. `run` returns every report the
/// checker produces for one graph (one per side, per edge or per alpha).
struct GraphChecker {
  std::string id;
  std::string statement;
  std::function<std::vector<CheckReport>(const Graph&)> run;
};

inline constexpr double kDefaultAlphas[] = {0.5, 1.0, 2.0};

/// Every graph checker, including the line-graph identities. The
/// alpha-parameterized checkers run once per alpha.
std::vector<GraphChecker> graph_checkers(
    std::span<const double> alphas = std::span<const double>(kDefaultAlphas));

std::vector<std::string> checker_ids();

/// Reports of the selected checkers ("all" or an empty list selects every
/// one). Throws std::invalid_argument naming the available ids for unknown
/// ids.
std::vector<CheckReport> run_checks(const Graph& g, std::span<const std::string> ids,
                                    std::span<const double> alphas =
                                        std::span<const double>(kDefaultAlphas));

}  // namespace gaindex
