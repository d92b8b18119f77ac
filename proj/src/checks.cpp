#include "gaindex/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/mpfr.hpp>

#include "gaindex/indices.hpp"
#include "gaindex/line_graph.hpp"

namespace gaindex {
namespace {

// 78 decimal digits is a little over 256 bits.
using HighPrecision =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<78>>;

template <class Real>
Real to_real(const Rational& r);

template <>
double to_real<double>(const Rational& r) {
  return r.get_d();
}

template <>
HighPrecision to_real<HighPrecision>(const Rational& r) {
  return HighPrecision(r.get_num().get_str()) / HighPrecision(r.get_den().get_str());
}

template <class Real>
Real to_real(const RadicalNumber& a) {
  using std::sqrt;
  Real sum = 0;
  for (const auto& [q, c] : a.terms()) {
    sum += to_real<Real>(c) * sqrt(Real(static_cast<double>(q)));
  }
  return sum;
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

enum class Verdict { kHolds, kEqual, kViolated };

template <class Real>
Verdict float_verdict(Relation relation, const Real& lhs, const Real& rhs) {
  using std::abs;
  const Real difference = lhs - rhs;
  Real scale = abs(rhs);
  if (scale < 1) scale = 1;
  if (abs(difference) <= Real(kFloatTolerance) * scale) {
    return relation == Relation::kLess || relation == Relation::kGreater ? Verdict::kViolated
                                                                          : Verdict::kEqual;
  }
  const bool positive = difference > 0;
  switch (relation) {
    case Relation::kGreaterEqual:
    case Relation::kGreater:
      return positive ? Verdict::kHolds : Verdict::kViolated;
    case Relation::kLessEqual:
    case Relation::kLess:
      return positive ? Verdict::kViolated : Verdict::kHolds;
    case Relation::kEqual:
      return Verdict::kViolated;
  }
  return Verdict::kViolated;
}

// `evaluate` is a generic callable: evaluate.template operator()<Real>()
// returns {lhs, rhs} computed in Real.
template <class Evaluate>
void decide_float(CheckReport& report, Evaluate&& evaluate) {
  auto [lhs, rhs] = evaluate.template operator()<double>();
  report.mode = DecisionMode::kFloat;
  Verdict verdict = float_verdict(report.relation, lhs, rhs);
  double difference = lhs - rhs;
  double error = 1e-13;
  if (verdict == Verdict::kViolated) {
    auto [hp_lhs, hp_rhs] = evaluate.template operator()<HighPrecision>();
    verdict = float_verdict(report.relation, hp_lhs, hp_rhs);
    report.mode = DecisionMode::kFloatRechecked;
    lhs = static_cast<double>(hp_lhs);
    rhs = static_cast<double>(hp_rhs);
    difference = static_cast<double>(hp_lhs - hp_rhs);
    error = 1e-16;
  }
  report.lhs = IndexValue::from_float(lhs, std::abs(lhs) * error);
  report.rhs = IndexValue::from_float(rhs, std::abs(rhs) * error);
  const int sign = verdict == Verdict::kEqual ? 0 : (difference > 0 ? 1 : -1);
  decide_by_sign(report, sign, difference);
  if (verdict == Verdict::kViolated) report.holds = false;
}

// lhs REL num / den with den > 0, decided exactly by comparing lhs * den
// against num.
void decide_quotient(CheckReport& report, const RadicalNumber& lhs, const RadicalNumber& num,
                     const RadicalNumber& den) {
  report.lhs = IndexValue::from_exact(lhs);
  if (den.terms().size() == 1) {
    // 1 / (c sqrt(q)) = sqrt(q) / (c q)
    const auto& [q, c] = *den.terms().begin();
    const Rational inverse = 1 / (c * Rational(static_cast<unsigned long>(q)));
    report.rhs = IndexValue::from_exact(num * RadicalNumber::term(inverse, q));
    decide_exact(report);
    return;
  }
  const Approximation n = to_float(num);
  const Approximation d = to_float(den);
  const double rhs = n.value / d.value;
  report.rhs = IndexValue::from_float(rhs, std::abs(rhs) * 1e-14);
  const RadicalNumber difference = lhs * den - num;
  decide_by_sign(report, difference.sign(), report.lhs.approx - rhs);
  report.mode = DecisionMode::kExact;
  append_note(report, "rhs = (" + num.to_string() + ") / (" + den.to_string() +
                          "), decided exactly by cross-multiplication");
}

// Floating point cannot separate equality from a strict gap below the
// tolerance, so a near-equality against a strict prediction stays undecided.
void set_float_prediction(CheckReport& report, bool predicted) {
  set_prediction(report, predicted);
  if (report.mode != DecisionMode::kExact && report.equality && !predicted) {
    report.characterization_consistent.reset();
    append_note(report, "within tolerance of equality; characterization undecided in floating point");
  }
}

bool standing(const Graph& g) { return g.size() > 0 && !g.has_isolated_vertices(); }

const char* kNotStanding = "every component must have an edge";
const char* kNotNontrivial = "requires a non-trivial graph (every component has at least two edges)";

CheckReport new_report(std::string id, Relation relation) {
  CheckReport report;
  report.theorem_id = std::move(id);
  report.relation = relation;
  return report;
}

long sum_of_degree_squares(const Graph& g) {
  long total = 0;
  for (int d : g.degrees()) total += static_cast<long>(d) * d;
  return total;
}

long second_zagreb(const Graph& g) {
  long total = 0;
  for (const Edge& e : g.edges()) total += static_cast<long>(g.degree(e.u)) * g.degree(e.v);
  return total;
}

RadicalNumber line_ga1(const Graph& g) { return ga1(line_graph(g).lg).value(); }

void mark_vacuous(CheckReport& report) { append_note(report, "vacuous: bound is zero"); }

bool component_is_small_path(const Graph& c, int max_order) {
  return is_path(c) && c.order() <= max_order;
}

}  // namespace

double helper_f(double t) { return 2 * t / (1 + t * t); }

Rational helper_f(const Rational& t) {
  Rational out = 2 * t / (1 + t * t);
  out.canonicalize();
  return out;
}

RadicalNumber helper_g(const Rational& x, const Rational& y) {
  if (x <= 0 || y <= 0) throw std::invalid_argument("helper_g requires positive arguments");
  Rational factor = 2 / (x + y);
  factor.canonicalize();
  return RadicalNumber::sqrt_of(Rational(x * y)) * factor;
}

std::vector<CheckReport> check_p0(const Graph& g) {
  if (!standing(g)) {
    return {unmet("p0.lower", Relation::kGreaterEqual, kNotStanding),
            unmet("p0.upper", Relation::kLessEqual, kNotStanding)};
  }
  const long m = g.size();
  const long big = g.max_degree();
  const long small = g.min_degree();
  const RadicalNumber ga = ga1(g).value();

  CheckReport lower = new_report("p0.lower", Relation::kGreaterEqual);
  lower.lhs = IndexValue::from_exact(ga);
  lower.rhs = IndexValue::from_exact(RadicalNumber::sqrt_of(static_cast<std::uint64_t>(big * small)) *
                                     ratio(2 * m, big + small));
  decide_exact(lower);
  set_prediction(lower, is_regular_or_biregular(g));

  CheckReport upper = new_report("p0.upper", Relation::kLessEqual);
  upper.lhs = IndexValue::from_exact(ga);
  upper.rhs = IndexValue::from_exact(RadicalNumber(m));
  decide_exact(upper);
  set_prediction(upper, is_regular(g));
  return {lower, upper};
}

std::vector<CheckReport> check_eq23(const Graph& g) {
  if (!standing(g) || !is_connected(g)) {
    const char* why = "requires a connected graph with at least one edge";
    return {unmet("eq23.first", Relation::kGreaterEqual, why),
            unmet("eq23.second", Relation::kGreaterEqual, why)};
  }
  const long n = g.order();
  const long m = g.size();
  const RadicalNumber ga = ga1(g).value();

  CheckReport first = new_report("eq23.first", Relation::kGreaterEqual);
  first.lhs = IndexValue::from_exact(ga);
  first.rhs = IndexValue::from_exact(RadicalNumber::sqrt_of(static_cast<std::uint64_t>(n - 1)) *
                                     ratio(2 * (n - 1), n));
  decide_exact(first);

  CheckReport second = new_report("eq23.second", Relation::kGreaterEqual);
  second.lhs = IndexValue::from_exact(ga);
  second.rhs = IndexValue::from_exact(RadicalNumber(ratio(2 * m, n)));
  decide_exact(second);
  return {first, second};
}

CheckReport check_t_end(const Graph& g) {
  if (!standing(g)) return unmet("t_end", Relation::kGreaterEqual, kNotStanding);
  const long n = g.order();
  const long m = g.size();
  CheckReport report = new_report("t_end", Relation::kGreaterEqual);
  report.lhs = ga1(g);
  report.rhs = IndexValue::from_exact(RadicalNumber::sqrt_of(static_cast<std::uint64_t>(n - 1)) *
                                      ratio(2 * m, n));
  decide_exact(report);
  set_prediction(report, is_star(g));
  return report;
}

std::vector<CheckReport> check_nostar(const Graph& g) {
  const long n = g.order();
  std::string why;
  if (!standing(g)) {
    why = kNotStanding;
  } else if (!is_connected(g)) {
    why = "requires a connected graph (the second inequality needs m >= n - 1)";
  } else if (g.max_degree() > n - 2) {
    why = "requires Delta <= n - 2";
  }
  if (!why.empty()) {
    return {unmet("nostar.strict", Relation::kGreater, why),
            unmet("nostar.chain", Relation::kGreaterEqual, why)};
  }
  const long m = g.size();
  const RadicalNumber middle =
      RadicalNumber::sqrt_of(static_cast<std::uint64_t>(n - 2)) * ratio(2 * m, n - 1);

  CheckReport strict = new_report("nostar.strict", Relation::kGreater);
  strict.lhs = ga1(g);
  strict.rhs = IndexValue::from_exact(middle);
  decide_exact(strict);
  set_prediction(strict, false);

  CheckReport chain = new_report("nostar.chain", Relation::kGreaterEqual);
  chain.lhs = IndexValue::from_exact(middle);
  chain.rhs = IndexValue::from_exact(RadicalNumber::sqrt_of(static_cast<std::uint64_t>(n - 2)) *
                                     Rational(2));
  decide_exact(chain);
  return {strict, chain};
}

CheckReport check_edge_deletion(const Graph& g, Edge e) {
  const char* id = "edge_deletion";
  if (!standing(g)) return unmet(id, Relation::kLess, kNotStanding);
  if (!g.has_edge(e.u, e.v)) return unmet(id, Relation::kLess, "edge is not in the graph");
  const std::string label = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
  if (!is_minimal_edge(g, e)) return unmet(id, Relation::kLess, label + " is not minimal");
  const int du = g.degree(e.u);
  const int dv = g.degree(e.v);
  if (du == 1 && dv == 1) {
    return unmet(id, Relation::kLess,
                 label + " forms a P2 component; both sides are equal there, so the strict "
                         "inequality needs a component with at least two edges");
  }
  CheckReport report = new_report(id, Relation::kLess);
  report.lhs = IndexValue::from_exact(ga1_edge_sum(delete_edge(g, e)));
  report.rhs = IndexValue::from_exact(ga1(g).value() - ga_edge_term(du, dv));
  decide_exact(report);
  set_prediction(report, false);
  report.notes = label;
  return report;
}

CheckReport check_rationality(const Graph& g) {
  if (!standing(g)) return unmet("rationality", Relation::kEqual, kNotStanding);
  const RadicalNumber ga = ga1(g).value();
  bool squares = true;
  for (const Edge& e : g.edges()) {
    squares = squares && is_perfect_square(static_cast<std::uint64_t>(g.degree(e.u)) *
                                           static_cast<std::uint64_t>(g.degree(e.v)));
  }
  CheckReport report = new_report("rationality", Relation::kEqual);
  report.lhs = IndexValue::indicator(ga.is_rational());
  report.rhs = IndexValue::indicator(squares);
  decide_exact(report);
  report.notes = "GA1 = " + ga.to_string();
  return report;
}

std::vector<CheckReport> check_line02(const Graph& g) {
  if (!is_nontrivial(g)) {
    return {unmet("line02.lower", Relation::kGreaterEqual, kNotNontrivial),
            unmet("line02.upper", Relation::kLessEqual, kNotNontrivial)};
  }
  const long m = g.size();
  const long big = g.max_degree();
  const long small = g.min_degree();
  const long m1_value = sum_of_degree_squares(g);
  const RadicalNumber line = line_ga1(g);

  CheckReport lower = new_report("line02.lower", Relation::kGreaterEqual);
  lower.lhs = IndexValue::from_exact(line);
  lower.rhs = IndexValue::from_exact(
      RadicalNumber::sqrt_of(static_cast<std::uint64_t>((big - 1) * (small - 1))) *
      ratio(m1_value - 2 * m, big + small - 2));
  decide_exact(lower);
  set_prediction(lower, is_regular(g));
  if (small == 1) mark_vacuous(lower);

  CheckReport upper = new_report("line02.upper", Relation::kLessEqual);
  upper.lhs = IndexValue::from_exact(line);
  upper.rhs = IndexValue::from_exact(RadicalNumber(ratio(m1_value - 2 * m, 2)));
  decide_exact(upper);
  set_prediction(upper, line_regularity_condition(g));
  return {lower, upper};
}

std::vector<CheckReport> check_nordhaus_gaddum(const Graph& g) {
  if (!is_nontrivial(g)) {
    return {unmet("nordhaus_gaddum.lower", Relation::kGreaterEqual, kNotNontrivial),
            unmet("nordhaus_gaddum.upper", Relation::kLessEqual, kNotNontrivial)};
  }
  const long big = g.max_degree();
  const long small = g.min_degree();
  const long m1_value = sum_of_degree_squares(g);
  const RadicalNumber total = ga1(g).value() + line_ga1(g);

  CheckReport lower = new_report("nordhaus_gaddum.lower", Relation::kGreaterEqual);
  lower.lhs = IndexValue::from_exact(total);
  lower.rhs = IndexValue::from_exact(
      RadicalNumber::sqrt_of(static_cast<std::uint64_t>((big - 1) * (small - 1))) *
      ratio(m1_value, big + small - 2));
  decide_exact(lower);
  set_prediction(lower, is_regular(g));
  if (small == 1) mark_vacuous(lower);

  CheckReport upper = new_report("nordhaus_gaddum.upper", Relation::kLessEqual);
  upper.lhs = IndexValue::from_exact(total);
  upper.rhs = IndexValue::from_exact(RadicalNumber(ratio(m1_value, 2)));
  decide_exact(upper);
  set_prediction(upper, is_regular(g));
  return {lower, upper};
}

CheckReport check_lemma_line3(long delta, long t) {
  if (delta < 1 || t < 0 || 2 * delta + t <= 2) {
    return unmet("lemma_line3", Relation::kLessEqual,
                 "requires delta >= 1, t >= 0 and 2 delta + t > 2");
  }
  CheckReport report = new_report("lemma_line3", Relation::kLessEqual);
  report.lhs = IndexValue::from_exact(
      RadicalNumber::sqrt_of(static_cast<std::uint64_t>((delta + t - 1) * (delta - 1))) *
      ratio(1, 2 * delta + t - 2));
  report.rhs = IndexValue::from_exact(
      RadicalNumber::sqrt_of(static_cast<std::uint64_t>((delta + t) * delta)) *
      ratio(1, 2 * delta + t));
  decide_exact(report);
  set_prediction(report, t == 0);
  report.notes = "delta=" + std::to_string(delta) + ", t=" + std::to_string(t);
  return report;
}

CheckReport check_lemma_line3(long delta, double t) {
  if (std::isfinite(t) && t >= 0 && t == std::floor(t) && t < 1e9) {
    return check_lemma_line3(delta, static_cast<long>(t));
  }
  if (delta < 1 || !(t >= 0) || !std::isfinite(t) || 2 * delta + t <= 2) {
    return unmet("lemma_line3", Relation::kLessEqual,
                 "requires delta >= 1, t >= 0 and 2 delta + t > 2");
  }
  CheckReport report = new_report("lemma_line3", Relation::kLessEqual);
  decide_float(report, [&]<class Real>() {
    using std::sqrt;
    const Real d = Real(static_cast<double>(delta));
    const Real s = Real(t);
    const Real lhs = sqrt((d + s - 1) * (d - 1)) / (2 * d + s - 2);
    const Real rhs = sqrt((d + s) * d) / (2 * d + s);
    return std::pair<Real, Real>(lhs, rhs);
  });
  set_float_prediction(report, t == 0);
  report.notes = "delta=" + std::to_string(delta) + ", t=" + format_double(t);
  return report;
}

CheckReport check_t_line6(const Graph& g) {
  if (!is_nontrivial(g)) return unmet("t_line6", Relation::kGreaterEqual, kNotNontrivial);
  const long a = 2L * g.max_degree() - 2;
  const long b = std::max(2L * g.min_degree() - 2, 1L);
  const RadicalNumber path_factor = RadicalNumber::sqrt_of(2UL) * ratio(3, 8);
  const RadicalNumber degree_factor =
      RadicalNumber::sqrt_of(static_cast<std::uint64_t>(a * b)) * ratio(2, a + b);
  const RadicalNumber factor = std::min(path_factor, degree_factor);

  CheckReport report = new_report("t_line6", Relation::kGreaterEqual);
  report.lhs = IndexValue::from_exact(line_ga1(g));
  report.rhs = IndexValue::from_exact(factor * ga1(g).value());
  decide_exact(report);
  report.notes = "factor = " + factor.to_string();
  return report;
}

CheckReport check_t_line7(const Graph& g) {
  const char* id = "t_line7";
  if (!is_nontrivial(g)) return unmet(id, Relation::kGreaterEqual, kNotNontrivial);
  bool all_cycles = true;
  for (const Graph& c : components(g).graphs) {
    if (!is_regular_or_biregular(c)) {
      return unmet(id, Relation::kGreaterEqual,
                   "every component must be regular or biregular");
    }
    if (is_path(c) && c.order() == 3) {
      return unmet(id, Relation::kGreaterEqual, "no component may be isomorphic to P3");
    }
    all_cycles = all_cycles && is_cycle(c);
  }
  CheckReport report = new_report(id, Relation::kGreaterEqual);
  report.lhs = IndexValue::from_exact(line_ga1(g));
  report.rhs = ga1(g);
  decide_exact(report);
  set_prediction(report, all_cycles);
  return report;
}

CheckReport check_p_line8(const Graph& g) {
  if (!is_nontrivial(g) || !is_connected(g)) {
    return unmet("p_line8", Relation::kGreaterEqual,
                 "requires a connected non-trivial graph (the bound is the connected-graph "
                 "bound applied to the line graph)");
  }
  const long m = g.size();
  CheckReport report = new_report("p_line8", Relation::kGreaterEqual);
  report.lhs = IndexValue::from_exact(line_ga1(g));
  report.rhs = IndexValue::from_exact(RadicalNumber::sqrt_of(static_cast<std::uint64_t>(m - 1)) *
                                      ratio(2 * (m - 1), m));
  decide_exact(report);
  return report;
}

CheckReport check_t_line8(const Graph& g) {
  if (!is_nontrivial(g)) return unmet("t_line8", Relation::kGreaterEqual, kNotNontrivial);
  for (const Graph& c : components(g).graphs) {
    if (component_is_small_path(c, 6)) {
      return unmet("t_line8", Relation::kGreaterEqual,
                   "no component may be a path on at most 6 vertices");
    }
  }
  const long m = g.size();
  CheckReport report = new_report("t_line8", Relation::kGreaterEqual);
  report.lhs = IndexValue::from_exact(line_ga1(g));
  report.rhs = IndexValue::from_exact(RadicalNumber::sqrt_of(static_cast<std::uint64_t>(m - 1)) *
                                      Rational(2));
  decide_exact(report);
  return report;
}

CheckReport check_lemma_line8(std::span<const long> xs) {
  if (xs.empty() || std::any_of(xs.begin(), xs.end(), [](long x) { return x < 2; })) {
    return unmet("lemma_line8", Relation::kGreaterEqual, "requires a non-empty list of x_j >= 2");
  }
  RadicalNumber lhs;
  long total = 0;
  for (long x : xs) {
    lhs += RadicalNumber::sqrt_of(static_cast<std::uint64_t>(x - 1));
    total += x;
  }
  CheckReport report = new_report("lemma_line8", Relation::kGreaterEqual);
  report.lhs = IndexValue::from_exact(lhs);
  report.rhs = IndexValue::from_exact(RadicalNumber::sqrt_of(static_cast<std::uint64_t>(total - 1)));
  decide_exact(report);
  set_prediction(report, xs.size() == 1);
  report.notes = "k=" + std::to_string(xs.size());
  return report;
}

CheckReport check_lemma_line8(std::span<const double> xs) {
  if (xs.empty() ||
      std::any_of(xs.begin(), xs.end(), [](double x) { return !(x >= 2) || !std::isfinite(x); })) {
    return unmet("lemma_line8", Relation::kGreaterEqual, "requires a non-empty list of x_j >= 2");
  }
  CheckReport report = new_report("lemma_line8", Relation::kGreaterEqual);
  decide_float(report, [&]<class Real>() {
    using std::sqrt;
    Real lhs = 0;
    Real total = 0;
    for (double x : xs) {
      lhs += sqrt(Real(x) - 1);
      total += Real(x);
    }
    return std::pair<Real, Real>(lhs, sqrt(total - 1));
  });
  set_float_prediction(report, xs.size() == 1);
  report.notes = "k=" + std::to_string(xs.size());
  return report;
}

CheckReport check_c_line10(const Graph& g) {
  if (!is_nontrivial(g)) return unmet("c_line10", Relation::kGreaterEqual, kNotNontrivial);
  const long m = g.size();
  const long small = g.min_degree();
  CheckReport report = new_report("c_line10", Relation::kGreaterEqual);
  report.lhs = m1(line_graph(g).lg);
  report.rhs = IndexValue::from_exact(
      RadicalNumber(4 * m + (small - 4) * sum_of_degree_squares(g) + 2 * second_zagreb(g)));
  decide_exact(report);
  set_prediction(report, is_regular(g));
  return report;
}

CheckReport check_pi1tris(const Graph& g, double alpha) {
  const char* id = "pi1tris";
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    CheckReport out = unmet(id, Relation::kGreaterEqual, "requires alpha > 0");
    out.alpha = alpha;
    return out;
  }
  if (!standing(g)) {
    CheckReport out = unmet(id, Relation::kGreaterEqual, kNotStanding);
    out.alpha = alpha;
    return out;
  }
  const long n = g.order();
  const long m = g.size();
  const long big = g.max_degree();
  const long small = g.min_degree();
  const RadicalNumber ga = ga1(g).value();

  CheckReport report = new_report(id, Relation::kGreaterEqual);
  report.alpha = alpha;
  const std::optional<long> twice = twice_exponent(alpha);
  if (twice == 2) {
    // M1^0 = n, so the bound is sqrt(2 delta m^3 / n) / Delta.
    const mpz_class numerator = mpz_class(2 * small) * m * m * m;
    Rational radicand(numerator, mpz_class(n));
    radicand.canonicalize();
    report.lhs = IndexValue::from_exact(ga);
    report.rhs = IndexValue::from_exact(RadicalNumber::sqrt_of(radicand) * ratio(1, big));
    decide_exact(report);
  } else if (twice == 1) {
    const RadicalNumber num =
        RadicalNumber::sqrt_of(static_cast<std::uint64_t>(small)) * Rational(2 * m * m);
    const RadicalNumber den = m1_alpha(g, 0.5).value() * Rational(big);
    decide_quotient(report, ga, num, den);
  } else {
    const std::vector<int> degrees = g.degrees();
    decide_float(report, [&]<class Real>() {
      using std::pow;
      using std::sqrt;
      const Real a = Real(alpha);
      Real variable_zagreb = 0;
      for (int d : degrees) variable_zagreb += pow(Real(d), 1 - a);
      const Real rhs = pow(Real(2), 1 / (2 * a)) * sqrt(Real(static_cast<double>(small))) *
                       pow(Real(static_cast<double>(m)), (2 * a + 1) / (2 * a)) /
                       (Real(static_cast<double>(big)) * pow(variable_zagreb, 1 / (2 * a)));
      return std::pair<Real, Real>(to_real<Real>(ga), rhs);
    });
  }
  set_float_prediction(report, is_regular(g));
  append_note(report, "equality characterization checked at this alpha only");
  return report;
}

CheckReport check_c_pi1tris(const Graph& g, double alpha) {
  const char* id = "c_pi1tris";
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    CheckReport out = unmet(id, Relation::kGreaterEqual, "requires alpha > 0");
    out.alpha = alpha;
    return out;
  }
  if (!is_nontrivial(g)) {
    CheckReport out = unmet(id, Relation::kGreaterEqual, kNotNontrivial);
    out.alpha = alpha;
    return out;
  }
  const long m = g.size();
  const long big = g.max_degree();
  const long small = g.min_degree();
  const long excess = sum_of_degree_squares(g) - 2 * m;
  const RadicalNumber line = line_ga1(g);

  CheckReport report = new_report(id, Relation::kGreaterEqual);
  report.alpha = alpha;
  if (small == 1) {
    report.lhs = IndexValue::from_exact(line);
    report.rhs = IndexValue::from_exact(RadicalNumber());
    decide_exact(report);
    mark_vacuous(report);
    return report;
  }
  const std::optional<long> twice = twice_exponent(alpha);
  if (twice == 2) {
    // chi_0 = m: sqrt(2 delta - 2) (M1 - 2m)^(3/2) / (4 (Delta - 1) sqrt(m)).
    const RadicalNumber rhs = RadicalNumber::sqrt_of(static_cast<std::uint64_t>(2 * small - 2)) *
                              half_integer_power(excess, 3) *
                              RadicalNumber::sqrt_of(static_cast<std::uint64_t>(m)) *
                              ratio(1, 4 * (big - 1) * m);
    report.lhs = IndexValue::from_exact(line);
    report.rhs = IndexValue::from_exact(rhs);
    decide_exact(report);
    append_note(report, "case 0 < alpha <= 1");
    return report;
  }
  if (twice == 1) {
    const RadicalNumber num = RadicalNumber::sqrt_of(static_cast<std::uint64_t>(2 * small - 2)) *
                              RadicalNumber::sqrt_of(static_cast<std::uint64_t>(big)) *
                              Rational(excess * excess);
    const RadicalNumber den =
        half_integer_power(big - 1, 3) * chi_alpha(g, 0.5).value() * Rational(4);
    decide_quotient(report, line, num, den);
    append_note(report, "case 0 < alpha <= 1");
    return report;
  }
  std::vector<long> edge_sums;
  for (const Edge& e : g.edges()) edge_sums.push_back(g.degree(e.u) + g.degree(e.v));
  decide_float(report, [&]<class Real>() {
    using std::pow;
    using std::sqrt;
    const Real a = Real(alpha);
    const Real d_max = Real(static_cast<double>(big));
    const Real d_min = Real(static_cast<double>(small));
    Real chi = 0;
    for (long s : edge_sums) chi += pow(Real(static_cast<double>(s)), 1 - a);
    const Real power = pow(Real(static_cast<double>(excess)), (2 * a + 1) / (2 * a));
    const Real chi_root = pow(chi, 1 / (2 * a));
    Real rhs;
    if (alpha <= 1) {
      rhs = sqrt(2 * d_min - 2) * pow(d_max, (1 - a) / (2 * a)) * power /
            (4 * pow(d_max - 1, (1 + a) / (2 * a)) * chi_root);
    } else {
      rhs = sqrt(Real(2)) * pow(d_min - 1, 1 / (2 * a)) * pow(d_min, (a - 1) / (2 * a)) * power /
            (4 * (d_max - 1) * chi_root);
    }
    return std::pair<Real, Real>(to_real<Real>(line), rhs);
  });
  append_note(report, alpha <= 1 ? "case 0 < alpha <= 1" : "case alpha > 1");
  return report;
}

CheckReport check_c_pi1tris_rederived(const Graph& g, double alpha) {
  const char* id = "c_pi1tris_rederived";
  if (!(alpha > 1) || !std::isfinite(alpha)) {
    CheckReport out = unmet(id, Relation::kGreaterEqual,
                            "only differs from c_pi1tris for alpha > 1");
    out.alpha = alpha;
    return out;
  }
  if (!is_nontrivial(g)) {
    CheckReport out = unmet(id, Relation::kGreaterEqual, kNotNontrivial);
    out.alpha = alpha;
    return out;
  }
  const long m = g.size();
  const long big = g.max_degree();
  const long small = g.min_degree();
  const long excess = sum_of_degree_squares(g) - 2 * m;
  const RadicalNumber line = line_ga1(g);

  CheckReport report = new_report(id, Relation::kGreaterEqual);
  report.alpha = alpha;
  if (small == 1) {
    report.lhs = IndexValue::from_exact(line);
    report.rhs = IndexValue::from_exact(RadicalNumber());
    decide_exact(report);
    mark_vacuous(report);
    return report;
  }
  std::vector<long> edge_sums;
  for (const Edge& e : g.edges()) edge_sums.push_back(g.degree(e.u) + g.degree(e.v));
  decide_float(report, [&]<class Real>() {
    using std::pow;
    using std::sqrt;
    const Real a = Real(alpha);
    const Real d_max = Real(static_cast<double>(big));
    const Real d_min = Real(static_cast<double>(small));
    Real chi = 0;
    for (long s : edge_sums) chi += pow(Real(static_cast<double>(s)), 1 - a);
    // (d_u + d_v - 2)^(1-a) <= (delta / (delta - 1))^(a-1) (d_u + d_v)^(1-a) when a > 1.
    const Real rhs = sqrt(Real(2)) * pow(d_min - 1, (2 * a - 1) / (2 * a)) *
                     pow(d_min, (1 - a) / (2 * a)) *
                     pow(Real(static_cast<double>(excess)), (2 * a + 1) / (2 * a)) /
                     (4 * (d_max - 1) * pow(chi, 1 / (2 * a)));
    return std::pair<Real, Real>(to_real<Real>(line), rhs);
  });
  set_float_prediction(report, is_regular(g));
  return report;
}

CheckReport check_gam20(const Graph& g) {
  if (!standing(g)) return unmet("gam20", Relation::kGreaterEqual, kNotStanding);
  const long m = g.size();
  CheckReport report = new_report("gam20", Relation::kGreaterEqual);
  const RadicalNumber num = RadicalNumber::sqrt_of(static_cast<std::uint64_t>(g.min_degree())) *
                            Rational(2 * m * m);
  decide_quotient(report, ga1(g).value(), num, m1_alpha(g, 1.5).value());
  set_prediction(report, is_regular(g));
  return report;
}

CheckReport check_gam20_line(const Graph& g) {
  if (!is_nontrivial(g)) return unmet("gam20_line", Relation::kGreaterEqual, kNotNontrivial);
  const long m = g.size();
  const long big = g.max_degree();
  const long small = g.min_degree();
  const RadicalNumber line = line_ga1(g);
  CheckReport report = new_report("gam20_line", Relation::kGreaterEqual);
  if (small == 1) {
    report.lhs = IndexValue::from_exact(line);
    report.rhs = IndexValue::from_exact(RadicalNumber());
    decide_exact(report);
    mark_vacuous(report);
    return report;
  }
  const long excess = sum_of_degree_squares(g) - 2 * m;
  const RadicalNumber num = RadicalNumber::sqrt_of(static_cast<std::uint64_t>(2 * small - 2)) *
                            half_integer_power(big, 3) * Rational(excess * excess);
  const RadicalNumber den =
      half_integer_power(big - 1, 3) * chi_alpha(g, 1.5).value() * Rational(2);
  decide_quotient(report, line, num, den);
  return report;
}

namespace {

CheckReport line_module_report(const Graph& g, const std::string& id,
                               CheckReport (*run)(const Graph&)) {
  if (!is_nontrivial(g)) return unmet(id, Relation::kEqual, kNotNontrivial);
  return run(g);
}

CheckReport degree_identity_report(const Graph& g) {
  CheckReport report = new_report("line_degree_identity", Relation::kEqual);
  report.lhs = IndexValue::indicator(verify_degree_identity(g));
  report.rhs = IndexValue::indicator(true);
  decide_exact(report);
  const LineGraphResult result = line_graph(g);
  const long twice_line_size = 2L * result.stats.size;
  const long expected = sum_of_degree_squares(g) - 2L * g.size();
  if (result.stats.order != g.size() || twice_line_size != expected) {
    report.holds = false;
    append_note(report, "size identities n_L = m or 2 m_L = M1 - 2m FAILED");
  }
  append_note(report, "n_L=" + std::to_string(result.stats.order) +
                          ", m_L=" + std::to_string(result.stats.size));
  return report;
}

template <class F>
std::function<std::vector<CheckReport>(const Graph&)> single(F f) {
  return [f](const Graph& g) { return std::vector<CheckReport>{f(g)}; };
}

}  // namespace

std::vector<GraphChecker> graph_checkers(std::span<const double> alphas) {
  const std::vector<double> alpha_list(alphas.begin(), alphas.end());
  std::vector<GraphChecker> out;
  out.push_back({"p0", "2m sqrt(Delta delta)/(Delta+delta) <= GA1 <= m", check_p0});
  out.push_back({"eq23", "GA1 >= 2(n-1)^(3/2)/n and GA1 >= 2m/n", check_eq23});
  out.push_back({"t_end", "GA1 >= 2m sqrt(n-1)/n", single(check_t_end)});
  out.push_back({"nostar", "Delta <= n-2: GA1 > 2m sqrt(n-2)/(n-1) >= 2 sqrt(n-2)", check_nostar});
  out.push_back({"edge_deletion", "GA1(G - e) < GA1(G) - edge term, e minimal",
                 [](const Graph& g) {
                   std::vector<CheckReport> reports;
                   if (!standing(g)) {
                     reports.push_back(unmet("edge_deletion", Relation::kLess, kNotStanding));
                     return reports;
                   }
                   for (const Edge& e : g.edges()) reports.push_back(check_edge_deletion(g, e));
                   return reports;
                 }});
  out.push_back({"rationality", "GA1 rational <=> every d_u d_v is a square",
                 single(check_rationality)});
  out.push_back({"line02", "(M1-2m) sqrt((Delta-1)(delta-1))/(Delta+delta-2) <= GA1(L) <= M1/2-m",
                 check_line02});
  out.push_back({"nordhaus_gaddum", "M1 sqrt((Delta-1)(delta-1))/(Delta+delta-2) <= GA1 + GA1(L) <= M1/2",
                 check_nordhaus_gaddum});
  out.push_back({"lemma_line3", "instance delta = delta(G), t = Delta - delta",
                 [](const Graph& g) {
                   if (!standing(g)) {
                     return std::vector<CheckReport>{
                         unmet("lemma_line3", Relation::kLessEqual, kNotStanding)};
                   }
                   return std::vector<CheckReport>{check_lemma_line3(
                       static_cast<long>(g.min_degree()),
                       static_cast<long>(g.max_degree() - g.min_degree()))};
                 }});
  out.push_back({"t_line6", "GA1(L) >= min{3/(4 sqrt 2), 2 sqrt(ab)/(a+b)} GA1",
                 single(check_t_line6)});
  out.push_back({"t_line7", "GA1(L) >= GA1 for regular/biregular components", single(check_t_line7)});
  out.push_back({"p_line8", "GA1(L) >= 2(m-1)^(3/2)/m", single(check_p_line8)});
  out.push_back({"t_line8", "GA1(L) >= 2 sqrt(m-1)", single(check_t_line8)});
  out.push_back({"lemma_line8", "instance x_j = component edge counts",
                 [](const Graph& g) {
                   if (!is_nontrivial(g)) {
                     return std::vector<CheckReport>{
                         unmet("lemma_line8", Relation::kGreaterEqual, kNotNontrivial)};
                   }
                   std::vector<long> sizes;
                   for (const Graph& c : components(g).graphs) sizes.push_back(c.size());
                   return std::vector<CheckReport>{check_lemma_line8(std::span<const long>(sizes))};
                 }});
  out.push_back({"c_line10", "M1(L) >= 4m + (delta-4) M1 + 2 M2", single(check_c_line10)});
  out.push_back({"pi1tris", "variable-Zagreb lower bound on GA1",
                 [alpha_list](const Graph& g) {
                   std::vector<CheckReport> reports;
                   for (double a : alpha_list) reports.push_back(check_pi1tris(g, a));
                   return reports;
                 }});
  out.push_back({"c_pi1tris", "line-graph version of pi1tris",
                 [alpha_list](const Graph& g) {
                   std::vector<CheckReport> reports;
                   for (double a : alpha_list) reports.push_back(check_c_pi1tris(g, a));
                   return reports;
                 }});
  out.push_back({"c_pi1tris_rederived",
                 "alpha > 1 case of c_pi1tris with the factor (delta/(delta-1))^(alpha-1)",
                 [alpha_list](const Graph& g) {
                   std::vector<CheckReport> reports;
                   for (double a : alpha_list) {
                     if (a > 1) reports.push_back(check_c_pi1tris_rederived(g, a));
                   }
                   return reports;
                 }});
  out.push_back({"gam20", "GA1 >= 2 delta^(1/2) m^2 / M1^(3/2)", single(check_gam20)});
  out.push_back({"gam20_line", "line-graph version of gam20", single(check_gam20_line)});
  out.push_back({"line_degree_identity", "d_uv = d_u + d_v - 2, n_L = m, 2 m_L = M1 - 2m",
                 [](const Graph& g) {
                   return std::vector<CheckReport>{
                       line_module_report(g, "line_degree_identity", degree_identity_report)};
                 }});
  out.push_back({"m1_line_identity", "M1(L) = 4m - 4 M1 + 2 M2 + F",
                 [](const Graph& g) {
                   return std::vector<CheckReport>{
                       line_module_report(g, "m1_line_identity", m1_line_identity)};
                 }});
  out.push_back({"line_regularity", "L regular <=> components regular/biregular, equal Delta+delta",
                 [](const Graph& g) {
                   return std::vector<CheckReport>{
                       line_module_report(g, "line_regularity", line_regularity_characterization)};
                 }});
  out.push_back({"line_tree", "L tree <=> path; otherwise m <= m_L",
                 [](const Graph& g) {
                   return std::vector<CheckReport>{
                       line_module_report(g, "line_tree", line_tree_characterization)};
                 }});
  return out;
}

std::vector<std::string> checker_ids() {
  std::vector<std::string> ids;
  for (const GraphChecker& checker : graph_checkers()) ids.push_back(checker.id);
  return ids;
}

std::vector<CheckReport> run_checks(const Graph& g, std::span<const std::string> ids,
                                    std::span<const double> alphas) {
  const std::vector<GraphChecker> checkers = graph_checkers(alphas);
  const bool everything =
      ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end();
  for (const std::string& id : ids) {
    if (id == "all") continue;
    const bool known = std::any_of(checkers.begin(), checkers.end(),
                                   [&](const GraphChecker& c) { return c.id == id; });
    if (!known) {
      std::string message = "unknown theorem id '" + id + "'; available:";
      for (const GraphChecker& c : checkers) message += " " + c.id;
      throw std::invalid_argument(message);
    }
  }
  std::vector<CheckReport> reports;
  for (const GraphChecker& checker : checkers) {
    if (!everything && std::find(ids.begin(), ids.end(), checker.id) == ids.end()) continue;
    for (CheckReport& r : checker.run(g)) reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace gaindex
