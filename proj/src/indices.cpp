#include "gaindex/indices.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gaindex/errors.hpp"

namespace gaindex {

IndexValue IndexValue::from_exact(RadicalNumber value) {
  IndexValue out;
  const Approximation approx = to_float(value);
  out.approx = approx.value;
  out.abs_error = approx.abs_error;
  out.exact = std::move(value);
  return out;
}

IndexValue IndexValue::from_float(double value, double abs_error) {
  IndexValue out;
  out.approx = value;
  out.abs_error = abs_error;
  return out;
}

const RadicalNumber& IndexValue::value() const {
  if (!exact) throw std::logic_error("IndexValue: no exact value on the float path");
  return *exact;
}

std::string IndexValue::to_string() const {
  if (exact) return exact->to_string();
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", approx);
  return buffer;
}

std::optional<long> twice_exponent(double alpha) {
  const double doubled = 2.0 * alpha;
  const double nearest = std::round(doubled);
  if (std::abs(doubled - nearest) <= 2.0 * kExponentSnapTolerance &&
      std::abs(nearest) < 1e6) {
    return static_cast<long>(nearest);
  }
  return std::nullopt;
}

void require_edges_everywhere(const Graph& g) {
  if (g.order() == 0) throw StandingAssumptionError("graph has no vertices");
  if (g.has_isolated_vertices()) {
    throw StandingAssumptionError(
        "graph has an edgeless component (isolated vertex); every component must "
        "contain an edge");
  }
}

RadicalNumber ga_edge_term(long x, long y) {
  if (x < 1 || y < 1) throw std::invalid_argument("ga_edge_term: degrees must be positive");
  RadicalNumber out = RadicalNumber::sqrt_of(static_cast<std::uint64_t>(x) *
                                             static_cast<std::uint64_t>(y));
  out *= ratio(2, x + y);
  return out;
}

RadicalNumber ga1_edge_sum(const Graph& g) {
  RadicalNumber total;
  for (const Edge& e : g.edges()) total += ga_edge_term(g.degree(e.u), g.degree(e.v));
  return total;
}

IndexValue ga1(const Graph& g) {
  require_edges_everywhere(g);
  return IndexValue::from_exact(ga1_edge_sum(g));
}

RadicalNumber half_integer_power(long base, long half_power) {
  if (base < 1) throw std::invalid_argument("half_integer_power: base must be >= 1");
  // base^(k/2) = base^floor(k/2) * sqrt(base)^(k mod 2).
  const long whole = half_power >= 0 ? half_power / 2 : -((-half_power + 1) / 2);
  const bool odd = (half_power % 2) != 0;
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), mpz_class(base).get_mpz_t(),
             static_cast<unsigned long>(whole >= 0 ? whole : -whole));
  Rational factor = whole >= 0 ? Rational(power) : Rational(1) / Rational(power);
  factor.canonicalize();
  if (!odd) return RadicalNumber(factor);
  return RadicalNumber::sqrt_of(static_cast<std::uint64_t>(base)) * factor;
}

namespace {

template <class BaseOf>
IndexValue power_sum(const Graph& g, double alpha, int count, BaseOf base_of) {
  require_edges_everywhere(g);
  if (auto twice = twice_exponent(alpha)) {
    RadicalNumber total;
    for (int i = 0; i < count; ++i) total += half_integer_power(base_of(i), *twice);
    return IndexValue::from_exact(std::move(total));
  }
  long double total = 0.0L;
  for (int i = 0; i < count; ++i) {
    total += std::pow(static_cast<long double>(base_of(i)), static_cast<long double>(alpha));
  }
  const double value = static_cast<double>(total);
  return IndexValue::from_float(value, std::abs(value) * 1e-15 * (count + 1));
}

}  // namespace

IndexValue m1_alpha(const Graph& g, double alpha) {
  return power_sum(g, alpha, g.order(), [&](int v) { return static_cast<long>(g.degree(v)); });
}

IndexValue m2_alpha(const Graph& g, double alpha) {
  const auto& edges = g.edges();
  return power_sum(g, alpha, g.size(), [&](int i) {
    return static_cast<long>(g.degree(edges[i].u)) * g.degree(edges[i].v);
  });
}

IndexValue chi_alpha(const Graph& g, double alpha) {
  const auto& edges = g.edges();
  return power_sum(g, alpha, g.size(), [&](int i) {
    return static_cast<long>(g.degree(edges[i].u)) + g.degree(edges[i].v);
  });
}

IndexValue m1(const Graph& g) { return m1_alpha(g, 2); }
IndexValue m2(const Graph& g) { return m2_alpha(g, 1); }
IndexValue forgotten(const Graph& g) { return m1_alpha(g, 3); }
IndexValue inverse_degree(const Graph& g) { return m1_alpha(g, -1); }
IndexValue randic(const Graph& g) { return m2_alpha(g, -0.5); }
IndexValue sum_connectivity(const Graph& g) { return chi_alpha(g, -0.5); }

IndexValue harmonic(const Graph& g) {
  return IndexValue::from_exact(chi_alpha(g, -1).value() * Rational(2));
}

}  // namespace gaindex
