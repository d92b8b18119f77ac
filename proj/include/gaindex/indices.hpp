#pragma once

// Vertex-degree-based topological indices.
//
//   GA1      = sum_{uv in E} 2 sqrt(d_u d_v) / (d_u + d_v)
//   M1^a     = sum_{u in V} d_u^a          (M1 = M1^2, F = M1^3, ID = M1^-1)
//   M2^a     = sum_{uv in E} (d_u d_v)^a   (M2 = M2^1, R = M2^-1/2)
//   chi_a    = sum_{uv in E} (d_u + d_v)^a (H = 2 chi_-1, chi = chi_-1/2)
//
// Exponents within 1e-12 of a multiple of 1/2 are evaluated exactly in the
// radical field; other exponents fall back to floating point.
//
// All public entry points reject graphs with an edgeless component
// (StandingAssumptionError).

#include <optional>

#include "gaindex/graph.hpp"
#include "gaindex/radical.hpp"

namespace gaindex {

struct IndexValue {
  std::optional<RadicalNumber> exact;
  double approx = 0.0;
  double abs_error = 0.0;

  static IndexValue from_exact(RadicalNumber value);
  static IndexValue from_float(double value, double abs_error);
  static IndexValue indicator(bool value) { return from_exact(RadicalNumber(value ? 1L : 0L)); }

  /// Exact value; throws std::logic_error on the float path.
  const RadicalNumber& value() const;
  std::string to_string() const;
};

inline constexpr double kExponentSnapTolerance = 1e-12;

/// 2 * alpha when alpha is (within tolerance) an integer or half-integer.
std::optional<long> twice_exponent(double alpha);

/// Throws StandingAssumptionError if some component of g has no edge.
void require_edges_everywhere(const Graph& g);

IndexValue ga1(const Graph& g);
/// GA1 as a plain edge sum, with no standing-assumption gate (isolated
/// vertices contribute nothing). Used for edge-deletion comparisons.
RadicalNumber ga1_edge_sum(const Graph& g);

/// Edge term 2 sqrt(xy) / (x + y) for positive integers x, y.
RadicalNumber ga_edge_term(long x, long y);

IndexValue m1_alpha(const Graph& g, double alpha);
IndexValue m2_alpha(const Graph& g, double alpha);
IndexValue chi_alpha(const Graph& g, double alpha);

IndexValue m1(const Graph& g);
IndexValue m2(const Graph& g);
IndexValue forgotten(const Graph& g);
IndexValue harmonic(const Graph& g);
IndexValue inverse_degree(const Graph& g);
IndexValue randic(const Graph& g);
IndexValue sum_connectivity(const Graph& g);

/// base^(half_power / 2) for base >= 1, exactly.
RadicalNumber half_integer_power(long base, long half_power);

}  // namespace gaindex
