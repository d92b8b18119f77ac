#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gaindex/errors.hpp"
#include "gaindex/indices.hpp"
#include "oracle.hpp"

using namespace gaindex;
using oracle::High;

namespace {

struct Reference {
  High ga1 = 0, m1 = 0, m2 = 0, f = 0, h = 0, id = 0, r = 0, chi = 0;
};

Reference reference(const Graph& g) {
  const auto pairs = oracle::pairs_of(g);
  const auto d = oracle::degrees(g.order(), pairs);
  Reference out;
  out.ga1 = oracle::ga1(g.order(), pairs);
  for (int x : d) {
    out.m1 += High(x) * x;
    out.f += High(x) * x * x;
    out.id += 1 / High(x);
  }
  for (auto [u, v] : pairs) {
    out.m2 += High(d[u]) * d[v];
    out.h += 2 / High(d[u] + d[v]);
    out.r += 1 / sqrt(High(d[u]) * d[v]);
    out.chi += 1 / sqrt(High(d[u] + d[v]));
  }
  return out;
}

void expect_close(const IndexValue& v, const High& want, const char* what) {
  ASSERT_TRUE(v.exact.has_value()) << what;
  EXPECT_LT(abs(oracle::value(*v.exact) - want), High("1e-50")) << what;
}

}  // namespace

TEST(Indices, ExactValuesMatchOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_connected(rng, 2 + trial % 11, 0.3);
    const Reference want = reference(g);
    expect_close(ga1(g), want.ga1, "GA1");
    expect_close(m1(g), want.m1, "M1");
    expect_close(m2(g), want.m2, "M2");
    expect_close(forgotten(g), want.f, "F");
    expect_close(harmonic(g), want.h, "H");
    expect_close(inverse_degree(g), want.id, "ID");
    expect_close(randic(g), want.r, "R");
    expect_close(sum_connectivity(g), want.chi, "chi");
  }
}

TEST(Indices, VariableExponents) {
  const Graph g = paw_graph();
  const auto pairs = oracle::pairs_of(g);
  const auto d = oracle::degrees(4, pairs);
  for (double alpha : {-1.5, -0.5, 0.5, 1.5, 2.0, 0.3, 1.7}) {
    double m1a = 0, m2a = 0, chia = 0;
    for (int x : d) m1a += std::pow(x, alpha);
    for (auto [u, v] : pairs) {
      m2a += std::pow(d[u] * d[v], alpha);
      chia += std::pow(d[u] + d[v], alpha);
    }
    const bool exact = twice_exponent(alpha).has_value();
    EXPECT_EQ(m1_alpha(g, alpha).exact.has_value(), exact);
    EXPECT_NEAR(m1_alpha(g, alpha).approx, m1a, 1e-12 * m1a);
    EXPECT_NEAR(m2_alpha(g, alpha).approx, m2a, 1e-12 * m2a);
    EXPECT_NEAR(chi_alpha(g, alpha).approx, chia, 1e-12 * chia);
  }
}

TEST(Indices, ClosedForms) {
  // r-regular: GA1 = m; path: P_n has two end edges worth 2 sqrt2/3.
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(ga1(cycle_graph(n)).value(), RadicalNumber(static_cast<long>(n)));
    EXPECT_EQ(ga1(complete_graph(n)).value(), RadicalNumber(static_cast<long>(n * (n - 1) / 2)));
    EXPECT_EQ(ga1(path_graph(n + 1)).value(),
              RadicalNumber(static_cast<long>(n - 2)) + RadicalNumber::term(ratio(4, 3), 2));
    // Star S_n: (n-1) * 2 sqrt(n-1) / n.
    EXPECT_EQ(ga1(star_graph(n)).value(),
              RadicalNumber::sqrt_of(std::uint64_t(n - 1)) * ratio(2 * (n - 1), n));
  }
}

TEST(Indices, AdditiveOverComponents) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph a = oracle::random_connected(rng, 2 + trial % 6, 0.4);
    const Graph b = oracle::random_connected(rng, 2 + trial % 5, 0.5);
    const Graph u = disjoint_union(a, b);
    EXPECT_EQ(ga1(u).value(), ga1(a).value() + ga1(b).value());
    EXPECT_EQ(m1(u).value(), m1(a).value() + m1(b).value());
    EXPECT_EQ(m2(u).value(), m2(a).value() + m2(b).value());
  }
}

TEST(Indices, RejectsEdgelessComponents) {
  const Graph g = disjoint_union(path_graph(3), Graph::from_edge_list(1, std::span<const std::pair<int, int>>()));
  EXPECT_THROW(ga1(g), StandingAssumptionError);
  EXPECT_THROW(m1(Graph::from_edge_list(2, std::span<const std::pair<int, int>>())), StandingAssumptionError);
  EXPECT_EQ(ga1_edge_sum(g), ga1(path_graph(3)).value());
}

TEST(Indices, HalfIntegerPowers) {
  EXPECT_EQ(half_integer_power(4, 3), RadicalNumber(8L));
  EXPECT_EQ(half_integer_power(2, 3), RadicalNumber::term(2, 2));
  EXPECT_EQ(half_integer_power(9, -1), RadicalNumber(ratio(1, 3)));
  EXPECT_EQ(twice_exponent(1.5), 3);
  EXPECT_FALSE(twice_exponent(0.3).has_value());
}
