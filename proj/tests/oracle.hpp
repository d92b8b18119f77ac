#pragma once

// Independent reference implementations used only by the tests. They work
// from raw edge pairs and definitions, never through the library's own
// canonical forms, line-graph builder or radical comparisons.

#include <algorithm>
#include <ostream>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "gaindex/graph.hpp"
#include "gaindex/radical.hpp"

namespace gaindex {
// Readable test failure messages.
inline void PrintTo(const RadicalNumber& x, std::ostream* os) { *os << x.to_string(); }
}  // namespace gaindex

namespace oracle {

using High = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;
using Pairs = std::vector<std::pair<int, int>>;

inline Pairs pairs_of(const gaindex::Graph& g) {
  Pairs out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline std::vector<int> degrees(int n, const Pairs& pairs) {
  std::vector<int> d(n, 0);
  for (auto [u, v] : pairs) {
    ++d[u];
    ++d[v];
  }
  return d;
}

inline High high(const gaindex::Rational& r) {
  return High(r.get_num().get_str()) / High(r.get_den().get_str());
}

/// Value of a radical-field element, evaluated term by term at 100 digits.
inline High value(const gaindex::RadicalNumber& a) {
  High sum = 0;
  for (const auto& [q, c] : a.terms()) sum += high(c) * sqrt(High(static_cast<unsigned long>(q)));
  return sum;
}

inline High ga1(int n, const Pairs& pairs) {
  const auto d = degrees(n, pairs);
  High sum = 0;
  for (auto [u, v] : pairs) {
    sum += 2 * sqrt(High(d[u]) * High(d[v])) / High(d[u] + d[v]);
  }
  return sum;
}

inline High ga1(const gaindex::Graph& g) { return ga1(g.order(), pairs_of(g)); }

/// Line graph straight from the definition: one vertex per edge (in the
/// given order), adjacent iff the edges share an endpoint.
inline Pairs line_graph(const Pairs& pairs) {
  Pairs out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a == c || a == d || b == c || b == d) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

inline std::vector<std::vector<bool>> adjacency(int n, const Pairs& pairs) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : pairs) adj[u][v] = adj[v][u] = true;
  return adj;
}

/// Isomorphism by trying every permutation (fine for n <= 8).
inline bool isomorphic(int n, const Pairs& a, int n2, const Pairs& b) {
  if (n != n2 || a.size() != b.size()) return false;
  auto da = degrees(n, a);
  auto db = degrees(n, b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  const auto adj_a = adjacency(n, a);
  const auto adj_b = adjacency(n, b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < n && same; ++u) {
      for (int v = u + 1; v < n && same; ++v) same = adj_a[u][v] == adj_b[perm[u]][perm[v]];
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool isomorphic(const gaindex::Graph& a, const gaindex::Graph& b) {
  return isomorphic(a.order(), pairs_of(a), b.order(), pairs_of(b));
}

inline bool connected(int n, const Pairs& pairs) {
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int pieces = n;
  for (auto [u, v] : pairs) {
    const int a = find(u);
    const int b = find(v);
    if (a != b) {
      parent[a] = b;
      --pieces;
    }
  }
  return pieces == 1;
}

/// Representatives of the connected labeled graphs on n vertices up to
/// isomorphism, found by pairwise permutation tests.
inline std::vector<Pairs> connected_classes(int n) {
  Pairs slots;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  }
  std::vector<Pairs> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Pairs pairs;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) pairs.push_back(slots[i]);
    }
    if (!connected(n, pairs)) continue;
    bool seen = false;
    for (const Pairs& r : reps) {
      if (isomorphic(n, r, n, pairs)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(pairs);
  }
  return reps;
}

/// graph6 encoding written from the format description (n < 63 only).
inline std::string graph6(int n, const Pairs& pairs) {
  const auto adj = adjacency(n, pairs);
  std::string out(1, static_cast<char>(63 + n));
  int bit = 0;
  int value = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      value = value << 1 | (adj[u][v] ? 1 : 0);
      if (++bit == 6) {
        out += static_cast<char>(63 + value);
        bit = 0;
        value = 0;
      }
    }
  }
  if (bit > 0) out += static_cast<char>(63 + (value << (6 - bit)));
  return out;
}

/// Random graph with a spanning path, so it is connected.
inline gaindex::Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Pairs pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(order[i - 1], order[i]);
  std::bernoulli_distribution coin(p);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return gaindex::Graph::from_edge_list(n, pairs);
}

}  // namespace oracle
