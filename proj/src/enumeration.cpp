#include "gaindex/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "gaindex/errors.hpp"
#include "gaindex/graph_io.hpp"
#include "gaindex/indices.hpp"
#include "gaindex/line_graph.hpp"

namespace gaindex {
namespace {

void check_limit(int n, int limit) {
  if (limit > kMaxEnumerationLimit) {
    throw LimitError("enumeration limit " + std::to_string(limit) + " exceeds the maximum " +
                     std::to_string(kMaxEnumerationLimit));
  }
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > limit) {
    throw LimitError("n=" + std::to_string(n) + " exceeds the enumeration limit " +
                     std::to_string(limit) + "; raise the limit (at most " +
                     std::to_string(kMaxEnumerationLimit) + ") to go further");
  }
}

std::vector<Graph> from_forms(const std::set<CanonicalForm>& forms) {
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const CanonicalForm& f : forms) out.push_back(graph_from_canonical(f));
  return out;
}

Graph decode_pruefer(int n, const std::vector<int>& code) {
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::vector<std::pair<int, int>> pairs;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (int x : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    pairs.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int u = *leaves.begin();
  const int v = *std::next(leaves.begin());
  pairs.emplace_back(u, v);
  return Graph::from_edge_list(n, pairs);
}

std::set<CanonicalForm> tree_forms(int n) {
  std::set<CanonicalForm> forms;
  if (n == 1) {
    forms.insert(canonical_form(Graph::from_edge_list(1, std::span<const std::pair<int, int>>())));
    return forms;
  }
  if (n == 2) {
    forms.insert(canonical_form(path_graph(2)));
    return forms;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    forms.insert(canonical_form(decode_pruefer(n, code)));
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
  return forms;
}

std::set<CanonicalForm> labeled_connected_forms(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  }
  std::set<CanonicalForm> forms;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) pairs.push_back(slots[i]);
    }
    const Graph g = Graph::from_edge_list(n, pairs);
    if (is_connected(g)) forms.insert(canonical_form(g));
  }
  return forms;
}

std::set<CanonicalForm> augmented_connected_forms(int n) {
  // Every connected graph with m + 1 edges has a non-bridge edge whose removal
  // leaves a connected graph with m edges, so adding edges level by level
  // from the trees reaches every class.
  std::set<CanonicalForm> level = tree_forms(n);
  std::set<CanonicalForm> all = level;
  while (!level.empty()) {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& form : level) {
      const Graph g = graph_from_canonical(form);
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (!g.has_edge(u, v)) next.insert(canonical_form(add_edge(g, Edge(u, v))));
        }
      }
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

// Enumeration results are pure functions of n; keep them for reuse.
const std::vector<Graph>& cached_connected(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const std::set<CanonicalForm> forms =
        n <= 5 ? labeled_connected_forms(n) : augmented_connected_forms(n);
    it = cache.emplace(n, from_forms(forms)).first;
  }
  return it->second;
}

std::vector<Bucket> empty_buckets() {
  std::vector<Bucket> buckets;
  for (long k = 0; k < 4; ++k) buckets.push_back(Bucket{Rational(k), Rational(k + 1), {}});
  return buckets;
}

void place(std::vector<Bucket>& buckets, BucketMember member) {
  for (Bucket& bucket : buckets) {
    if (member.value > RadicalNumber(bucket.low) && member.value <= RadicalNumber(bucket.high)) {
      bucket.members.push_back(std::move(member));
      return;
    }
  }
}

void sort_members(std::vector<Bucket>& buckets) {
  for (Bucket& bucket : buckets) {
    std::sort(bucket.members.begin(), bucket.members.end(),
              [](const BucketMember& a, const BucketMember& b) {
                const auto order = a.value <=> b.value;
                if (order != 0) return order < 0;
                return a.form < b.form;
              });
  }
}

}  // namespace

std::string display_name(const Graph& g) {
  if (auto name = family_name(g)) return *name;
  return to_graph6(g);
}

std::string Bucket::label() const {
  return "(" + low.get_str() + "," + high.get_str() + "]";
}

std::vector<Graph> enumerate_connected(int n, int limit) {
  check_limit(n, limit);
  return cached_connected(n);
}

std::vector<Graph> enumerate_trees(int n, int limit) {
  check_limit(n, limit);
  return from_forms(tree_forms(n));
}

std::vector<Bucket> classify_small_values(int n_max) {
  if (n_max < 6) {
    throw std::invalid_argument(
        "classify_small_values needs n_max >= 6: a connected graph with GA1 <= 4 can have up "
        "to 6 vertices");
  }
  std::vector<Bucket> buckets = empty_buckets();
  for (int n = 2; n <= n_max; ++n) {
    for (const Graph& g : enumerate_connected(n, std::max(n_max, kDefaultEnumerationLimit))) {
      const RadicalNumber value = ga1(g).value();
      place(buckets, BucketMember{g, canonical_form(g), value, display_name(g), std::nullopt});
    }
  }
  sort_members(buckets);
  return buckets;
}

std::vector<Bucket> classify_line_small_values(int n_max) {
  if (n_max < 7) {
    throw std::invalid_argument(
        "classify_line_small_values needs n_max >= 7: GA1(L) <= 4 allows up to 6 edges, hence "
        "up to 7 vertices");
  }
  std::vector<Bucket> buckets = empty_buckets();
  for (int n = 3; n <= n_max; ++n) {
    for (const Graph& g : enumerate_connected(n, std::max(n_max, kDefaultEnumerationLimit))) {
      if (!is_nontrivial(g)) continue;
      const Graph line = line_graph(g).lg;
      place(buckets, BucketMember{g, canonical_form(g), ga1(line).value(), display_name(g),
                                  display_name(line)});
    }
  }
  sort_members(buckets);
  return buckets;
}

std::vector<Graph> find_line_preimages(const Graph& target, std::optional<int> n_max) {
  const int m = target.order();
  const int top = n_max.value_or(m + 1);
  if (m < 1) return {};
  const CanonicalForm wanted = canonical_form(target);
  std::vector<Graph> out;
  for (int n = 3; n <= std::min(top, m + 1); ++n) {
    for (const Graph& g : enumerate_connected(n, std::max(top, kDefaultEnumerationLimit))) {
      if (g.size() != m || !is_nontrivial(g)) continue;
      if (canonical_form(line_graph(g).lg) == wanted) out.push_back(g);
    }
  }
  return out;
}

bool verify_no_preimage(const Graph& target, std::optional<int> n_max) {
  return find_line_preimages(target, n_max).empty();
}

CheckReport example5(int n1, int n2) {
  if (n1 < 1 || n2 < 1 || n1 == n2) {
    throw std::invalid_argument("example5 needs two different positive integers");
  }
  const long a = static_cast<long>(n1) * n1;
  const long b = static_cast<long>(n2) * n2;
  const Graph g = double_star_graph(static_cast<int>(a - 1), static_cast<int>(b - 1));
  const RadicalNumber closed_form =
      RadicalNumber(ratio(2 * (a - 1) * n1, a + 1)) + RadicalNumber(ratio(2 * (b - 1) * n2, b + 1)) +
      RadicalNumber(ratio(2L * n1 * n2, a + b));

  CheckReport report;
  report.theorem_id = "example5";
  report.relation = Relation::kEqual;
  report.lhs = ga1(g);
  report.rhs = IndexValue::from_exact(closed_form);
  decide_exact(report);
  const bool rational = report.lhs.value().is_rational();
  const bool biregular = is_biregular(g);
  const bool degenerate = n1 == 1 || n2 == 1;
  report.notes = "graph " + display_name(g) + "; rational=" + (rational ? "yes" : "no") +
                 "; biregular=" + (biregular ? "yes" : "no");
  if (degenerate) {
    append_note(report, "degenerate: one centre has no leaves, so the graph is a star");
    report.holds = report.holds && rational;
  } else {
    report.holds = report.holds && rational && !biregular;
  }
  return report;
}

CheckReport example6(int k, int guard) {
  if (k < 1) throw std::invalid_argument("example6 needs k >= 1");
  if (k > guard) {
    throw LimitError("example6: k=" + std::to_string(k) + " exceeds the size guard " +
                     std::to_string(guard));
  }
  const Graph g = complete_bipartite_graph(5 * k, 20 * k);
  CheckReport report;
  report.theorem_id = "example6";
  report.relation = Relation::kEqual;
  report.lhs = ga1(g);
  report.rhs = IndexValue::from_exact(RadicalNumber(80L * k * k));
  decide_exact(report);
  const bool integer = report.lhs.value().is_integer();
  const bool regular = is_regular(g);
  const GraphKind kind = classify(g).kind;
  report.holds =
      report.holds && integer && !regular && kind == GraphKind::kCompleteBipartite;
  report.notes = "K" + std::to_string(5 * k) + "," + std::to_string(20 * k) +
                 "; integer=" + (integer ? "yes" : "no") + "; regular=" + (regular ? "yes" : "no") +
                 "; class=" + to_string(kind);
  return report;
}

ExtremalResult extremal_search(int n, int m, Objective objective, int limit) {
  if (n < 1 || m < n - 1 || m > n * (n - 1) / 2) {
    throw std::invalid_argument("no connected graph has n=" + std::to_string(n) +
                                " vertices and m=" + std::to_string(m) + " edges");
  }
  check_limit(n, limit);
  if (m == 0) throw std::invalid_argument("GA1 needs at least one edge");
  ExtremalResult result;
  bool found = false;
  for (const Graph& g : enumerate_connected(n, limit)) {
    if (g.size() != m) continue;
    const RadicalNumber value = ga1(g).value();
    const auto order = value <=> result.value;
    const bool better =
        !found || (objective == Objective::kMin ? order < 0 : order > 0);
    if (better) {
      result.value = value;
      result.graphs.clear();
      result.graphs.push_back(g);
      found = true;
    } else if (order == 0) {
      result.graphs.push_back(g);
    }
  }
  return result;
}

}  // namespace gaindex
