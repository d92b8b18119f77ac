#include <string>
#include <vector>

#include "gaindex/errors.hpp"
#include "gaindex/graph.hpp"

namespace gaindex {
namespace {

// Branch and bound over vertex orderings. Position j contributes the bits of
// column j, so a partial ordering fixes a prefix of the bitstring and any
// prefix larger than the incumbent's can be cut.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g)
      : n_(g.order()),
        length_(n_ * (n_ - 1) / 2),
        adjacency_(static_cast<std::size_t>(n_), 0),
        order_(static_cast<std::size_t>(n_), 0) {
    for (const Edge& e : g.edges()) {
      adjacency_[e.u] |= std::uint32_t{1} << e.v;
      adjacency_[e.v] |= std::uint32_t{1} << e.u;
    }
  }

  std::uint64_t run() {
    search(0, 0, 0, 0);
    return best_;
  }

 private:
  void search(int position, std::uint64_t prefix, int bits_so_far, std::uint32_t used) {
    if (position == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used & (std::uint32_t{1} << v)) continue;
      std::uint64_t extended = prefix;
      for (int i = 0; i < position; ++i) {
        extended = (extended << 1) | ((adjacency_[order_[i]] >> v) & 1U);
      }
      const int length = bits_so_far + position;
      if (have_best_ && extended > (best_ >> (length_ - length))) continue;
      order_[position] = v;
      search(position + 1, extended, length, used | (std::uint32_t{1} << v));
    }
  }

  int n_;
  int length_;
  std::vector<std::uint32_t> adjacency_;
  std::vector<int> order_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::string CanonicalForm::to_string() const {
  const int length = n * (n - 1) / 2;
  std::string out(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i) {
    if ((bits >> (length - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g, int limit) {
  if (limit > kMaxCanonicalLimit) {
    throw LimitError("canonical_form: limit cannot exceed " +
                     std::to_string(kMaxCanonicalLimit));
  }
  if (g.order() > limit) {
    throw LimitError("canonical_form: n = " + std::to_string(g.order()) +
                     " exceeds the limit of " + std::to_string(limit) +
                     " (brute-force canonical labelling is meant for small graphs)");
  }
  CanonicalForm out;
  out.n = g.order();
  if (out.n >= 2) out.bits = Canonizer(g).run();
  return out;
}

Graph graph_from_canonical(const CanonicalForm& form) {
  const int length = form.n * (form.n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  int index = 0;
  for (int j = 1; j < form.n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      if ((form.bits >> (length - 1 - index)) & 1U) pairs.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(form.n, pairs);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.order() > kMaxCanonicalLimit) {
    throw LimitError("are_isomorphic: graphs too large for brute-force canonical forms");
  }
  return canonical_form(a, kMaxCanonicalLimit) == canonical_form(b, kMaxCanonicalLimit);
}

}  // namespace gaindex
