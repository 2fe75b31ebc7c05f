#ifndef PSILAB_GRAPH_HPP
#define PSILAB_GRAPH_HPP

#include <bit>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "psilab/core.hpp"
#include "psilab/vertex_set.hpp"

namespace psilab {

/// Finite simple graph on vertices 0..n-1, adjacency kept as bit rows.
/// Symmetric and irreflexive by construction.
class Graph {
 public:
  explicit Graph(int n, std::string label = "") : label_(std::move(label)) {
    if (n < 0 || n > limits::kMaxVertices)
      throw ContractViolation("Graph: order out of range 0.." +
                              std::to_string(limits::kMaxVertices));
    n_ = n;
    adj_.assign(static_cast<size_t>(n), 0);
  }

  int n() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ContractViolation("Graph: loop rejected");
    adj_[u] |= Word(1) << v;
    adj_[v] |= Word(1) << u;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
  }

  Word adj_bits(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  Word closed_bits(int v) const { return adj_bits(v) | Word(1) << v; }

  VertexSet neighbors(int v) const { return VertexSet(adj_bits(v), n_); }
  int degree(int v) const { return std::popcount(adj_bits(v)); }

  int edge_count() const {
    long total = 0;
    for (Word row : adj_) total += std::popcount(row);
    return static_cast<int>(total / 2);
  }

  /// Edges as (u,v) pairs with u < v, in increasing (u,v) order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
    return out;
  }

  /// N(A): vertices outside A with a neighbor in A.
  VertexSet open_neighborhood(const VertexSet& a) const {
    return VertexSet(open_bits(checked_bits(a)), n_);
  }

  /// N[A] = A together with N(A).
  VertexSet closed_neighborhood(const VertexSet& a) const {
    Word bits = checked_bits(a);
    return VertexSet(bits | open_bits(bits), n_);
  }

  Word closed_neighborhood_bits(Word bits) const {
    return bits | open_bits(bits);
  }

  /// Subgraph induced by `keep`, plus the map new index -> old index
  /// (increasing in the old order).
  std::pair<Graph, std::vector<int>> induced(const VertexSet& keep) const {
    Word bits = checked_bits(keep);
    std::vector<int> old_of;
    std::vector<int> new_of(static_cast<size_t>(n_), -1);
    for (int v = 0; v < n_; ++v)
      if ((bits >> v) & 1) {
        new_of[v] = static_cast<int>(old_of.size());
        old_of.push_back(v);
      }
    Graph h(static_cast<int>(old_of.size()));
    for (int v : old_of) {
      Word row = adj_[v] & bits;
      while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        if (u > v) h.add_edge(new_of[v], new_of[u]);
      }
    }
    return {std::move(h), std::move(old_of)};
  }

  /// Connected components as vertex sets, ordered by smallest member.
  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    Word seen = 0;
    for (int v = 0; v < n_; ++v) {
      if ((seen >> v) & 1) continue;
      Word comp = Word(1) << v;
      for (;;) {
        Word grow = comp;
        Word rest = comp;
        while (rest) {
          int u = std::countr_zero(rest);
          rest &= rest - 1;
          grow |= adj_[u];
        }
        if (grow == comp) break;
        comp = grow;
      }
      seen |= comp;
      out.emplace_back(comp, n_);
    }
    return out;
  }

  bool is_connected() const {
    return n_ <= 1 || components().size() == 1;
  }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw ContractViolation("Graph: vertex out of range");
  }
  Word checked_bits(const VertexSet& a) const {
    if (a.ground() != n_)
      throw ContractViolation("Graph: set ground mismatches order");
    return a.bits();
  }
  Word open_bits(Word bits) const {
    Word out = 0;
    Word rest = bits;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out |= adj_[v];
    }
    return out & ~bits;
  }

  int n_;
  std::vector<Word> adj_;
  std::string label_;
};

// -- Generators ---------------------------------------------------------

inline Graph make_path(int n) {
  if (n < 1) throw ContractViolation("path: n >= 1 required");
  Graph g(n, "P" + std::to_string(n));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) throw ContractViolation("cycle: n >= 3 required");
  Graph g(n, "C" + std::to_string(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph make_complete(int n) {
  if (n < 1) throw ContractViolation("complete: n >= 1 required");
  Graph g(n, "K" + std::to_string(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Star K_{1,n}: center 0, leaves 1..n.
inline Graph make_star(int n) {
  if (n < 1) throw ContractViolation("star: n >= 1 required");
  Graph g(n + 1, "K1," + std::to_string(n));
  for (int v = 1; v <= n; ++v) g.add_edge(0, v);
  return g;
}

inline Graph make_empty(int n) {
  if (n < 1) throw ContractViolation("empty: n >= 1 required");
  return Graph(n, "E" + std::to_string(n));
}

/// Corona X o {H_1..H_n}: disjoint copies of the parts, the i-th part fully
/// joined to vertex i of X. Vertices: X first, then parts contiguously in
/// order. Every part must be non-empty.
inline Graph corona(const Graph& x, const std::vector<Graph>& parts) {
  if (static_cast<int>(parts.size()) != x.n())
    throw ContractViolation("corona: need one part per vertex of X");
  int total = x.n();
  for (const Graph& h : parts) {
    if (h.n() < 1) throw ContractViolation("corona: empty part");
    total += h.n();
  }
  if (total > limits::kMaxVertices)
    throw ContractViolation("corona: result exceeds max order");
  Graph g(total);
  for (auto [u, v] : x.edges()) g.add_edge(u, v);
  int base = x.n();
  for (int i = 0; i < x.n(); ++i) {
    const Graph& h = parts[static_cast<size_t>(i)];
    for (auto [u, v] : h.edges()) g.add_edge(base + u, base + v);
    for (int v = 0; v < h.n(); ++v) g.add_edge(i, base + v);
    base += h.n();
  }
  return g;
}

}  // namespace psilab

#endif  // PSILAB_GRAPH_HPP
