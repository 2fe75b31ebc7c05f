#ifndef PSILAB_ENUMERATE_HPP
#define PSILAB_ENUMERATE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "psilab/core.hpp"
#include "psilab/graph.hpp"

namespace psilab {

/// Labeled graph of order n for an edge bitmask. Bit k of `mask` switches the
/// k-th pair in the row-major order (0,1),(0,2),..,(0,n-1),(1,2),..
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++k)
      if ((mask >> k) & 1) g.add_edge(u, v);
  return g;
}

/// All 2^C(n,2) labeled graphs of order exactly n, in increasing edge-bitmask
/// order. Refuses orders above the sweep cap.
inline std::uint64_t labeled_graph_count(int n, int sweep_cap = limits::kDefaultSweepMaxN) {
  if (n < 1)
    throw ContractViolation("labeled graphs: n >= 1 required");
  if (n > sweep_cap)
    throw CapExceeded("labeled graphs: order " + std::to_string(n) +
                      " exceeds sweep cap " + std::to_string(sweep_cap) +
                      "; supply larger graphs as graph6 input");
  return std::uint64_t(1) << (n * (n - 1) / 2);
}

/// Labeled trees of order n, indexed by Pruefer sequence. Index i encodes the
/// sequence digits of i in base n (least significant digit first).
inline std::uint64_t labeled_tree_count(int n) {
  if (n < 1) throw ContractViolation("labeled trees: n >= 1 required");
  if (n > 16) throw CapExceeded("labeled trees: order too large");
  if (n <= 2) return 1;
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

inline Graph tree_from_pruefer_index(int n, std::uint64_t index) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::vector<int> seq(static_cast<size_t>(n - 2));
  for (int i = 0; i < n - 2; ++i) {
    seq[static_cast<size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  std::vector<int> deg(static_cast<size_t>(n), 1);
  for (int s : seq) ++deg[static_cast<size_t>(s)];
  Word leaves = 0;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] == 1) leaves |= Word(1) << v;
  for (int s : seq) {
    int leaf = std::countr_zero(leaves);
    leaves &= leaves - 1;
    g.add_edge(leaf, s);
    if (--deg[static_cast<size_t>(s)] == 1) leaves |= Word(1) << s;
  }
  int a = std::countr_zero(leaves);
  leaves &= leaves - 1;
  int b = std::countr_zero(leaves);
  g.add_edge(a, b);
  return g;
}

/// Random-access corpus abstraction shared by the sweep drivers: a size and
/// a deterministic index -> Graph mapping.
struct Corpus {
  enum class Kind { kLabeledUpTo, kTreesUpTo, kExplicit };

  Kind kind = Kind::kExplicit;
  int max_order = 0;
  std::vector<Graph> graphs;  // kExplicit
  std::vector<std::uint64_t> cum;  // cumulative sizes per order, 1..max_order

  static Corpus labeled_up_to(int n, int sweep_cap = limits::kDefaultSweepMaxN) {
    Corpus c;
    c.kind = Kind::kLabeledUpTo;
    c.max_order = n;
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) {
      total += labeled_graph_count(k, sweep_cap);
      c.cum.push_back(total);
    }
    return c;
  }

  static Corpus trees_up_to(int n) {
    Corpus c;
    c.kind = Kind::kTreesUpTo;
    c.max_order = n;
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) {
      total += labeled_tree_count(k);
      c.cum.push_back(total);
    }
    return c;
  }

  static Corpus explicit_graphs(std::vector<Graph> graphs) {
    Corpus c;
    c.kind = Kind::kExplicit;
    c.graphs = std::move(graphs);
    return c;
  }

  std::uint64_t size() const {
    if (kind == Kind::kExplicit) return graphs.size();
    return cum.empty() ? 0 : cum.back();
  }

  Graph at(std::uint64_t i) const {
    if (kind == Kind::kExplicit) return graphs.at(i);
    int order = 1;
    std::uint64_t before = 0;
    for (std::uint64_t c : cum) {
      if (i < c) break;
      before = c;
      ++order;
    }
    std::uint64_t local = i - before;
    return kind == Kind::kLabeledUpTo ? graph_from_edge_mask(order, local)
                                      : tree_from_pruefer_index(order, local);
  }
};

}  // namespace psilab

#endif  // PSILAB_ENUMERATE_HPP
