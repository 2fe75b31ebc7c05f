#ifndef PSILAB_STABILITY_HPP
#define PSILAB_STABILITY_HPP

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "psilab/core.hpp"
#include "psilab/graph.hpp"
#include "psilab/set_system.hpp"
#include "psilab/vertex_set.hpp"

namespace psilab {

inline void check_cap(const Graph& g, int cap, const char* op) {
  if (g.n() > cap)
    throw CapExceeded(std::string(op) + ": order " + std::to_string(g.n()) +
                      " exceeds cap " + std::to_string(cap));
}

inline bool is_stable(const Graph& g, const VertexSet& a) {
  if (a.ground() != g.n())
    throw ContractViolation("is_stable: ground mismatch");
  for (int v : a)
    if (g.adj_bits(v) & a.bits()) return false;
  return true;
}

/// Exact stability numbers of induced subgraphs, addressed by vertex mask.
/// Small orders get a full table (one byte per mask); larger ones fall back
/// to memoized branching on a highest-degree vertex.
class AlphaOracle {
 public:
  static constexpr int kTableBits = 20;

  explicit AlphaOracle(const Graph& g) : n_(g.n()) {
    closed_.reserve(static_cast<size_t>(n_));
    adj_.reserve(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      adj_.push_back(g.adj_bits(v));
      closed_.push_back(g.closed_bits(v));
    }
    if (n_ <= kTableBits) {
      table_.assign(size_t(1) << n_, 0);
      for (Word m = 1; m < (Word(1) << n_); ++m) {
        int v = std::countr_zero(m);
        std::uint8_t excl = table_[m & (m - 1)];
        std::uint8_t incl =
            static_cast<std::uint8_t>(1 + table_[m & ~closed_[static_cast<size_t>(v)]]);
        table_[m] = std::max(excl, incl);
      }
    }
  }

  int n() const { return n_; }
  Word full_mask() const { return n_ >= 64 ? ~Word(0) : (Word(1) << n_) - 1; }

  int alpha(Word mask) const {
    if (!table_.empty()) return table_[mask];
    return rec(mask);
  }

  int alpha_full() const { return alpha(full_mask()); }

  Word closed_bits(int v) const { return closed_[static_cast<size_t>(v)]; }
  Word adj_bits(int v) const { return adj_[static_cast<size_t>(v)]; }

  Word closed_neighborhood(Word mask) const {
    Word out = mask;
    while (mask) {
      int v = std::countr_zero(mask);
      mask &= mask - 1;
      out |= closed_[static_cast<size_t>(v)];
    }
    return out;
  }

 private:
  int rec(Word mask) const {
    if (mask == 0) return 0;
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    // pick the densest vertex; isolated remainders resolve immediately
    int best_v = -1, best_deg = -1;
    Word rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(adj_[static_cast<size_t>(v)] & mask);
      if (d > best_deg) {
        best_deg = d;
        best_v = v;
      }
    }
    int out;
    if (best_deg == 0) {
      out = std::popcount(mask);
    } else {
      out = std::max(rec(mask & ~(Word(1) << best_v)),
                     1 + rec(mask & ~closed_[static_cast<size_t>(best_v)]));
    }
    memo_.emplace(mask, out);
    return out;
  }

  int n_;
  std::vector<Word> adj_;
  std::vector<Word> closed_;
  std::vector<std::uint8_t> table_;
  mutable std::unordered_map<Word, int> memo_;
};

struct OmegaFamily {
  int alpha = 0;
  SetSystem sets{0};
};

struct PsiFamily {
  Graph graph{0};
  SetSystem sets{0};
};

namespace detail {

inline void omega_rec(const AlphaOracle& o, Word cur, Word allowed, int target,
                      std::vector<Word>& out) {
  int have = std::popcount(cur);
  if (have + o.alpha(allowed) < target) return;
  if (allowed == 0) {
    if (have == target) out.push_back(cur);
    return;
  }
  int v = std::countr_zero(allowed);
  omega_rec(o, cur | (Word(1) << v), allowed & ~o.closed_bits(v), target, out);
  omega_rec(o, cur, allowed & (allowed - 1), target, out);
}

inline OmegaFamily max_stable_with(const Graph& g, const AlphaOracle& o) {
  OmegaFamily out;
  out.alpha = o.alpha_full();
  std::vector<Word> masks;
  if (g.n() > 0) omega_rec(o, 0, o.full_mask(), out.alpha, masks);
  out.sets = SetSystem::from_masks(g.n(), std::move(masks));
  return out;
}

inline void psi_rec(const AlphaOracle& o, Word cur, Word nbhd, Word allowed,
                    std::vector<Word>& out) {
  while (allowed) {
    int v = std::countr_zero(allowed);
    allowed &= allowed - 1;
    Word ncur = cur | (Word(1) << v);
    Word nn = nbhd | o.closed_bits(v);
    if (std::popcount(ncur) == o.alpha(nn)) out.push_back(ncur);
    // extend with larger vertices only, skipping neighbours of v
    psi_rec(o, ncur, nn, allowed & ~o.adj_bits(v), out);
  }
}

inline PsiFamily enumerate_psi_with(const Graph& g, const AlphaOracle& o) {
  std::vector<Word> masks;
  if (g.n() > 0) psi_rec(o, 0, 0, o.full_mask(), masks);
  PsiFamily out;
  out.graph = g;
  out.sets = SetSystem::from_masks(g.n(), std::move(masks));
  return out;
}

/// All maximal stable sets: maximal cliques of the complement, found by
/// pivoted Bron-Kerbosch over complement adjacency.
inline void maximal_stable_rec(const std::vector<Word>& coadj, Word r, Word p,
                               Word x, std::vector<Word>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  Word px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  Word rest = px;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    int d = std::popcount(coadj[static_cast<size_t>(u)] & p);
    if (d > best) {
      best = d;
      pivot = u;
    }
  }
  Word cand = p & ~coadj[static_cast<size_t>(pivot)];
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    Word vb = Word(1) << v;
    maximal_stable_rec(coadj, r | vb, p & coadj[static_cast<size_t>(v)],
                       x & coadj[static_cast<size_t>(v)], out);
    p &= ~vb;
    x |= vb;
  }
}

inline std::vector<Word> maximal_stable_sets(const Graph& g) {
  int n = g.n();
  if (n == 0) return {};
  Word full = n >= 64 ? ~Word(0) : (Word(1) << n) - 1;
  std::vector<Word> coadj(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v)
    coadj[static_cast<size_t>(v)] = full & ~g.closed_bits(v);
  std::vector<Word> out;
  maximal_stable_rec(coadj, 0, full, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// alpha(G) together with every maximum stable set, in increasing mask order.
inline OmegaFamily max_stable(const Graph& g, int cap = limits::kDefaultMaxN) {
  check_cap(g, cap, "max_stable");
  AlphaOracle o(g);
  return detail::max_stable_with(g, o);
}

/// A is non-empty, stable, and maximum within G[N[A]].
inline bool is_local_max_stable(const Graph& g, const VertexSet& a,
                                int cap = limits::kDefaultMaxN) {
  check_cap(g, cap, "is_local_max_stable");
  if (a.empty_set())
    throw ContractViolation("is_local_max_stable: empty set");
  if (!is_stable(g, a)) return false;
  AlphaOracle o(g);
  return a.size() == o.alpha(o.closed_neighborhood(a.bits()));
}

/// The whole family of local maximum stable sets, scanned over stable
/// subsets only.
inline PsiFamily enumerate_psi(const Graph& g, int cap = limits::kDefaultMaxN) {
  check_cap(g, cap, "enumerate_psi");
  AlphaOracle o(g);
  return detail::enumerate_psi_with(g, o);
}

/// Simplicial vertices, the simplexes they span, and whether every vertex
/// sees one. A simplex is a maximal clique containing a simplicial vertex.
struct SimplicialDecomposition {
  VertexSet simplicial_vertices{0, 0};
  std::vector<VertexSet> simplices;
  bool is_simplicial_graph = false;
};

inline SimplicialDecomposition simplicial_decomposition(const Graph& g) {
  int n = g.n();
  SimplicialDecomposition out;
  Word simp = 0;
  for (int v = 0; v < n; ++v) {
    Word cl = g.closed_bits(v);
    bool clique = true;
    Word rest = cl;
    while (rest && clique) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if ((cl & ~g.closed_bits(u)) != 0) clique = false;
    }
    if (clique) simp |= Word(1) << v;
  }
  out.simplicial_vertices = VertexSet(simp, n);

  // maximal cliques = maximal stable sets of the complement
  std::vector<Word> cliques;
  {
    Word full = n == 0 ? 0 : (n >= 64 ? ~Word(0) : (Word(1) << n) - 1);
    std::vector<Word> adjv(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adjv[static_cast<size_t>(v)] = g.adj_bits(v);
    if (n > 0) detail::maximal_stable_rec(adjv, 0, full, 0, cliques);
    std::sort(cliques.begin(), cliques.end());
  }
  for (Word q : cliques)
    if (q & simp) out.simplices.emplace_back(q, n);

  Word covered = simp;
  for (int v = 0; v < n; ++v)
    if (g.adj_bits(v) & simp) covered |= Word(1) << v;
  out.is_simplicial_graph = n > 0 && covered == (n >= 64 ? ~Word(0) : (Word(1) << n) - 1);
  return out;
}

/// (pendant vertices, isolated vertices).
inline std::pair<VertexSet, VertexSet> pendant_and_isolated(const Graph& g) {
  Word pend = 0, isol = 0;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    if (d == 0) isol |= Word(1) << v;
    if (d == 1) pend |= Word(1) << v;
  }
  return {VertexSet(pend, g.n()), VertexSet(isol, g.n())};
}

/// Every maximal stable set is maximum.
inline bool is_well_covered(const Graph& g, int cap = limits::kDefaultMaxN) {
  check_cap(g, cap, "is_well_covered");
  if (g.n() == 0) return true;
  std::vector<Word> maximal = detail::maximal_stable_sets(g);
  int alpha = 0;
  for (Word m : maximal) alpha = std::max(alpha, std::popcount(m));
  for (Word m : maximal)
    if (std::popcount(m) != alpha) return false;
  return true;
}

/// Well-covered with no isolated vertices and exactly 2*alpha vertices.
inline bool is_very_well_covered(const Graph& g, int cap = limits::kDefaultMaxN) {
  check_cap(g, cap, "is_very_well_covered");
  if (g.n() == 0) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return false;
  if (!is_well_covered(g, cap)) return false;
  AlphaOracle o(g);
  return g.n() == 2 * o.alpha_full();
}

namespace detail {

struct ThetaSolver {
  const Graph& g;
  std::vector<int> memo;

  explicit ThetaSolver(const Graph& graph)
      : g(graph), memo(size_t(1) << graph.n(), -1) {}

  int solve(Word mask) {
    if (mask == 0) return 0;
    int& m = memo[static_cast<size_t>(mask)];
    if (m >= 0) return m;
    int v = std::countr_zero(mask);
    int best = 1 + solve(mask & ~(Word(1) << v));  // {v} alone
    // grow a clique around v inside mask
    grow(Word(1) << v, mask & g.adj_bits(v), mask, best);
    return m = best;
  }

  void grow(Word clique, Word cand, Word mask, int& best) {
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      Word nc = clique | (Word(1) << u);
      int with = 1 + solve(mask & ~nc);
      best = std::min(best, with);
      grow(nc, cand & g.adj_bits(u), mask, best);
    }
  }
};

}  // namespace detail

/// Minimum number of cliques covering V(G); exact search, desk scale only.
inline int clique_cover_number(const Graph& g) {
  check_cap(g, limits::kThetaMaxN, "clique_cover_number");
  if (g.n() == 0) return 0;
  detail::ThetaSolver solver(g);
  return solver.solve((Word(1) << g.n()) - 1);
}

/// Can every vertex of stable A be matched to a distinct neighbour in the
/// disjoint stable set S? Classic augmenting-path matching.
inline bool matchable_into(const Graph& g, const VertexSet& a, const VertexSet& s) {
  if (!is_stable(g, a) || !is_stable(g, s))
    throw ContractViolation("matchable_into: sets must be stable");
  if (a.intersects(s))
    throw ContractViolation("matchable_into: sets must be disjoint");
  std::vector<int> owner(static_cast<size_t>(g.n()), -1);  // s-vertex -> a-vertex
  std::function<bool(int, Word&)> try_match = [&](int av, Word& seen) {
    Word opts = g.adj_bits(av) & s.bits() & ~seen;
    while (opts) {
      int sv = std::countr_zero(opts);
      opts &= opts - 1;
      seen |= Word(1) << sv;
      if (owner[static_cast<size_t>(sv)] < 0 ||
          try_match(owner[static_cast<size_t>(sv)], seen)) {
        owner[static_cast<size_t>(sv)] = av;
        return true;
      }
    }
    return false;
  };
  for (int av : a) {
    Word seen = 0;
    if (!try_match(av, seen)) return false;
  }
  return true;
}

/// The maximum stable set when it is unique.
inline std::optional<VertexSet> unique_max_stable(const Graph& g,
                                                  int cap = limits::kDefaultMaxN) {
  OmegaFamily om = max_stable(g, cap);
  if (om.sets.size() != 1) return std::nullopt;
  return om.sets.set_at(0);
}

}  // namespace psilab

#endif  // PSILAB_STABILITY_HPP
