#ifndef PSILAB_MATCHING_HPP
#define PSILAB_MATCHING_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "psilab/core.hpp"
#include "psilab/graph.hpp"
#include "psilab/stability.hpp"
#include "psilab/vertex_set.hpp"

namespace psilab {

struct Matching {
  std::vector<std::pair<int, int>> edges;  // u < v within each pair

  int size() const { return static_cast<int>(edges.size()); }
  Word vertex_bits() const {
    Word m = 0;
    for (auto [u, v] : edges) m |= (Word(1) << u) | (Word(1) << v);
    return m;
  }
};

/// Exact matching numbers of induced subgraphs plus perfect-matching counts,
/// addressed by vertex mask. Mirrors AlphaOracle's table/memo split.
class MuOracle {
 public:
  static constexpr int kTableBits = 20;

  explicit MuOracle(const Graph& g) : n_(g.n()) {
    adj_.reserve(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) adj_.push_back(g.adj_bits(v));
    if (n_ <= kTableBits) {
      table_.assign(size_t(1) << n_, 0);
      for (Word m = 1; m < (Word(1) << n_); ++m) {
        int v = std::countr_zero(m);
        Word vb = Word(1) << v;
        std::uint8_t best = table_[m & ~vb];  // leave v unmatched
        Word opts = adj_[static_cast<size_t>(v)] & m;
        while (opts) {
          int u = std::countr_zero(opts);
          opts &= opts - 1;
          best = std::max(
              best,
              static_cast<std::uint8_t>(1 + table_[m & ~vb & ~(Word(1) << u)]));
        }
        table_[m] = best;
      }
    }
  }

  int n() const { return n_; }
  Word full_mask() const { return n_ >= 64 ? ~Word(0) : (Word(1) << n_) - 1; }

  int mu(Word mask) const {
    if (!table_.empty()) return table_[mask];
    return rec(mask);
  }

  int mu_full() const { return mu(full_mask()); }

  /// Number of perfect matchings of the subgraph induced by mask.
  std::uint64_t count_perfect_matchings(Word mask) const {
    if (std::popcount(mask) % 2 != 0) return 0;
    return count_rec(mask);
  }

  Word adj_bits(int v) const { return adj_[static_cast<size_t>(v)]; }

 private:
  int rec(Word mask) const {
    if (mask == 0) return 0;
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    int v = std::countr_zero(mask);
    Word vb = Word(1) << v;
    int best = rec(mask & ~vb);
    Word opts = adj_[static_cast<size_t>(v)] & mask;
    while (opts) {
      int u = std::countr_zero(opts);
      opts &= opts - 1;
      best = std::max(best, 1 + rec(mask & ~vb & ~(Word(1) << u)));
    }
    memo_.emplace(mask, best);
    return best;
  }

  std::uint64_t count_rec(Word mask) const {
    if (mask == 0) return 1;
    auto it = count_memo_.find(mask);
    if (it != count_memo_.end()) return it->second;
    int v = std::countr_zero(mask);
    Word vb = Word(1) << v;
    std::uint64_t total = 0;
    Word opts = adj_[static_cast<size_t>(v)] & mask;
    while (opts) {
      int u = std::countr_zero(opts);
      opts &= opts - 1;
      total += count_rec(mask & ~vb & ~(Word(1) << u));
    }
    count_memo_.emplace(mask, total);
    return total;
  }

  int n_;
  std::vector<Word> adj_;
  std::vector<std::uint8_t> table_;
  mutable std::unordered_map<Word, int> memo_;
  mutable std::unordered_map<Word, std::uint64_t> count_memo_;
};

namespace detail {

/// One canonical maximum matching: peel vertices in index order, pairing each
/// with its smallest partner that preserves optimality.
inline Matching max_matching_with(const MuOracle& o) {
  Matching out;
  Word mask = o.full_mask();
  while (mask) {
    int target = o.mu(mask);
    if (target == 0) break;
    int v = std::countr_zero(mask);
    Word vb = Word(1) << v;
    if (o.mu(mask & ~vb) == target) {
      mask &= ~vb;
      continue;
    }
    Word opts = o.adj_bits(v) & mask;
    while (opts) {
      int u = std::countr_zero(opts);
      opts &= opts - 1;
      Word next = mask & ~vb & ~(Word(1) << u);
      if (1 + o.mu(next) == target) {
        out.edges.emplace_back(v, u);
        mask = next;
        break;
      }
    }
  }
  for (auto& [u, v] : out.edges)
    if (u > v) std::swap(u, v);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace detail

inline Matching max_matching(const Graph& g, int cap = limits::kDefaultMaxN) {
  check_cap(g, cap, "max_matching");
  MuOracle o(g);
  return detail::max_matching_with(o);
}

inline void check_matching(const Graph& g, const Matching& m) {
  Word used = 0;
  for (auto [u, v] : m.edges) {
    if (!g.has_edge(u, v))
      throw ContractViolation("matching contains a non-edge");
    Word both = (Word(1) << u) | (Word(1) << v);
    if (used & both) throw ContractViolation("matching reuses a vertex");
    used |= both;
  }
}

/// M is the one and only perfect matching of the subgraph it saturates.
inline bool is_uniquely_restricted(const Graph& g, const Matching& m,
                                   int cap = limits::kDefaultMaxN) {
  check_cap(g, cap, "is_uniquely_restricted");
  check_matching(g, m);
  MuOracle o(g);
  return o.count_perfect_matchings(m.vertex_bits()) == 1;
}

struct MaxMatchingScan {
  bool all_restricted = true;
  bool truncated = false;
  std::uint64_t examined = 0;
  std::optional<Matching> offender;  // first maximum matching that is not UR
};

namespace detail {

inline bool scan_rec(const MuOracle& o, Word mask, std::vector<std::pair<int, int>>& acc,
                     std::uint64_t cap, MaxMatchingScan& out) {
  int target = o.mu(mask);
  if (target == 0) {
    if (out.examined >= cap) {
      out.truncated = true;
      return false;
    }
    ++out.examined;
    Word saturated = 0;
    for (auto [u, v] : acc) saturated |= (Word(1) << u) | (Word(1) << v);
    if (o.count_perfect_matchings(saturated) != 1) {
      out.all_restricted = false;
      Matching m;
      m.edges = acc;
      for (auto& [u, v] : m.edges)
        if (u > v) std::swap(u, v);
      std::sort(m.edges.begin(), m.edges.end());
      out.offender = std::move(m);
      return false;
    }
    return true;
  }
  int v = std::countr_zero(mask);
  Word vb = Word(1) << v;
  if (o.mu(mask & ~vb) == target)
    if (!scan_rec(o, mask & ~vb, acc, cap, out)) return false;
  Word opts = o.adj_bits(v) & mask;
  while (opts) {
    int u = std::countr_zero(opts);
    opts &= opts - 1;
    Word next = mask & ~vb & ~(Word(1) << u);
    if (1 + o.mu(next) == target) {
      acc.emplace_back(v, u);
      bool go = scan_rec(o, next, acc, cap, out);
      acc.pop_back();
      if (!go) return false;
    }
  }
  return true;
}

inline MaxMatchingScan all_max_matchings_uniquely_restricted_with(
    const MuOracle& o, std::uint64_t cap) {
  MaxMatchingScan out;
  std::vector<std::pair<int, int>> acc;
  scan_rec(o, o.full_mask(), acc, cap, out);
  return out;
}

}  // namespace detail

/// Checks every maximum matching for unique restriction, stopping at the
/// first failure or after `cap` matchings (then `truncated` is set).
inline MaxMatchingScan all_max_matchings_uniquely_restricted(
    const Graph& g, std::uint64_t cap = limits::kDefaultMatchingEnumCap,
    int order_cap = limits::kDefaultMaxN) {
  check_cap(g, order_cap, "all_max_matchings_uniquely_restricted");
  MuOracle o(g);
  return detail::all_max_matchings_uniquely_restricted_with(o, cap);
}

namespace detail {

inline bool koenig_egervary_mask(const AlphaOracle& ao, const MuOracle& mo, Word mask) {
  return ao.alpha(mask) + mo.mu(mask) == std::popcount(mask);
}

}  // namespace detail

/// alpha(G) + mu(G) = |V(G)|.
inline bool is_koenig_egervary(const Graph& g, int cap = limits::kDefaultMaxN) {
  check_cap(g, cap, "is_koenig_egervary");
  AlphaOracle ao(g);
  MuOracle mo(g);
  return detail::koenig_egervary_mask(ao, mo, ao.full_mask());
}

}  // namespace psilab

#endif  // PSILAB_MATCHING_HPP
