#ifndef PSILAB_THEOREMS_HPP
#define PSILAB_THEOREMS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "psilab/core.hpp"
#include "psilab/enumerate.hpp"
#include "psilab/fixtures.hpp"
#include "psilab/graph.hpp"
#include "psilab/graph6.hpp"
#include "psilab/matching.hpp"
#include "psilab/set_system.hpp"
#include "psilab/stability.hpp"
#include "psilab/vertex_set.hpp"

namespace psilab {

// ---------------------------------------------------------------- graph classes

inline bool is_forest(const Graph& g) {
  return g.edge_count() == g.n() - static_cast<int>(g.components().size());
}

inline bool is_tree(const Graph& g) {
  return g.n() >= 1 && g.is_connected() && g.edge_count() == g.n() - 1;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[static_cast<size_t>(s)] >= 0) continue;
    color[static_cast<size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (color[static_cast<size_t>(u)] < 0) {
          color[static_cast<size_t>(u)] = 1 - color[static_cast<size_t>(v)];
          q.push(u);
        } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.adj_bits(u) & g.adj_bits(v)) return false;
  return true;
}

// ---------------------------------------------------------------- lazy context

/// Per-graph cache so that several theorem checks on one graph share the
/// expensive artefacts (oracles, families, axiom scans).
class GraphContext {
 public:
  explicit GraphContext(Graph g, const std::vector<std::string>* names = nullptr,
                        int cap = limits::kDefaultMaxN,
                        std::uint64_t matching_cap = limits::kDefaultMatchingEnumCap)
      : graph_(std::move(g)), names_(names), cap_(cap), matching_cap_(matching_cap) {}

  const Graph& graph() const { return graph_; }
  const std::vector<std::string>* names() const { return names_; }
  int cap() const { return cap_; }

  const AlphaOracle& alpha() {
    if (!alpha_) {
      check_cap(graph_, cap_, "analysis");
      alpha_.emplace(graph_);
    }
    return *alpha_;
  }

  const MuOracle& mu() {
    if (!mu_) {
      check_cap(graph_, cap_, "analysis");
      mu_.emplace(graph_);
    }
    return *mu_;
  }

  const OmegaFamily& omega() {
    if (!omega_) omega_ = detail::max_stable_with(graph_, alpha());
    return *omega_;
  }

  const SetSystem& psi() {
    if (!psi_) psi_ = detail::enumerate_psi_with(graph_, alpha()).sets;
    return *psi_;
  }

  const AxiomResult& psi_accessible() {
    if (!acc_) acc_ = is_accessible(psi());
    return *acc_;
  }

  const AxiomResult& psi_exchange() {
    if (!exch_) exch_ = satisfies_exchange(psi());
    return *exch_;
  }

  const AxiomResult& psi_hereditary() {
    if (!her_) her_ = is_hereditary(psi());
    return *her_;
  }

  const AxiomResult& psi_union_closed() {
    if (!uc_) uc_ = is_union_closed(psi());
    return *uc_;
  }

  bool psi_greedoid() { return psi_accessible().ok && psi_exchange().ok; }
  bool psi_matroid() { return psi_greedoid() && psi_hereditary().ok; }
  bool psi_antimatroid() { return psi_greedoid() && psi_union_closed().ok; }

  /// Full report including interval/local-poset; noticeably costlier than the
  /// primitive axioms, so only theorems that need those flags should call it.
  const ClassificationReport& classification() {
    if (!cls_) cls_ = classify(psi());
    return *cls_;
  }

  const SimplicialDecomposition& simplicial() {
    if (!simp_) simp_ = simplicial_decomposition(graph_);
    return *simp_;
  }

  const MaxMatchingScan& ur_scan() {
    if (!ur_)
      ur_ = detail::all_max_matchings_uniquely_restricted_with(mu(), matching_cap_);
    return *ur_;
  }

  const std::vector<Word>& stable_masks() {
    if (!stable_) {
      std::vector<Word> out;
      collect_stable(0, 0, out);
      std::sort(out.begin(), out.end());
      stable_ = std::move(out);
    }
    return *stable_;
  }

  bool mask_stable(Word m) const {
    while (m) {
      int v = std::countr_zero(m);
      if (graph_.adj_bits(v) & m) return false;
      m &= m - 1;
    }
    return true;
  }

  bool forest() {
    if (!forest_) forest_ = is_forest(graph_);
    return *forest_;
  }
  bool tree() {
    if (!tree_) tree_ = is_tree(graph_);
    return *tree_;
  }
  bool bipartite() {
    if (!bip_) bip_ = is_bipartite(graph_);
    return *bip_;
  }
  bool triangle_free() {
    if (!trifree_) trifree_ = is_triangle_free(graph_);
    return *trifree_;
  }

  std::string fmt(const VertexSet& s) const { return format_set(s, names_); }
  std::string fmt_mask(Word m) const { return format_set(VertexSet(m, graph_.n()), names_); }

  std::string fmt(const Matching& m) const {
    std::string out = "{";
    bool first = true;
    for (auto [u, v] : m.edges) {
      if (!first) out += ", ";
      first = false;
      if (names_) {
        out += (*names_)[static_cast<size_t>(u)] + "-" + (*names_)[static_cast<size_t>(v)];
      } else {
        out += std::to_string(u) + "-" + std::to_string(v);
      }
    }
    return out + "}";
  }

 private:
  void collect_stable(Word cur, int next, std::vector<Word>& out) {
    // every subset built from non-adjacent picks, empty set included
    out.push_back(cur);
    for (int v = next; v < graph_.n(); ++v) {
      if (graph_.adj_bits(v) & cur) continue;
      collect_stable(cur | (Word(1) << v), v + 1, out);
    }
  }

  Graph graph_;
  const std::vector<std::string>* names_;
  int cap_;
  std::uint64_t matching_cap_;
  std::optional<AlphaOracle> alpha_;
  std::optional<MuOracle> mu_;
  std::optional<OmegaFamily> omega_;
  std::optional<SetSystem> psi_;
  std::optional<AxiomResult> acc_, exch_, her_, uc_;
  std::optional<ClassificationReport> cls_;
  std::optional<SimplicialDecomposition> simp_;
  std::optional<MaxMatchingScan> ur_;
  std::optional<std::vector<Word>> stable_;
  std::optional<bool> forest_, tree_, bip_, trifree_;
};

// ---------------------------------------------------------------- theorem ids

enum class TheoremId {
  kNT1,
  kBERGE5,
  kFOREST2,
  kBIP22,
  kTRI33,
  kCORONA333,
  kUNION3,
  kACC_IFF_INTERVAL,
  kLEM_UNIQUE4,
  kLEM_UNION1,
  kANTI8,
  kMATROID6,
  kSIMPLICIAL7,
  kTRI_MATROID_C1,
  kTREE_ANTI_C2,
  kTREE_TRIMMED,
  kSIMP_LOCAL_POSET2,
};

inline constexpr std::array<std::pair<TheoremId, const char*>, 17> kTheoremNames{{
    {TheoremId::kNT1, "NT1"},
    {TheoremId::kBERGE5, "BERGE5"},
    {TheoremId::kFOREST2, "FOREST2"},
    {TheoremId::kBIP22, "BIP22"},
    {TheoremId::kTRI33, "TRI33"},
    {TheoremId::kCORONA333, "CORONA333"},
    {TheoremId::kUNION3, "UNION3"},
    {TheoremId::kACC_IFF_INTERVAL, "ACC_IFF_INTERVAL"},
    {TheoremId::kLEM_UNIQUE4, "LEM_UNIQUE4"},
    {TheoremId::kLEM_UNION1, "LEM_UNION1"},
    {TheoremId::kANTI8, "ANTI8"},
    {TheoremId::kMATROID6, "MATROID6"},
    {TheoremId::kSIMPLICIAL7, "SIMPLICIAL7"},
    {TheoremId::kTRI_MATROID_C1, "TRI_MATROID_C1"},
    {TheoremId::kTREE_ANTI_C2, "TREE_ANTI_C2"},
    {TheoremId::kTREE_TRIMMED, "TREE_TRIMMED"},
    {TheoremId::kSIMP_LOCAL_POSET2, "SIMP_LOCAL_POSET2"},
}};

inline std::string theorem_name(TheoremId id) {
  for (auto [k, v] : kTheoremNames)
    if (k == id) return v;
  return "?";
}

inline std::optional<TheoremId> parse_theorem(const std::string& name) {
  for (auto [k, v] : kTheoremNames)
    if (name == v) return k;
  return std::nullopt;
}

inline std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> out;
  for (auto [k, v] : kTheoremNames) out.push_back(k);
  return out;
}

struct TheoremVerdict {
  TheoremId id{};
  std::string label;
  std::string graph6;
  bool applicable = false;
  bool holds = true;
  bool skipped = false;
  std::string detail;
};

// ---------------------------------------------------------------- predicates

namespace detail {

inline std::string axiom_failure_text(GraphContext& ctx, const char* which,
                                      const AxiomResult& r) {
  std::string out = which;
  out += " fails: ";
  bool first = true;
  for (const auto& s : r.witness.sets) {
    if (!first) out += ", ";
    first = false;
    out += ctx.fmt(s);
  }
  return out;
}

/// First axiom separating a non-greedoid family, for direction-naming text.
inline std::string greedoid_failure_text(GraphContext& ctx) {
  if (!ctx.psi_accessible().ok)
    return axiom_failure_text(ctx, "accessibility", ctx.psi_accessible());
  return axiom_failure_text(ctx, "exchange", ctx.psi_exchange());
}

inline TheoremVerdict check_nt1(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = true;
  const SetSystem& psi = ctx.psi();
  const SetSystem& omega = ctx.omega().sets;
  for (size_t i = 0; i < psi.size(); ++i) {
    Word a = psi.masks()[i];
    bool covered = false;
    for (Word s : omega.masks())
      if ((a & ~s) == 0) {
        covered = true;
        break;
      }
    if (!covered) {
      v.holds = false;
      v.detail = "member " + ctx.fmt_mask(a) + " is contained in no maximum stable set";
      return v;
    }
  }
  v.detail = "every member extends to a maximum stable set";
  return v;
}

inline TheoremVerdict check_berge5(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = true;
  const Graph& g = ctx.graph();
  const auto& stable = ctx.stable_masks();
  std::unordered_set<Word> omega(ctx.omega().sets.masks().begin(),
                                 ctx.omega().sets.masks().end());
  for (Word s : stable) {
    Word bad_a = 0;
    bool property = true;
    for (Word a : stable) {
      if (a == 0 || (a & s)) continue;
      if (!matchable_into(g, VertexSet(a, g.n()), VertexSet(s, g.n()))) {
        property = false;
        bad_a = a;
        break;
      }
    }
    bool maximum = omega.count(s) > 0;
    if (maximum && !property) {
      v.holds = false;
      v.detail = "maximum stable set " + ctx.fmt_mask(s) +
                 " cannot absorb the disjoint stable set " + ctx.fmt_mask(bad_a);
      return v;
    }
    if (!maximum && property) {
      v.holds = false;
      v.detail = "stable set " + ctx.fmt_mask(s) +
                 " matches every disjoint stable set yet is not maximum";
      return v;
    }
  }
  v.detail = "matching property characterises the maximum stable sets";
  return v;
}

inline TheoremVerdict check_forest2(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = ctx.forest();
  if (!v.applicable) {
    v.detail = "not acyclic";
    return v;
  }
  if (!ctx.psi_greedoid()) {
    v.holds = false;
    v.detail = "acyclic graph whose family " + greedoid_failure_text(ctx);
    return v;
  }
  v.detail = "family is a greedoid";
  return v;
}

inline TheoremVerdict check_bip22(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = ctx.bipartite();
  if (!v.applicable) {
    v.detail = "not bipartite";
    return v;
  }
  const MaxMatchingScan& scan = ctx.ur_scan();
  if (scan.truncated) {
    v.skipped = true;
    v.detail = "maximum-matching enumeration cap reached";
    return v;
  }
  bool greedoid = ctx.psi_greedoid();
  if (greedoid && !scan.all_restricted) {
    v.holds = false;
    v.detail = "greedoid, yet maximum matching " + ctx.fmt(*scan.offender) +
               " is not uniquely restricted";
    return v;
  }
  if (!greedoid && scan.all_restricted) {
    v.holds = false;
    v.detail = "all maximum matchings uniquely restricted, yet " +
               greedoid_failure_text(ctx);
    return v;
  }
  v.detail = greedoid ? "greedoid and all maximum matchings uniquely restricted"
                      : "neither greedoid nor all-UR";
  return v;
}

inline TheoremVerdict check_tri33(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = ctx.triangle_free();
  if (!v.applicable) {
    v.detail = "contains a triangle";
    return v;
  }
  const MaxMatchingScan& scan = ctx.ur_scan();
  if (scan.truncated) {
    v.skipped = true;
    v.detail = "maximum-matching enumeration cap reached";
    return v;
  }
  bool greedoid = ctx.psi_greedoid();
  Word bad_nbhd = 0;
  bool all_ke = true;
  for (Word a : ctx.psi().masks()) {
    Word nb = ctx.alpha().closed_neighborhood(a);
    if (!koenig_egervary_mask(ctx.alpha(), ctx.mu(), nb)) {
      all_ke = false;
      bad_nbhd = a;
      break;
    }
  }
  bool rhs = scan.all_restricted && all_ke;
  if (greedoid && !rhs) {
    v.holds = false;
    if (!scan.all_restricted)
      v.detail = "greedoid, yet maximum matching " + ctx.fmt(*scan.offender) +
                 " is not uniquely restricted";
    else
      v.detail = "greedoid, yet the closed neighbourhood of " + ctx.fmt_mask(bad_nbhd) +
                 " fails alpha+mu=|V|";
    return v;
  }
  if (!greedoid && rhs) {
    v.holds = false;
    v.detail = "all maximum matchings UR and all member neighbourhoods alpha+mu=|V|, yet " +
               greedoid_failure_text(ctx);
    return v;
  }
  if (greedoid) {
    v.detail = "greedoid with UR matchings and alpha+mu=|V| neighbourhoods";
  } else {
    v.detail = "both sides fail: " + greedoid_failure_text(ctx);
    if (!scan.all_restricted)
      v.detail += "; maximum matching " + ctx.fmt(*scan.offender) +
                  " is not uniquely restricted";
    else
      v.detail += "; closed neighbourhood of " + ctx.fmt_mask(bad_nbhd) +
                  " fails alpha+mu=|V|";
  }
  return v;
}

inline TheoremVerdict check_union3(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = true;
  const auto& masks = ctx.psi().masks();
  for (size_t i = 0; i < masks.size(); ++i) {
    for (size_t j = i + 1; j < masks.size(); ++j) {
      Word u = masks[i] | masks[j];
      if (!ctx.mask_stable(u)) continue;
      if (!ctx.psi().contains_mask(u)) {
        v.holds = false;
        v.detail = "members " + ctx.fmt_mask(masks[i]) + " and " + ctx.fmt_mask(masks[j]) +
                   " have the stable union " + ctx.fmt_mask(u) + " outside the family";
        return v;
      }
    }
  }
  v.detail = "stable unions of members stay in the family";
  return v;
}

inline TheoremVerdict check_acc_iff_interval(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = true;
  const ClassificationReport& r = ctx.classification();
  if (r.accessible && !r.interval_greedoid) {
    v.holds = false;
    auto it = r.witnesses.find("interval_greedoid");
    v.detail = "accessible, yet not an interval greedoid";
    if (it != r.witnesses.end()) {
      v.detail += " (restriction witness:";
      for (const auto& s : it->second.sets) v.detail += " " + ctx.fmt(s);
      v.detail += ")";
    }
    return v;
  }
  if (!r.accessible && r.interval_greedoid) {
    v.holds = false;
    v.detail = "interval greedoid, yet accessibility fails at " +
               ctx.fmt(r.witnesses.at("accessible").sets[0]);
    return v;
  }
  v.detail = r.accessible ? "accessible and an interval greedoid"
                          : "neither accessible nor an interval greedoid";
  return v;
}

inline TheoremVerdict check_lem_unique4(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = ctx.omega().sets.size() == 1;
  if (!v.applicable) {
    v.detail = "maximum stable set not unique";
    return v;
  }
  Word s = ctx.omega().sets.masks()[0];
  Word rest = s;
  while (rest) {
    int x = std::countr_zero(rest);
    rest &= rest - 1;
    Word sub = s & ~(Word(1) << x);
    if (sub != 0 && !ctx.psi().contains_mask(sub)) {
      v.holds = false;
      v.detail = "unique maximum stable set " + ctx.fmt_mask(s) + " minus vertex " +
                 (ctx.names() ? (*ctx.names())[static_cast<size_t>(x)] : std::to_string(x)) +
                 " leaves the family";
      return v;
    }
  }
  v.detail = "all one-vertex deletions of the unique maximum stable set stay in the family";
  return v;
}

inline TheoremVerdict check_lem_union1(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = true;
  bool unique = ctx.omega().sets.size() == 1;
  const AxiomResult& uc = ctx.psi_union_closed();
  if (unique && !uc.ok) {
    v.holds = false;
    v.detail = "unique maximum stable set, yet " +
               axiom_failure_text(ctx, "union-closure", uc);
    return v;
  }
  if (!unique && uc.ok) {
    v.holds = false;
    v.detail = "union-closed family, yet " +
               std::to_string(ctx.omega().sets.size()) + " maximum stable sets";
    return v;
  }
  v.detail = unique ? "unique maximum stable set and union-closed"
                    : "several maximum stable sets and not union-closed";
  return v;
}

inline TheoremVerdict check_anti8(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = true;
  bool anti = ctx.psi_antimatroid();
  bool unique = ctx.omega().sets.size() == 1;
  bool acc = ctx.psi_accessible().ok;
  if (anti && !(unique && acc)) {
    v.holds = false;
    v.detail = unique ? "antimatroid, yet accessibility fails"
               : "antimatroid, yet " + std::to_string(ctx.omega().sets.size()) +
                 " maximum stable sets";
    return v;
  }
  if (!anti && unique && acc) {
    v.holds = false;
    if (!ctx.psi_exchange().ok)
      v.detail = "unique maximum stable set with accessible family, yet " +
                 axiom_failure_text(ctx, "exchange", ctx.psi_exchange());
    else
      v.detail = "unique maximum stable set with accessible family, yet " +
                 axiom_failure_text(ctx, "union-closure", ctx.psi_union_closed());
    return v;
  }
  v.detail = anti ? "antimatroid with unique accessible maximum stable set"
                  : "both sides of the equivalence fail";
  return v;
}

inline TheoremVerdict check_matroid6(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = true;
  bool c1 = ctx.psi_matroid();
  const SimplicialDecomposition& sd = ctx.simplicial();
  Word simp = sd.simplicial_vertices.bits();

  bool c2 = true;
  Word bad_s = 0;
  for (Word s : ctx.omega().sets.masks())
    if (s & ~simp) {
      c2 = false;
      bad_s = s;
      break;
    }

  bool c3 = sd.is_simplicial_graph;
  int bad_v = -1;
  if (c3) {
    for (int u = 0; u < ctx.graph().n(); ++u) {
      if (simp & (Word(1) << u)) continue;
      int in = 0;
      for (const auto& q : sd.simplices)
        if (q.contains(u)) ++in;
      if (in < 2) {
        c3 = false;
        bad_v = u;
        break;
      }
    }
  }

  if (c1 == c2 && c2 == c3) {
    v.detail = c1 ? "matroid; maximum stable sets simplicial; non-simplicial "
                    "vertices in two simplexes"
                  : "all three conditions fail";
    return v;
  }
  v.holds = false;
  v.detail = "conditions disagree: matroid=" + std::string(c1 ? "yes" : "no") +
             ", maximum-stable-sets-simplicial=" + (c2 ? "yes" : "no") +
             ", simplicial-cover=" + (c3 ? "yes" : "no");
  if (!c2) v.detail += "; set " + ctx.fmt_mask(bad_s) + " leaves the simplicial vertices";
  if (!c3 && bad_v >= 0)
    v.detail += "; vertex " +
                (ctx.names() ? (*ctx.names())[static_cast<size_t>(bad_v)]
                             : std::to_string(bad_v)) +
                " lies in fewer than two simplexes";
  if (!c1 && c2) v.detail += "; " + greedoid_failure_text(ctx);
  return v;
}

inline TheoremVerdict check_simplicial7(GraphContext& ctx) {
  TheoremVerdict v;
  const SimplicialDecomposition& sd = ctx.simplicial();
  v.applicable = sd.is_simplicial_graph;
  if (!v.applicable) {
    v.detail = "not a simplicial graph";
    return v;
  }
  if (ctx.graph().n() > limits::kThetaMaxN) {
    v.skipped = true;
    v.detail = "clique-cover computation capped at order " +
               std::to_string(limits::kThetaMaxN);
    return v;
  }
  Word cover = 0;
  for (const auto& q : sd.simplices) cover |= q.bits();
  Word full = ctx.graph().n() >= 64 ? ~Word(0) : (Word(1) << ctx.graph().n()) - 1;
  if (cover != full) {
    v.holds = false;
    v.detail = "simplexes do not cover the vertex set: missing " +
               ctx.fmt_mask(full & ~cover);
    return v;
  }
  int s = static_cast<int>(sd.simplices.size());
  int theta = clique_cover_number(ctx.graph());
  int alpha = ctx.alpha().alpha_full();
  if (s != theta || theta != alpha) {
    v.holds = false;
    v.detail = "s=" + std::to_string(s) + ", theta=" + std::to_string(theta) +
               ", alpha=" + std::to_string(alpha) + " disagree";
    return v;
  }
  v.detail = "simplexes cover V and s=theta=alpha=" + std::to_string(s);
  return v;
}

inline TheoremVerdict check_tri_matroid_c1(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = ctx.triangle_free();
  if (!v.applicable) {
    v.detail = "contains a triangle";
    return v;
  }
  bool c1 = ctx.psi_matroid();

  auto [pend, isol] = pendant_and_isolated(ctx.graph());
  Word margin = pend.bits() | isol.bits();
  bool c2 = true;
  Word bad_s = 0;
  for (Word s : ctx.omega().sets.masks())
    if (s & ~margin) {
      c2 = false;
      bad_s = s;
      break;
    }

  bool c3 = true;
  for (const auto& comp : ctx.graph().components()) {
    Graph h = ctx.graph().induced(comp).first;
    if (h.n() == 1) continue;
    if (h.n() == 2 && h.edge_count() == 1) continue;
    OmegaFamily om = detail::max_stable_with(h, AlphaOracle(h));
    Word hp = pendant_and_isolated(h).first.bits();
    if (om.sets.size() != 1 || om.sets.masks()[0] != hp) {
      c3 = false;
      break;
    }
  }

  if (c1 == c2 && c2 == c3) {
    v.detail = c1 ? "matroid with pendant/isolated maximum stable sets"
                  : "all three conditions fail";
    return v;
  }
  v.holds = false;
  v.detail = "conditions disagree: matroid=" + std::string(c1 ? "yes" : "no") +
             ", maximum-stable-in-pendant-or-isolated=" + (c2 ? "yes" : "no") +
             ", component-structure=" + (c3 ? "yes" : "no");
  if (!c2)
    v.detail += "; set " + ctx.fmt_mask(bad_s) + " uses an interior vertex";
  if (!c1 && c2) v.detail += "; " + greedoid_failure_text(ctx);
  return v;
}

inline TheoremVerdict check_tree_anti_c2(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = ctx.tree();
  if (!v.applicable) {
    v.detail = "not a tree";
    return v;
  }
  bool c1 = ctx.psi_antimatroid();
  bool c2 = ctx.omega().sets.size() == 1;
  bool c3 = false;
  for (Word s : ctx.omega().sets.masks()) {
    bool good = true;
    for (int u = 0; u < ctx.graph().n(); ++u) {
      if (s & (Word(1) << u)) continue;
      if (std::popcount(ctx.graph().adj_bits(u) & s) < 2) {
        good = false;
        break;
      }
    }
    if (good) {
      c3 = true;
      break;
    }
  }
  if (c1 == c2 && c2 == c3) {
    v.detail = c1 ? "antimatroid with unique dominating-by-two maximum stable set"
                  : "all three conditions fail";
    return v;
  }
  v.holds = false;
  v.detail = "conditions disagree: antimatroid=" + std::string(c1 ? "yes" : "no") +
             ", unique-maximum=" + (c2 ? "yes" : "no") +
             ", twice-dominating-maximum=" + (c3 ? "yes" : "no");
  return v;
}

inline TheoremVerdict check_tree_trimmed(GraphContext& ctx) {
  TheoremVerdict v;
  v.applicable = ctx.tree() && ctx.graph().n() >= 3;
  if (!v.applicable) {
    v.detail = ctx.tree() ? "order below three" : "not a tree";
    return v;
  }
  bool c1 = ctx.psi_matroid();
  Word pend = pendant_and_isolated(ctx.graph()).first.bits();
  bool c2 = ctx.omega().sets.size() == 1 && ctx.omega().sets.masks()[0] == pend;
  if (c1 != c2) {
    v.holds = false;
    v.detail = c1 ? "matroid, yet the pendant set is not the unique maximum stable set"
                  : "pendant set is the unique maximum stable set, yet " +
                        greedoid_failure_text(ctx);
    if (c1 && !ctx.psi_hereditary().ok)
      v.detail += "; " + axiom_failure_text(ctx, "heredity", ctx.psi_hereditary());
    return v;
  }
  if (!c1) {
    v.detail = "neither matroid nor pendant-unique-maximum";
    return v;
  }
  // build the intersection pair: downward closure and union closure
  std::vector<Word> down, up(ctx.psi().masks().begin(), ctx.psi().masks().end());
  for (Word m : ctx.psi().masks())
    for (Word sub = m; sub; sub = (sub - 1) & m) down.push_back(sub);
  SetSystem matroid_part = SetSystem::from_masks(ctx.graph().n(), std::move(down));
  // union closure as a fixpoint
  std::unordered_set<Word> seen(up.begin(), up.end());
  for (size_t i = 0; i < up.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Word u = up[i] | up[j];
      if (seen.insert(u).second) up.push_back(u);
    }
  SetSystem anti_part =
      SetSystem::from_masks(ctx.graph().n(), std::vector<Word>(up.begin(), up.end()));
  bool confirmed = verify_trimmed_witness(ctx.psi(), matroid_part, anti_part);
  v.detail = confirmed
                 ? "matroid with pendant maximum stable set; matroid/antimatroid "
                   "intersection witness verified"
                 : "matroid with pendant maximum stable set; intersection witness "
                   "unconfirmed";
  return v;
}

inline TheoremVerdict check_simp_local_poset2(GraphContext& ctx) {
  TheoremVerdict v;
  Word simp = ctx.simplicial().simplicial_vertices.bits();
  bool hyp = true;
  for (Word s : ctx.omega().sets.masks())
    if (s & ~simp) {
      hyp = false;
      break;
    }
  v.applicable = hyp;
  if (!hyp) {
    v.detail = "some maximum stable set uses a non-simplicial vertex";
    return v;
  }
  const ClassificationReport& r = ctx.classification();
  if (!r.local_poset) {
    v.holds = false;
    if (!r.greedoid) {
      v.detail = "maximum stable sets simplicial, yet " + greedoid_failure_text(ctx);
    } else {
      const Witness& w = r.witnesses.at("local_poset");
      v.detail = "maximum stable sets simplicial, yet members " + ctx.fmt(w.sets[0]) +
                 ", " + ctx.fmt(w.sets[1]) + " below " + ctx.fmt(w.sets[2]) +
                 " break the union/intersection rule";
    }
    return v;
  }
  v.detail = "family is a local poset greedoid";
  return v;
}

inline TheoremVerdict check_corona_placeholder() {
  TheoremVerdict v;
  v.applicable = false;
  v.detail = "corona decomposition not supplied";
  return v;
}

}  // namespace detail

inline TheoremVerdict verify(TheoremId id, GraphContext& ctx) {
  TheoremVerdict v;
  switch (id) {
    case TheoremId::kNT1: v = detail::check_nt1(ctx); break;
    case TheoremId::kBERGE5: v = detail::check_berge5(ctx); break;
    case TheoremId::kFOREST2: v = detail::check_forest2(ctx); break;
    case TheoremId::kBIP22: v = detail::check_bip22(ctx); break;
    case TheoremId::kTRI33: v = detail::check_tri33(ctx); break;
    case TheoremId::kCORONA333: v = detail::check_corona_placeholder(); break;
    case TheoremId::kUNION3: v = detail::check_union3(ctx); break;
    case TheoremId::kACC_IFF_INTERVAL: v = detail::check_acc_iff_interval(ctx); break;
    case TheoremId::kLEM_UNIQUE4: v = detail::check_lem_unique4(ctx); break;
    case TheoremId::kLEM_UNION1: v = detail::check_lem_union1(ctx); break;
    case TheoremId::kANTI8: v = detail::check_anti8(ctx); break;
    case TheoremId::kMATROID6: v = detail::check_matroid6(ctx); break;
    case TheoremId::kSIMPLICIAL7: v = detail::check_simplicial7(ctx); break;
    case TheoremId::kTRI_MATROID_C1: v = detail::check_tri_matroid_c1(ctx); break;
    case TheoremId::kTREE_ANTI_C2: v = detail::check_tree_anti_c2(ctx); break;
    case TheoremId::kTREE_TRIMMED: v = detail::check_tree_trimmed(ctx); break;
    case TheoremId::kSIMP_LOCAL_POSET2: v = detail::check_simp_local_poset2(ctx); break;
  }
  v.id = id;
  v.label = ctx.graph().label();
  v.graph6 = to_graph6(ctx.graph());
  return v;
}

inline TheoremVerdict verify(TheoremId id, const Graph& g,
                             const std::vector<std::string>* names = nullptr,
                             int cap = limits::kDefaultMaxN) {
  GraphContext ctx(g, names, cap);
  return verify(id, ctx);
}

/// The corona equivalence: the composed graph's family is a greedoid exactly
/// when every part's family is.
inline TheoremVerdict verify_corona(const Graph& x, const std::vector<Graph>& parts,
                                    int cap = limits::kDefaultMaxN) {
  Graph c = corona(x, parts);
  check_cap(c, cap, "verify_corona");
  TheoremVerdict v;
  v.id = TheoremId::kCORONA333;
  v.label = c.label();
  v.graph6 = to_graph6(c);
  v.applicable = true;

  GraphContext whole(c, nullptr, cap);
  bool lhs = whole.psi_greedoid();
  bool rhs = true;
  int bad_part = -1;
  for (size_t i = 0; i < parts.size(); ++i) {
    GraphContext pc(parts[i], nullptr, cap);
    if (!pc.psi_greedoid()) {
      rhs = false;
      bad_part = static_cast<int>(i);
      break;
    }
  }
  if (lhs && !rhs) {
    v.holds = false;
    v.detail = "corona family is a greedoid, yet part " + std::to_string(bad_part) +
               " has a non-greedoid family";
    return v;
  }
  if (!lhs && rhs) {
    v.holds = false;
    v.detail = "every part family is a greedoid, yet the corona family " +
               detail::greedoid_failure_text(whole);
    return v;
  }
  v.holds = true;
  v.detail = lhs ? "corona and all parts have greedoid families"
                 : "corona and part " + std::to_string(bad_part) +
                       " both fail the greedoid axioms";
  return v;
}

// ---------------------------------------------------------------- sweeps

struct TheoremCount {
  std::uint64_t checked = 0;
  std::uint64_t applicable = 0;
  std::uint64_t held = 0;
  std::uint64_t violated = 0;
  std::uint64_t skipped = 0;
};

struct SweepViolation {
  TheoremId id{};
  std::string graph6;
  std::string detail;
};

struct SweepReport {
  std::vector<TheoremId> ids;
  std::map<TheoremId, TheoremCount> counts;
  std::vector<SweepViolation> violations;

  std::uint64_t total_violations() const {
    std::uint64_t out = 0;
    for (const auto& [id, c] : counts) out += c.violated;
    return out;
  }
};

struct SweepOptions {
  int jobs = 1;
  int cap = limits::kDefaultMaxN;
};

namespace detail {

inline void sweep_range(const Corpus& corpus, const std::vector<TheoremId>& ids,
                        std::uint64_t begin, std::uint64_t end, int cap,
                        SweepReport& out) {
  for (std::uint64_t i = begin; i < end; ++i) {
    Graph g = corpus.at(i);
    GraphContext ctx(g, nullptr, cap);
    std::string g6;
    for (TheoremId id : ids) {
      TheoremVerdict v;
      try {
        v = verify(id, ctx);
      } catch (const CapExceeded& e) {
        v.id = id;
        v.skipped = true;
        v.detail = e.what();
        v.graph6 = to_graph6(g);
      }
      TheoremCount& c = out.counts[id];
      ++c.checked;
      if (v.skipped) {
        ++c.skipped;
        continue;
      }
      if (v.applicable) ++c.applicable;
      if (!v.holds) {
        ++c.violated;
        out.violations.push_back({id, v.graph6, v.detail});
      } else if (v.applicable) {
        ++c.held;
      }
    }
  }
}

}  // namespace detail

/// Runs the requested checks over every graph of the corpus. Results are
/// independent of the worker count: counts are additive and violations are
/// fully sorted before returning.
inline SweepReport sweep(const Corpus& corpus, const std::vector<TheoremId>& ids,
                         const SweepOptions& opt = {}) {
  SweepReport report;
  report.ids = ids;
  for (TheoremId id : ids) report.counts[id];  // materialise zero rows

  std::uint64_t total = corpus.size();
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || total < 2) {
    detail::sweep_range(corpus, ids, 0, total, opt.cap, report);
  } else {
    std::vector<SweepReport> partial(static_cast<size_t>(jobs));
    std::vector<std::thread> workers;
    std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      std::uint64_t begin = std::min(total, w * chunk);
      std::uint64_t end = std::min(total, begin + chunk);
      workers.emplace_back([&, w, begin, end] {
        detail::sweep_range(corpus, ids, begin, end, opt.cap,
                            partial[static_cast<size_t>(w)]);
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& p : partial) {
      for (const auto& [id, c] : p.counts) {
        TheoremCount& dst = report.counts[id];
        dst.checked += c.checked;
        dst.applicable += c.applicable;
        dst.held += c.held;
        dst.violated += c.violated;
        dst.skipped += c.skipped;
      }
      report.violations.insert(report.violations.end(), p.violations.begin(),
                               p.violations.end());
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const SweepViolation& a, const SweepViolation& b) {
              if (a.id != b.id) return a.id < b.id;
              if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
              return a.detail < b.detail;
            });
  return report;
}

/// The corona equivalence over every assignment of the given parts to the
/// vertices of every base graph in the corpus.
inline SweepReport sweep_corona(const Corpus& bases, const std::vector<Graph>& part_choices,
                                int cap = limits::kDefaultMaxN) {
  SweepReport report;
  report.ids = {TheoremId::kCORONA333};
  TheoremCount& c = report.counts[TheoremId::kCORONA333];
  for (std::uint64_t bi = 0; bi < bases.size(); ++bi) {
    Graph x = bases.at(bi);
    std::vector<size_t> pick(static_cast<size_t>(x.n()), 0);
    while (true) {
      std::vector<Graph> parts;
      parts.reserve(pick.size());
      for (size_t p : pick) parts.push_back(part_choices[p]);
      TheoremVerdict v = verify_corona(x, parts, cap);
      ++c.checked;
      if (v.skipped) {
        ++c.skipped;
      } else {
        if (v.applicable) ++c.applicable;
        if (!v.holds) {
          ++c.violated;
          report.violations.push_back({v.id, v.graph6, v.detail});
        } else if (v.applicable) {
          ++c.held;
        }
      }
      // next assignment, odometer style
      size_t pos = 0;
      while (pos < pick.size()) {
        if (++pick[pos] < part_choices.size()) break;
        pick[pos] = 0;
        ++pos;
      }
      if (pos == pick.size()) break;
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const SweepViolation& a, const SweepViolation& b) {
              if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
              return a.detail < b.detail;
            });
  return report;
}

// ------------------------------------------------------- counterexample search

struct PredicateAtom {
  std::string name;
  bool negated = false;
};

struct Predicate {
  std::string text;
  std::vector<PredicateAtom> atoms;
};

inline const std::vector<std::string>& predicate_vocabulary() {
  static const std::vector<std::string> kNames = {
      "true",          "false",
      "forest",        "tree",
      "connected",     "bipartite",
      "triangle-free", "simplicial-graph",
      "well-covered",  "very-well-covered",
      "koenig-egervary", "unique-mss",
      "all-mm-ur",     "psi-accessible",
      "psi-exchange",  "psi-hereditary",
      "psi-union-closed", "psi-greedoid",
      "psi-matroid",   "psi-antimatroid",
      "psi-interval-greedoid", "psi-local-poset",
  };
  return kNames;
}

/// Conjunctions of optionally negated named tests: "bipartite+!psi-greedoid".
inline Predicate parse_predicate(const std::string& text) {
  Predicate p;
  p.text = text;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find('+', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    PredicateAtom atom;
    if (!tok.empty() && tok[0] == '!') {
      atom.negated = true;
      tok = tok.substr(1);
    }
    const auto& vocab = predicate_vocabulary();
    if (std::find(vocab.begin(), vocab.end(), tok) == vocab.end())
      throw ParseError("unknown predicate '" + tok + "'");
    atom.name = tok;
    p.atoms.push_back(atom);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return p;
}

namespace detail {

inline bool eval_atom(const std::string& name, GraphContext& ctx) {
  const Graph& g = ctx.graph();
  if (name == "true") return true;
  if (name == "false") return false;
  if (name == "forest") return ctx.forest();
  if (name == "tree") return ctx.tree();
  if (name == "connected") return g.is_connected();
  if (name == "bipartite") return ctx.bipartite();
  if (name == "triangle-free") return ctx.triangle_free();
  if (name == "simplicial-graph") return ctx.simplicial().is_simplicial_graph;
  if (name == "well-covered") return is_well_covered(g, ctx.cap());
  if (name == "very-well-covered") return is_very_well_covered(g, ctx.cap());
  if (name == "koenig-egervary")
    return koenig_egervary_mask(ctx.alpha(), ctx.mu(), ctx.alpha().full_mask());
  if (name == "unique-mss") return ctx.omega().sets.size() == 1;
  if (name == "all-mm-ur") {
    const MaxMatchingScan& s = ctx.ur_scan();
    if (s.truncated) throw CapExceeded("matching enumeration cap reached");
    return s.all_restricted;
  }
  if (name == "psi-accessible") return ctx.psi_accessible().ok;
  if (name == "psi-exchange") return ctx.psi_exchange().ok;
  if (name == "psi-hereditary") return ctx.psi_hereditary().ok;
  if (name == "psi-union-closed") return ctx.psi_union_closed().ok;
  if (name == "psi-greedoid") return ctx.psi_greedoid();
  if (name == "psi-matroid") return ctx.psi_matroid();
  if (name == "psi-antimatroid") return ctx.psi_antimatroid();
  if (name == "psi-interval-greedoid") return ctx.classification().interval_greedoid;
  if (name == "psi-local-poset") return ctx.classification().local_poset;
  throw ParseError("unknown predicate '" + name + "'");
}

inline bool eval_predicate(const Predicate& p, GraphContext& ctx,
                           std::string* failed_atom = nullptr) {
  for (const auto& a : p.atoms) {
    bool val = eval_atom(a.name, ctx);
    if (a.negated) val = !val;
    if (!val) {
      if (failed_atom) *failed_atom = (a.negated ? "!" : "") + a.name;
      return false;
    }
  }
  return true;
}

}  // namespace detail

struct SearchResult {
  bool found = false;
  std::string graph6;
  std::string detail;
  std::uint64_t examined = 0;
};

/// First corpus graph satisfying the hypothesis but not the conclusion.
/// `limit` bounds how many graphs are examined (0 = whole corpus).
inline SearchResult search_counterexample(const Corpus& corpus,
                                          const Predicate& hypothesis,
                                          const Predicate& conclusion,
                                          std::uint64_t limit = 0,
                                          int cap = limits::kDefaultMaxN) {
  SearchResult out;
  std::uint64_t total = corpus.size();
  if (limit != 0) total = std::min(total, limit);
  for (std::uint64_t i = 0; i < total; ++i) {
    Graph g = corpus.at(i);
    GraphContext ctx(g, nullptr, cap);
    ++out.examined;
    if (!detail::eval_predicate(hypothesis, ctx)) continue;
    std::string failed;
    if (detail::eval_predicate(conclusion, ctx, &failed)) continue;
    out.found = true;
    out.graph6 = to_graph6(g);
    out.detail = "hypothesis '" + hypothesis.text + "' holds but conclusion atom '" +
                 failed + "' fails";
    return out;
  }
  return out;
}

}  // namespace psilab

#endif  // PSILAB_THEOREMS_HPP
