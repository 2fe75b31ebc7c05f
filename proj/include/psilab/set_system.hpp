#ifndef PSILAB_SET_SYSTEM_HPP
#define PSILAB_SET_SYSTEM_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "psilab/core.hpp"
#include "psilab/vertex_set.hpp"

namespace psilab {

/// Family of non-empty subsets of {0..ground-1}. The empty set is never
/// stored: a family whose stored list is empty represents {empty set}, and
/// every axiom below treats the empty set as implicitly present (singletons
/// are accessible by definition; subset/union/intersection checks admit it).
/// Masks are kept deduplicated in increasing numeric order, which is the
/// canonical order for equality.
class SetSystem {
 public:
  explicit SetSystem(int ground) : ground_(checked_ground(ground)) {}

  static SetSystem from_masks(int ground, std::vector<Word> masks) {
    SetSystem f(ground);
    Word limit = ground >= 64 ? ~Word(0) : (Word(1) << ground) - 1;
    for (Word m : masks)
      if ((m & ~limit) != 0)
        throw ContractViolation("SetSystem: member out of ground");
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (!masks.empty() && masks.front() == 0)
      masks.erase(masks.begin());
    f.masks_ = std::move(masks);
    return f;
  }

  void insert(const VertexSet& s) {
    if (s.ground() != ground_)
      throw ContractViolation("SetSystem: ground mismatch");
    if (s.bits() == 0) return;
    auto it = std::lower_bound(masks_.begin(), masks_.end(), s.bits());
    if (it == masks_.end() || *it != s.bits()) masks_.insert(it, s.bits());
  }

  int ground() const { return ground_; }
  size_t size() const { return masks_.size(); }
  const std::vector<Word>& masks() const { return masks_; }
  VertexSet set_at(size_t i) const { return VertexSet(masks_.at(i), ground_); }

  bool contains_mask(Word m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
  }
  bool contains(const VertexSet& s) const {
    if (s.ground() != ground_)
      throw ContractViolation("SetSystem: ground mismatch");
    return contains_mask(s.bits());
  }

  /// Members reordered by (cardinality, numeric mask); the scan order used
  /// everywhere a smallest witness is wanted.
  std::vector<Word> masks_by_card() const {
    std::vector<Word> v = masks_;
    std::sort(v.begin(), v.end(), [](Word a, Word b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    return v;
  }

  bool operator==(const SetSystem& o) const = default;

 private:
  static int checked_ground(int ground) {
    if (ground < 0 || ground > limits::kMaxVertices)
      throw ContractViolation("SetSystem: ground out of range");
    return ground;
  }

  int ground_;
  std::vector<Word> masks_;
};

/// Counterexample payload for a failed check. `kind` names the primitive
/// whose re-check reproduces the failure; `sets` carries its operands:
///   accessible        [X]          no x in X with X-{x} in F
///   exchange          [X, Y]       |X|=|Y|+1, no x in X-Y with Y+{x} in F
///   hereditary        [X, S]       S a non-empty subset of X missing from F
///   union_closed      [X, Y]       X union Y missing from F
///   interval          [X, A, B]    A,B inside the restriction below X,
///                                  A union B missing from F
///   local_poset       [X, Y, Z]    X,Y proper subsets of Z; X union Y or
///                                  X intersect Y (non-empty) missing from F
struct Witness {
  std::string kind;
  std::vector<VertexSet> sets;
};

struct AxiomResult {
  bool ok = true;
  Witness witness;
};

namespace detail {

inline bool member_accessible(const SetSystem& f, Word x) {
  if (std::popcount(x) <= 1) return true;
  Word rest = x;
  while (rest) {
    Word bit = rest & (0 - rest);
    rest ^= bit;
    if (f.contains_mask(x ^ bit)) return true;
  }
  return false;
}

}  // namespace detail

/// Accessibility: every member loses some element and stays in the family
/// (singletons reach the implicit empty set). Witness: smallest member,
/// by cardinality then mask, with no such element.
inline AxiomResult is_accessible(const SetSystem& f) {
  for (Word x : f.masks_by_card())
    if (!detail::member_accessible(f, x))
      return {false, {"accessible", {VertexSet(x, f.ground())}}};
  return {};
}

/// Exchange: for |X| = |Y|+1 some x in X-Y augments Y inside the family.
inline AxiomResult satisfies_exchange(const SetSystem& f) {
  std::vector<std::vector<Word>> by_card(static_cast<size_t>(f.ground()) + 2);
  for (Word m : f.masks())
    by_card[static_cast<size_t>(std::popcount(m))].push_back(m);
  for (size_t k = 1; k + 1 < by_card.size(); ++k) {
    for (Word x : by_card[k + 1]) {
      for (Word y : by_card[k]) {
        Word cand = x & ~y;
        bool found = false;
        while (cand) {
          Word bit = cand & (0 - cand);
          cand ^= bit;
          if (f.contains_mask(y | bit)) {
            found = true;
            break;
          }
        }
        if (!found)
          return {false,
                  {"exchange",
                   {VertexSet(x, f.ground()), VertexSet(y, f.ground())}}};
      }
    }
  }
  return {};
}

/// Hereditary: every non-empty subset of a member is a member.
inline AxiomResult is_hereditary(const SetSystem& f) {
  for (Word x : f.masks_by_card()) {
    Word best = 0;
    bool missing = false;
    for (Word s = (x - 1) & x; s != 0; s = (s - 1) & x) {
      if (!f.contains_mask(s)) {
        if (!missing || std::popcount(s) < std::popcount(best) ||
            (std::popcount(s) == std::popcount(best) && s < best)) {
          best = s;
          missing = true;
        }
      }
    }
    if (missing)
      return {false,
              {"hereditary",
               {VertexSet(x, f.ground()), VertexSet(best, f.ground())}}};
  }
  return {};
}

/// Union-closure over stored members. Witness: violating pair minimized by
/// (larger cardinality, smaller cardinality, larger-side mask, smaller-side
/// mask) so the flattest counterexample wins.
inline AxiomResult is_union_closed(const SetSystem& f) {
  const std::vector<Word> order = f.masks_by_card();
  bool found = false;
  std::array<unsigned long long, 4> best_key{};
  Word best_a = 0, best_b = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = i + 1; j < order.size(); ++j) {
      Word a = order[i], b = order[j];  // (card,mask) of a <= of b
      Word u = a | b;
      if (u == b || f.contains_mask(u)) continue;
      std::array<unsigned long long, 4> key{
          static_cast<unsigned long long>(std::popcount(b)),
          static_cast<unsigned long long>(std::popcount(a)), b, a};
      if (!found || key < best_key) {
        found = true;
        best_key = key;
        best_a = a;
        best_b = b;
      }
    }
  }
  if (found)
    return {false,
            {"union_closed",
             {VertexSet(best_a, f.ground()), VertexSet(best_b, f.ground())}}};
  return {};
}

namespace detail {

/// Local-poset condition alone, without the greedoid gate: for members
/// X,Y properly below a member Z, X|Y is a member and X&Y is a member or
/// empty.
inline AxiomResult local_poset_property(const SetSystem& f) {
  const std::vector<Word> order = f.masks_by_card();
  for (Word z : order) {
    std::vector<Word> below;
    for (Word m : order)
      if (m != z && (m & ~z) == 0) below.push_back(m);
    for (size_t i = 0; i < below.size(); ++i) {
      for (size_t j = i + 1; j < below.size(); ++j) {
        Word x = below[i], y = below[j];
        Word u = x | y, w = x & y;
        bool bad_union = !f.contains_mask(u);
        bool bad_meet = w != 0 && !f.contains_mask(w);
        if (bad_union || bad_meet)
          return {false,
                  {"local_poset",
                   {VertexSet(x, f.ground()), VertexSet(y, f.ground()),
                    VertexSet(z, f.ground())}}};
      }
    }
  }
  return {};
}

}  // namespace detail

/// Flag bundle plus witnesses for the failed ones, keyed by flag name. Each
/// witness re-checks: running its `kind` primitive on the payload reproduces
/// the violation. Derived flags reuse the witness of the primitive that sank
/// them. local_poset means "greedoid with the local poset property".
struct ClassificationReport {
  bool accessible = false;
  bool exchange = false;
  bool hereditary = false;
  bool union_closed = false;
  bool greedoid = false;
  bool matroid = false;
  bool antimatroid = false;
  bool interval_greedoid = false;
  bool local_poset = false;
  std::map<std::string, Witness> witnesses;
};

/// Interval property by definition: greedoid whose restriction below every
/// member is an antimatroid (accessible and union-closed inside the
/// restriction).
inline AxiomResult is_interval_greedoid(const SetSystem& f) {
  AxiomResult acc = is_accessible(f);
  if (!acc.ok) return acc;
  AxiomResult ex = satisfies_exchange(f);
  if (!ex.ok) return ex;
  const std::vector<Word> order = f.masks_by_card();
  for (Word x : order) {
    std::vector<Word> below;
    for (Word m : order)
      if ((m & ~x) == 0) below.push_back(m);
    for (Word y : below)
      if (!detail::member_accessible(f, y))
        return {false,
                {"interval",
                 {VertexSet(x, f.ground()), VertexSet(y, f.ground())}}};
    for (size_t i = 0; i < below.size(); ++i)
      for (size_t j = i + 1; j < below.size(); ++j) {
        Word u = below[i] | below[j];
        if (!f.contains_mask(u))
          return {false,
                  {"interval",
                   {VertexSet(x, f.ground()), VertexSet(below[i], f.ground()),
                    VertexSet(below[j], f.ground())}}};
      }
  }
  return {};
}

/// Local poset check as specified for greedoids; rejects non-greedoids.
inline AxiomResult is_local_poset(const SetSystem& f) {
  AxiomResult acc = is_accessible(f);
  if (!acc.ok)
    throw ContractViolation(
        "local poset: family is not a greedoid (accessibility fails)");
  AxiomResult ex = satisfies_exchange(f);
  if (!ex.ok)
    throw ContractViolation(
        "local poset: family is not a greedoid (exchange fails)");
  return detail::local_poset_property(f);
}

inline ClassificationReport classify(const SetSystem& f) {
  ClassificationReport r;
  AxiomResult acc = is_accessible(f);
  AxiomResult ex = satisfies_exchange(f);
  AxiomResult her = is_hereditary(f);
  AxiomResult uni = is_union_closed(f);
  AxiomResult lp = detail::local_poset_property(f);
  r.accessible = acc.ok;
  r.exchange = ex.ok;
  r.hereditary = her.ok;
  r.union_closed = uni.ok;
  r.greedoid = acc.ok && ex.ok;
  r.matroid = r.greedoid && her.ok;
  r.antimatroid = r.greedoid && uni.ok;
  r.local_poset = r.greedoid && lp.ok;

  const Witness* greedoid_w = !acc.ok ? &acc.witness : (!ex.ok ? &ex.witness : nullptr);
  if (!acc.ok) r.witnesses["accessible"] = acc.witness;
  if (!ex.ok) r.witnesses["exchange"] = ex.witness;
  if (!her.ok) r.witnesses["hereditary"] = her.witness;
  if (!uni.ok) r.witnesses["union_closed"] = uni.witness;
  if (!r.greedoid) r.witnesses["greedoid"] = *greedoid_w;
  if (!r.matroid)
    r.witnesses["matroid"] = greedoid_w ? *greedoid_w : her.witness;
  if (!r.antimatroid)
    r.witnesses["antimatroid"] = greedoid_w ? *greedoid_w : uni.witness;
  if (!r.local_poset)
    r.witnesses["local_poset"] = greedoid_w ? *greedoid_w : lp.witness;

  if (r.greedoid) {
    AxiomResult iv = is_interval_greedoid(f);
    r.interval_greedoid = iv.ok;
    if (!iv.ok) r.witnesses["interval_greedoid"] = iv.witness;
  } else {
    r.interval_greedoid = false;
    r.witnesses["interval_greedoid"] = *greedoid_w;
  }
  return r;
}

/// Chain of members from a singleton up to S, each step adding one element.
/// Depth-first construction that prefers adding the smallest vertex first;
/// finds a chain exactly when one exists.
inline std::optional<std::vector<VertexSet>> accessibility_chain(
    const SetSystem& f, const VertexSet& s) {
  if (s.ground() != f.ground())
    throw ContractViolation("accessibility_chain: ground mismatch");
  if (!f.contains(s))
    throw ContractViolation("accessibility_chain: set not in family");
  std::vector<Word> stack_sets;
  std::vector<Word> dead;
  Word target = s.bits();

  auto known_dead = [&](Word m) {
    return std::binary_search(dead.begin(), dead.end(), m);
  };
  auto mark_dead = [&](Word m) {
    dead.insert(std::lower_bound(dead.begin(), dead.end(), m), m);
  };

  std::function<bool(Word)> grow = [&](Word cur) -> bool {
    if (cur == target) return true;
    Word cand = target & ~cur;
    while (cand) {
      Word bit = cand & (0 - cand);
      cand ^= bit;
      Word next = cur | bit;
      if (!f.contains_mask(next) || known_dead(next)) continue;
      stack_sets.push_back(next);
      if (grow(next)) return true;
      stack_sets.pop_back();
      mark_dead(next);
    }
    return false;
  };
  if (!grow(0)) return std::nullopt;
  std::vector<VertexSet> chain;
  for (Word m : stack_sets) chain.emplace_back(m, f.ground());
  return chain;
}

/// Checks a claimed decomposition F = M (a matroid) intersect AM (an
/// antimatroid). All comparisons ignore the empty set.
inline bool verify_trimmed_witness(const SetSystem& f, const SetSystem& m,
                                   const SetSystem& am) {
  if (f.ground() != m.ground() || f.ground() != am.ground())
    throw ContractViolation("trimmed witness: ground mismatch");
  std::vector<Word> inter;
  std::set_intersection(m.masks().begin(), m.masks().end(),
                        am.masks().begin(), am.masks().end(),
                        std::back_inserter(inter));
  if (inter != f.masks()) return false;
  ClassificationReport cm = classify(m);
  if (!cm.matroid) return false;
  ClassificationReport ca = classify(am);
  return ca.antimatroid;
}

/// Family literal: sets separated by ';' or newlines. Each set is "∅", "{}"
/// or empty for the empty set; a run of letters ("ac" = {a,c}); or
/// comma-separated vertices, each a letter or a decimal index. Letters map
/// a..z to 0..25. Ground defaults to one past the largest vertex mentioned.
inline SetSystem parse_family(std::string_view text, int ground = -1) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ';' || c == '\n') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  tokens.push_back(cur);

  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };

  std::vector<Word> masks;
  int max_v = -1;
  long ordinal = 0;
  for (std::string raw : tokens) {
    ++ordinal;
    std::string t = trim(std::move(raw));
    if (t.empty() || t == "{}" || t == "∅") {
      continue;  // empty set: implicitly present, never stored
    }
    Word m = 0;
    auto add_vertex = [&](int v) {
      if (v < 0 || v > limits::kMaxVertices)
        throw ParseError("family: vertex out of range", ordinal);
      m |= Word(1) << v;
      max_v = std::max(max_v, v);
    };
    if (t.find(',') != std::string::npos) {
      std::string piece;
      std::istringstream ps(t);
      while (std::getline(ps, piece, ',')) {
        piece = trim(piece);
        if (piece.empty()) throw ParseError("family: empty vertex token", ordinal);
        if (piece.size() == 1 && std::isalpha(static_cast<unsigned char>(piece[0]))) {
          add_vertex(std::tolower(static_cast<unsigned char>(piece[0])) - 'a');
        } else {
          try {
            size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            add_vertex(v);
          } catch (const std::exception&) {
            throw ParseError("family: bad vertex token \"" + piece + "\"", ordinal);
          }
        }
      }
    } else {
      bool all_alpha = std::all_of(t.begin(), t.end(), [](unsigned char c) {
        return std::isalpha(c);
      });
      bool all_digit = std::all_of(t.begin(), t.end(), [](unsigned char c) {
        return std::isdigit(c);
      });
      if (all_alpha) {
        for (char c : t)
          add_vertex(std::tolower(static_cast<unsigned char>(c)) - 'a');
      } else if (all_digit) {
        add_vertex(std::stoi(t));
      } else {
        throw ParseError("family: bad set token \"" + t + "\"", ordinal);
      }
    }
    masks.push_back(m);
  }
  int g = ground >= 0 ? ground : max_v + 1;
  if (ground >= 0 && max_v >= ground)
    throw ParseError("family: vertex exceeds declared ground", 0);
  return SetSystem::from_masks(std::max(g, 0), std::move(masks));
}

}  // namespace psilab

#endif  // PSILAB_SET_SYSTEM_HPP
