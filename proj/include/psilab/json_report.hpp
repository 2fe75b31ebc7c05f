#ifndef PSILAB_JSON_REPORT_HPP
#define PSILAB_JSON_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "psilab/fixtures.hpp"
#include "psilab/graph6.hpp"
#include "psilab/set_system.hpp"
#include "psilab/stability.hpp"
#include "psilab/theorems.hpp"

namespace psilab {

using nlohmann::json;  // object keys are kept sorted: byte-stable output

inline std::string witness_text(const Witness& w,
                                const std::vector<std::string>* names) {
  auto s = [&](size_t i) { return format_set(w.sets[i], names); };
  if (w.kind == "accessible")
    return "member " + s(0) + " has no removable element";
  if (w.kind == "exchange")
    return "no element of " + s(0) + " augments " + s(1);
  if (w.kind == "hereditary")
    return "member " + s(0) + " misses its subset " + s(1);
  if (w.kind == "union_closed")
    return "union of " + s(0) + " and " + s(1) + " is missing";
  if (w.kind == "interval" && w.sets.size() == 2)
    return "restriction below " + s(0) + ": member " + s(1) +
           " has no removable element";
  if (w.kind == "interval")
    return "restriction below " + s(0) + ": union of " + s(1) + " and " + s(2) +
           " is missing";
  if (w.kind == "local_poset")
    return "below " + s(2) + ": union or intersection of " + s(0) + " and " + s(1) +
           " leaves the family";
  std::string out = w.kind + ":";
  for (size_t i = 0; i < w.sets.size(); ++i) out += " " + s(i);
  return out;
}

inline json witness_json(const Witness& w, const std::vector<std::string>* names) {
  json sets = json::array();
  for (const auto& vs : w.sets) sets.push_back(format_set(vs, names));
  return json{{"kind", w.kind}, {"sets", sets}, {"text", witness_text(w, names)}};
}

inline json classification_json(const ClassificationReport& r,
                                const std::vector<std::string>* names = nullptr) {
  json witnesses = json::object();
  for (const auto& [flag, w] : r.witnesses) witnesses[flag] = witness_json(w, names);
  return json{
      {"accessible", r.accessible},
      {"exchange", r.exchange},
      {"hereditary", r.hereditary},
      {"union_closed", r.union_closed},
      {"greedoid", r.greedoid},
      {"matroid", r.matroid},
      {"antimatroid", r.antimatroid},
      {"interval_greedoid", r.interval_greedoid},
      {"local_poset", r.local_poset},
      {"witnesses", witnesses},
  };
}

inline json family_json(const SetSystem& f, const std::vector<std::string>* names = nullptr) {
  json sets = json::array();
  for (Word m : f.masks_by_card())
    sets.push_back(format_set(VertexSet(m, f.ground()), names));
  return sets;
}

inline json psi_report_json(const Graph& g, const SetSystem& psi, const OmegaFamily& om,
                            const std::vector<std::string>* names = nullptr) {
  json out{
      {"graph6", to_graph6(g)},
      {"n", g.n()},
      {"edges", g.edge_count()},
      {"alpha", om.alpha},
      {"psi_count", psi.size()},
      {"omega_count", om.sets.size()},
      {"psi", family_json(psi, names)},
      {"omega", family_json(om.sets, names)},
  };
  if (!g.label().empty()) out["label"] = g.label();
  return out;
}

inline json sweep_report_json(const SweepReport& r) {
  json out = json::array();
  for (TheoremId id : r.ids) {
    const TheoremCount& c = r.counts.at(id);
    json witnesses = json::array();
    for (const auto& v : r.violations)
      if (v.id == id)
        witnesses.push_back(json{{"graph6", v.graph6}, {"detail", v.detail}});
    out.push_back(json{
        {"theorem", theorem_name(id)},
        {"checked", c.checked},
        {"applicable", c.applicable},
        {"violated", c.violated},
        {"skipped", c.skipped},
        {"witnesses", witnesses},
    });
  }
  return out;
}

inline json verdict_json(const TheoremVerdict& v) {
  json out{
      {"theorem", theorem_name(v.id)},
      {"graph6", v.graph6},
      {"applicable", v.applicable},
      {"holds", v.holds},
      {"skipped", v.skipped},
      {"detail", v.detail},
  };
  if (!v.label.empty()) out["label"] = v.label;
  return out;
}

inline json search_json(const SearchResult& s) {
  json out{{"found", s.found}, {"examined", s.examined}};
  if (s.found) {
    out["graph6"] = s.graph6;
    out["detail"] = s.detail;
  }
  return out;
}

}  // namespace psilab

#endif  // PSILAB_JSON_REPORT_HPP
