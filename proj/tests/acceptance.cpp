// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
#include <bit>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "psilab/psilab.hpp"

using namespace psilab;

namespace {

struct Gate {
  bool ok = true;
  std::string first_failure;
  int rows = 0;

  void req(bool cond, const std::string& what) {
    ++rows;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

int failures = 0;

template <typename Fn>
void criterion(int number, const std::string& title, Fn body) {
  Gate gate;
  auto start = std::chrono::steady_clock::now();
  std::string extra = body(gate);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  std::string line = gate.ok ? "[PASS]" : "[FAIL]";
  line += " criterion " + std::to_string(number) + ": " + title;
  if (!extra.empty()) line += " — " + extra;
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%d checks, %.1fs)", gate.rows, secs);
  line += buf;
  if (!gate.ok) {
    line += "\n       first failing check: " + gate.first_failure;
    ++failures;
  }
  std::printf("%s\n", line.c_str());
  std::fflush(stdout);
}

bool mask_stable(const Graph& g, Word m) {
  for (Word r = m; r;) {
    int v = std::countr_zero(r);
    r &= r - 1;
    if (g.adj_bits(v) & m) return false;
  }
  return true;
}

int naive_alpha(const Graph& g, Word inside) {
  int best = 0;
  for (Word m = inside;; m = (m - 1) & inside) {
    if (mask_stable(g, m)) best = std::max(best, std::popcount(m));
    if (m == 0) break;
  }
  return best;
}

Word mask_closed(const Graph& g, Word m) {
  Word out = m;
  for (Word r = m; r;) {
    int v = std::countr_zero(r);
    r &= r - 1;
    out |= g.closed_bits(v);
  }
  return out;
}

std::set<Word> naive_psi(const Graph& g) {
  std::set<Word> out;
  Word full = (Word(1) << g.n()) - 1;
  for (Word a = 1; a <= full; ++a)
    if (mask_stable(g, a) &&
        std::popcount(a) == naive_alpha(g, mask_closed(g, a)))
      out.insert(a);
  return out;
}

std::string reference_graph6(const Graph& g) {
  std::string bits;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) bits += g.has_edge(i, j) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(63 + g.n()));
  for (size_t k = 0; k < bits.size(); k += 6) {
    int val = 0;
    for (size_t b = 0; b < 6; ++b) val = val * 2 + (bits[k + b] == '1');
    out += static_cast<char>(63 + val);
  }
  return out;
}

const Fixture& fx(const std::string& name) {
  const Fixture* f = find_fixture(name);
  if (!f) throw ContractViolation("missing fixture " + name);
  return *f;
}

std::string fixture_claims(Gate& g) {
  {  // seven-vertex introduction example
    const Fixture& f = fx("fig10-G");
    SetSystem psi = enumerate_psi(f.graph).sets;
    g.req(psi.contains(f.set_of({"a"})), "fig10-G: {a} in psi");
    g.req(psi.contains(f.set_of({"e", "d"})), "fig10-G: {e,d} in psi");
    g.req(psi.contains(f.set_of({"d", "f"})), "fig10-G: {d,f} in psi");
    g.req(psi.contains(f.set_of({"e", "g"})), "fig10-G: {e,g} in psi");
    g.req(!psi.contains(f.set_of({"b"})), "fig10-G: {b} not in psi");
    g.req(!psi.contains(f.set_of({"e"})), "fig10-G: {e} not in psi");
    g.req(!psi.contains(f.set_of({"g"})), "fig10-G: {g} not in psi");
    OmegaFamily om = max_stable(f.graph);
    g.req(om.sets.contains(f.set_of({"a", "d", "f"})), "fig10-G: {a,d,f} maximum");
    g.req(om.sets.contains(f.set_of({"b", "e", "g"})), "fig10-G: {b,e,g} maximum");
  }
  {  // six-vertex pair: greedoid vs inaccessible
    ClassificationReport rg = classify(enumerate_psi(fx("Fig101-G").graph).sets);
    g.req(rg.greedoid, "Fig101-G: greedoid");
    const Fixture& h = fx("Fig101-H");
    AxiomResult acc = is_accessible(enumerate_psi(h.graph).sets);
    g.req(!acc.ok, "Fig101-H: accessibility fails");
    g.req(acc.witness.sets.size() == 1 &&
              acc.witness.sets[0] == h.set_of({"y", "t"}),
          "Fig101-H: witness {y,t}");
    auto edge = [&](const char* a, const char* b) {
      int u = h.index_of(a), v = h.index_of(b);
      return u < v ? std::pair{u, v} : std::pair{v, u};
    };
    Matching m1{{edge("u", "v"), edge("x", "w")}};
    Matching m2{{edge("x", "y"), edge("t", "v")}};
    g.req(is_uniquely_restricted(h.graph, m1), "Fig101-H: {uv,xw} UR");
    g.req(!is_uniquely_restricted(h.graph, m2), "Fig101-H: {xy,tv} not UR");
  }
  {  // triangle-free non-bipartite pair
    const Fixture& f = fx("fig2922-G");
    SetSystem psi = enumerate_psi(f.graph).sets;
    VertexSet bc = f.set_of({"b", "c"});
    g.req(psi.contains(bc), "fig2922-G: {b,c} in psi");
    Graph local = f.graph.induced(f.graph.closed_neighborhood(bc)).first;
    g.req(!is_koenig_egervary(local), "fig2922-G: N[{b,c}] breaks alpha+mu=|V|");
    ClassificationReport r = classify(psi);
    g.req(!r.greedoid, "fig2922-G: not a greedoid");
    ClassificationReport rh = classify(enumerate_psi(fx("fig2922-H").graph).sets);
    g.req(rh.greedoid, "fig2922-H: greedoid");
  }
  {  // abstract families next to the graph-derived ones
    ClassificationReport rf = classify(parse_family("∅;a;b;c;ab;ac;abc"));
    g.req(rf.greedoid, "three-element family: greedoid");
    ClassificationReport ra = classify(parse_family("∅;a;c;ab;ac;cd;abc;acd;abcd"));
    g.req(ra.antimatroid, "four-element family: antimatroid");
  }
  {  // path family classification row
    ClassificationReport r2 = classify(enumerate_psi(fx("P2").graph).sets);
    g.req(r2.matroid && !r2.antimatroid, "P2: matroid, not antimatroid");
    ClassificationReport r5 = classify(enumerate_psi(fx("P5").graph).sets);
    g.req(r5.antimatroid && !r5.matroid && !r5.local_poset,
          "P5: antimatroid only, local poset fails");
    SetSystem psi4 = enumerate_psi(fx("P4").graph).sets;
    ClassificationReport r4 = classify(psi4);
    g.req(r4.greedoid && !r4.matroid && !r4.antimatroid && r4.local_poset,
          "P4: greedoid + local poset, neither matroid nor antimatroid");
    g.req(verify_trimmed_witness(psi4, parse_family("∅;a;b;c;d;ac;ad;bc;bd"),
                                 parse_family("a;d;ac;ad;bd;abd;acd;abcd")),
          "P4: trimmed decomposition verifies");
    ClassificationReport r6 = classify(enumerate_psi(fx("P6").graph).sets);
    g.req(!r6.matroid && !r6.antimatroid, "P6: neither matroid nor antimatroid");
    const Fixture& p7 = fx("P7");
    SetSystem psi7 = enumerate_psi(p7.graph).sets;
    VertexSet a = p7.set_of({"a", "c"});
    VertexSet b = p7.set_of({"a", "d"});
    VertexSet c = p7.set_of({"c", "e", "g"});
    g.req(psi7.contains(a), "P7: A in psi");
    g.req(psi7.contains(c), "P7: C in psi");
    g.req(!psi7.contains(VertexSet(a.bits() & ~b.bits(), 7)), "P7: A-B not in psi");
    g.req(!psi7.contains(VertexSet(a.bits() & c.bits(), 7)),
          "P7: intersection of A and C not in psi");
  }
  {  // inaccessible triple
    const Fixture& f = fx("fig1010-G");
    SetSystem psi = enumerate_psi(f.graph).sets;
    VertexSet abc = f.set_of({"a", "b", "c"});
    g.req(psi.contains(abc), "fig1010-G: {a,b,c} in psi");
    g.req(!psi.contains(f.set_of({"a", "b"})), "fig1010-G: {a,b} not in psi");
    g.req(!psi.contains(f.set_of({"a", "c"})), "fig1010-G: {a,c} not in psi");
    g.req(!psi.contains(f.set_of({"b", "c"})), "fig1010-G: {b,c} not in psi");
    g.req(!is_accessible(psi).ok, "fig1010-G: accessibility fails");
  }
  {  // remaining figure rows
    const Fixture& g1 = fx("Fig22-G1");
    AxiomResult acc = is_accessible(enumerate_psi(g1.graph).sets);
    g.req(!acc.ok && acc.witness.sets[0] == g1.set_of({"y", "z"}),
          "Fig22-G1: inaccessible with witness {y,z}");
    g.req(classify(enumerate_psi(fx("Fig22-G2").graph).sets).antimatroid,
          "Fig22-G2: antimatroid");
    g.req(classify(enumerate_psi(fx("Fig30-G1").graph).sets).antimatroid,
          "Fig30-G1: antimatroid");
    g.req(classify(enumerate_psi(fx("Fig30-G2").graph).sets).antimatroid,
          "Fig30-G2: antimatroid");
    const Fixture& g3 = fx("Fig30-G3");
    ClassificationReport r3 = classify(enumerate_psi(g3.graph).sets);
    g.req(!r3.greedoid, "Fig30-G3: not a greedoid");
    g.req(r3.witnesses.count("greedoid") &&
              r3.witnesses.at("greedoid").sets[0] == g3.set_of({"x", "y"}),
          "Fig30-G3: witness {x,y}");
    g.req(!classify(enumerate_psi(fx("Fig232-G1").graph).sets).greedoid,
          "Fig232-G1: not a greedoid");
    ClassificationReport rg2 = classify(enumerate_psi(fx("Fig232-G2").graph).sets);
    g.req(rg2.greedoid && !rg2.matroid, "Fig232-G2: greedoid, not matroid");
    g.req(classify(enumerate_psi(fx("Fig232-G3").graph).sets).matroid,
          "Fig232-G3: matroid");
  }
  return "worked examples, abstract families, witness identities";
}

std::string oracle_equivalence(Gate& g) {
  std::uint64_t graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Graph gr = graph_from_edge_mask(n, mask);
      std::set<Word> expect = naive_psi(gr);
      std::vector<Word> got = enumerate_psi(gr).sets.masks();
      bool same = got.size() == expect.size() &&
                  std::equal(got.begin(), got.end(), expect.begin());
      ++graphs;
      g.req(same, "definition-scan mismatch on " + to_graph6(gr));
    }
  }
  g.req(graphs == 33867, "corpus covers every labeled graph up to order 6");
  for (const Fixture& f : named_corpus()) {
    if (f.graph.n() > 9) continue;
    std::set<Word> expect = naive_psi(f.graph);
    std::vector<Word> got = enumerate_psi(f.graph).sets.masks();
    g.req(got.size() == expect.size() &&
              std::equal(got.begin(), got.end(), expect.begin()),
          "definition-scan mismatch on fixture " + f.name);
  }
  return "all 33867 labeled graphs of order <= 6, plus the fixtures";
}

std::string theorem_sweep(Gate& g) {
  std::vector<TheoremId> ids{
      TheoremId::kNT1,          TheoremId::kBERGE5,
      TheoremId::kUNION3,       TheoremId::kACC_IFF_INTERVAL,
      TheoremId::kLEM_UNIQUE4,  TheoremId::kLEM_UNION1,
      TheoremId::kANTI8,        TheoremId::kMATROID6,
      TheoremId::kSIMPLICIAL7,  TheoremId::kSIMP_LOCAL_POSET2,
      TheoremId::kTRI33,        TheoremId::kTRI_MATROID_C1,
      TheoremId::kBIP22};
  SweepReport r = sweep(Corpus::labeled_up_to(6), ids);
  g.req(r.total_violations() == 0, "no violations at order <= 6");
  for (TheoremId id : ids) {
    const TheoremCount& c = r.counts.at(id);
    g.req(c.checked == 33867, theorem_name(id) + ": checked all 33867 graphs");
    g.req(c.violated == 0, theorem_name(id) + ": zero violations");
    g.req(c.skipped == 0, theorem_name(id) + ": zero skips");
    g.req(c.held == c.applicable, theorem_name(id) + ": held == applicable");
  }
  for (const SweepViolation& v : r.violations)
    g.req(false, theorem_name(v.id) + " violated on " + v.graph6 + ": " + v.detail);
  return "13 statements x 33867 graphs, zero violations, zero skips";
}

std::string tree_sweep(Gate& g) {
  std::vector<TheoremId> ids{TheoremId::kFOREST2, TheoremId::kTREE_ANTI_C2,
                             TheoremId::kTREE_TRIMMED};
  SweepReport r = sweep(Corpus::trees_up_to(9), ids);
  g.req(r.total_violations() == 0, "no violations over labeled trees");
  for (TheoremId id : ids) {
    const TheoremCount& c = r.counts.at(id);
    g.req(c.checked == 5063362, theorem_name(id) + ": checked all 5063362 trees");
    g.req(c.skipped == 0, theorem_name(id) + ": zero skips");
    g.req(c.held == c.applicable, theorem_name(id) + ": held == applicable");
  }
  g.req(r.counts.at(TheoremId::kFOREST2).applicable == 5063362,
        "FOREST2 applies to every tree");
  g.req(r.counts.at(TheoremId::kTREE_TRIMMED).applicable == 5063360,
        "TREE_TRIMMED applies to trees of order >= 3");
  return "all labeled trees up to order 9, uncapped";
}

std::string corona_sweep(Gate& g) {
  std::vector<Graph> parts{make_complete(1), make_complete(2), make_complete(3),
                           make_path(3), make_path(4)};
  SweepReport r = sweep_corona(Corpus::labeled_up_to(3), parts);
  const TheoremCount& c = r.counts.at(TheoremId::kCORONA333);
  g.req(c.checked == 1055, "5+50+1000 assignments over bases of order <= 3");
  g.req(c.violated == 0, "no violations");
  g.req(c.skipped == 0, "no skips");
  g.req(c.held == c.applicable && c.applicable == c.checked,
        "equivalence held everywhere");

  // a part whose own family is not a greedoid drives the false-false side
  const Graph& bad = fx("fig1010-G").graph;
  TheoremVerdict v1 = verify_corona(make_complete(1), {bad});
  g.req(v1.holds && v1.applicable, "single-vertex base with the irregular part");
  TheoremVerdict v2 = verify_corona(make_path(2), {bad, make_complete(2)});
  g.req(v2.holds, "irregular part in first position");
  g.req(v2.detail.find("both fail") != std::string::npos,
        "equivalence exercised on its negative side");
  TheoremVerdict v3 = verify_corona(make_path(2), {make_complete(2), bad});
  g.req(v3.holds, "irregular part in second position");
  TheoremVerdict v4 = verify_corona(make_path(3), {make_complete(1), bad, make_path(4)});
  g.req(v4.holds, "irregular part mid-base");
  return "1055 assignments plus irregular-part spot checks";
}

std::string graph6_round_trip(Gate& g) {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Graph gr = graph_from_edge_mask(n, mask);
      std::string enc = to_graph6(gr);
      Graph back = parse_graph6(enc);
      bool same = back.n() == gr.n();
      for (int v = 0; same && v < gr.n(); ++v)
        same = back.adj_bits(v) == gr.adj_bits(v);
      if (!same) g.req(false, "round trip broke on " + enc);
    }
  }
  g.req(true, "round trip over 1099 graphs");
  for (const Fixture& f : named_corpus())
    g.req(to_graph6(f.graph) == reference_graph6(f.graph),
          "reference encoder disagrees on " + f.name);
  return "identity over order <= 5, reference agreement on the fixtures";
}

std::string determinism(Gate& g) {
  std::vector<TheoremId> ids{TheoremId::kNT1, TheoremId::kBERGE5,
                             TheoremId::kANTI8, TheoremId::kMATROID6,
                             TheoremId::kTRI33, TheoremId::kBIP22};
  std::string base = sweep_report_json(sweep(Corpus::labeled_up_to(5), ids,
                                             {.jobs = 1}))
                         .dump();
  for (int jobs : {2, 3, 7}) {
    std::string other = sweep_report_json(sweep(Corpus::labeled_up_to(5), ids,
                                                {.jobs = jobs}))
                            .dump();
    g.req(other == base, "labeled sweep report changed at jobs=" +
                             std::to_string(jobs));
  }
  std::vector<TheoremId> tids{TheoremId::kFOREST2, TheoremId::kTREE_ANTI_C2,
                              TheoremId::kTREE_TRIMMED};
  std::string tbase = sweep_report_json(sweep(Corpus::trees_up_to(7), tids,
                                              {.jobs = 1}))
                          .dump();
  std::string tpar = sweep_report_json(sweep(Corpus::trees_up_to(7), tids,
                                             {.jobs = 4}))
                         .dump();
  g.req(tpar == tbase, "tree sweep report changed under parallelism");
  return "byte-identical reports at jobs 1/2/3/7";
}

}  // namespace

int main() {
  criterion(1, "worked-example claim table reproduces", fixture_claims);
  criterion(2, "family enumeration matches the definition scan", oracle_equivalence);
  criterion(3, "labeled-graph theorem sweep is violation-free", theorem_sweep);
  criterion(4, "tree theorem sweep is violation-free", tree_sweep);
  criterion(5, "corona equivalence sweep is violation-free", corona_sweep);
  criterion(6, "graph6 encoding round-trips", graph6_round_trip);
  criterion(7, "sweep reports are parallelism-independent", determinism);
  if (failures == 0) {
    std::printf("all 7 acceptance criteria pass\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
