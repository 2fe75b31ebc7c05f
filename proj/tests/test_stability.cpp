#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <set>
#include <string>
#include <vector>

#include "psilab/enumerate.hpp"
#include "psilab/fixtures.hpp"
#include "psilab/stability.hpp"

using namespace psilab;

namespace {

bool mask_stable(const Graph& g, Word m) {
  for (Word r = m; r;) {
    int v = std::countr_zero(r);
    r &= r - 1;
    if (g.adj_bits(v) & m) return false;
  }
  return true;
}

// stability number by scanning every subset of `inside`
int naive_alpha(const Graph& g, Word inside) {
  int best = 0;
  for (Word m = inside;; m = (m - 1) & inside) {
    if (mask_stable(g, m)) best = std::max(best, std::popcount(m));
    if (m == 0) break;
  }
  return best;
}

Word mask_closed_nbhd(const Graph& g, Word m) {
  Word out = m;
  for (Word r = m; r;) {
    int v = std::countr_zero(r);
    r &= r - 1;
    out |= g.closed_bits(v);
  }
  return out;
}

// definition scanned literally: A non-empty, stable, of maximum size within
// its own closed neighborhood
std::set<Word> naive_psi(const Graph& g) {
  std::set<Word> out;
  Word full = g.n() >= 64 ? ~Word(0) : (Word(1) << g.n()) - 1;
  for (Word a = 1; a <= full; ++a) {
    if (!mask_stable(g, a)) continue;
    if (std::popcount(a) == naive_alpha(g, mask_closed_nbhd(g, a))) out.insert(a);
  }
  return out;
}

std::set<std::string> family_names(const SetSystem& f,
                                   const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (size_t i = 0; i < f.size(); ++i) out.insert(format_set(f.set_at(i), &names));
  return out;
}

}  // namespace

TEST_CASE("stability oracle matches the subset scan") {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      AlphaOracle o(g);
      Word full = (Word(1) << n) - 1;
      for (Word m = 0; m <= full; ++m) CHECK(o.alpha(m) == naive_alpha(g, m));
    }
  }
  for (std::uint64_t mask = 0; mask < labeled_graph_count(5); ++mask) {
    Graph g = graph_from_edge_mask(5, mask);
    CHECK(AlphaOracle(g).alpha_full() == naive_alpha(g, (Word(1) << 5) - 1));
  }
}

TEST_CASE("local maximum stable sets match the definition scan") {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      PsiFamily psi = enumerate_psi(g);
      std::set<Word> expect = naive_psi(g);
      std::set<Word> got(psi.sets.masks().begin(), psi.sets.masks().end());
      REQUIRE(got == expect);
    }
  }
}

TEST_CASE("every maximum stable set is a local one") {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      OmegaFamily om = max_stable(g);
      PsiFamily psi = enumerate_psi(g);
      CHECK(om.alpha == AlphaOracle(g).alpha_full());
      for (size_t i = 0; i < om.sets.size(); ++i)
        CHECK(psi.sets.contains(om.sets.set_at(i)));
    }
  }
}

TEST_CASE("seven-vertex example: memberships in the local family") {
  const Fixture* f = find_fixture("fig10-G");
  REQUIRE(f != nullptr);
  PsiFamily psi = enumerate_psi(f->graph);
  CHECK(psi.sets.contains(f->set_of({"a"})));
  CHECK(psi.sets.contains(f->set_of({"d", "e"})));
  CHECK(psi.sets.contains(f->set_of({"d", "f"})));
  CHECK(psi.sets.contains(f->set_of({"e", "g"})));
  CHECK(!psi.sets.contains(f->set_of({"b"})));
  CHECK(!psi.sets.contains(f->set_of({"e"})));
  CHECK(!psi.sets.contains(f->set_of({"g"})));

  OmegaFamily om = max_stable(f->graph);
  CHECK(om.alpha == 3);
  CHECK(om.sets.contains(f->set_of({"a", "d", "f"})));
  CHECK(om.sets.contains(f->set_of({"b", "e", "g"})));
}

TEST_CASE("exact families on paths and the 4-cycle") {
  const Fixture* p4 = find_fixture("P4");
  CHECK(family_names(enumerate_psi(p4->graph).sets, p4->vertex_names) ==
        std::set<std::string>{"{a}", "{d}", "{a,c}", "{a,d}", "{b,d}"});

  const Fixture* p5 = find_fixture("P5");
  CHECK(family_names(enumerate_psi(p5->graph).sets, p5->vertex_names) ==
        std::set<std::string>{"{a}", "{e}", "{a,c}", "{a,e}", "{c,e}", "{a,c,e}"});

  const Fixture* p6 = find_fixture("P6");
  CHECK(family_names(enumerate_psi(p6->graph).sets, p6->vertex_names) ==
        std::set<std::string>{"{a}", "{f}", "{a,c}", "{a,f}", "{d,f}", "{a,c,e}",
                              "{a,c,f}", "{a,d,f}", "{b,d,f}"});
  OmegaFamily om6 = max_stable(p6->graph);
  CHECK(family_names(om6.sets, p6->vertex_names) ==
        std::set<std::string>{"{a,c,e}", "{a,c,f}", "{a,d,f}", "{b,d,f}"});

  PsiFamily c4 = enumerate_psi(make_cycle(4));
  CHECK(c4.sets.size() == 2);
  CHECK(c4.sets.contains_mask(0b0101));
  CHECK(c4.sets.contains_mask(0b1010));
}

TEST_CASE("path on seven vertices has a unique maximum stable set") {
  const Fixture* p7 = find_fixture("P7");
  OmegaFamily om = max_stable(p7->graph);
  CHECK(om.alpha == 4);
  REQUIRE(om.sets.size() == 1);
  CHECK(om.sets.set_at(0).bits() == p7->set_of({"a", "c", "e", "g"}).bits());
  CHECK(unique_max_stable(p7->graph) == p7->set_of({"a", "c", "e", "g"}));

  CHECK(unique_max_stable(find_fixture("P5")->graph) ==
        find_fixture("P5")->set_of({"a", "c", "e"}));
  CHECK(!unique_max_stable(find_fixture("P4")->graph).has_value());
  CHECK(!unique_max_stable(make_complete(2)).has_value());
}

TEST_CASE("six-vertex bipartite example: pair in, singletons out") {
  const Fixture* f = find_fixture("Fig101-H");
  REQUIRE(f != nullptr);
  PsiFamily psi = enumerate_psi(f->graph);
  CHECK(psi.sets.contains(f->set_of({"t", "y"})));
  CHECK(!psi.sets.contains(f->set_of({"t"})));
  CHECK(!psi.sets.contains(f->set_of({"y"})));
  CHECK(max_stable(f->graph).alpha == 4);
}

TEST_CASE("simplicial decomposition") {
  {
    const Fixture* f = find_fixture("fig10-G");
    SimplicialDecomposition d = simplicial_decomposition(f->graph);
    CHECK(d.simplicial_vertices.bits() == f->set_of({"a"}).bits());
    REQUIRE(d.simplices.size() == 1);
    CHECK(d.simplices[0].bits() == f->set_of({"a", "b"}).bits());
    CHECK(!d.is_simplicial_graph);
  }
  {
    const Fixture* f = find_fixture("fig1010-G");
    SimplicialDecomposition d = simplicial_decomposition(f->graph);
    CHECK(d.simplicial_vertices.bits() == f->set_of({"a", "d"}).bits());
    CHECK(!d.is_simplicial_graph);
  }
  {
    SimplicialDecomposition d = simplicial_decomposition(make_complete(3));
    CHECK(d.simplicial_vertices.bits() == 0b111u);
    REQUIRE(d.simplices.size() == 1);
    CHECK(d.simplices[0].bits() == 0b111u);
    CHECK(d.is_simplicial_graph);
  }
  {
    const Fixture* f = find_fixture("P4");
    SimplicialDecomposition d = simplicial_decomposition(f->graph);
    CHECK(d.simplicial_vertices.bits() == f->set_of({"a", "d"}).bits());
    REQUIRE(d.simplices.size() == 2);
    CHECK(d.simplices[0].bits() == f->set_of({"a", "b"}).bits());
    CHECK(d.simplices[1].bits() == f->set_of({"c", "d"}).bits());
    CHECK(d.is_simplicial_graph);
  }
  CHECK(simplicial_decomposition(find_fixture("fig12")->graph).is_simplicial_graph);
  CHECK(!simplicial_decomposition(make_cycle(5)).is_simplicial_graph);
}

TEST_CASE("pendant and isolated vertices") {
  const Fixture* p4 = find_fixture("P4");
  auto [pend, isol] = pendant_and_isolated(p4->graph);
  CHECK(pend.bits() == p4->set_of({"a", "d"}).bits());
  CHECK(isol.bits() == 0);

  auto [pend1, isol1] = pendant_and_isolated(make_empty(2));
  CHECK(pend1.bits() == 0);
  CHECK(isol1.bits() == 0b11u);

  auto [pend2, isol2] = pendant_and_isolated(make_star(3));
  CHECK(pend2.bits() == 0b1110u);
  CHECK(isol2.bits() == 0);
}

TEST_CASE("well-covered and very well covered") {
  CHECK(is_well_covered(find_fixture("P4")->graph));
  CHECK(is_very_well_covered(find_fixture("P4")->graph));
  CHECK(is_well_covered(make_cycle(4)));
  CHECK(is_very_well_covered(make_cycle(4)));
  CHECK(is_well_covered(make_complete(3)));
  CHECK(!is_very_well_covered(make_complete(3)));
  CHECK(!is_well_covered(find_fixture("P5")->graph));
  CHECK(!is_well_covered(find_fixture("fig12")->graph));
  CHECK(is_well_covered(make_empty(3)));
  CHECK(!is_very_well_covered(make_empty(3)));
  CHECK(!is_well_covered(find_fixture("P7")->graph));
}

TEST_CASE("clique cover numbers") {
  CHECK(clique_cover_number(make_complete(4)) == 1);
  CHECK(clique_cover_number(make_empty(4)) == 4);
  CHECK(clique_cover_number(make_cycle(5)) == 3);
  CHECK(clique_cover_number(make_cycle(4)) == 2);
  CHECK(clique_cover_number(make_path(4)) == 2);
  CHECK(clique_cover_number(make_star(3)) == 3);
  CHECK_THROWS_AS(clique_cover_number(make_empty(13)), CapExceeded);
}

TEST_CASE("matchings from a stable set into another") {
  Graph p4 = make_path(4);
  CHECK(matchable_into(p4, VertexSet::of({0}, 4), VertexSet::of({1, 3}, 4)));
  CHECK(matchable_into(p4, VertexSet::of({0, 2}, 4), VertexSet::of({1, 3}, 4)));

  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK(!matchable_into(two_edges, VertexSet::of({0}, 4), VertexSet::of({3}, 4)));

  // forcing the augmenting path: both of {0,2} first grab 1, one re-routes
  Graph h(4);
  h.add_edge(0, 1);
  h.add_edge(2, 1);
  h.add_edge(2, 3);
  CHECK(matchable_into(h, VertexSet::of({0, 2}, 4), VertexSet::of({1, 3}, 4)));

  CHECK_THROWS_AS(
      matchable_into(p4, VertexSet::of({0, 1}, 4), VertexSet::of({3}, 4)),
      ContractViolation);
  CHECK_THROWS_AS(
      matchable_into(p4, VertexSet::of({0}, 4), VertexSet::of({0, 2}, 4)),
      ContractViolation);
}

TEST_CASE("order caps are enforced and overridable") {
  CHECK_THROWS_AS(enumerate_psi(make_complete(30)), CapExceeded);
  PsiFamily psi = enumerate_psi(make_complete(30), 30);
  CHECK(psi.sets.size() == 30);
  CHECK_THROWS_AS(max_stable(make_empty(25)), CapExceeded);
  CHECK(max_stable(make_empty(25), 25).alpha == 25);
  CHECK(is_well_covered(make_complete(30), 30));
}
