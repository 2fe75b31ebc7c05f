#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "psilab/enumerate.hpp"
#include "psilab/fixtures.hpp"
#include "psilab/graph6.hpp"

using namespace psilab;

namespace {

// Independent encoder, written straight from the format description: size
// byte 63+n, then the upper triangle column by column, six bits per byte,
// zero-padded, each data byte offset by 63.
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

bool same_graph(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return false;
  for (int v = 0; v < a.n(); ++v)
    if (a.adj_bits(v) != b.adj_bits(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("known encodings") {
  CHECK(to_graph6(make_complete(1)) == "@");
  CHECK(to_graph6(make_complete(2)) == "A_");
  CHECK(to_graph6(make_complete(3)) == "Bw");
  CHECK(to_graph6(make_empty(3)) == "B?");
  CHECK(to_graph6(make_path(3)) == "Bg");
  CHECK(to_graph6(make_path(4)) == "Ch");

  CHECK(same_graph(parse_graph6("Ch"), make_path(4)));
  CHECK(same_graph(parse_graph6("Bw"), make_complete(3)));
  CHECK(same_graph(parse_graph6("@"), make_complete(1)));
}

TEST_CASE("round trip over every labeled graph up to order 5") {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      std::string enc = to_graph6(g);
      CHECK(enc == reference_graph6(g));
      CHECK(same_graph(parse_graph6(enc), g));
    }
  }
}

TEST_CASE("fixtures agree with the reference encoder") {
  for (const Fixture& f : named_corpus()) {
    std::string enc = to_graph6(f.graph);
    CHECK(enc == reference_graph6(f.graph));
    CHECK(same_graph(parse_graph6(enc), f.graph));
  }
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);

  try {
    parse_graph6("~??");  // multi-byte size form
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == 0);
  }

  try {
    parse_graph6(" w");  // size byte below 63
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == 0);
  }

  try {
    parse_graph6("B");  // truncated: order 3 needs one data byte
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == 1);
  }

  try {
    parse_graph6("Bww");  // too long
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == 3);
  }

  try {
    parse_graph6("A ");  // data byte below 63
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == 1);
  }

  try {
    parse_graph6("AW");  // nonzero padding: only bit 0 is real for n=2
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == 1);
  }

  CHECK_THROWS_AS(parse_graph6(to_graph6(make_empty(10)), 5), CapExceeded);
}

TEST_CASE("edge list parsing") {
  Graph g = parse_edgelist("3\n0 1\n1 2\n");
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));

  // blank lines and duplicate edges are tolerated
  Graph h = parse_edgelist("\n4\n\n0 1\n0 1\n2 3\n");
  CHECK(h.n() == 4);
  CHECK(h.edge_count() == 2);

  Graph iso = parse_edgelist("2\n");  // no edges at all
  CHECK(iso.n() == 2);
  CHECK(iso.edge_count() == 0);

  try {
    parse_edgelist("3\n0 1\n2 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("loop") != std::string::npos);
    CHECK(e.where() == 3);
  }

  try {
    parse_edgelist("3\n0 5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == 2);
  }

  CHECK_THROWS_AS(parse_edgelist("x\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist(""), ParseError);
  CHECK_THROWS_AS(parse_edgelist("3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("100\n"), CapExceeded);
}
