#ifndef PSILAB_FIXTURES_HPP
#define PSILAB_FIXTURES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psilab/core.hpp"
#include "psilab/graph.hpp"

namespace psilab {

/// A named input graph with display names for its vertices. Vertex i is
/// rendered as vertex_names[i]; unnamed vertices carry their decimal index.
struct Fixture {
  std::string name;
  Graph graph{0};
  std::vector<std::string> vertex_names;
  std::string note;

  int index_of(std::string_view vertex) const {
    for (size_t i = 0; i < vertex_names.size(); ++i)
      if (vertex_names[i] == vertex) return static_cast<int>(i);
    throw ContractViolation("fixture " + name + ": no vertex named " +
                            std::string(vertex));
  }

  VertexSet set_of(std::initializer_list<std::string_view> vs) const {
    VertexSet s = VertexSet::empty(graph.n());
    for (auto v : vs) s = s.with(index_of(v));
    return s;
  }
};

namespace detail {

inline Fixture named_graph(std::string name, std::vector<std::string> vnames,
                           const std::vector<std::pair<std::string, std::string>>& edges,
                           std::string note) {
  Fixture f;
  f.name = std::move(name);
  f.vertex_names = std::move(vnames);
  f.graph = Graph(static_cast<int>(f.vertex_names.size()), f.name);
  f.note = std::move(note);
  for (const auto& [u, v] : edges) f.graph.add_edge(f.index_of(u), f.index_of(v));
  return f;
}

inline std::vector<std::string> digit_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline std::vector<std::string> letter_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline Fixture plain(std::string name, Graph g, std::vector<std::string> vnames,
                     std::string note) {
  Fixture f;
  f.name = std::move(name);
  f.graph = std::move(g);
  f.graph.set_label(f.name);
  f.vertex_names = std::move(vnames);
  f.note = std::move(note);
  return f;
}

inline std::vector<Fixture> build_corpus() {
  std::vector<Fixture> out;

  for (int n = 1; n <= 4; ++n)
    out.push_back(plain("K" + std::to_string(n), make_complete(n), digit_names(n),
                        "complete graph"));
  for (int n = 2; n <= 7; ++n)
    out.push_back(plain("P" + std::to_string(n), make_path(n), letter_names(n),
                        "path, vertices a.." + std::string(1, static_cast<char>('a' + n - 1))));
  for (int n = 3; n <= 6; ++n)
    out.push_back(plain("C" + std::to_string(n), make_cycle(n), digit_names(n), "cycle"));
  out.push_back(plain("K1,3", make_star(3), digit_names(4), "star, center 0"));

  out.push_back(named_graph(
      "fig10-G", {"a", "b", "c", "d", "e", "f", "g"},
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "g"}, {"c", "e"}, {"e", "f"}, {"f", "g"}},
      "7-vertex graph whose {e,d} neighborhood closes to a 5-cycle"));

  out.push_back(named_graph(
      "Fig101-G", {"a", "b", "c", "d", "e", "f"},
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "e"}, {"e", "f"}, {"c", "f"}},
      "bipartite; every maximum matching uniquely restricted"));

  // Bottom row u,v,t then top row y,x,w.
  out.push_back(named_graph(
      "Fig101-H", {"u", "v", "t", "y", "x", "w"},
      {{"u", "v"}, {"v", "t"}, {"y", "x"}, {"x", "w"}, {"v", "y"}, {"t", "x"}},
      "bipartite; psi family is not accessible at {y,t}"));

  out.push_back(named_graph(
      "fig2922-G", {"a", "b", "c", "d", "e", "f", "g"},
      {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "e"}, {"d", "e"}, {"e", "f"}, {"e", "g"}},
      "non-bipartite Koenig-Egervary; psi family is not a greedoid"));

  // Bottom path 0-1-2-3, top path 4-5-6-7, plus 0-5 and 2-6.
  out.push_back(named_graph(
      "fig2922-H", digit_names(8),
      {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"4", "5"}, {"5", "6"}, {"6", "7"},
       {"0", "5"}, {"2", "6"}},
      "non-bipartite Koenig-Egervary; psi family is a greedoid"));

  out.push_back(named_graph(
      "fig1010-G", {"a", "b", "c", "d", "p", "q", "r"},
      {{"p", "a"}, {"p", "b"}, {"q", "b"}, {"q", "c"}, {"r", "b"}, {"r", "c"}, {"r", "d"}},
      "{a,b,c} is local maximum stable, none of its pairs are"));

  {
    // Corona of the 4-path v1-v2-v3-v4 with chord v1-v3 over parts
    // K3, K2, P3, K1; parts occupy indices 4-6, 7-8, 9-11, 12.
    Graph x(4);
    x.add_edge(0, 1);
    x.add_edge(1, 2);
    x.add_edge(2, 3);
    x.add_edge(0, 2);
    Graph g = corona(x, {make_complete(3), make_complete(2), make_path(3), make_complete(1)});
    out.push_back(plain("fig12", std::move(g),
                        {"v1", "v2", "v3", "v4", "4", "5", "y", "u", "8", "x", "10", "z", "t"},
                        "13-vertex corona; well-covered"));
  }

  // Bottom row x,1,z,3,v then top row y,6,u.
  out.push_back(named_graph(
      "Fig22-G1", {"x", "1", "z", "3", "v", "y", "6", "u"},
      {{"x", "1"}, {"1", "z"}, {"z", "3"}, {"3", "v"}, {"y", "6"}, {"6", "u"},
       {"1", "y"}, {"6", "3"}},
      "unique maximum stable set {x,y,z,u,v}; {y,z} breaks accessibility"));

  // Bottom row a,1,2,d then top row b,5,c.
  out.push_back(named_graph(
      "Fig22-G2", {"a", "1", "2", "d", "b", "5", "c"},
      {{"a", "1"}, {"1", "2"}, {"2", "d"}, {"b", "5"}, {"5", "c"}, {"1", "b"},
       {"b", "2"}, {"2", "5"}},
      "unique maximum stable set {a,b,c,d}; psi family is an antimatroid"));

  out.push_back(named_graph(
      "Fig30-G1", digit_names(5),
      {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"1", "4"}, {"4", "2"}},
      "unique maximum stable set; psi family is an antimatroid"));

  out.push_back(named_graph(
      "Fig30-G2", digit_names(6),
      {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"1", "4"}, {"2", "5"}},
      "tree with unique maximum stable set; psi family is an antimatroid"));

  // Bottom row 0,1,y,3 then top row x,5,6.
  out.push_back(named_graph(
      "Fig30-G3", {"0", "1", "y", "3", "x", "5", "6"},
      {{"0", "1"}, {"1", "y"}, {"x", "5"}, {"5", "6"}, {"1", "x"}, {"y", "5"},
       {"5", "3"}},
      "unique maximum stable set, yet {x},{y} fail while {x,y} is local maximum stable"));

  // Bottom row 0,u,2,3 then top row 4,v.
  out.push_back(named_graph(
      "Fig232-G1", {"0", "u", "2", "3", "4", "v"},
      {{"0", "u"}, {"u", "2"}, {"2", "3"}, {"4", "v"}, {"0", "4"}, {"u", "4"},
       {"2", "v"}, {"v", "3"}},
      "simplicial graph whose psi family is not a greedoid"));

  // Bottom row 0,a,2,3 then top row 4,b.
  out.push_back(named_graph(
      "Fig232-G2", {"0", "a", "2", "3", "4", "b"},
      {{"0", "a"}, {"a", "2"}, {"2", "3"}, {"4", "b"}, {"4", "2"}, {"a", "4"},
       {"2", "b"}},
      "simplicial graph whose psi family is a greedoid but not a matroid"));

  // Bottom row 0..3 then top row 4,5,6.
  out.push_back(named_graph(
      "Fig232-G3", digit_names(7),
      {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"0", "4"}, {"4", "5"}, {"4", "1"},
       {"1", "5"}, {"2", "6"}},
      "simplicial graph whose psi family is a matroid"));

  return out;
}

}  // namespace detail

inline const std::vector<Fixture>& named_corpus() {
  static const std::vector<Fixture> corpus = detail::build_corpus();
  return corpus;
}

inline const Fixture* find_fixture(std::string_view name) {
  for (const Fixture& f : named_corpus())
    if (f.name == name) return &f;
  return nullptr;
}

/// Renders a vertex set through a fixture's display names.
inline std::string format_set(const VertexSet& s,
                              const std::vector<std::string>* names = nullptr) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    if (names && v < static_cast<int>(names->size()))
      out += (*names)[static_cast<size_t>(v)];
    else
      out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace psilab

#endif  // PSILAB_FIXTURES_HPP
