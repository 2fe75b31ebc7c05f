#ifndef PSILAB_GRAPH6_HPP
#define PSILAB_GRAPH6_HPP

#include <sstream>
#include <string>
#include <string_view>

#include "psilab/core.hpp"
#include "psilab/graph.hpp"

namespace psilab {

/// Decodes one graph6 line (single-byte size form, no ">>graph6<<" header).
/// Upper-triangle bits are read column by column: x(0,1), x(0,2), x(1,2), ...
/// Offsets in errors are 0-based byte positions within the line.
inline Graph parse_graph6(std::string_view line, int max_n = limits::kDefaultMaxN) {
  if (line.empty()) throw ParseError("graph6: empty line", 0);
  unsigned char c0 = static_cast<unsigned char>(line[0]);
  if (c0 == 126)
    throw ParseError("graph6: multi-byte size form unsupported (order > 62)", 0);
  if (c0 < 63 || c0 > 126)
    throw ParseError("graph6: size byte out of range", 0);
  int n = c0 - 63;
  if (n > max_n)
    throw CapExceeded("graph6: order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(max_n));
  long pairs = static_cast<long>(n) * (n - 1) / 2;
  long need = (pairs + 5) / 6;
  if (static_cast<long>(line.size()) != 1 + need)
    throw ParseError("graph6: expected " + std::to_string(1 + need) +
                         " bytes, got " + std::to_string(line.size()),
                     static_cast<long>(line.size()));
  Graph g(n);
  long bit = 0;
  for (long k = 0; k < need; ++k) {
    unsigned char c = static_cast<unsigned char>(line[static_cast<size_t>(1 + k)]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: data byte out of range", 1 + k);
    int group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      int on = (group >> b) & 1;
      if (bit >= pairs) {
        if (on)
          throw ParseError("graph6: nonzero padding bit", 1 + k);
        continue;
      }
      if (on) {
        // bit index -> column-major upper-triangle pair (i,j), i < j
        long t = bit;
        int j = 1;
        while (t >= j) t -= j, ++j;
        g.add_edge(static_cast<int>(t), j);
      }
    }
  }
  return g;
}

/// Encodes in the same single-byte size form; refuses orders above 62.
inline std::string to_graph6(const Graph& g) {
  int n = g.n();
  if (n > limits::kMaxVertices)
    throw ContractViolation("graph6: order above 62 unsupported");
  std::string out;
  out += static_cast<char>(63 + n);
  int group = 0, fill = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++fill == 6) {
        out += static_cast<char>(63 + group);
        group = fill = 0;
      }
    }
  if (fill > 0) out += static_cast<char>(63 + (group << (6 - fill)));
  return out;
}

/// Edge-list format: first non-blank line "n", then one "u v" per line,
/// 0-based endpoints. Blank lines are skipped; duplicates are tolerated.
inline Graph parse_edgelist(std::string_view text, int max_n = limits::kMaxVertices) {
  std::istringstream in{std::string(text)};
  std::string line;
  long lineno = 0;
  long header_line = 0;
  int n = -1;
  Graph g(0);
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (n < 0) {
      try {
        size_t used = 0;
        n = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("edge list: bad vertex count", lineno);
      }
      if (n < 0) throw ParseError("edge list: negative vertex count", lineno);
      if (n > max_n)
        throw CapExceeded("edge list: order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(max_n));
      std::string extra;
      if (ls >> extra)
        throw ParseError("edge list: trailing tokens after count", lineno);
      g = Graph(n);
      header_line = lineno;
      continue;
    }
    long u, v;
    std::istringstream es(line);
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      throw ParseError("edge list: expected \"u v\"", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: vertex out of range", lineno);
    if (u == v) throw ParseError("edge list: loop", lineno);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("edge list: missing vertex count", lineno);
  (void)header_line;
  return g;
}

}  // namespace psilab

#endif  // PSILAB_GRAPH6_HPP
