// psilab: local maximum stable set family explorer.
//
// Subcommands: psi, classify, verify, search. One graph comes from
// --fixture/--graph6/--edges/--gen; corpora for verify/search come from
// --sweep-n/--trees-n/--graph6. Exit codes: 0 ok, 1 violation, 2 input
// error, 3 cap exceeded, 4 counterexample found.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psilab/psilab.hpp"

namespace {

using namespace psilab;

struct LoadedGraph {
  Graph graph{0};
  const std::vector<std::string>* names = nullptr;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

Graph generate_from_spec(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("generator spec must look like kind:n, e.g. path:5");
  std::string kind = spec.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1));
  } catch (...) {
    throw ParseError("generator spec has a non-numeric order: " + spec);
  }
  if (kind == "path") return make_path(n);
  if (kind == "cycle") return make_cycle(n);
  if (kind == "complete") return make_complete(n);
  if (kind == "star") return make_star(n);
  if (kind == "empty") return make_empty(n);
  throw ParseError("unknown generator kind '" + kind +
                   "' (expected path|cycle|complete|star|empty)");
}

struct CommonOpts {
  std::string fixture, graph6_file, edges_file, gen_spec;
  std::string format = "text";
  int max_n = limits::kDefaultMaxN;
};

void add_input_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--fixture", o.fixture, "named fixture graph");
  cmd->add_option("--graph6", o.graph6_file, "graph6 file ('-' for stdin)");
  cmd->add_option("--edges", o.edges_file, "edge-list file ('-' for stdin)");
  cmd->add_option("--gen", o.gen_spec, "generator spec kind:n (path|cycle|complete|star|empty)");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--max-n", o.max_n, "order cap for analysis");
}

int input_sources(const CommonOpts& o) {
  return (!o.fixture.empty()) + (!o.graph6_file.empty()) + (!o.edges_file.empty()) +
         (!o.gen_spec.empty());
}

LoadedGraph load_single(const CommonOpts& o) {
  if (input_sources(o) != 1)
    throw ParseError("exactly one of --fixture/--graph6/--edges/--gen is required");
  LoadedGraph out;
  if (!o.fixture.empty()) {
    const Fixture* f = find_fixture(o.fixture);
    if (!f) throw ParseError("unknown fixture '" + o.fixture + "'");
    out.graph = f->graph;
    out.names = &f->vertex_names;
    return out;
  }
  if (!o.gen_spec.empty()) {
    out.graph = generate_from_spec(o.gen_spec);
    return out;
  }
  if (!o.edges_file.empty()) {
    out.graph = parse_edgelist(slurp(o.edges_file), o.max_n);
    return out;
  }
  std::vector<std::string> lines = nonblank_lines(slurp(o.graph6_file));
  if (lines.size() != 1)
    throw ParseError("expected exactly one graph6 line, found " +
                     std::to_string(lines.size()));
  out.graph = parse_graph6(lines[0], o.max_n);
  return out;
}

std::string render_family_line(const SetSystem& f, const std::vector<std::string>* names) {
  std::string out;
  for (Word m : f.masks_by_card()) {
    if (!out.empty()) out += " ";
    out += format_set(VertexSet(m, f.ground()), names);
  }
  return out.empty() ? "(none)" : out;
}

int cmd_psi(const CommonOpts& o) {
  LoadedGraph in = load_single(o);
  SetSystem psi = enumerate_psi(in.graph, o.max_n).sets;
  OmegaFamily om = max_stable(in.graph, o.max_n);
  if (o.format == "json") {
    std::cout << psi_report_json(in.graph, psi, om, in.names).dump(2) << "\n";
    return 0;
  }
  std::cout << "graph: " << (in.graph.label().empty() ? to_graph6(in.graph) : in.graph.label())
            << " (n=" << in.graph.n() << ", edges=" << in.graph.edge_count() << ")\n";
  std::cout << "alpha: " << om.alpha << "\n";
  std::cout << "psi (" << psi.size() << " members): " << render_family_line(psi, in.names)
            << "\n";
  std::cout << "omega (" << om.sets.size() << " maximum stable sets): "
            << render_family_line(om.sets, in.names) << "\n";
  return 0;
}

int cmd_classify(const CommonOpts& o, const std::string& family_literal) {
  const std::vector<std::string>* names = nullptr;
  std::vector<std::string> letter_names;
  SetSystem fam{0};
  std::string source_label;
  std::string g6;

  if (!family_literal.empty()) {
    if (input_sources(o) != 0)
      throw ParseError("--family excludes the graph input flags");
    fam = parse_family(family_literal);
    bool has_digit = family_literal.find_first_of("0123456789") != std::string::npos;
    if (!has_digit && fam.ground() <= 26) {
      for (int i = 0; i < fam.ground(); ++i)
        letter_names.push_back(std::string(1, static_cast<char>('a' + i)));
      names = &letter_names;
    }
    source_label = "family literal";
  } else {
    LoadedGraph in = load_single(o);
    fam = enumerate_psi(in.graph, o.max_n).sets;
    names = in.names;
    source_label = in.graph.label().empty() ? to_graph6(in.graph) : in.graph.label();
    g6 = to_graph6(in.graph);
  }

  ClassificationReport r = classify(fam);
  if (o.format == "json") {
    json out = classification_json(r, names);
    out["family"] = family_json(fam, names);
    if (!g6.empty()) out["graph6"] = g6;
    if (!source_label.empty()) out["source"] = source_label;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "source: " << source_label << "\n";
  std::cout << "family (" << fam.size() << " members): " << render_family_line(fam, names)
            << "\n";
  auto flag = [&](const char* key, bool val) {
    std::cout << key << ": " << (val ? "yes" : "no");
    auto it = r.witnesses.find(key);
    if (!val && it != r.witnesses.end())
      std::cout << "   [" << witness_text(it->second, names) << "]";
    std::cout << "\n";
  };
  flag("accessible", r.accessible);
  flag("exchange", r.exchange);
  flag("hereditary", r.hereditary);
  flag("union_closed", r.union_closed);
  flag("greedoid", r.greedoid);
  flag("matroid", r.matroid);
  flag("antimatroid", r.antimatroid);
  flag("interval_greedoid", r.interval_greedoid);
  flag("local_poset", r.local_poset);
  return 0;
}

struct CorpusOpts {
  int sweep_n = 0;
  int trees_n = 0;
};

Corpus load_corpus(const CommonOpts& o, const CorpusOpts& c) {
  int sources = (c.sweep_n > 0) + (c.trees_n > 0) + input_sources(o);
  if (sources != 1)
    throw ParseError(
        "exactly one corpus source is required: --sweep-n, --trees-n, or a graph input");
  if (c.sweep_n > 0) return Corpus::labeled_up_to(c.sweep_n);
  if (c.trees_n > 0) {
    if (c.trees_n > 9)
      throw CapExceeded("tree sweeps are capped at order 9 (" +
                        std::to_string(labeled_tree_count(9)) + " trees already)");
    return Corpus::trees_up_to(c.trees_n);
  }
  if (!o.graph6_file.empty()) {
    std::vector<Graph> graphs;
    for (const std::string& line : nonblank_lines(slurp(o.graph6_file)))
      graphs.push_back(parse_graph6(line, o.max_n));
    return Corpus::explicit_graphs(std::move(graphs));
  }
  return Corpus::explicit_graphs({load_single(o).graph});
}

std::vector<TheoremId> parse_theorem_list(const std::string& list, bool all) {
  if (all) {
    if (!list.empty()) throw ParseError("--theorem and --all are mutually exclusive");
    return all_theorems();
  }
  if (list.empty()) throw ParseError("one of --theorem or --all is required");
  std::vector<TheoremId> ids;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto id = parse_theorem(tok);
    if (!id) throw ParseError("unknown theorem id '" + tok + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw ParseError("empty theorem list");
  return ids;
}

int cmd_verify(const CommonOpts& o, const CorpusOpts& corpus_opts,
               const std::string& theorem_list, bool all, int jobs) {
  std::vector<TheoremId> ids = parse_theorem_list(theorem_list, all);
  Corpus corpus = load_corpus(o, corpus_opts);
  SweepOptions opt;
  opt.jobs = jobs;
  opt.cap = o.max_n;
  SweepReport report = sweep(corpus, ids, opt);
  if (o.format == "json") {
    std::cout << sweep_report_json(report).dump(2) << "\n";
  } else {
    for (TheoremId id : report.ids) {
      const TheoremCount& c = report.counts.at(id);
      std::cout << theorem_name(id) << ": checked=" << c.checked
                << " applicable=" << c.applicable << " held=" << c.held
                << " violated=" << c.violated << " skipped=" << c.skipped << "\n";
    }
    for (const auto& v : report.violations)
      std::cout << "violation [" << theorem_name(v.id) << "] " << v.graph6 << ": "
                << v.detail << "\n";
  }
  return report.total_violations() > 0 ? 1 : 0;
}

int cmd_search(const CommonOpts& o, const CorpusOpts& corpus_opts,
               const std::string& hypothesis, const std::string& conclusion,
               std::uint64_t limit) {
  Predicate hyp = parse_predicate(hypothesis);
  Predicate con = parse_predicate(conclusion);
  Corpus corpus = load_corpus(o, corpus_opts);
  SearchResult res = search_counterexample(corpus, hyp, con, limit, o.max_n);
  if (o.format == "json") {
    std::cout << search_json(res).dump(2) << "\n";
  } else if (res.found) {
    std::cout << "counterexample: " << res.graph6 << "\n" << res.detail << "\n";
  } else {
    std::cout << "none found (" << res.examined << " graphs examined)\n";
  }
  return res.found ? 4 : 0;
}

void list_fixtures() {
  for (const Fixture& f : named_corpus()) {
    std::cout << f.name << " (n=" << f.graph.n() << "): ";
    bool first = true;
    for (auto [u, v] : f.graph.edges()) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << f.vertex_names[static_cast<size_t>(u)] << "-"
                << f.vertex_names[static_cast<size_t>(v)];
    }
    if (first) std::cout << "(no edges)";
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"local maximum stable set family explorer"};
  app.require_subcommand(0, 1);
  bool fixtures_flag = false;
  app.add_flag("--list-fixtures", fixtures_flag, "print the named fixtures with edge lists");

  int default_cap = limits::kDefaultMaxN;
  if (const char* env = std::getenv("PSILAB_MAX_N")) {
    try {
      default_cap = std::stoi(env);
    } catch (...) {
      throw ParseError("PSILAB_MAX_N is not a number");
    }
  }

  CommonOpts psi_o, cls_o, ver_o, sea_o;
  psi_o.max_n = cls_o.max_n = ver_o.max_n = sea_o.max_n = default_cap;
  std::string family_literal, theorem_list, hypothesis, conclusion;
  bool all_theorems_flag = false;
  CorpusOpts ver_c, sea_c;
  int jobs = 1;
  std::uint64_t limit = 0;

  CLI::App* psi = app.add_subcommand("psi", "enumerate the family of local maximum stable sets");
  add_input_flags(psi, psi_o);
  add_output_flags(psi, psi_o);

  CLI::App* cls = app.add_subcommand("classify", "classify a family in the greedoid hierarchy");
  add_input_flags(cls, cls_o);
  add_output_flags(cls, cls_o);
  cls->add_option("--family", family_literal,
                  "explicit family literal, e.g. \"a;b;ac;ad\" or \"0,1;2\"");

  CLI::App* ver = app.add_subcommand("verify", "check theorems over a graph or corpus");
  add_input_flags(ver, ver_o);
  add_output_flags(ver, ver_o);
  ver->add_option("--theorem", theorem_list, "comma-separated theorem ids");
  ver->add_flag("--all", all_theorems_flag, "check every theorem");
  ver->add_option("--sweep-n", ver_c.sweep_n, "all labeled graphs up to this order");
  ver->add_option("--trees-n", ver_c.trees_n, "all labeled trees up to this order");
  ver->add_option("--jobs", jobs, "worker threads for sweeps");

  CLI::App* sea = app.add_subcommand("search", "search a corpus for a counterexample");
  add_input_flags(sea, sea_o);
  add_output_flags(sea, sea_o);
  sea->add_option("--hypothesis", hypothesis, "conjunction of predicates, e.g. unique-mss")
      ->required();
  sea->add_option("--conclusion", conclusion, "conjunction of predicates")->required();
  sea->add_option("--sweep-n", sea_c.sweep_n, "all labeled graphs up to this order");
  sea->add_option("--trees-n", sea_c.trees_n, "all labeled trees up to this order");
  sea->add_option("--limit", limit, "examine at most this many graphs (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (fixtures_flag) {
    list_fixtures();
    return 0;
  }
  if (app.got_subcommand(psi)) return cmd_psi(psi_o);
  if (app.got_subcommand(cls)) return cmd_classify(cls_o, family_literal);
  if (app.got_subcommand(ver))
    return cmd_verify(ver_o, ver_c, theorem_list, all_theorems_flag, jobs);
  if (app.got_subcommand(sea))
    return cmd_search(sea_o, sea_c, hypothesis, conclusion, limit);
  std::cout << app.help();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const psilab::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const psilab::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const psilab::ContractViolation& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
