#include "unswitch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "unswitch/degree_seq.hpp"
#include "unswitch/error.hpp"
#include "unswitch/generation.hpp"
#include "unswitch/io.hpp"
#include "unswitch/oracle.hpp"
#include "unswitch/split.hpp"
#include "unswitch/switching.hpp"
#include "unswitch/unswitchable.hpp"

namespace unswitch {

namespace {

std::vector<int> sorted_sequence(const std::string& text, std::ostream& err) {
  auto d = io::parse_sequence(text);
  if (!std::is_sorted(d.begin(), d.end(), std::greater<>())) {
    std::sort(d.begin(), d.end(), std::greater<>());
    err << "note: sequence reordered to " << format_sequence(d) << '\n';
  }
  return d;
}

std::vector<Vertex> parse_ids(const std::string& text) {
  if (text.empty()) return {};
  auto ids = io::parse_sequence(text);
  return {ids.begin(), ids.end()};
}

void write_ids(std::ostream& out, const char* label, const std::vector<Vertex>& ids) {
  out << label << ':';
  for (Vertex v : ids) out << ' ' << v;
  out << '\n';
}

// Writes to `path` when given, else to `out`.
void emit(std::ostream& out, const std::string& path,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError(0, "cannot write " + path);
  body(file);
}

int cmd_graphical(const std::string& seq, std::ostream& out, std::ostream& err) {
  const auto d = sorted_sequence(seq, err);
  const GraphicalTrace trace = graphical_trace(d);
  if (trace.graphical) {
    out << "YES\n";
  } else {
    out << "NO (" << trace.failure << ")\n";
  }
  for (const auto& step : trace.steps) out << format_sequence(step) << '\n';
  return trace.graphical ? kExitOk : kExitNegative;
}

int cmd_realize(const std::string& seq, const std::string& path, std::ostream& out,
                std::ostream& err) {
  const auto d = sorted_sequence(seq, err);
  if (!is_graphical(d)) {
    out << "NOT-GRAPHICAL\n";
    return kExitNegative;
  }
  const Graph g = realize(d);
  emit(out, path, [&](std::ostream& os) { io::write_edge_list(os, g); });
  return kExitOk;
}

int cmd_split(const std::string& arg, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    const Graph g = io::read_edge_list_file(arg);
    if (g.vertex_count() == 0) {
      out << "m=0 lhs=0 rhs=0 SPLIT\n";
      return kExitOk;
    }
    const SplitBalance b = split_balance(degree_sequence(g).degrees);
    out << "m=" << b.m << " lhs=" << b.lhs << " rhs=" << b.rhs;
    if (!b.holds()) {
      out << " NOT-SPLIT\n";
      return kExitNegative;
    }
    out << " SPLIT\n";
    const SplitPartition p = split_partition(g);
    write_ids(out, "clique", p.clique);
    write_ids(out, "independent", p.independent);
    return kExitOk;
  }

  const auto d = sorted_sequence(arg, err);
  if (!is_graphical(d)) {
    out << "NOT-GRAPHICAL\n";
    return kExitNegative;
  }
  const SplitBalance b = split_balance(d);
  out << "m=" << b.m << " lhs=" << b.lhs << " rhs=" << b.rhs;
  if (!b.holds()) {
    out << " NOT-SPLIT\n";
    return kExitNegative;
  }
  out << " SPLIT\n";
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
  for (int i = 0; i < static_cast<int>(d.size()); ++i) (i < b.m ? clique : independent).push_back(i);
  write_ids(out, "clique", clique);
  write_ids(out, "independent", independent);
  return kExitOk;
}

int cmd_recognize(const std::string& path, std::ostream& out) {
  const SwitchVerdict v = recognize(io::read_edge_list_file(path));
  if (v.unswitchable()) {
    out << "UNSWITCHABLE\n";
    return kExitOk;
  }
  out << "SWITCHABLE " << *v.witness << '\n';
  return kExitNegative;
}

int cmd_p4s(const std::string& path, const std::string& independent, std::ostream& out) {
  const Graph g = io::read_edge_list_file(path);
  const auto side = parse_ids(independent);
  const auto p4s = find_all_p4s(g, side);
  out << "p4s " << p4s.size() << '\n';
  for (const P4Record& r : p4s) {
    out << "P4 " << r.path[0] << ' ' << r.path[1] << ' ' << r.path[2] << ' ' << r.path[3] << '\n';
  }
  const auto chords = chord_frequencies(p4s);
  out << "chords " << chords.size() << '\n';
  for (const ChordCount& c : chords) out << c.chord.u << ' ' << c.chord.v << ' ' << c.count << '\n';
  return kExitOk;
}

int cmd_generate(const GenConfig& cfg, const std::string& path, std::ostream& out) {
  const Generated gen = generate_unswitchable(cfg);
  out << "# repair_edges " << gen.repair_edges << '\n';
  emit(out, path, [&](std::ostream& os) { io::write_edge_list(os, gen.graph); });
  return kExitOk;
}

int cmd_eggleton_construct(const std::string& path, std::ostream& out) {
  io::write_edge_list(out, eggleton_construct(io::read_family_file(path)));
  return kExitOk;
}

int cmd_eggleton_decompose(const std::string& path, const std::string& independent,
                           std::ostream& out) {
  const Graph g = io::read_edge_list_file(path);
  const SwitchVerdict v = recognize(g);
  if (!v.unswitchable()) {
    out << "SWITCHABLE " << *v.witness << '\n';
    return kExitNegative;
  }
  if (independent.empty()) {
    io::write_family(out, eggleton_decompose(g));
    return kExitOk;
  }
  SplitPartition p;
  p.independent = parse_ids(independent);
  std::sort(p.independent.begin(), p.independent.end());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!std::binary_search(p.independent.begin(), p.independent.end(), x)) p.clique.push_back(x);
  }
  io::write_family(out, eggleton_decompose(g, p));
  return kExitOk;
}

int cmd_switch_path(const std::string& from, const std::string& to, std::size_t limit,
                    std::ostream& out) {
  const auto path =
      two_switch_path(io::read_edge_list_file(from), io::read_edge_list_file(to), limit);
  if (!path) {
    out << "NONE\n";
    return kExitNegative;
  }
  out << "steps " << path->size() << '\n';
  for (const TwoSwitch& s : *path) out << s << '\n';
  return kExitOk;
}

int cmd_export_dot(const std::string& path, std::ostream& out) {
  io::write_dot(out, io::read_edge_list_file(path));
  return kExitOk;
}

int cmd_corpus(int max_n, const std::string& path, std::ostream& out) {
  if (max_n < 1 || max_n > oracle::kMaxEdgeSubsetOrder) {
    throw PreconditionError("--max-n must be in 1.." + std::to_string(oracle::kMaxEdgeSubsetOrder));
  }
  const auto graphs = oracle::corpus(max_n);
  std::map<int, int> per_order;
  for (const Graph& g : graphs) ++per_order[g.vertex_count()];
  if (!path.empty()) {
    emit(out, path, [&](std::ostream& os) { io::write_corpus(os, graphs); });
  }
  for (auto [n, count] : per_order) out << "n=" << n << " graphs=" << count << '\n';
  if (path.empty()) io::write_corpus(out, graphs);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree sequences, 2-switches, split and unswitchable graphs", "unswitch"};
  app.require_subcommand(1);

  std::string seq;
  std::string file;
  std::string file2;
  std::string out_path;
  std::string independent;
  GenConfig gen;
  std::size_t state_limit = kDefaultSwitchStateLimit;
  int max_n = 6;

  auto* graphical = app.add_subcommand("graphical", "Havel-Hakimi test with reduction trace");
  graphical->add_option("sequence", seq, "comma-separated degrees")->required();

  auto* realize_cmd = app.add_subcommand("realize", "Realize a graphical sequence");
  realize_cmd->add_option("sequence", seq, "comma-separated degrees")->required();
  realize_cmd->add_option("--out", out_path, "write the edge list here");

  auto* split = app.add_subcommand("split", "Split index, degree identity and partition");
  split->add_option("input", file, "edge-list file or comma-separated sequence")->required();

  auto* recognize_cmd = app.add_subcommand("recognize", "Unswitchable or switchable + witness");
  recognize_cmd->add_option("graph", file, "edge-list file")->required();

  auto* p4s = app.add_subcommand("p4s", "Induced P4s across a split partition");
  p4s->add_option("graph", file, "edge-list file")->required();
  p4s->add_option("--independent", independent, "comma-separated independent vertices")
      ->required();

  auto* generate = app.add_subcommand("generate", "Random unswitchable graph");
  generate->add_option("--n1", gen.n1, "independent side size")->required();
  generate->add_option("--n2", gen.n2, "clique side size")->required();
  generate->add_option("--seed", gen.seed, "64-bit seed")->required();
  generate->add_option("--out", out_path, "write the edge list here");

  auto* eggleton = app.add_subcommand("eggleton", "Eggleton family construction");
  eggleton->require_subcommand(1);
  auto* construct = eggleton->add_subcommand("construct", "Family file -> graph");
  construct->add_option("family", file, "family file")->required();
  auto* decompose = eggleton->add_subcommand("decompose", "Graph file -> family");
  decompose->add_option("graph", file, "edge-list file")->required();
  decompose->add_option("--independent", independent,
                        "fix the independent side (comma-separated vertices)");

  auto* switch_path = app.add_subcommand("switch-path", "2-switch sequence from G to H");
  switch_path->add_option("from", file, "edge-list file of G")->required();
  switch_path->add_option("to", file2, "edge-list file of H")->required();
  switch_path->add_option("--max-states", state_limit, "search budget");

  auto* dot = app.add_subcommand("export-dot", "DOT text for a graph");
  dot->add_option("graph", file, "edge-list file")->required();

  auto* corpus = app.add_subcommand("corpus", "Non-isomorphic graphs up to --max-n vertices");
  corpus->add_option("--max-n", max_n, "largest vertex count");
  corpus->add_option("--out", out_path, "write the corpus cache here");

  std::vector<const char*> argv{"unswitch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*graphical) return cmd_graphical(seq, out, err);
    if (*realize_cmd) return cmd_realize(seq, out_path, out, err);
    if (*split) return cmd_split(file, out, err);
    if (*recognize_cmd) return cmd_recognize(file, out);
    if (*p4s) return cmd_p4s(file, independent, out);
    if (*generate) return cmd_generate(gen, out_path, out);
    if (*construct) return cmd_eggleton_construct(file, out);
    if (*decompose) return cmd_eggleton_decompose(file, independent, out);
    if (*switch_path) return cmd_switch_path(file, file2, state_limit, out);
    if (*dot) return cmd_export_dot(file, out);
    if (*corpus) return cmd_corpus(max_n, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace unswitch
