#include "unswitch/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "unswitch/error.hpp"
#include "unswitch/split.hpp"

namespace unswitch::io {

namespace {

// Yields non-blank, non-comment lines together with their line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  int line() const noexcept { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

long parse_int(const std::string& tok, int line) {
  long value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

Graph read_edge_block(LineReader& reader) {
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing 'n m' header");
  const auto header = split_ws(line);
  if (header.size() != 2) throw ParseError(reader.line(), "header must be 'n m'");
  const long n = parse_int(header[0], reader.line());
  const long m = parse_int(header[1], reader.line());
  if (n < 0 || m < 0) throw ParseError(reader.line(), "negative count in header");

  Graph g(static_cast<int>(n));
  for (long k = 0; k < m; ++k) {
    if (!reader.next(line)) {
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(k));
    }
    const auto tok = split_ws(line);
    if (tok.size() != 2) throw ParseError(reader.line(), "edge line must be 'u v'");
    const long u = parse_int(tok[0], reader.line());
    const long v = parse_int(tok[1], reader.line());
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(reader.line(), "endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(reader.line(), "self-loop at " + std::to_string(u));
    if (!g.insert_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(reader.line(), "duplicate edge " + tok[0] + " " + tok[1]);
    }
  }
  return g;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

}  // namespace

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(start, comma - start);
    const auto a = tok.find_first_not_of(" \t");
    const auto b = tok.find_last_not_of(" \t");
    tok = a == std::string::npos ? "" : tok.substr(a, b - a + 1);
    if (tok.empty()) throw ParseError(0, "empty entry in sequence '" + text + "'");
    const long v = parse_int(tok, 0);
    if (v < 0) throw ParseError(0, "negative degree in sequence '" + text + "'");
    out.push_back(static_cast<int>(v));
    start = comma + 1;
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  LineReader reader(in);
  Graph g = read_edge_block(reader);
  std::string line;
  if (reader.next(line)) throw ParseError(reader.line(), "more edge lines than the header's m");
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

EggletonFamily read_family(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing 'n <value>' line");
  const auto head = split_ws(line);
  if (head.size() != 2 || head[0] != "n") throw ParseError(reader.line(), "expected 'n <value>'");
  const long n = parse_int(head[1], reader.line());
  if (n < 1) throw ParseError(reader.line(), "n must be positive");

  EggletonFamily f;
  f.n = static_cast<int>(n);
  f.sets.assign(static_cast<std::size_t>(2 * n), {});
  std::set<long> seen_index;
  std::set<long> seen_vertex;
  while (reader.next(line)) {
    const auto colon = line.find(':');
    auto label = split_ws(line.substr(0, colon == std::string::npos ? line.size() : colon));
    if (colon == std::string::npos || label.size() != 1 || label[0].size() < 2 ||
        label[0][0] != 'S') {
      throw ParseError(reader.line(), "expected 'S<i>: v1 v2 ...'");
    }
    const long index = parse_int(label[0].substr(1), reader.line());
    if (index < 1 || index > 2 * n) {
      throw ParseError(reader.line(), "set index out of range 1.." + std::to_string(2 * n));
    }
    if (!seen_index.insert(index).second) {
      throw ParseError(reader.line(), "S" + std::to_string(index) + " listed twice");
    }
    for (const auto& tok : split_ws(line.substr(colon + 1))) {
      const long v = parse_int(tok, reader.line());
      if (v < 0) throw ParseError(reader.line(), "negative vertex label");
      if (!seen_vertex.insert(v).second) {
        throw ParseError(reader.line(), "vertex " + tok + " appears in more than one set");
      }
      f.sets[index - 1].push_back(static_cast<Vertex>(v));
    }
  }
  try {
    validate_family(f);
  } catch (const InvalidFamily& e) {
    throw ParseError(0, e.what());
  }
  return f;
}

EggletonFamily read_family_file(const std::string& path) {
  auto in = open(path);
  return read_family(in);
}

void write_family(std::ostream& out, const EggletonFamily& f) {
  out << "n " << f.n << '\n';
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    if (f.sets[i].empty()) continue;
    out << 'S' << i + 1 << ':';
    for (Vertex v : f.sets[i]) out << ' ' << v;
    out << '\n';
  }
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  if (g.vertex_count() > 0 && is_split_sequence(degree_sequence(g).degrees)) {
    const SplitPartition p = split_partition(g);
    for (const auto* side : {&p.clique, &p.independent}) {
      if (side->empty()) continue;
      out << "  { rank=same;";
      for (Vertex v : *side) out << ' ' << v << ';';
      out << " }\n";
    }
  } else {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

void write_corpus(std::ostream& out, std::span<const Graph> graphs) {
  out << "corpus " << graphs.size() << '\n';
  for (const Graph& g : graphs) write_edge_list(out, g);
}

std::vector<Graph> read_corpus(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing 'corpus <count>' header");
  const auto head = split_ws(line);
  if (head.size() != 2 || head[0] != "corpus") {
    throw ParseError(reader.line(), "expected 'corpus <count>'");
  }
  const long count = parse_int(head[1], reader.line());
  if (count < 0) throw ParseError(reader.line(), "negative corpus size");
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) out.push_back(read_edge_block(reader));
  if (reader.next(line)) throw ParseError(reader.line(), "trailing content after corpus");
  return out;
}

}  // namespace unswitch::io
