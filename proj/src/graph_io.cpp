#include <cctype>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "gonseq/errors.hpp"
#include "gonseq/multigraph.hpp"

namespace gonseq {

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  return true;
}

void write_edges(std::ostringstream& out, const MultiGraph& g) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (const auto& nb : g.neighbors(u))
      if (nb.vertex > u) out << "edge " << u << ' ' << nb.vertex << ' ' << nb.multiplicity << '\n';
}

int parse_int(const std::string& token, int line, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
  }
  if (used != token.size() || value < INT32_MIN || value > INT32_MAX)
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
  return static_cast<int>(value);
}

}  // namespace

std::string write_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.has_default_label(v)) continue;
    if (!valid_label(g.label(v)))
      throw ValidationError("label of vertex " + std::to_string(v) + " cannot be serialized");
    out << "label " << v << ' ' << g.label(v) << '\n';
  }
  write_edges(out, g);
  return out.str();
}

std::string canonical_serialization(const MultiGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  write_edges(out, g);
  return out.str();
}

MultiGraph read_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, std::string>> labels;
  std::vector<std::tuple<int, int, int, int>> edges;  // u, v, mult, line
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::vector<std::string> args;
    for (std::string t; ls >> t;) args.push_back(t);

    if (n < 0) {
      if (keyword != "vertices") throw ParseError(line_no, "first statement must be 'vertices <n>'");
      if (args.size() != 1) throw ParseError(line_no, "'vertices' takes exactly one argument");
      n = parse_int(args[0], line_no, "vertex count");
      if (n <= 0) throw ParseError(line_no, "vertex count must be positive");
      continue;
    }
    if (keyword == "vertices") throw ParseError(line_no, "duplicate 'vertices' statement");
    if (keyword == "label") {
      if (args.size() != 2) throw ParseError(line_no, "'label' takes a vertex id and a name");
      int v = parse_int(args[0], line_no, "vertex id");
      if (v < 0 || v >= n) throw ParseError(line_no, "vertex id " + args[0] + " out of range");
      labels.emplace_back(v, args[1]);
    } else if (keyword == "edge") {
      if (args.size() != 3) throw ParseError(line_no, "'edge' takes <u> <v> <mult>");
      int u = parse_int(args[0], line_no, "vertex id");
      int v = parse_int(args[1], line_no, "vertex id");
      int m = parse_int(args[2], line_no, "multiplicity");
      if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex id out of range");
      if (u == v) throw ParseError(line_no, "loops are not allowed");
      if (m < 1) throw ParseError(line_no, "multiplicity must be at least 1");
      edges.emplace_back(u, v, m, line_no);
    } else {
      throw ParseError(line_no, "unknown statement '" + keyword + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing 'vertices <n>' statement");

  MultiGraphBuilder b(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v, m, line] : edges) {
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw ParseError(line, "duplicate edge line for pair " + std::to_string(u) + " " + std::to_string(v));
    b.add_edges(u, v, m);
  }
  for (auto& [v, name] : labels) b.set_label(v, name);
  try {
    return b.build();
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  }
}

MultiGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

MultiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  return read_graph(in);
}

void save_graph(const MultiGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  out << write_graph(g);
}

}  // namespace gonseq
