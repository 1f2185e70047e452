#include "avgindep/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace avgindep {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

int to_int(std::string_view tok, std::string_view what, int line_no) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 0)
    throw ParseError("line " + std::to_string(line_no) + ": invalid " +
                     std::string(what) + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  int declared = -1;
  int max_vertex = -1;
  bool seen_content = false;
  std::vector<Edge> edges;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto toks = split_ws(line);
    if (!seen_content && toks.size() == 2 && toks[0] == "n") {
      declared = to_int(toks[1], "vertex count", line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'u v', got '" + line + "'");
    const int u = to_int(toks[0], "vertex", line_no);
    const int v = to_int(toks[1], "vertex", line_no);
    if (u == v)
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at " +
                       std::to_string(u));
    if (u >= kMaxVertices || v >= kMaxVertices)
      throw CapacityError("line " + std::to_string(line_no) +
                          ": vertex index beyond the 64-vertex limit");
    max_vertex = std::max({max_vertex, u, v});
    edges.emplace_back(u, v);
  }
  const int n = declared >= 0 ? declared : max_vertex + 1;
  if (max_vertex >= n)
    throw ParseError("edge endpoint " + std::to_string(max_vertex) +
                     " exceeds declared vertex count " + std::to_string(n));
  return Graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_edge_list(is);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list '" + path.string() + "'");
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.n() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph parse_graph_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("graph spec '" + std::string(spec) +
                     "' must look like kind:N or file:PATH");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (kind == "file") {
    if (arg.empty()) throw ParseError("file: spec without a path");
    return load_edge_list(std::filesystem::path(std::string(arg)));
  }
  int n = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc{} || ptr != arg.data() + arg.size() || n < 0)
    throw ParseError("graph spec '" + std::string(spec) +
                     "' needs a non-negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("graph spec '" + std::string(spec) +
                        "' exceeds the 64-vertex limit");
  if (kind == "path") return Graph::path(n);
  if (kind == "star") return Graph::star(n);
  if (kind == "complete") return Graph::complete(n);
  if (kind == "empty") return Graph::empty(n);
  throw ParseError("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace avgindep
