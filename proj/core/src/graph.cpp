#include "avgindep/graph.hpp"

#include <sstream>

namespace avgindep {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("graph with " + std::to_string(n) +
                        " vertices exceeds the 64-vertex limit");
}

VertexMask low_bits(int n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  present_ = low_bits(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    add_edge_unchecked(u, v);
  }
}

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge_unchecked(v, v + 1);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge_unchecked(0, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.adj_[v] = g.present_ & ~bit(v);
  return g;
}

Graph Graph::empty(int n) { return Graph(n); }

int Graph::size() const {
  int twice = 0;
  for (VertexMask m = present_; m != 0; m &= m - 1) twice += degree(lowest(m));
  return twice / 2;
}

int Graph::size_within(VertexMask mask) const {
  mask &= present_;
  int twice = 0;
  for (VertexMask m = mask; m != 0; m &= m - 1)
    twice += popcount(adj_[lowest(m)] & mask);
  return twice / 2;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (VertexMask m = present_; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexMask m = present_; m != 0; m &= m - 1) {
    const Vertex u = lowest(m);
    for (VertexMask up = adj_[u] & ~low_bits(u + 1); up != 0; up &= up - 1)
      out.emplace_back(u, lowest(up));
  }
  return out;
}

Graph Graph::induced(VertexMask keep) const {
  Graph g = *this;
  g.present_ &= keep;
  for (Vertex v = 0; v < n_; ++v) {
    if (g.present_ & bit(v))
      g.adj_[v] &= g.present_;
    else
      g.adj_[v] = 0;
  }
  return g;
}

Graph Graph::remove_vertex(Vertex v) const {
  if (!has_vertex(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " not present");
  return induced(~bit(v));
}

Graph Graph::remove_closed_nbhd(Vertex v) const {
  if (!has_vertex(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " not present");
  return induced(~closed_neighbourhood(v));
}

Graph Graph::remove_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v))
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") not present");
  Graph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  return g;
}

std::vector<VertexMask> Graph::component_masks(VertexMask within) const {
  std::vector<VertexMask> out;
  VertexMask left = within & present_;
  while (left != 0) {
    VertexMask comp = left & (~left + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m != 0; m &= m - 1) next |= adj_[lowest(m)];
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<Graph> Graph::components() const {
  std::vector<Graph> out;
  for (VertexMask m : component_masks(present_)) out.push_back(induced(m));
  return out;
}

bool Graph::is_connected() const {
  return component_masks(present_).size() <= 1;
}

bool Graph::is_tree() const {
  const int k = order();
  return k >= 1 && size() == k - 1 && is_connected();
}

bool Graph::is_independent(VertexMask s) const {
  if ((s & ~present_) != 0)
    throw std::invalid_argument("vertex set is not a subset of the graph");
  for (VertexMask m = s; m != 0; m &= m - 1)
    if (adj_[lowest(m)] & s) return false;
  return true;
}

Graph Graph::compact() const {
  std::array<Vertex, kMaxVertices> label{};
  Vertex next = 0;
  for (VertexMask m = present_; m != 0; m &= m - 1) label[lowest(m)] = next++;
  Graph g(next);
  for (const auto& [u, v] : edges()) g.add_edge_unchecked(label[u], label[v]);
  return g;
}

Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  if (total > kMaxVertices)
    throw CapacityError("disjoint union has " + std::to_string(total) +
                        " vertices, above the 64-vertex limit");
  std::vector<Edge> edges;
  int offset = 0;
  for (const Graph& p : parts) {
    const Graph c = p.compact();
    for (const auto& [u, v] : c.edges()) edges.emplace_back(u + offset, v + offset);
    offset += c.order();
  }
  return Graph(total, edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.n() << ", order=" << g.order() << ", edges=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : ", ") << u << "-" << v;
    first = false;
  }
  os << "])";
  return os.str();
}

}  // namespace avgindep
