#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "avgindep/errors.hpp"

namespace avgindep {

using VertexMask = std::uint64_t;
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
constexpr int popcount(VertexMask m) { return std::popcount(m); }
constexpr Vertex lowest(VertexMask m) { return std::countr_zero(m); }

/// Simple undirected graph on at most 64 vertices with bitmask adjacency.
///
/// Vertices are the indices 0..n-1 at construction. Surgery keeps the
/// original indices and clears bits in `present()`, so a vertex set is
/// always a subset of the original labels.
class Graph {
 public:
  Graph() = default;
  /// n isolated vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  static Graph path(int n);
  static Graph star(int n);
  static Graph complete(int n);
  static Graph empty(int n);

  /// Label bound: vertices live in [0, n).
  int n() const { return n_; }
  VertexMask present() const { return present_; }
  int order() const { return popcount(present_); }
  int size() const;  // edge count
  /// Edges with both endpoints in `mask`.
  int size_within(VertexMask mask) const;
  bool has_vertex(Vertex v) const {
    return v >= 0 && v < n_ && (present_ & bit(v)) != 0;
  }
  bool has_edge(Vertex u, Vertex v) const {
    return has_vertex(u) && has_vertex(v) && (adj_[u] & bit(v)) != 0;
  }
  VertexMask neighbours(Vertex v) const { return adj_[v]; }
  VertexMask closed_neighbourhood(Vertex v) const { return adj_[v] | bit(v); }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  /// Present vertices in increasing order.
  std::vector<Vertex> vertices() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph remove_vertex(Vertex v) const;
  Graph remove_closed_nbhd(Vertex v) const;
  Graph remove_edge(Vertex u, Vertex v) const;
  /// Subgraph induced on `keep & present()`, original labels retained.
  Graph induced(VertexMask keep) const;

  /// Connected components in order of their smallest vertex.
  std::vector<Graph> components() const;
  /// Vertex sets of the components reachable inside `within`.
  std::vector<VertexMask> component_masks(VertexMask within) const;
  bool is_connected() const;
  bool is_tree() const;
  /// Throws std::invalid_argument if `s` is not a subset of present().
  bool is_independent(VertexMask s) const;

  /// Relabels present vertices to 0..order()-1 preserving their order.
  Graph compact() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void add_edge_unchecked(Vertex u, Vertex v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  int n_ = 0;
  VertexMask present_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

/// Vertex-disjoint union, relabelled consecutively in argument order.
Graph disjoint_union(std::span<const Graph> parts);

std::string to_string(const Graph& g);

}  // namespace avgindep
