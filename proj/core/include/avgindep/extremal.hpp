#pragma once

#include <vector>

#include "avgindep/graph.hpp"
#include "avgindep/rational.hpp"
#include "avgindep/report.hpp"

namespace avgindep {

// Exhaustive checks of the extremal statements over small orders. Each
// takes a worker count; the result does not depend on it (the earliest
// failing object in enumeration order is reported).

/// n/(n+1) = avi(K_n) < avi(G) < avi(E_n) = n/2 for every labelled graph
/// other than E_n and K_n. RangeError unless 1 <= n <= 7.
VerificationReport verify_bounds(int n, unsigned jobs = 1);

/// Every labelled graph on n vertices has a vertex whose removal lowers avi,
/// and the element picked from its independent-set family is such a
/// vertex. RangeError unless 1 <= n <= 7.
VerificationReport verify_vertex_removal(int n, unsigned jobs = 1);

/// avi(S_n) >= avi(T) over all free trees, with equality only for the star.
/// RangeError unless 1 <= n <= 16.
VerificationReport verify_star_max(int n, unsigned jobs = 1);

/// avi(T) >= a n + b for every non-path tree and avi(P_n) < avi(T); for
/// n >= 4 also avi(P_n) < a n + b. RangeError unless 1 <= n <= 16.
VerificationReport verify_path_min(int n, unsigned jobs = 1);

/// 1/2 <= I(T - v) / I(T) < 1 for every tree and vertex.
/// RangeError unless 1 <= n <= 14.
VerificationReport verify_quotient(int n, unsigned jobs = 1);

/// Whether P_n minimises the hard-core mean size at fugacity alpha among
/// n-vertex trees; a counterexample carries a minimising tree. Exploratory.
/// RangeError unless 2 <= n <= 12, DomainError unless alpha > 0.
VerificationReport weighted_extremal_scan(int n, const Rational& alpha, unsigned jobs = 1);

enum class Direction { Increase, Decrease, Equal };
std::string to_string(Direction d);

struct EdgeScanRow {
  Edge edge;
  Rational before;
  Rational after;
  Direction direction;
};

struct VertexScanRow {
  Vertex vertex;
  Rational before;
  Rational after;
  Direction direction;
};

/// avi before and after removing each edge. std::invalid_argument for an
/// edgeless graph.
std::vector<EdgeScanRow> edge_scan(const Graph& g);

/// avi after removing each vertex. std::invalid_argument for the empty
/// graph; std::logic_error if no vertex decreases avi.
std::vector<VertexScanRow> vertex_scan(const Graph& g);

}  // namespace avgindep
