#pragma once

#include <span>
#include <string>
#include <vector>

#include "avgindep/graph.hpp"
#include "avgindep/rational.hpp"

namespace avgindep {

/// Independence polynomial: coeffs()[k] is the number of independent sets
/// of size k. The constant term is always 1 (the empty set).
class IndependencePoly {
 public:
  IndependencePoly() : coeffs_{Integer(1)} {}
  /// Trailing zero coefficients are dropped.
  explicit IndependencePoly(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_[k]; }
  std::size_t size() const { return coeffs_.size(); }
  int independence_number() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// I(G) = I(G, 1).
  Integer count() const;
  /// T(G) = I'(G, 1), the summed size of all independent sets.
  Integer total() const;
  /// I(G, x).
  Rational evaluate(const Rational& x) const;
  /// sum_k k * i(G, k) * x^k.
  Rational evaluate_size_weighted(const Rational& x) const;

  friend IndependencePoly operator*(const IndependencePoly& a,
                                    const IndependencePoly& b);
  friend bool operator==(const IndependencePoly&, const IndependencePoly&) = default;

  /// "[1, 4, 3]"
  std::string str() const;

 private:
  std::vector<Integer> coeffs_;
};

struct InvariantSummary {
  Integer count;  // I(G)
  Integer total;  // T(G)
  Rational avg;   // T(G) / I(G)
};

/// Hard-core model at fugacity alpha: partition function, size-weighted sum
/// and mean independent-set size.
struct WeightedSummary {
  Rational count;
  Rational total;
  Rational avg;
};

/// Exact independence polynomial. Components are solved separately and
/// multiplied; trees use a rooted DP, everything else a pivot recursion
/// I(G) = I(G-v) + x I(G-N[v]) on a maximum-degree vertex, memoised on the
/// remaining vertex set for the duration of the call.
IndependencePoly indep_poly(const Graph& g);

/// Pivot recursion only (no tree shortcut). Same contract as indep_poly.
IndependencePoly indep_poly_recursive(const Graph& g);

/// Rooted two-state DP. Requires g.is_tree().
IndependencePoly indep_poly_tree(const Graph& g);

inline constexpr int kBruteForceLimit = 25;

/// Enumerates all 2^n vertex subsets. CapacityError above 25 vertices.
IndependencePoly brute_force_poly(const Graph& g);

InvariantSummary summary(const IndependencePoly& p);
InvariantSummary summary(const Graph& g);
inline Rational avi(const Graph& g) { return summary(g).avg; }

/// DomainError unless alpha > 0.
WeightedSummary weighted_summary(const IndependencePoly& p, const Rational& alpha);
WeightedSummary weighted_summary(const Graph& g, const Rational& alpha);

/// avi of the disjoint union of `parts`, checked against the sum of the
/// per-part averages (std::logic_error on mismatch).
Rational avi_additive_check(std::span<const Graph> parts);

}  // namespace avgindep
