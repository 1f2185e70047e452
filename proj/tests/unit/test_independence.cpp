#include <random>

#include "avgindep/errors.hpp"
#include "avgindep/graph_io.hpp"
#include "avgindep/independence.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace avgindep;

namespace {

IndependencePoly poly_of(std::initializer_list<long> cs) {
  std::vector<Integer> v;
  for (long c : cs) v.emplace_back(c);
  return IndependencePoly(v);
}

Integer pow2(int k) { return Integer(1) << k; }

const Graph kSixVertexTree = parse_edge_list("0 1\n1 2\n2 3\n1 4\n1 5\n");

}  // namespace

TEST_CASE("polynomials of small graphs") {
  CHECK(indep_poly(Graph::empty(2)) == poly_of({1, 2, 1}));
  CHECK(indep_poly(Graph::star(4)) == poly_of({1, 4, 3, 1}));
  CHECK(indep_poly(Graph::path(4)) == poly_of({1, 4, 3}));
  CHECK(indep_poly(Graph::path(4)).str() == "[1, 4, 3]");
  CHECK(brute_force_poly(Graph::complete(3)) == poly_of({1, 3}));
  CHECK(brute_force_poly(Graph::path(2)) == poly_of({1, 2}));
  CHECK(brute_force_poly(Graph::star(5)) == poly_of({1, 5, 6, 4, 1}));
  CHECK(indep_poly(Graph(0)) == poly_of({1}));
  CHECK_THROWS_AS(brute_force_poly(Graph::empty(26)), CapacityError);
}

TEST_CASE("summaries") {
  CHECK(avi(Graph::star(4)) == Rational(13, 9));
  CHECK(avi(kSixVertexTree) == Rational(55, 26));
  CHECK(avi(Graph::complete(4)) == Rational(4, 5));
  const auto p5 = summary(Graph::path(5));
  CHECK(p5.count == 13);
  CHECK(p5.total == 20);
  CHECK(p5.avg == Rational(20, 13));
  const auto e = summary(Graph(0));
  CHECK(e.count == 1);
  CHECK(e.total == 0);
  CHECK(e.avg == Rational(0));
}

TEST_CASE("weighted summaries") {
  for (int n = 1; n <= 8; ++n)
    for (const Rational& a : {Rational(1, 3), Rational(2), Rational(7, 2)})
      CHECK(weighted_summary(Graph::empty(n), a).avg == a * Rational(n) / (Rational(1) + a));
  const auto s3 = weighted_summary(Graph::star(3), Rational(2));
  CHECK(s3.count == Rational(11));
  CHECK(s3.total == Rational(14));
  CHECK(s3.avg == Rational(14, 11));
  CHECK_THROWS_AS(weighted_summary(Graph::star(3), Rational(0)), DomainError);
  CHECK_THROWS_AS(weighted_summary(Graph::star(3), Rational(-1, 2)), DomainError);
}

TEST_CASE("engine agrees with the subset oracle on random graphs") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 15);
    const Graph g = oracle::random_graph(rng, n);
    const auto expected = oracle::subset_poly(g);
    const auto got = indep_poly(g);
    REQUIRE(got.coeffs() == expected);
    CHECK(brute_force_poly(g) == got);
    CHECK(indep_poly_recursive(g) == got);
    CHECK(weighted_summary(g, Rational(1)).avg == summary(g).avg);
  }
}

TEST_CASE("engine agrees with the subset oracle on sparse and dense graphs") {
  std::mt19937_64 rng(99);
  for (double p : {0.1, 0.25, 0.8}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 11), p);
      CHECK(indep_poly(g).coeffs() == oracle::subset_poly(g));
    }
  }
}

TEST_CASE("deletion recursions hold at every vertex") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12));
    const auto s = summary(g);
    for (Vertex v : g.vertices()) {
      const auto minus = summary(g.remove_vertex(v));
      const auto closed = summary(g.remove_closed_nbhd(v));
      CHECK(s.count == minus.count + closed.count);
      CHECK(s.total == minus.total + closed.total + closed.count);
    }
  }
}

TEST_CASE("tree dynamic programme matches the memoised recursion") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph t = oracle::random_tree(rng, 1 + static_cast<int>(rng() % 40));
    CHECK(indep_poly_tree(t) == indep_poly_recursive(t));
  }
  CHECK_THROWS_AS(indep_poly_tree(Graph::complete(3)), std::invalid_argument);
}

TEST_CASE("multiplicativity and additivity over components") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8));
    const Graph b = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8));
    const std::vector<Graph> parts{a, b};
    CHECK(indep_poly(disjoint_union(parts)) == indep_poly(a) * indep_poly(b));
    CHECK(avi_additive_check(parts) == avi(a) + avi(b));
  }
  CHECK(avi_additive_check(std::vector<Graph>{Graph::path(2), Graph::path(2)}) == Rational(4, 3));
  CHECK(avi_additive_check(std::vector<Graph>{Graph::star(4), Graph::complete(3)}) ==
        Rational(79, 36));
  CHECK(avi_additive_check(std::vector<Graph>{}) == Rational(0));
  CHECK_THROWS_AS(avi_additive_check(std::vector<Graph>{Graph::empty(40), Graph::empty(30)}),
                  CapacityError);
}

TEST_CASE("edgeless and star closed forms up to n = 30") {
  for (int n = 1; n <= 30; ++n) {
    const auto e = summary(Graph::empty(n));
    const auto s = summary(Graph::star(n));
    CHECK(e.count == pow2(n));
    CHECK(e.total == Integer(n) * pow2(n - 1));
    CHECK(e.avg == Rational(n, 2));
    CHECK(s.count == Integer(pow2(n - 1) + 1));
    if (n >= 2) CHECK(s.total == Integer(Integer(n - 1) * pow2(n - 2) + 1));
    CHECK(s.avg == Rational(n - 1, 2) + Rational(Integer(3 - n), Integer(pow2(n) + 2)));
  }
}

TEST_CASE("polynomial invariants") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.3);
    const auto p = indep_poly(g);
    CHECK(p[0] == 1);
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(p[k] >= 1);
    const auto s = summary(p);
    CHECK(s.avg * Rational(s.count) == Rational(s.total));
    CHECK(s.avg > Rational(0));
    CHECK(s.avg <= Rational(g.order()));
  }
}

TEST_CASE("large sparse graphs stay exact") {
  const auto p = summary(Graph::path(64));
  CHECK(p.count == oracle::fibonacci(66));
  const auto e = summary(Graph::empty(64));
  CHECK(e.count == pow2(64));
  CHECK(e.avg == Rational(32));
}
