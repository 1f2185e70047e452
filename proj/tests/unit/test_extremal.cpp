#include <set>

#include "avgindep/errors.hpp"
#include "avgindep/extremal.hpp"
#include "avgindep/graph_io.hpp"
#include "avgindep/independence.hpp"
#include "avgindep/tree_enum.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace avgindep;

namespace {

const Graph kSixVertexTree = parse_edge_list("0 1\n1 2\n2 3\n1 4\n1 5\n");

std::size_t count_trees(int n) {
  std::size_t c = 0;
  for (auto it = enumerate_trees(n).begin(); it != enumerate_trees(n).end(); ++it) ++c;
  return c;
}

}  // namespace

TEST_CASE("free tree counts") {
  const std::size_t expected[] = {1,    1,    1,     2,     3,     6,     11,    23,     47,
                                  106,  235,  551,   1301,  3159,  7741,  19320, 48629, 123867};
  for (int n = 1; n <= 18; ++n) CHECK(count_trees(n) == expected[n - 1]);
  CHECK_THROWS_AS(enumerate_trees(0), RangeError);
  CHECK_THROWS_AS(enumerate_trees(19), RangeError);
}

TEST_CASE("free tree counts match Pruefer deduplication") {
  for (int n = 1; n <= 9; ++n) CHECK(count_trees(n) == oracle::pruefer_tree_classes(n));
}

TEST_CASE("enumerated trees are trees and pairwise non-isomorphic") {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::string> forms;
    for (const Graph& t : enumerate_trees(n)) {
      CHECK(t.is_tree());
      CHECK(t.order() == n);
      std::vector<std::vector<int>> adj(n);
      for (const auto& [u, v] : t.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      CHECK(forms.insert(oracle::centre_form(adj)).second);
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  CHECK(all_trees(10) == all_trees(10));
  const auto four = all_trees(4);
  REQUIRE(four.size() == 2);
  int max_deg[2] = {0, 0};
  for (int i = 0; i < 2; ++i)
    for (Vertex v : four[i].vertices()) max_deg[i] = std::max(max_deg[i], four[i].degree(v));
  CHECK(std::min(max_deg[0], max_deg[1]) == 2);
  CHECK(std::max(max_deg[0], max_deg[1]) == 3);
}

TEST_CASE("labelled graph enumeration") {
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 8);
  CHECK(enumerate_graphs(5).size() == 1024);
  const LabelledGraphs g4(4);
  CHECK(g4.at(0) == Graph::empty(4));
  CHECK(g4.at(g4.size() - 1) == Graph::complete(4));
  std::set<std::vector<Edge>> seen;
  for (const Graph& g : g4) seen.insert(g.edges());
  CHECK(seen.size() == 64);
  CHECK_THROWS_AS(enumerate_graphs(0), RangeError);
  CHECK_THROWS_AS(enumerate_graphs(8), RangeError);
}

TEST_CASE("bounds") {
  const auto r1 = verify_bounds(1);
  CHECK(r1.verified());
  CHECK(avi(Graph::star(4)) > Rational(4, 5));
  CHECK(avi(Graph::star(4)) < Rational(2));
  const auto r6 = verify_bounds(6, 2);
  CHECK(r6.verified());
  CHECK(r6.checked() == 32768);
  CHECK_THROWS_AS(verify_bounds(8), RangeError);
}

TEST_CASE("star maximality") {
  CHECK(avi(Graph::star(4)) >= avi(Graph::path(4)));
  // I(P_4) = 8 and T(P_4) = 4 + 2 * 3 = 10.
  CHECK(avi(Graph::path(4)) == Rational(5, 4));
  CHECK(verify_star_max(3).verified());
  const auto r = verify_star_max(10);
  CHECK(r.verified());
  CHECK(r.checked() == 106);
  CHECK_THROWS_AS(verify_star_max(17), RangeError);
}

TEST_CASE("path minimality") {
  CHECK(avi(Graph::path(4)) < avi(Graph::star(4)));
  for (int n = 1; n <= 3; ++n) CHECK(verify_path_min(n).verified());
  const auto r = verify_path_min(14);
  CHECK(r.verified());
  CHECK(r.checked() == 3159);
}

TEST_CASE("vertex-deletion quotient") {
  CHECK(Rational(indep_poly(Graph(0)).count(), indep_poly(Graph::path(1)).count()) ==
        Rational(1, 2));
  const Graph s4 = Graph::star(4);
  CHECK(Rational(indep_poly(s4.remove_vertex(0)).count(), indep_poly(s4).count()) ==
        Rational(8, 9));
  CHECK(verify_quotient(1).verified());
  CHECK(verify_quotient(12, 2).verified());
}

TEST_CASE("vertex removal witness") {
  CHECK(verify_vertex_removal(5).verified());
  CHECK(verify_vertex_removal(5, 3).checked() == 1024);
}

TEST_CASE("worker count does not change reports") {
  for (unsigned jobs : {1u, 2u, 5u}) {
    CHECK(to_json(verify_path_min(9, jobs)) == to_json(verify_path_min(9, 1)));
    CHECK(to_json(weighted_extremal_scan(9, Rational(10), jobs)) ==
          to_json(weighted_extremal_scan(9, Rational(10), 1)));
  }
}

TEST_CASE("edge scan") {
  const auto rows = edge_scan(kSixVertexTree);
  auto find = [&](Vertex u, Vertex v) {
    for (const auto& r : rows)
      if (r.edge == Edge{u, v}) return r;
    FAIL("edge missing");
    return rows.front();
  };
  CHECK(find(1, 2).before == Rational(55, 26));
  CHECK(find(1, 2).after == Rational(19, 9));
  CHECK(find(1, 2).direction == Direction::Decrease);
  CHECK(find(2, 3).after == Rational(83, 34));
  CHECK(find(2, 3).direction == Direction::Increase);

  for (const auto& r : edge_scan(Graph::star(6))) {
    CHECK(r.before == Rational(27, 11));
    CHECK(r.after == Rational(83, 34));
    CHECK(r.direction == Direction::Decrease);
  }
  for (const auto& r : edge_scan(Graph::star(4))) {
    CHECK(r.after == Rational(3, 2));
    CHECK(r.direction == Direction::Increase);
  }
  CHECK_THROWS_AS(edge_scan(Graph::empty(3)), std::invalid_argument);
}

TEST_CASE("vertex scan") {
  const auto rows = vertex_scan(Graph::star(4));
  CHECK(rows[0].after == Rational(3, 2));
  CHECK(rows[0].direction == Direction::Increase);
  for (int i = 1; i < 4; ++i) {
    CHECK(rows[i].after == Rational(1));
    CHECK(rows[i].direction == Direction::Decrease);
  }
  for (const auto& r : vertex_scan(Graph::complete(2))) {
    CHECK(r.after == Rational(1, 2));
    CHECK(r.direction == Direction::Decrease);
  }
  CHECK(Graph::path(2) == Graph::complete(2));
  CHECK_THROWS_AS(vertex_scan(Graph(0)), std::invalid_argument);
  CHECK(to_string(Direction::Equal) == "equal");
}

TEST_CASE("weighted scan") {
  const auto unit = weighted_extremal_scan(8, Rational(1));
  CHECK(unit.verified());
  const auto half = weighted_extremal_scan(8, Rational(1, 2));
  CHECK(half.checked() == 23);
  CHECK_THROWS_AS(weighted_extremal_scan(1, Rational(1)), RangeError);
  CHECK_THROWS_AS(weighted_extremal_scan(8, Rational(0)), DomainError);
}

TEST_CASE("report serialisation") {
  VerificationReport r("demo", "n=3");
  r.add_fact("x", "1/2");
  CHECK(r.status() == Status::Verified);
  auto doc = nlohmann::json::parse(to_json(r));
  CHECK(doc["claim"] == "demo");
  CHECK(doc["status"] == "verified");
  CHECK(doc["witness"].is_null());
  CHECK(doc["facts"]["x"] == "1/2");

  r.fail({Graph::path(3), {{"avi", "1/1"}}});
  r.fail({Graph::star(3), {{"avi", "2/1"}}});
  CHECK(r.status() == Status::Counterexample);
  doc = nlohmann::json::parse(to_json(r));
  CHECK(doc["status"] == "counterexample");
  CHECK(doc["witness"]["n"] == 3);
  CHECK(doc["witness"]["edges"] == nlohmann::json::parse("[[0,1],[1,2]]"));
  CHECK(doc["witness"]["values"]["avi"] == "1/1");
  CHECK(to_text(r).find("counterexample") != std::string::npos);
}

TEST_CASE("merged reports keep the earliest witness") {
  VerificationReport a("c", "n=1"), b("c", "n=2"), c("c", "n=3");
  a.set_checked(1);
  b.set_checked(2);
  c.set_checked(3);
  b.fail({std::nullopt, {{"k", "b"}}});
  c.fail({std::nullopt, {{"k", "c"}}});
  const std::vector<VerificationReport> parts{a, b, c};
  const auto m = merge_reports("c", "n=1..3", parts);
  CHECK(m.checked() == 6);
  REQUIRE(m.witness());
  CHECK(m.witness()->values.front() == NamedValue{"sub_range", "n=2"});
}
