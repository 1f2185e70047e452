#include <algorithm>
#include <random>
#include <set>

#include "avgindep/errors.hpp"
#include "avgindep/independence.hpp"
#include "avgindep/set_family.hpp"
#include "avgindep/tree_enum.hpp"
#include "doctest.h"

using namespace avgindep;

namespace {

// Random family over a ground set of `k` elements with at least two distinct
// cardinalities.
SetFamily random_family(std::mt19937_64& rng, int k) {
  const std::uint64_t ground = (std::uint64_t{1} << k) - 1;
  while (true) {
    std::set<std::uint64_t> picked;
    const int size = 1 + static_cast<int>(rng() % std::min<std::uint64_t>(40, ground + 1));
    while (static_cast<int>(picked.size()) < size) picked.insert(rng() & ground);
    SetFamily f(ground, {picked.begin(), picked.end()});
    if (!f.all_same_cardinality()) return f;
  }
}

Rational restricted_average(const SetFamily& f, int x) {
  const auto kept = f.restricted_members(x);
  long sizes = 0;
  for (auto m : kept) sizes += std::popcount(m);
  return Rational(sizes, static_cast<long>(kept.size()));
}

}  // namespace

TEST_CASE("family averages") {
  CHECK(family_average(SetFamily(0b11, {0, 0b01, 0b10})) == Rational(2, 3));
  CHECK(family_average(independent_family(Graph::star(4))) == Rational(13, 9));
  std::vector<std::uint64_t> all(8);
  for (std::uint64_t s = 0; s < 8; ++s) all[s] = s;
  CHECK(family_average(SetFamily(0b111, all)) == Rational(3, 2));
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(SetFamily(0b1, {}), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily(0b1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily(0b1, {0b10}), std::invalid_argument);
}

TEST_CASE("decreasing element") {
  const SetFamily s4 = independent_family(Graph::star(4));
  const int x0 = find_decreasing_element(s4);
  CHECK(x0 == 1);
  CHECK(restricted_average(s4, x0) == Rational(1));

  const SetFamily pair(0b11, {0, 0b11});
  CHECK(find_decreasing_element(pair) == 0);
  CHECK(restricted_average(pair, 0) == Rational(0));

  CHECK(find_decreasing_element(SetFamily(0b1, {0, 0b1})) == 0);

  CHECK_THROWS_AS(find_decreasing_element(SetFamily(0b111, {0b001, 0b010, 0b100})),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_decreasing_element(SetFamily(0b1, {0})), std::invalid_argument);
}

TEST_CASE("independent families") {
  const auto k3 = independent_family(Graph::complete(3)).members();
  CHECK(k3 == std::vector<std::uint64_t>{0, 0b001, 0b010, 0b100});
  CHECK(independent_family(Graph::empty(2)).size() == 4);
  CHECK(independent_family(Graph::path(3)).size() == 5);
  CHECK_THROWS_AS(independent_family(Graph::empty(26)), CapacityError);
}

TEST_CASE("averaged inequality and its sum identities on random families") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    const SetFamily f = random_family(rng, 2 + static_cast<int>(rng() % 7));
    const auto direct = restriction_sums_direct(f);
    const auto closed = restriction_sums_closed_form(f);
    CHECK(direct.sizes == closed.sizes);
    CHECK(direct.counts == closed.counts);
    CHECK(family_average(f) > averaged_restriction_ratio(f));

    const int x0 = find_decreasing_element(f);
    REQUIRE_FALSE(f.restricted_members(x0).empty());
    const Rational best = restricted_average(f, x0);
    CHECK(best < family_average(f));
    for (int x = 0; x < 9; ++x) {
      if (!(f.ground() >> x & 1) || f.restricted_members(x).empty()) continue;
      const Rational r = restricted_average(f, x);
      CHECK(best <= r);
      if (x < x0) CHECK(best < r);
    }
  }
}

TEST_CASE("independent-set witness lowers avi for all graphs up to five vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const int x0 = find_decreasing_element(independent_family(g));
      CHECK(avi(g.remove_vertex(x0)) < avi(g));
    }
  }
}
