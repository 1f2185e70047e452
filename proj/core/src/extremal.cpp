#include "avgindep/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

#include "avgindep/independence.hpp"
#include "avgindep/path_analysis.hpp"
#include "avgindep/set_family.hpp"
#include "avgindep/tree_enum.hpp"

namespace avgindep {

namespace {

using Failure = std::optional<Witness>;
using CheckFn = std::function<Failure(std::uint64_t)>;

// Runs check(i) for i in [0, count) and returns the failure with the
// smallest index. Workers own contiguous chunks and stop once a smaller
// index has already failed, so the answer is schedule-independent.
std::optional<std::pair<std::uint64_t, Witness>> first_failure(std::uint64_t count,
                                                               unsigned jobs,
                                                               const CheckFn& check) {
  if (count == 0) return std::nullopt;
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2 * jobs) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (auto w = check(i)) return std::make_pair(i, std::move(*w));
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{count};
  std::vector<std::optional<Witness>> found(jobs);
  std::vector<std::uint64_t> found_at(jobs, count);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (count + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t lo = std::min(count, w * chunk);
      const std::uint64_t hi = std::min(count, lo + chunk);
      workers.emplace_back([&, w, lo, hi] {
        for (std::uint64_t i = lo; i < hi && i < best.load(std::memory_order_relaxed); ++i) {
          if (auto wit = check(i)) {
            found[w] = std::move(wit);
            found_at[w] = i;
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      });
    }
  }
  for (unsigned w = 0; w < jobs; ++w)
    if (found[w]) return std::make_pair(found_at[w], std::move(*found[w]));
  return std::nullopt;
}

std::string order_range(int n) { return "n=" + std::to_string(n); }

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw RangeError(std::string(what) + " needs " + std::to_string(lo) + " <= n <= " +
                     std::to_string(hi) + ", got " + std::to_string(n));
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v : g.vertices()) d = std::max(d, g.degree(v));
  return d;
}

Direction direction_of(const Rational& before, const Rational& after) {
  if (after > before) return Direction::Increase;
  if (after < before) return Direction::Decrease;
  return Direction::Equal;
}

}  // namespace

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Increase:
      return "increase";
    case Direction::Decrease:
      return "decrease";
    case Direction::Equal:
      return "equal";
  }
  return "?";
}

VerificationReport verify_bounds(int n, unsigned jobs) {
  require_range(n, 1, kMaxLabelledOrder, "verify_bounds");
  const LabelledGraphs graphs(n);
  const std::uint64_t full = graphs.size() - 1;
  const Rational lower(n, n + 1);
  const Rational upper(n, 2);
  VerificationReport report("bounds", order_range(n));

  const Rational avi_complete = avi(Graph::complete(n));
  const Rational avi_empty = avi(Graph::empty(n));
  report.add_fact("avi(K_n)", avi_complete.str());
  report.add_fact("avi(E_n)", avi_empty.str());
  if (avi_complete != lower || avi_empty != upper)
    report.fail({std::nullopt,
                 {{"check", "avi(K_n) = n/(n+1) and avi(E_n) = n/2"},
                  {"avi(K_n)", avi_complete.str()},
                  {"avi(E_n)", avi_empty.str()}}});

  auto failure = first_failure(graphs.size(), jobs, [&](std::uint64_t i) -> Failure {
    if (i == 0 || i == full) return std::nullopt;
    const Graph g = graphs.at(i);
    const Rational value = avi(g);
    if (lower < value && value < upper) return std::nullopt;
    return Witness{g, {{"avi", value.str()}, {"lower", lower.str()}, {"upper", upper.str()}}};
  });
  if (failure) report.fail(std::move(failure->second));
  report.set_checked(graphs.size());
  report.add_fact("non_extremal_graphs",
                  std::to_string(n == 1 ? 0 : graphs.size() - 2));
  return report;
}

VerificationReport verify_vertex_removal(int n, unsigned jobs) {
  require_range(n, 1, kMaxLabelledOrder, "verify_vertex_removal");
  const LabelledGraphs graphs(n);
  VerificationReport report("vertex-removal", order_range(n));
  auto failure = first_failure(graphs.size(), jobs, [&](std::uint64_t i) -> Failure {
    const Graph g = graphs.at(i);
    const Rational before = avi(g);
    const SetFamily family = independent_family(g);
    const int x0 = find_decreasing_element(family);
    const Rational after = avi(g.remove_vertex(x0));
    const auto kept = family.restricted_members(x0);
    Integer sizes = 0;
    for (auto m : kept) sizes += std::popcount(m);
    const Rational restricted(sizes, Integer(static_cast<unsigned long>(kept.size())));
    if (after < before && restricted == after) return std::nullopt;
    return Witness{g,
                   {{"vertex", std::to_string(x0)},
                    {"avi(G)", before.str()},
                    {"avi(G-v)", after.str()},
                    {"restricted family average", restricted.str()}}};
  });
  if (failure) report.fail(std::move(failure->second));
  report.set_checked(graphs.size());
  return report;
}

VerificationReport verify_star_max(int n, unsigned jobs) {
  require_range(n, 1, 16, "verify_star_max");
  const std::vector<Graph> trees = all_trees(n);
  const Rational star_value = avi(Graph::star(n));
  VerificationReport report("star-max", order_range(n));
  report.add_fact("avi(S_n)", star_value.str());
  auto failure = first_failure(trees.size(), jobs, [&](std::uint64_t i) -> Failure {
    const Graph& t = trees[i];
    const Rational value = avi(t);
    const bool is_star = max_degree(t) == n - 1;
    if (value < star_value || (value == star_value && is_star)) return std::nullopt;
    return Witness{t, {{"avi(T)", value.str()}, {"avi(S_n)", star_value.str()}}};
  });
  if (failure) report.fail(std::move(failure->second));
  report.set_checked(trees.size());
  report.add_fact("equality_only_at_star", failure ? "false" : "true");
  return report;
}

VerificationReport verify_path_min(int n, unsigned jobs) {
  require_range(n, 1, 16, "verify_path_min");
  const std::vector<Graph> trees = all_trees(n);
  const Rational path_value = avi(Graph::path(n));
  const QuadNumber line = slope_a() * QuadNumber(n) + intercept_b();
  VerificationReport report("path-min", order_range(n));
  report.add_fact("avi(P_n)", path_value.str());
  report.add_fact("a*n+b", line.str());
  if (n >= 4 && !(QuadNumber(path_value) < line))
    report.fail({Graph::path(n), {{"check", "avi(P_n) < a n + b"}, {"avi(P_n)", path_value.str()}}});
  auto failure = first_failure(trees.size(), jobs, [&](std::uint64_t i) -> Failure {
    const Graph& t = trees[i];
    if (max_degree(t) <= 2) return std::nullopt;
    const Rational value = avi(t);
    if (QuadNumber(value) >= line && path_value < value) return std::nullopt;
    return Witness{t, {{"avi(T)", value.str()},
                       {"avi(P_n)", path_value.str()},
                       {"a*n+b", line.str()}}};
  });
  if (failure) report.fail(std::move(failure->second));
  report.set_checked(trees.size());
  report.add_fact("non_path_trees", std::to_string(trees.size() - 1));
  return report;
}

VerificationReport verify_quotient(int n, unsigned jobs) {
  require_range(n, 1, 14, "verify_quotient");
  const std::vector<Graph> trees = all_trees(n);
  VerificationReport report("quotient", order_range(n));
  std::atomic<bool> half_attained{false};
  auto failure = first_failure(trees.size(), jobs, [&](std::uint64_t i) -> Failure {
    const Graph& t = trees[i];
    const Integer whole = indep_poly(t).count();
    for (Vertex v : t.vertices()) {
      const Integer part = indep_poly(t.remove_vertex(v)).count();
      if (2 * part == whole) half_attained = true;
      if (2 * part < whole || part >= whole)
        return Witness{t, {{"vertex", std::to_string(v)},
                           {"I(T-v)", part.get_str()},
                           {"I(T)", whole.get_str()}}};
    }
    return std::nullopt;
  });
  if (failure) report.fail(std::move(failure->second));
  report.set_checked(trees.size());
  report.add_fact("vertex_checks", std::to_string(trees.size() * static_cast<std::size_t>(n)));
  report.add_fact("lower_bound_attained", half_attained ? "true" : "false");
  return report;
}

VerificationReport weighted_extremal_scan(int n, const Rational& alpha, unsigned jobs) {
  require_range(n, 2, 12, "weighted_extremal_scan");
  if (alpha.sign() <= 0) throw DomainError("fugacity must be positive, got " + alpha.str());
  const std::vector<Graph> trees = all_trees(n);
  std::vector<Rational> values(trees.size());
  first_failure(trees.size(), jobs, [&](std::uint64_t i) -> Failure {
    values[i] = weighted_summary(trees[i], alpha).avg;
    return std::nullopt;
  });
  const Rational path_value = weighted_summary(Graph::path(n), alpha).avg;
  std::size_t best = 0;
  for (std::size_t i = 1; i < trees.size(); ++i)
    if (values[i] < values[best]) best = i;
  std::size_t minimisers = 0;
  for (const auto& v : values) minimisers += v == values[best] ? 1 : 0;

  VerificationReport report("weighted-scan", order_range(n) + ", alpha=" + alpha.str());
  report.set_checked(trees.size());
  report.add_fact("alpha", alpha.str());
  report.add_fact("avi_alpha(P_n)", path_value.str());
  report.add_fact("avi_alpha(P_n)_approx", path_value.decimal(12));
  report.add_fact("min_avi_alpha", values[best].str());
  report.add_fact("minimisers", std::to_string(minimisers));
  report.add_fact("path_minimal", values[best] < path_value ? "false" : "true");
  if (values[best] < path_value)
    report.fail({trees[best],
                 {{"avi_alpha(T)", values[best].str()},
                  {"avi_alpha(T)_approx", values[best].decimal(12)},
                  {"avi_alpha(P_n)", path_value.str()},
                  {"max_degree", std::to_string(max_degree(trees[best]))}}});
  return report;
}

std::vector<EdgeScanRow> edge_scan(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw std::invalid_argument("edge_scan needs at least one edge");
  const Rational before = avi(g);
  std::vector<EdgeScanRow> rows;
  for (const auto& e : edges) {
    Rational after = avi(g.remove_edge(e.first, e.second));
    const Direction d = direction_of(before, after);
    rows.push_back({e, before, std::move(after), d});
  }
  return rows;
}

std::vector<VertexScanRow> vertex_scan(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("vertex_scan needs at least one vertex");
  const Rational before = avi(g);
  std::vector<VertexScanRow> rows;
  bool decreased = false;
  for (Vertex v : g.vertices()) {
    Rational after = avi(g.remove_vertex(v));
    const Direction d = direction_of(before, after);
    decreased = decreased || d == Direction::Decrease;
    rows.push_back({v, before, std::move(after), d});
  }
  if (!decreased) throw std::logic_error("no vertex removal decreases avi");
  return rows;
}

}  // namespace avgindep
