#include "avgindep/independence.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace avgindep {

namespace {

// Every intermediate polynomial below is the independence polynomial of an
// induced subgraph on at most 64 vertices (or x times one), so each
// coefficient is at most C(64, 32) < 2^63 and fits in 64 bits. Only the
// coefficient sums can exceed that, and those are taken over Integer.
using Coeffs = std::vector<std::uint64_t>;

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// a + x * b
Coeffs add_shifted(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size() + 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
  return out;
}

Coeffs binomial_row(int k) {
  Coeffs row{1};
  for (int i = 0; i < k; ++i) row = add_shifted(row, row);
  return row;
}

IndependencePoly to_poly(const Coeffs& c) {
  std::vector<Integer> out;
  out.reserve(c.size());
  for (std::uint64_t v : c) out.emplace_back(static_cast<unsigned long>(v));
  return IndependencePoly(std::move(out));
}

class PivotSolver {
 public:
  explicit PivotSolver(const Graph& g) : g_(g) {}

  Coeffs solve(VertexMask mask) {
    if (mask == 0) return {1};
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Coeffs result;
    const auto comps = g_.component_masks(mask);
    if (comps.size() > 1) {
      result = {1};
      for (VertexMask c : comps) result = multiply(result, solve(c));
    } else {
      result = solve_connected(mask);
    }
    memo_.emplace(mask, result);
    return result;
  }

 private:
  Coeffs solve_connected(VertexMask mask) {
    const int k = popcount(mask);
    Vertex pivot = -1;
    int best = -1;
    for (VertexMask m = mask; m != 0; m &= m - 1) {
      const Vertex v = lowest(m);
      const int d = popcount(g_.neighbours(v) & mask);
      if (d > best) {
        best = d;
        pivot = v;
      }
    }
    if (best == 0) return binomial_row(k);
    if (2 * g_.size_within(mask) == k * (k - 1)) return {1, static_cast<std::uint64_t>(k)};
    return add_shifted(solve(mask & ~bit(pivot)),
                       solve(mask & ~g_.closed_neighbourhood(pivot)));
  }

  const Graph& g_;
  std::unordered_map<VertexMask, Coeffs> memo_;
};

// Rooted DP over one tree component: for each vertex the polynomial of its
// subtree with the root excluded and with it included.
Coeffs tree_poly(const Graph& g, VertexMask comp) {
  const Vertex root = lowest(comp);
  std::vector<Vertex> order;
  std::array<Vertex, kMaxVertices> parent{};
  order.reserve(static_cast<std::size_t>(popcount(comp)));
  order.push_back(root);
  parent[root] = -1;
  VertexMask seen = bit(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (VertexMask m = g.neighbours(v) & comp & ~seen; m != 0; m &= m - 1) {
      const Vertex c = lowest(m);
      seen |= bit(c);
      parent[c] = v;
      order.push_back(c);
    }
  }
  std::array<Coeffs, kMaxVertices> excluded, included;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    Coeffs ex{1}, in{0, 1};
    for (VertexMask m = g.neighbours(v) & comp; m != 0; m &= m - 1) {
      const Vertex c = lowest(m);
      if (c == parent[v]) continue;
      Coeffs whole = excluded[c];
      whole.resize(std::max(whole.size(), included[c].size()), 0);
      for (std::size_t i = 0; i < included[c].size(); ++i) whole[i] += included[c][i];
      ex = multiply(ex, whole);
      in = multiply(in, excluded[c]);
    }
    excluded[v] = std::move(ex);
    included[v] = std::move(in);
  }
  Coeffs out = excluded[root];
  out.resize(std::max(out.size(), included[root].size()), 0);
  for (std::size_t i = 0; i < included[root].size(); ++i) out[i] += included[root][i];
  return out;
}

bool component_is_tree(const Graph& g, VertexMask comp) {
  return g.size_within(comp) == popcount(comp) - 1;
}

}  // namespace

IndependencePoly::IndependencePoly(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Integer IndependencePoly::count() const {
  Integer s = 0;
  for (const Integer& c : coeffs_) s += c;
  return s;
}

Integer IndependencePoly::total() const {
  Integer s = 0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    s += coeffs_[k] * static_cast<unsigned long>(k);
  return s;
}

Rational IndependencePoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Rational(*it);
  return acc;
}

Rational IndependencePoly::evaluate_size_weighted(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 1;)
    acc = acc * x + Rational(Integer(coeffs_[k] * static_cast<unsigned long>(k)));
  return acc * x;
}

IndependencePoly operator*(const IndependencePoly& a, const IndependencePoly& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return IndependencePoly(std::move(out));
}

std::string IndependencePoly::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    os << (k ? ", " : "") << coeffs_[k].get_str();
  os << "]";
  return os.str();
}

IndependencePoly indep_poly(const Graph& g) {
  Coeffs result{1};
  PivotSolver solver(g);
  for (VertexMask comp : g.component_masks(g.present())) {
    result = multiply(result, component_is_tree(g, comp) ? tree_poly(g, comp)
                                                         : solver.solve(comp));
  }
  return to_poly(result);
}

IndependencePoly indep_poly_recursive(const Graph& g) {
  PivotSolver solver(g);
  return to_poly(solver.solve(g.present()));
}

IndependencePoly indep_poly_tree(const Graph& g) {
  if (!g.is_tree()) throw std::invalid_argument("indep_poly_tree needs a tree");
  return to_poly(tree_poly(g, g.present()));
}

IndependencePoly brute_force_poly(const Graph& g) {
  const int k = g.order();
  if (k > kBruteForceLimit)
    throw CapacityError("brute force is limited to 25 vertices, got " +
                        std::to_string(k));
  const VertexMask all = g.present();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k) + 1, 0);
  VertexMask s = 0;
  do {
    if (g.is_independent(s)) ++counts[static_cast<std::size_t>(popcount(s))];
    s = (s - all) & all;
  } while (s != 0);
  return to_poly(counts);
}

InvariantSummary summary(const IndependencePoly& p) {
  InvariantSummary s{p.count(), p.total(), Rational(0)};
  s.avg = Rational(s.total, s.count);
  return s;
}

InvariantSummary summary(const Graph& g) { return summary(indep_poly(g)); }

WeightedSummary weighted_summary(const IndependencePoly& p, const Rational& alpha) {
  if (alpha.sign() <= 0)
    throw DomainError("fugacity must be positive, got " + alpha.str());
  WeightedSummary w{p.evaluate(alpha), p.evaluate_size_weighted(alpha), Rational(0)};
  w.avg = w.total / w.count;
  return w;
}

WeightedSummary weighted_summary(const Graph& g, const Rational& alpha) {
  return weighted_summary(indep_poly(g), alpha);
}

Rational avi_additive_check(std::span<const Graph> parts) {
  const Graph whole = disjoint_union(parts);
  const Rational avg = avi(whole);
  Rational sum(0);
  for (const Graph& p : parts) sum += avi(p);
  if (avg != sum)
    throw std::logic_error("avi not additive over components: " + avg.str() +
                           " vs " + sum.str());
  return avg;
}

}  // namespace avgindep
