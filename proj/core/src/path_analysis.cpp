#include "avgindep/path_analysis.hpp"

#include <algorithm>

#include "avgindep/graph.hpp"
#include "avgindep/independence.hpp"

namespace avgindep {

namespace {

QuadNumber q(long p, long pd, long r, long rd) {
  return {Rational(p, pd), Rational(r, rd)};
}

// 2/sqrt5 - 3/4, the offset c_4 that bounds every branch with >= 4 vertices.
QuadNumber large_branch_offset() { return q(-3, 4, 2, 5); }

// 1/sqrt5 - 1/3 = c_2.
QuadNumber minimum_offset() { return q(-1, 3, 1, 5); }

// Tabulated c_1 .. c_5.
std::array<QuadNumber, 5> tabulated_offsets() {
  return {q(0, 1, 1, 10), q(-1, 3, 1, 5), q(-1, 2, 3, 10), q(-3, 4, 2, 5),
          q(-25, 26, 1, 2)};
}

std::string range_str(int lo, int hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

Witness scalar_witness(std::initializer_list<NamedValue> values) {
  return Witness{std::nullopt, std::vector<NamedValue>(values)};
}

}  // namespace

QuadNumber slope_a() { return q(1, 2, -1, 10); }
QuadNumber intercept_b() { return q(-165, 70, 79, 70); }
QuadNumber path_limit_offset() { return q(3, 5, -1, 5); }

PathCounts path_counts(int n) {
  if (n < 0) throw RangeError("path order must be non-negative");
  Integer i_prev = 1, t_prev = 0;  // P_0
  Integer i_cur = 2, t_cur = 1;    // P_1
  if (n == 0) return {i_prev, t_prev};
  for (int k = 2; k <= n; ++k) {
    Integer i_next = i_cur + i_prev;
    Integer t_next = t_cur + t_prev + i_prev;
    i_prev = std::move(i_cur);
    t_prev = std::move(t_cur);
    i_cur = std::move(i_next);
    t_cur = std::move(t_next);
  }
  return {i_cur, t_cur};
}

Rational path_avi_recurrence(int n) {
  const PathCounts c = path_counts(n);
  return Rational(c.total, c.count);
}

QuadNumber path_closed_form_raw(int n) {
  const long m = n + 2;
  QuadNumber power = golden_power(2 * m);  // phi^(2(n+2))
  if (m % 2 != 0) power = -power;          // (-phi^2)^(n+2)
  const QuadNumber denom = QuadNumber::sqrt5() * (power - QuadNumber(1));
  return slope_a() * QuadNumber(n) + path_limit_offset() - QuadNumber(m) / denom;
}

PathFormulaValue path_closed_form(int n) {
  if (n < 1 || n > kMaxPathFormulaOrder)
    throw RangeError("path closed form needs 1 <= n <= 500, got " + std::to_string(n));
  QuadNumber value = path_closed_form_raw(n);
  Rational r = as_rational(value);
  const Rational independent =
      n <= kMaxVertices ? avi(Graph::path(n)) : path_avi_recurrence(n);
  if (r != independent)
    throw std::logic_error("closed form for P_" + std::to_string(n) + " gives " +
                           r.str() + " but the count gives " + independent.str());
  QuadNumber c = value - slope_a() * QuadNumber(n);
  return {n, std::move(value), std::move(r), std::move(c)};
}

QuadNumber path_offset(int n) { return path_closed_form(n).c_n; }

VerificationReport verify_error_term(int max_n) {
  if (max_n < 5 || max_n > kMaxPathFormulaOrder)
    throw RangeError("verify_error_term needs 5 <= max_n <= 500, got " +
                     std::to_string(max_n));
  VerificationReport report("path-formula", range_str(1, max_n));
  const QuadNumber limit = path_limit_offset();
  std::vector<QuadNumber> c(static_cast<std::size_t>(max_n) + 1);
  std::vector<QuadNumber> err(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) {
    c[static_cast<std::size_t>(n)] = path_offset(n);
    err[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n)] - limit;
  }
  report.set_checked(static_cast<std::uint64_t>(max_n));

  const auto table = tabulated_offsets();
  for (int n = 1; n <= 5; ++n) {
    if (c[static_cast<std::size_t>(n)] != table[static_cast<std::size_t>(n - 1)])
      report.fail(scalar_witness({{"check", "tabulated offset"},
                                  {"n", std::to_string(n)},
                                  {"computed", c[static_cast<std::size_t>(n)].str()},
                                  {"tabulated", table[static_cast<std::size_t>(n - 1)].str()}}));
  }
  const bool ordered = c[2] < c[4] && c[4] < c[5] && c[5] < c[3] && c[3] < c[1];
  report.add_fact("table_order_c2<c4<c5<c3<c1", ordered ? "true" : "false");
  if (!ordered)
    report.fail(scalar_witness({{"check", "ordering c_2 < c_4 < c_5 < c_3 < c_1"}}));

  for (int n = 1; n <= max_n; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (err[i].sign() == 0)
      report.fail(scalar_witness({{"check", "nonzero error term"}, {"n", std::to_string(n)}}));
    if (n < max_n && err[i].sign() * err[i + 1].sign() != -1)
      report.fail(scalar_witness({{"check", "alternating sign"}, {"n", std::to_string(n)},
                                  {"c_n - L", err[i].str()},
                                  {"c_{n+1} - L", err[i + 1].str()}}));
    if (n >= 2 && n < max_n && !(err[i + 1].abs() < err[i].abs()))
      report.fail(scalar_witness({{"check", "decreasing |c_n - L|"}, {"n", std::to_string(n)},
                                  {"|c_n - L|", err[i].abs().decimal()},
                                  {"|c_{n+1} - L|", err[i + 1].abs().decimal()}}));
    const int cmp2 = compare(c[i], c[2]);
    if (cmp2 < 0 || (cmp2 == 0 && n != 2))
      report.fail(scalar_witness({{"check", "c_n >= c_2, equality only at n = 2"},
                                  {"n", std::to_string(n)}, {"c_n", c[i].str()}}));
    if (n != 2) {
      const int cmp4 = compare(c[i], c[4]);
      if (cmp4 < 0 || (cmp4 == 0 && n != 4))
        report.fail(scalar_witness({{"check", "c_n >= c_4 for n != 2, equality only at n = 4"},
                                    {"n", std::to_string(n)}, {"c_n", c[i].str()}}));
    }
  }

  int argmin = 1, argmin_not2 = 1;
  for (int n = 2; n <= max_n; ++n) {
    if (c[static_cast<std::size_t>(n)] < c[static_cast<std::size_t>(argmin)]) argmin = n;
    if (n != 2 && c[static_cast<std::size_t>(n)] < c[static_cast<std::size_t>(argmin_not2)])
      argmin_not2 = n;
  }
  report.add_fact("argmin_c_n", std::to_string(argmin));
  report.add_fact("argmin_c_n_excluding_2", std::to_string(argmin_not2));
  report.add_fact("min_c_n", c[static_cast<std::size_t>(argmin)].str());
  report.add_fact("limit_offset", limit.str());
  return report;
}

std::vector<CaseSpec> enumerate_cases(int k) {
  if (k != 3 && k != 4)
    throw RangeError("case analysis covers k = 3 and k = 4 only, got " + std::to_string(k));
  std::vector<CaseSpec> out;
  for (int x1 = 0; x1 <= k; ++x1)
    for (int x2 = 0; x1 + x2 <= k; ++x2)
      for (int x3 = 0; x1 + x2 + x3 <= k; ++x3)
        for (int x4 = 0; x1 + x2 + x3 + x4 <= k; ++x4)
          out.push_back({k, {x1, x2, x3, x4, k - x1 - x2 - x3 - x4}});
  return out;
}

namespace {

struct CaseConstants {
  QuadNumber branch_sum;
  QuadNumber removed_sum;
};

CaseConstants case_constants(const CaseSpec& s) {
  const QuadNumber a = slope_a();
  const QuadNumber big = large_branch_offset();
  const auto& x = s.x;
  // avi(T_j) = a|T_j| + offset: 1/2, 2/3, 1, 1 for the small shapes.
  const QuadNumber branch = QuadNumber(x[0]) * (QuadNumber(Rational(1, 2)) - a) +
                            QuadNumber(x[1]) * (QuadNumber(Rational(2, 3)) - QuadNumber(2) * a) +
                            QuadNumber(x[2] + x[3]) * (QuadNumber(1) - QuadNumber(3) * a) +
                            QuadNumber(x[4]) * big;
  // avi(T_j - v_j) = a(|T_j| - 1) + offset: 0, 1/2, 1 (centre), 2/3 (leaf).
  const QuadNumber removed = QuadNumber(x[1]) * (QuadNumber(Rational(1, 2)) - a) +
                             QuadNumber(x[2]) * (QuadNumber(1) - QuadNumber(2) * a) +
                             QuadNumber(x[3]) * (QuadNumber(Rational(2, 3)) - QuadNumber(2) * a) +
                             QuadNumber(x[4]) * big;
  return {branch, removed};
}

void validate(const CaseSpec& s) {
  int sum = 0;
  for (int v : s.x) {
    if (v < 0) throw std::invalid_argument("negative branch count in case spec");
    sum += v;
  }
  if (sum != s.k) throw std::invalid_argument("branch counts must sum to k");
}

}  // namespace

QuadNumber case_bound_at(const CaseSpec& spec, const Rational& rho) {
  validate(spec);
  const auto [branch, removed] = case_constants(spec);
  const QuadNumber a = slope_a();
  const QuadNumber r(rho);
  return r * branch +
         (QuadNumber(1) - r) * (QuadNumber(1) - a * QuadNumber(spec.k) + removed) - a;
}

CaseBound case_lower_bound(const CaseSpec& spec) {
  validate(spec);
  const auto [branch, removed] = case_constants(spec);
  // I(T_j - v_j) / I(T_j) per branch shape; [1/2, 1] for large branches.
  Rational fixed(1);
  const std::array<Rational, 4> quotient = {Rational(1, 2), Rational(2, 3),
                                            Rational(4, 5), Rational(3, 5)};
  for (std::size_t i = 0; i < 4; ++i)
    for (int j = 0; j < spec.x[i]; ++j) fixed *= quotient[i];
  Rational smallest = fixed;
  for (int j = 0; j < spec.x[4]; ++j) smallest *= Rational(1, 2);
  const Rational largest = fixed;

  CaseBound out;
  out.spec = spec;
  out.branch_sum = branch;
  out.removed_sum = removed;
  out.rho_lo = Rational(1) / (Rational(1) + largest);
  out.rho_hi = Rational(1) / (Rational(1) + smallest);
  out.bound_at_lo = case_bound_at(spec, out.rho_lo);
  out.bound_at_hi = case_bound_at(spec, out.rho_hi);
  out.lower_bound = std::min(out.bound_at_lo, out.bound_at_hi);
  out.margin = out.lower_bound - intercept_b();
  return out;
}

VerificationReport verify_branch_cases() {
  VerificationReport report("cases", "k=3..4");
  report.set_columns({"k", "x1", "x2", "x3", "x4", "x5", "rho_lo", "rho_hi", "margin"});
  const CaseSpec worst{3, {0, 1, 0, 0, 2}};
  std::vector<CaseSpec> zero_margin;
  std::size_t per_k[2] = {0, 0};
  for (int k : {3, 4}) {
    for (const CaseSpec& spec : enumerate_cases(k)) {
      ++per_k[k - 3];
      const CaseBound b = case_lower_bound(spec);
      std::vector<std::string> row{std::to_string(k)};
      for (int v : spec.x) row.push_back(std::to_string(v));
      row.push_back(b.rho_lo.str());
      row.push_back(b.rho_hi.str());
      row.push_back(b.margin.str());
      report.add_row(std::move(row));
      const int s = b.margin.sign();
      if (s < 0)
        report.fail(scalar_witness({{"check", "margin >= 0"},
                                    {"k", std::to_string(k)},
                                    {"x", std::to_string(spec.x[0]) + " " + std::to_string(spec.x[1]) +
                                              " " + std::to_string(spec.x[2]) + " " +
                                              std::to_string(spec.x[3]) + " " + std::to_string(spec.x[4])},
                                    {"margin", b.margin.str()},
                                    {"margin_approx", b.margin.decimal(12)}}));
      if (s == 0) zero_margin.push_back(spec);
    }
  }
  report.set_checked(per_k[0] + per_k[1]);
  report.add_fact("cases_k3", std::to_string(per_k[0]));
  report.add_fact("cases_k4", std::to_string(per_k[1]));
  report.add_fact("zero_margin_cases", std::to_string(zero_margin.size()));
  if (zero_margin.size() != 1 || !(zero_margin.front() == worst))
    report.fail(scalar_witness({{"check", "unique zero margin at k=3, x=(0,1,0,0,2)"},
                                {"zero_margin_cases", std::to_string(zero_margin.size())}}));
  const CaseBound wb = case_lower_bound(worst);
  report.add_fact("worst_rho_interval", "[" + wb.rho_lo.str() + ", " + wb.rho_hi.str() + "]");
  report.add_fact("worst_lower_bound", wb.lower_bound.str());
  report.add_fact("b", intercept_b().str());
  report.add_fact("b_approx", intercept_b().decimal(12));
  if (wb.rho_lo != Rational(3, 5) || wb.rho_hi != Rational(6, 7) ||
      wb.lower_bound != intercept_b())
    report.fail(scalar_witness({{"check", "worst case interval [3/5, 6/7] and bound b"},
                                {"rho_lo", wb.rho_lo.str()},
                                {"rho_hi", wb.rho_hi.str()},
                                {"lower_bound", wb.lower_bound.str()}}));
  return report;
}

VerificationReport verify_auxiliary_inequalities() {
  VerificationReport report("aux", "scalar inequalities; n=4..200");
  report.set_columns({"name", "lhs", "rel", "rhs", "lhs_approx", "rhs_approx", "holds"});
  const QuadNumber a = slope_a();
  const QuadNumber b = intercept_b();
  const QuadNumber s5 = QuadNumber::sqrt5();
  const QuadNumber inv_s5 = s5.inverse();
  const QuadNumber phi_inv = golden_power(-1);
  const auto frac = [](long p, long d) { return QuadNumber(Rational(p, d)); };
  const QuadNumber closing = frac(-25, 26) + s5 * frac(1, 2);  // sqrt5/2 - 25/26
  const QuadNumber ratio_bound = frac(4, 9) * (s5 - QuadNumber(1));

  struct Check {
    std::string name;
    QuadNumber lhs;
    std::string rel;
    QuadNumber rhs;
  };
  const QuadNumber phi_m2 = golden_power(-2);
  const QuadNumber power7 = -golden_power(14);  // (-phi^2)^7
  const std::vector<Check> checks = {
      {"error ratio bound identity",
       phi_m2 * frac(4, 3) * (golden_power(-6) + QuadNumber(1)) /
           (QuadNumber(1) - golden_power(-8)),
       "=", ratio_bound},
      {"error ratio bound", ratio_bound, "<", QuadNumber(1)},
      {"large branch, k>=5", large_branch_offset() - a * frac(1, 2), ">", QuadNumber(0)},
      {"three-vertex branch, k>=5", frac(5, 6), ">", QuadNumber(3) * a},
      {"two-vertex branch, k>=5", frac(7, 12), ">", QuadNumber(2) * a},
      {"one-vertex branch, k>=5", frac(1, 3), ">", a},
      {"remaining branches, k>=5", QuadNumber(4) * (inv_s5 - frac(1, 3)) - a, ">", b},
      {"worst case identity", frac(13, 2) * inv_s5 - frac(5, 2) + frac(6, 7) * (frac(1, 6) - inv_s5),
       "=", b},
      {"path bound at n=5", path_limit_offset() - QuadNumber(7) / (s5 * (power7 - QuadNumber(1))),
       "=", closing},
      {"path offset below b", closing, "<", b},
      {"b above c_2", b, ">", minimum_offset()},
      {"b above c_4", b, ">", large_branch_offset()},
      {"phi inverse", phi_inv, "=", QuadNumber::phi() - QuadNumber(1)},
  };
  for (const auto& c : checks) {
    const int s = compare(c.lhs, c.rhs);
    const bool holds = (c.rel == "<" && s < 0) || (c.rel == ">" && s > 0) ||
                       (c.rel == "=" && s == 0) || (c.rel == "<=" && s <= 0);
    report.add_row({c.name, c.lhs.str(), c.rel, c.rhs.str(), c.lhs.decimal(12),
                    c.rhs.decimal(12), holds ? "yes" : "no"});
    report.add_checked(1);
    if (!holds)
      report.fail(scalar_witness({{"check", c.name}, {"lhs", c.lhs.str()},
                                  {"relation", c.rel}, {"rhs", c.rhs.str()}}));
  }
  constexpr int kPathBoundMax = 200;
  for (int n = 4; n <= kPathBoundMax; ++n) {
    const PathFormulaValue v = path_closed_form(n);
    report.add_checked(1);
    if (v.c_n > closing)
      report.fail(scalar_witness({{"check", "avi(P_n) <= a n + sqrt5/2 - 25/26"},
                                  {"n", std::to_string(n)},
                                  {"avi(P_n)", v.rational_value.str()}}));
  }
  report.add_fact("path_bound_range", range_str(4, kPathBoundMax));
  return report;
}

VerificationReport offset_table(int max_n) {
  if (max_n < 1 || max_n > kMaxPathFormulaOrder)
    throw RangeError("offset table needs 1 <= max_n <= 500, got " + std::to_string(max_n));
  VerificationReport report("ctable", range_str(1, max_n));
  report.set_columns({"n", "c_n", "c_n_approx", "avi(P_n)"});
  for (int n = 1; n <= max_n; ++n) {
    const PathFormulaValue v = path_closed_form(n);
    report.add_row({std::to_string(n), v.c_n.str(), v.c_n.decimal(12), v.rational_value.str()});
  }
  report.set_checked(static_cast<std::uint64_t>(max_n));
  return report;
}

}  // namespace avgindep
