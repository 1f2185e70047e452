#pragma once

#include <array>
#include <string>
#include <vector>

#include "avgindep/quad.hpp"
#include "avgindep/rational.hpp"
#include "avgindep/report.hpp"

namespace avgindep {

/// Slope of avi(P_n): (5 - sqrt5) / 10.
QuadNumber slope_a();
/// Lower-bound intercept for non-path trees: (79 sqrt5 - 165) / 70.
QuadNumber intercept_b();
/// lim avi(P_n) - a n = (3 - sqrt5) / 5.
QuadNumber path_limit_offset();

inline constexpr int kMaxPathFormulaOrder = 500;

struct PathFormulaValue {
  int n;
  QuadNumber closed_form;  // the closed form evaluated in Q(sqrt5)
  Rational rational_value;
  QuadNumber c_n;  // closed_form - a n
};

/// Closed form a n + (3 - sqrt5)/5 - (n+2) / (sqrt5 ((-phi^2)^(n+2) - 1))
/// evaluated exactly, without cross-checking.
QuadNumber path_closed_form_raw(int n);

/// Evaluates the closed form, requires a vanishing sqrt5 residue and checks
/// it against the independent count: the engine for n <= 64, the integer
/// recurrences beyond. RangeError unless 1 <= n <= 500.
PathFormulaValue path_closed_form(int n);

/// I(P_n) and T(P_n) from I(P_n) = I(P_{n-1}) + I(P_{n-2}) and
/// T(P_n) = T(P_{n-1}) + T(P_{n-2}) + I(P_{n-2}), with I(P_1) = 2,
/// I(P_2) = 3, T(P_1) = 1, T(P_2) = 2 (and P_0 the empty graph).
struct PathCounts {
  Integer count;
  Integer total;
};
PathCounts path_counts(int n);
Rational path_avi_recurrence(int n);

/// c_n = avi(P_n) - a n.
QuadNumber path_offset(int n);

/// Checks, for 1 <= n <= max_n: |c_n - L| strictly decreasing from n = 2,
/// alternating sign of c_n - L, c_n >= c_2 with equality only at 2, and
/// c_n >= c_4 for n != 2 with equality only at 4. With max_n >= 5 the
/// tabulated c_1..c_5 are also compared exactly. RangeError unless
/// 5 <= max_n <= 500.
VerificationReport verify_error_term(int max_n);

/// Branch-size profile at a vertex of degree k: x[0] branches of one vertex,
/// x[1] of two, x[2] of three attached at their centre, x[3] of three
/// attached at a leaf, x[4] of four or more.
struct CaseSpec {
  int k = 0;
  std::array<int, 5> x{};

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

struct CaseBound {
  CaseSpec spec;
  QuadNumber branch_sum;         // constant part of sum avi(T_j) - a(|T| - 1)
  QuadNumber removed_sum;        // constant part of sum avi(T_j - v_j) - a(|T| - 1 - k)
  Rational rho_lo, rho_hi;       // range of I(T - v) / I(T)
  QuadNumber bound_at_lo, bound_at_hi;
  QuadNumber lower_bound;        // min of the two endpoint values
  QuadNumber margin;             // lower_bound - b
};

/// All weak compositions of k into five parts, lexicographic in x.
/// RangeError unless k is 3 or 4.
std::vector<CaseSpec> enumerate_cases(int k);

/// The constant c in avi(T) >= a|T| + c guaranteed by the branch profile,
/// as a function of rho (linear).
QuadNumber case_bound_at(const CaseSpec& spec, const Rational& rho);

CaseBound case_lower_bound(const CaseSpec& spec);

/// All 105 cases for k = 3 and 4, with margins >= 0 and a single zero
/// margin at k = 3, x = (0, 1, 0, 0, 2). Includes the margin table.
VerificationReport verify_branch_cases();

/// Scalar inequalities used by the minimality proof plus
/// avi(P_n) <= a n + sqrt5/2 - 25/26 for 4 <= n <= 200.
VerificationReport verify_auxiliary_inequalities();

/// Rows "n c_n decimal(c_n) avi(P_n)" for 1 <= n <= max_n.
VerificationReport offset_table(int max_n);

}  // namespace avgindep
