#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "avgindep/rational.hpp"

namespace avgindep {

/// Element rat + coef5 * sqrt(5) of the quadratic field Q(sqrt 5).
///
/// The representation is unique because sqrt(5) is irrational, so equality
/// is componentwise. Ordering is exact: the sign of p + q*sqrt5 follows from
/// the signs of p and q and, when they differ, from comparing p^2 with 5q^2.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(Rational rat) : rat_(std::move(rat)) {}  // NOLINT
  QuadNumber(long value) : rat_(value) {}             // NOLINT
  QuadNumber(Rational rat, Rational coef5)
      : rat_(std::move(rat)), coef5_(std::move(coef5)) {}

  static QuadNumber sqrt5() { return {Rational(0), Rational(1)}; }
  /// (1 + sqrt5) / 2
  static QuadNumber phi() { return {Rational(1, 2), Rational(1, 2)}; }

  /// Accepts "p/q", "p/q + r/s*sqrt5", "p/q - r/s*sqrt5" and "r/s*sqrt5".
  static QuadNumber parse(std::string_view text);

  const Rational& rat() const { return rat_; }
  const Rational& coef5() const { return coef5_; }

  bool is_rational() const { return coef5_.is_zero(); }
  int sign() const;
  QuadNumber abs() const { return sign() < 0 ? -*this : *this; }
  QuadNumber conjugate() const { return {rat_, -coef5_}; }
  /// rat^2 - 5 coef5^2, the field norm.
  Rational norm() const;
  QuadNumber inverse() const;

  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);
  QuadNumber& operator/=(const QuadNumber& o);

  friend QuadNumber operator+(QuadNumber a, const QuadNumber& b) { return a += b; }
  friend QuadNumber operator-(QuadNumber a, const QuadNumber& b) { return a -= b; }
  friend QuadNumber operator*(QuadNumber a, const QuadNumber& b) { return a *= b; }
  friend QuadNumber operator/(QuadNumber a, const QuadNumber& b) { return a /= b; }
  QuadNumber operator-() const { return {-rat_, -coef5_}; }

  friend bool operator==(const QuadNumber& a, const QuadNumber& b) {
    return a.rat_ == b.rat_ && a.coef5_ == b.coef5_;
  }
  friend std::strong_ordering operator<=>(const QuadNumber& a,
                                          const QuadNumber& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  /// "p/q + r/s*sqrt5"; the sqrt5 term is always present.
  std::string str() const;

  /// Decimal approximation for display, via integer scaling with an integer
  /// square root of 5 * 10^(2k).
  std::string decimal(int digits = 30) const;

  /// floor(value * 10^exp10).
  Integer scaled_floor(unsigned exp10) const;

 private:
  Rational rat_;
  Rational coef5_;
};

std::ostream& operator<<(std::ostream& os, const QuadNumber& x);

int compare(const QuadNumber& x, const QuadNumber& y);

/// phi^k for any integer k; phi is a unit with phi^-1 = phi - 1.
QuadNumber golden_power(long k);

/// The rational component; DomainError("irrational residue") if the sqrt5
/// coefficient is nonzero.
Rational as_rational(const QuadNumber& x);

}  // namespace avgindep
