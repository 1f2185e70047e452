#include "avgindep/quad.hpp"

#include <cctype>
#include <ostream>

namespace avgindep {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Parses a signed term that is either "p/q" or "p/q*sqrt5" (also "sqrt5",
// "-sqrt5").
void add_term(std::string_view term, bool negate, Rational& rat,
              Rational& coef5, std::string_view whole) {
  constexpr std::string_view kRoot = "sqrt5";
  if (term.empty()) throw ParseError("malformed quadratic number '" + std::string(whole) + "'");
  if (term.size() >= kRoot.size() &&
      term.substr(term.size() - kRoot.size()) == kRoot) {
    std::string_view coef = term.substr(0, term.size() - kRoot.size());
    Rational c(1);
    if (coef == "-") {
      c = Rational(-1);
    } else if (!coef.empty() && coef != "+") {
      if (coef.back() != '*')
        throw ParseError("malformed quadratic number '" + std::string(whole) + "'");
      coef.remove_suffix(1);
      c = Rational::parse(coef);
    }
    coef5 += negate ? -c : c;
  } else {
    const Rational r = Rational::parse(term);
    rat += negate ? -r : r;
  }
}

}  // namespace

QuadNumber QuadNumber::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty quadratic number");
  Rational rat, coef5;
  // Split on a binary '+' or '-' that is not the leading sign and not part
  // of "p/-q" (which Rational rejects anyway).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' &&
        s[i - 1] != '+' && s[i - 1] != '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    add_term(s, false, rat, coef5, text);
  } else {
    add_term(std::string_view(s).substr(0, split), false, rat, coef5, text);
    const bool negate = s[split] == '-';
    std::string_view rest = std::string_view(s).substr(split + 1);
    if (rest.find("sqrt5") == std::string_view::npos)
      throw ParseError("second term must carry sqrt5 in '" + std::string(text) + "'");
    add_term(rest, negate, rat, coef5, text);
  }
  return {rat, coef5};
}

int QuadNumber::sign() const {
  const int p = rat_.sign();
  const int q = coef5_.sign();
  if (q == 0) return p;
  if (p == 0 || p == q) return q;
  // Opposite signs: |p| vs |q| sqrt5 decides, compared through squares.
  const Rational p2 = rat_ * rat_;
  const Rational q2 = Rational(5) * coef5_ * coef5_;
  if (p2 == q2) return 0;  // unreachable for rational p, q != 0
  return p2 > q2 ? p : q;
}

Rational QuadNumber::norm() const {
  return rat_ * rat_ - Rational(5) * coef5_ * coef5_;
}

QuadNumber QuadNumber::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DomainError("division by zero in Q(sqrt5)");
  return {rat_ / n, -coef5_ / n};
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  rat_ += o.rat_;
  coef5_ += o.coef5_;
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  rat_ -= o.rat_;
  coef5_ -= o.coef5_;
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  Rational r = rat_ * o.rat_ + Rational(5) * coef5_ * o.coef5_;
  Rational c = rat_ * o.coef5_ + coef5_ * o.rat_;
  rat_ = std::move(r);
  coef5_ = std::move(c);
  return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o) {
  return *this *= o.inverse();
}

std::string QuadNumber::str() const {
  return rat_.str() + " + " + coef5_.str() + "*sqrt5";
}

Integer QuadNumber::scaled_floor(unsigned exp10) const {
  // floor(p*S + q*sqrt5*S) with S = 10^exp10; sqrt5*S is bracketed by
  // isqrt(5 S^2) and isqrt(5 S^2) + 1, and p*S + q*sqrt5*S is never an
  // integer unless q = 0, so a few guard digits resolve the floor.
  if (is_rational()) return rat_.scaled_floor(exp10);
  constexpr unsigned kGuard = 8;
  const unsigned e = exp10 + kGuard;
  for (unsigned extra = 0;; extra += 16) {
    const unsigned ee = e + extra;
    const Integer s = pow10(ee);
    Integer root;
    const Integer five_s2 = Integer(5 * s * s);
    mpz_sqrt(root.get_mpz_t(), five_s2.get_mpz_t());
    // Bounds on q*sqrt5*S depending on the sign of q.
    const Rational lo_root(root), hi_root(Integer(root + 1));
    const Rational qs_lo = coef5_.sign() > 0 ? coef5_ * lo_root : coef5_ * hi_root;
    const Rational qs_hi = coef5_.sign() > 0 ? coef5_ * hi_root : coef5_ * lo_root;
    const Rational ps = rat_ * Rational(s);
    const Rational scale_back(pow10(extra + kGuard));
    const Integer lo = ((ps + qs_lo) / scale_back).scaled_floor(0);
    const Integer hi = ((ps + qs_hi) / scale_back).scaled_floor(0);
    if (lo == hi) return lo;
  }
}

std::string QuadNumber::decimal(int digits) const {
  if (sign() == 0) return "0";
  const QuadNumber a = abs();
  unsigned exp10 = static_cast<unsigned>(digits) + 4;
  for (;;) {
    const Integer s = a.scaled_floor(exp10);
    if (mpz_sizeinbase(s.get_mpz_t(), 10) >= static_cast<std::size_t>(digits) + 2)
      return format_significant(s, static_cast<long>(exp10), sign() < 0, digits);
    exp10 += static_cast<unsigned>(digits);
  }
}

std::ostream& operator<<(std::ostream& os, const QuadNumber& x) {
  return os << x.str();
}

int compare(const QuadNumber& x, const QuadNumber& y) { return (x - y).sign(); }

QuadNumber golden_power(long k) {
  QuadNumber base = k >= 0 ? QuadNumber::phi() : QuadNumber::phi() - QuadNumber(1);
  unsigned long e = k >= 0 ? static_cast<unsigned long>(k)
                           : static_cast<unsigned long>(-(k + 1)) + 1;
  QuadNumber result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Rational as_rational(const QuadNumber& x) {
  if (!x.is_rational())
    throw DomainError("irrational residue: " + x.str());
  return x.rat();
}

}  // namespace avgindep
