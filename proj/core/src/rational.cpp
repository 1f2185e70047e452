#include "avgindep/rational.hpp"

#include <cctype>
#include <ostream>

namespace avgindep {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_signed_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

// floor(num * 10^exp10 / den) for den > 0 and signed exp10.
Integer floor_scaled(const Integer& num, const Integer& den, long exp10) {
  Integer n = num, d = den;
  if (exp10 >= 0)
    n *= pow10(static_cast<unsigned>(exp10));
  else
    d *= pow10(static_cast<unsigned>(-exp10));
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_signed_integer(s, true))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    return Rational(parse_integer(s));
  }
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_signed_integer(num, true) || !is_signed_integer(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  const Integer d = parse_integer(den);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Integer Rational::scaled_floor(unsigned exp10) const {
  return floor_scaled(value_.get_num(), value_.get_den(),
                      static_cast<long>(exp10));
}

std::string Rational::decimal(int digits) const {
  if (is_zero()) return "0";
  const Integer a = ::abs(value_.get_num());
  const Integer& b = value_.get_den();
  const long mag = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
                   static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  const long exp10 = digits - mag + 2;
  return format_significant(floor_scaled(a, b, exp10), exp10, sign() < 0,
                            digits);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer pow10(unsigned exp10) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exp10);
  return r;
}

std::string format_significant(const Integer& scaled_abs, long exp10,
                               bool negative, int digits) {
  if (scaled_abs == 0) return "0";
  std::string body = scaled_abs.get_str();
  long scale = exp10;
  if (static_cast<long>(body.size()) > digits) {
    const long dropped = static_cast<long>(body.size()) - digits;
    Integer kept(body.substr(0, static_cast<std::size_t>(digits)), 10);
    if (body[static_cast<std::size_t>(digits)] >= '5') ++kept;
    scale -= dropped;
    body = kept.get_str();
    if (static_cast<long>(body.size()) > digits) {
      body.pop_back();
      --scale;
    }
  }
  // value = body * 10^-scale; point sits `point` digits from the left.
  const long point = static_cast<long>(body.size()) - scale;
  std::string out = negative ? "-" : "";
  auto strip = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
  };
  if (point > 40 || point < -20) {
    std::string mant = body.substr(0, 1) + "." + body.substr(1);
    return out + strip(mant) + "e" + std::to_string(point - 1);
  }
  if (scale <= 0) return out + body + std::string(static_cast<std::size_t>(-scale), '0');
  if (point > 0) {
    const auto p = static_cast<std::size_t>(point);
    return out + strip(body.substr(0, p) + "." + body.substr(p));
  }
  return out + strip("0." + std::string(static_cast<std::size_t>(-point), '0') + body);
}

}  // namespace avgindep
