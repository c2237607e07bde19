#include "superenv/rational.hpp"

#include <cctype>

#include "superenv/error.hpp"

namespace superenv {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) {
    n = -n;
  }
  return Rational(n, d);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

} // namespace superenv
