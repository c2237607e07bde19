#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace superenv {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts `p`, `-p`, `p/q`, `-p/q` in decimal.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  std::string str() const { return value_.get_str(); }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator-(const Rational& a);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_{0};
};

/// (-1)^k for an integer exponent.
inline int sign_power(int k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace superenv
