#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "superenv/rational.hpp"

namespace superenv {

/// Exponent vector of a commutative monomial, one slot per variable.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded-lex order, largest first: higher total degree first, ties broken
/// lexicographically with the first variable most significant.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse commutative polynomial over the rationals in a fixed, named list of
/// variables. Zero coefficients are never stored.
class PolyQ {
public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  PolyQ() = default;
  explicit PolyQ(std::vector<std::string> variables);

  static PolyQ constant(std::vector<std::string> variables, const Rational& c);
  static PolyQ variable(std::vector<std::string> variables, std::size_t index);
  static PolyQ monomial(std::vector<std::string> variables, Exponents exps, const Rational& c);

  const std::vector<std::string>& variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponents& e) const;

  /// Accumulates `c * x^e`, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  /// Canonical rendering, e.g. `x^2 - 2*x*y + 1/3`.
  std::string str() const;

  friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

private:
  std::vector<std::string> variables_;
  Terms terms_;
};

PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_neg(const PolyQ& a);
PolyQ poly_scale(const PolyQ& a, const Rational& c);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);

inline PolyQ operator+(const PolyQ& a, const PolyQ& b) { return poly_add(a, b); }
inline PolyQ operator-(const PolyQ& a, const PolyQ& b) { return poly_sub(a, b); }
inline PolyQ operator-(const PolyQ& a) { return poly_neg(a); }
inline PolyQ operator*(const PolyQ& a, const PolyQ& b) { return poly_mul(a, b); }

/// Quotient a / b when b divides a exactly; throws DomainError otherwise.
PolyQ poly_divide_exact(const PolyQ& a, const PolyQ& b);

/// Replaces variable `index` by `replacement` (same variable list).
PolyQ poly_substitute(const PolyQ& p, std::size_t index, const PolyQ& replacement);

/// Determinant by fraction-free (Bareiss) elimination with exact polynomial
/// division. The 0x0 determinant is 1. Every entry must use `variables`.
PolyQ poly_det(const std::vector<std::vector<PolyQ>>& rows,
               const std::vector<std::string>& variables);

} // namespace superenv
