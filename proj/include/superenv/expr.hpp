#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "superenv/bosonization.hpp"
#include "superenv/pbw.hpp"
#include "superenv/rational.hpp"

namespace superenv {

/// Parsed expression over the generators of U(g) and, in bosonized mode, the
/// grouplike t.
struct Expr {
  enum class Kind { Literal, Generator, GroupLike, Negate, Sum, Product, Power };

  Kind kind = Kind::Literal;
  Rational value;             // Literal
  std::size_t generator = 0;  // Generator
  unsigned exponent = 0;      // Power
  std::vector<Expr> children; // Negate: 1, Sum/Product: >= 2, Power: 1

  static Expr literal(Rational v);
  static Expr symbol(std::size_t index);
  static Expr grouplike();

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Names visible to the parser. `bindings` are expanded in place while
/// parsing, so trees never contain binding references.
struct ExprContext {
  std::vector<std::string> generator_names;
  bool bosonized = false;
  std::map<std::string, Expr> bindings;

  static ExprContext for_algebra(const LieSuperalgebra& g, bool bosonized = false);
  /// Parses `source` and binds it to `name`; the name may not shadow a
  /// generator, `t`, or an existing binding.
  void bind(const std::string& name, std::string_view source);
};

/// expr   := term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := rational | symbol ('^' nat)? | '(' expr ')' ('^' nat)? | '-' factor
/// rational := digits ('/' digits)   (nonzero denominator)
/// Whitespace is ignored; juxtaposition is a syntax error. Throws ParseError.
Expr parse_expr(std::string_view source, const ExprContext& ctx);

bool contains_grouplike(const Expr& e);

/// Evaluates in H(g); generators map to their embedded images, t to t.
HElement evaluate(const Expr& e, const AlgebraPtr& g);
/// Evaluates in U(g); throws DomainError if the tree mentions t.
UElement evaluate_u(const Expr& e, const AlgebraPtr& g);
/// Evaluates a rational-linear combination of generators to a coordinate
/// vector of length `dimension`; throws DomainError for anything nonlinear.
QVector evaluate_linear(const Expr& e, std::size_t dimension);

/// Canonical text: terms by increasing degree, `name^k` powers, `*` between
/// factors, e.g. `x - u*v`.
std::string render(const UElement& e);
/// Plain part first, then the t part with every term suffixed `*t`.
std::string render(const HElement& e);

} // namespace superenv
