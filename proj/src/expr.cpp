#include "superenv/expr.hpp"

#include <cctype>
#include <limits>
#include <utility>

#include "superenv/error.hpp"
#include "term_text.hpp"

namespace superenv {

Expr Expr::literal(Rational v) {
  Expr e;
  e.kind = Kind::Literal;
  e.value = std::move(v);
  return e;
}

Expr Expr::symbol(std::size_t index) {
  Expr e;
  e.kind = Kind::Generator;
  e.generator = index;
  return e;
}

Expr Expr::grouplike() {
  Expr e;
  e.kind = Kind::GroupLike;
  return e;
}

ExprContext ExprContext::for_algebra(const LieSuperalgebra& g, bool bosonized) {
  ExprContext ctx;
  ctx.generator_names = g.names();
  ctx.bosonized = bosonized;
  return ctx;
}

void ExprContext::bind(const std::string& name, std::string_view source) {
  bool reserved = name == "t" || bindings.count(name) > 0;
  for (const auto& g : generator_names) {
    reserved = reserved || g == name;
  }
  if (reserved) {
    throw DomainError("cannot bind '" + name + "': the name is already in use");
  }
  bool identifier = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
  for (char c : name) {
    identifier = identifier && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  }
  if (!identifier) {
    throw DomainError("cannot bind '" + name + "': not an identifier");
  }
  bindings.emplace(name, parse_expr(source, *this));
}

namespace {

constexpr std::size_t kMaxNesting = 200;

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Parser {
public:
  Parser(std::string_view src, const ExprContext& ctx) : src_(src), ctx_(ctx) {}

  Expr parse_all() {
    Expr e = expression();
    skip_space();
    if (pos_ < src_.size()) {
      fail("unexpected " + describe(src_[pos_]));
    }
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  static std::string describe(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) {
      return std::string("character '") + c + "'";
    }
    return "byte " + std::to_string(static_cast<unsigned>(static_cast<unsigned char>(c)));
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr expression() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        Expr neg;
        neg.kind = Expr::Kind::Negate;
        neg.children.push_back(term());
        terms.push_back(std::move(neg));
      } else {
        break;
      }
    }
    if (terms.size() == 1) {
      return std::move(terms.front());
    }
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    sum.children = std::move(terms);
    return sum;
  }

  Expr term() {
    std::vector<Expr> factors{factor()};
    for (;;) {
      if (accept('*')) {
        factors.push_back(factor());
        continue;
      }
      skip_space();
      if (pos_ < src_.size() && (is_ident_start(src_[pos_]) || is_digit(src_[pos_]) || src_[pos_] == '(')) {
        fail("missing '*' (juxtaposition is not multiplication)");
      }
      break;
    }
    if (factors.size() == 1) {
      return std::move(factors.front());
    }
    Expr product;
    product.kind = Expr::Kind::Product;
    product.children = std::move(factors);
    return product;
  }

  Expr factor() {
    if (++depth_ > kMaxNesting) {
      fail("expression nested too deeply");
    }
    skip_space();
    if (pos_ >= src_.size()) {
      fail("unexpected end of input");
    }
    Expr out;
    const char c = src_[pos_];
    if (c == '-') {
      ++pos_;
      out.kind = Expr::Kind::Negate;
      out.children.push_back(factor());
    } else if (is_digit(c)) {
      out = rational();
    } else if (is_ident_start(c)) {
      out = power(symbol());
    } else if (c == '(') {
      ++pos_;
      Expr inner = expression();
      if (!accept(')')) {
        fail("expected ')'");
      }
      out = power(std::move(inner));
    } else {
      fail("unexpected " + describe(c));
    }
    --depth_;
    return out;
  }

  Expr rational() {
    std::string num = digits();
    std::string den = "1";
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      den = digits();
      if (den.empty()) {
        fail("expected a denominator after '/'");
      }
    }
    BigInt d(den, 10);
    if (d == 0) {
      fail("zero denominator");
    }
    return Expr::literal(Rational(BigInt(num, 10), d));
  }

  Expr symbol() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
      ++pos_;
    }
    const std::string name(src_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < ctx_.generator_names.size(); ++i) {
      if (ctx_.generator_names[i] == name) {
        return Expr::symbol(i);
      }
    }
    if (name == "t") {
      if (!ctx_.bosonized) {
        throw ParseError(start, "'t' is only available in bosonized mode");
      }
      return Expr::grouplike();
    }
    if (auto it = ctx_.bindings.find(name); it != ctx_.bindings.end()) {
      return it->second;
    }
    throw ParseError(start, "unknown symbol '" + name + "'");
  }

  Expr power(Expr base) {
    if (!accept('^')) {
      return base;
    }
    skip_space();
    const std::size_t start = pos_;
    std::string text = digits();
    if (text.empty()) {
      fail("expected a non-negative integer exponent after '^'");
    }
    BigInt value(text, 10);
    if (value > std::numeric_limits<int>::max()) {
      throw ParseError(start, "exponent too large");
    }
    const auto exponent = static_cast<unsigned>(value.get_ui());
    if (exponent == 0) {
      return Expr::literal(Rational(1));
    }
    Expr out;
    out.kind = Expr::Kind::Power;
    out.exponent = exponent;
    out.children.push_back(std::move(base));
    return out;
  }

  std::string_view src_;
  const ExprContext& ctx_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

} // namespace

Expr parse_expr(std::string_view source, const ExprContext& ctx) {
  return Parser(source, ctx).parse_all();
}

bool contains_grouplike(const Expr& e) {
  if (e.kind == Expr::Kind::GroupLike) {
    return true;
  }
  for (const auto& c : e.children) {
    if (contains_grouplike(c)) {
      return true;
    }
  }
  return false;
}

HElement evaluate(const Expr& e, const AlgebraPtr& g) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return HElement::embed(UElement::scalar(g, e.value));
    case Expr::Kind::Generator:
      return HElement::embed(UElement::generator(g, e.generator));
    case Expr::Kind::GroupLike:
      return HElement::grouplike(g);
    case Expr::Kind::Negate:
      return -evaluate(e.children.front(), g);
    case Expr::Kind::Sum: {
      HElement out(g);
      for (const auto& c : e.children) {
        out += evaluate(c, g);
      }
      return out;
    }
    case Expr::Kind::Product: {
      HElement out = evaluate(e.children.front(), g);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        out = out * evaluate(e.children[i], g);
      }
      return out;
    }
    case Expr::Kind::Power: {
      const HElement base = evaluate(e.children.front(), g);
      HElement out = HElement::embed(UElement::scalar(g, Rational(1)));
      for (unsigned k = 0; k < e.exponent; ++k) {
        out = out * base;
      }
      return out;
    }
  }
  throw DomainError("unknown expression node");
}

UElement evaluate_u(const Expr& e, const AlgebraPtr& g) {
  if (contains_grouplike(e)) {
    throw DomainError("expression mentions t outside H(g)");
  }
  return evaluate(e, g).plain();
}

namespace {

struct Affine {
  Rational constant;
  QVector linear;
  bool is_constant() const {
    for (const auto& c : linear) {
      if (!c.is_zero()) {
        return false;
      }
    }
    return true;
  }
};

Affine scale(Affine a, const Rational& c) {
  a.constant *= c;
  for (auto& x : a.linear) {
    x *= c;
  }
  return a;
}

Affine evaluate_affine(const Expr& e, std::size_t dimension) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return {e.value, QVector(dimension)};
    case Expr::Kind::Generator: {
      Affine a{Rational(0), QVector(dimension)};
      a.linear[e.generator] = Rational(1);
      return a;
    }
    case Expr::Kind::GroupLike:
      throw DomainError("t cannot appear in a bracket value");
    case Expr::Kind::Negate:
      return scale(evaluate_affine(e.children.front(), dimension), Rational(-1));
    case Expr::Kind::Sum: {
      Affine out{Rational(0), QVector(dimension)};
      for (const auto& c : e.children) {
        Affine a = evaluate_affine(c, dimension);
        out.constant += a.constant;
        for (std::size_t i = 0; i < dimension; ++i) {
          out.linear[i] += a.linear[i];
        }
      }
      return out;
    }
    case Expr::Kind::Product: {
      Affine out{Rational(1), QVector(dimension)};
      for (const auto& c : e.children) {
        Affine a = evaluate_affine(c, dimension);
        if (a.is_constant()) {
          out = scale(out, a.constant);
        } else if (out.is_constant()) {
          out = scale(a, out.constant);
        } else {
          throw DomainError("bracket value must be linear in the generators");
        }
      }
      return out;
    }
    case Expr::Kind::Power: {
      Affine base = evaluate_affine(e.children.front(), dimension);
      if (e.exponent == 1) {
        return base;
      }
      if (!base.is_constant()) {
        throw DomainError("bracket value must be linear in the generators");
      }
      Rational c(1);
      for (unsigned k = 0; k < e.exponent; ++k) {
        c *= base.constant;
      }
      return {c, QVector(dimension)};
    }
  }
  throw DomainError("unknown expression node");
}

} // namespace

QVector evaluate_linear(const Expr& e, std::size_t dimension) {
  Affine a = evaluate_affine(e, dimension);
  if (!a.constant.is_zero()) {
    throw DomainError("bracket value has a constant term");
  }
  return a.linear;
}

namespace {

void append_terms(const UElement& e, const char* suffix, std::vector<detail::TextTerm>& out) {
  const auto names = e.algebra().names();
  for (const auto& [m, c] : e.terms()) {
    std::string mono = detail::power_product(names, m.exponents());
    if (suffix != nullptr) {
      mono = mono.empty() ? suffix : mono + "*" + suffix;
    }
    out.push_back({c, std::move(mono)});
  }
}

} // namespace

std::string render(const UElement& e) {
  std::vector<detail::TextTerm> parts;
  if (e.algebra_ptr()) {
    append_terms(e, nullptr, parts);
  }
  return detail::join_terms(parts);
}

std::string render(const HElement& e) {
  std::vector<detail::TextTerm> parts;
  if (e.plain().algebra_ptr()) {
    append_terms(e.plain(), nullptr, parts);
  }
  if (e.t_part().algebra_ptr()) {
    append_terms(e.t_part(), "t", parts);
  }
  return detail::join_terms(parts);
}

} // namespace superenv
