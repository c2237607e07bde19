#include "superenv/bosonization.hpp"

#include "superenv/error.hpp"

namespace superenv {

HElement::HElement(AlgebraPtr algebra) : plain_(algebra), t_part_(algebra) {}

HElement::HElement(UElement plain, UElement t_part)
    : plain_(std::move(plain)), t_part_(std::move(t_part)) {
  if (plain_.algebra_ptr() && t_part_.algebra_ptr()) {
    require_same_algebra(plain_.algebra(), t_part_.algebra());
  }
}

HElement HElement::embed(UElement a) {
  UElement zero(a.algebra_ptr());
  return HElement(std::move(a), std::move(zero));
}

HElement HElement::grouplike(AlgebraPtr algebra) {
  UElement zero(algebra);
  return HElement(std::move(zero), UElement::scalar(algebra, Rational(1)));
}

HElement& HElement::operator+=(const HElement& rhs) {
  plain_ += rhs.plain_;
  t_part_ += rhs.t_part_;
  return *this;
}

HElement& HElement::operator-=(const HElement& rhs) {
  plain_ -= rhs.plain_;
  t_part_ -= rhs.t_part_;
  return *this;
}

HElement operator-(const HElement& a) {
  return HElement(-a.plain_, -a.t_part_);
}

HElement operator*(const Rational& c, const HElement& a) {
  return HElement(c * a.plain_, c * a.t_part_);
}

UElement sigma(const UElement& a) {
  UElement out(a.algebra_ptr());
  for (const auto& [m, c] : a.terms()) {
    out.add_term(m, parity(a.algebra(), m) == Parity::Odd ? -c : c);
  }
  return out;
}

HElement h_mul(const HElement& p, const HElement& q) {
  const UElement& a = p.plain();
  const UElement& b = p.t_part();
  const UElement& c = q.plain();
  const UElement& d = q.t_part();
  return HElement(a * c + b * sigma(d), a * d + b * sigma(c));
}

HElement h_graded_component(const HElement& e, Parity p) {
  return HElement(graded_component(e.plain(), p), graded_component(e.t_part(), p));
}

namespace {

IdentityCheck expect_zero(std::string name, const HElement& value) {
  return {std::move(name), value.is_zero(), value.is_zero() ? "" : "residual is nonzero"};
}

} // namespace

std::vector<IdentityCheck> central_witness_check(const AlgebraPtr& g) {
  auto generator = [&](const char* name) {
    auto index = g->index_of(name);
    if (!index) {
      throw DomainError(std::string("central witness check needs a generator named ") + name);
    }
    return HElement::embed(UElement::generator(g, *index));
  };
  const HElement x = generator("x");
  const HElement y = generator("y");
  const HElement u = generator("u");
  const HElement v = generator("v");
  const HElement t = HElement::grouplike(g);
  const HElement w = Rational(-1) * x + Rational(2) * (u * v);
  const HElement wt = w * t;

  std::vector<IdentityCheck> checks;
  checks.push_back(expect_zero("relations of w: wx = xw", w * x - x * w));
  checks.push_back(expect_zero("relations of w: wy = yw", w * y - y * w));
  checks.push_back(expect_zero("relations of w: wu = -uw", w * u + u * w));
  checks.push_back(expect_zero("relations of w: wv = -vw", w * v + v * w));
  checks.push_back(expect_zero("relations of w: wt = tw", w * t - t * w));
  const std::pair<const char*, const HElement*> partners[] = {
      {"x", &x}, {"y", &y}, {"u", &u}, {"v", &v}, {"t", &t}};
  for (const auto& [name, other] : partners) {
    checks.push_back(expect_zero(std::string("wt is central: wt commutes with ") + name,
                                 wt * *other - *other * wt));
  }
  const HElement left = x - wt;
  const HElement right = x + wt;
  checks.push_back(expect_zero("zero divisors: w^2 = x^2", w * w - x * x));
  checks.push_back(expect_zero("zero divisors: (x - wt)(x + wt) = x^2 - w^2", left * right - (x * x - w * w)));
  checks.push_back(expect_zero("zero divisors: (x - wt)(x + wt) = 0", left * right));
  checks.push_back({"zero divisors: x - wt != 0 and x + wt != 0", !left.is_zero() && !right.is_zero(),
                    (!left.is_zero() && !right.is_zero()) ? "" : "a factor vanishes"});
  return checks;
}

} // namespace superenv
