#pragma once

#include <algorithm>
#include <vector>

#include "superenv/pbw.hpp"
#include "superenv/report.hpp"

namespace superenv {

/// Element a0 + a1*t of H(g) = U(g) # kC2, where t^2 = 1 and t b = (-1)^|b| b t.
class HElement {
public:
  HElement() = default;
  explicit HElement(AlgebraPtr algebra);
  HElement(UElement plain, UElement t_part);
  /// Embeds U(g) as a0 + 0*t.
  static HElement embed(UElement a);
  static HElement grouplike(AlgebraPtr algebra);

  const UElement& plain() const { return plain_; }
  const UElement& t_part() const { return t_part_; }
  const AlgebraPtr& algebra_ptr() const { return plain_.algebra_ptr(); }
  bool is_zero() const { return plain_.is_zero() && t_part_.is_zero(); }
  /// Filtration degree with t in degree 0; -1 for zero.
  int degree() const { return std::max(plain_.degree(), t_part_.degree()); }

  HElement& operator+=(const HElement& rhs);
  HElement& operator-=(const HElement& rhs);
  friend HElement operator+(HElement a, const HElement& b) { return a += b; }
  friend HElement operator-(HElement a, const HElement& b) { return a -= b; }
  friend HElement operator-(const HElement& a);
  friend HElement operator*(const Rational& c, const HElement& a);
  friend bool operator==(const HElement& a, const HElement& b) = default;

private:
  UElement plain_;
  UElement t_part_;
};

/// Conjugation by t: scales each monomial by (-1)^(number of odd factors).
UElement sigma(const UElement& a);

/// (a + bt)(c + dt) = (ac + b sigma(d)) + (ad + b sigma(c)) t
HElement h_mul(const HElement& p, const HElement& q);
inline HElement operator*(const HElement& p, const HElement& q) { return h_mul(p, q); }

/// Restricts both components to U-parity `p` (t has degree 0).
HElement h_graded_component(const HElement& e, Parity p);

/// Exact check, in H of an algebra with generators x, y, u, v presenting
/// gl(1,1), that w = -x + 2uv gives central zero divisors x - wt, x + wt:
/// w commutes with x, y, t and anticommutes with u, v; wt is central;
/// (x - wt)(x + wt) = x^2 - w^2 = 0 with both factors nonzero.
std::vector<IdentityCheck> central_witness_check(const AlgebraPtr& g);

} // namespace superenv
